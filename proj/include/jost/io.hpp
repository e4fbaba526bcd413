#ifndef JOST_IO_HPP
#define JOST_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "jost/jacobi.hpp"
#include "jost/opuc.hpp"
#include "jost/spectral_data.hpp"

namespace jost::io {

// Line-based key/value files, one object per file. Lines are
//   key value [value ...]
// with '#' comments and blank lines ignored. Three object kinds:
//
//   type jacobi            type spectral           type opuc
//   a 1 1 1                u 1 -2                  alpha 0.5 0
//   b 2 0 0                radius inf              alpha 0.25 -0.1
//   tail free|envelope C R state 0.5 0.75
//
// Floating point values are emitted with 17 significant digits so binary64
// round-trips are exact.

class ParseError : public Error {
public:
  ParseError(const std::string& what) : Error("parse", what) {}
};

struct OpucInput {
  opuc::VerblunskySeq alphas;
};

using ParsedInput = std::variant<JacobiParams, SpectralData, OpucInput>;

ParsedInput parse_input(std::istream& in, const std::string& origin = "<input>");
ParsedInput parse_input_file(const std::string& path);

std::string format_double(double v);

void write_jacobi(std::ostream& out, const JacobiParams& J);
void write_spectral(std::ostream& out, const SpectralData& data);

// CSV with a header row; every cell is 17-significant-digit formatted.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_file(const std::string& path, const std::string& contents);

}  // namespace jost::io

#endif  // JOST_IO_HPP
