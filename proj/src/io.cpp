#include "jost/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace jost::io {

namespace {

struct Line {
  int number = 0;
  std::string key;
  std::vector<std::string> fields;
};

std::vector<Line> tokenize(std::istream& in, const std::string& origin) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    if (!(ls >> line.key)) continue;
    std::string field;
    while (ls >> field) line.fields.push_back(field);
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError(origin + ": empty input");
  return lines;
}

double parse_number(const std::string& s, const std::string& where) {
  if (s == "inf" || s == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + ": not a number: '" + s + "'");
  }
  if (pos != s.size())
    throw ParseError(where + ": trailing characters in '" + s + "'");
  return v;
}

std::string field_id(const std::string& origin, const Line& line,
                     const std::string& key, std::size_t index) {
  return origin + ":" + std::to_string(line.number) + ": field " + key + "[" +
         std::to_string(index) + "]";
}

ParsedInput parse_jacobi(const std::vector<Line>& lines,
                         const std::string& origin) {
  std::vector<double> a, b;
  bool have_a = false, have_b = false;
  bool free_tail = true;
  EnvelopeTail env;
  bool have_tail = false;

  for (const Line& line : lines) {
    const std::string where = origin + ":" + std::to_string(line.number);
    if (line.key == "type") continue;
    if (line.key == "a" || line.key == "b") {
      std::vector<double>& dst = line.key == "a" ? a : b;
      (line.key == "a" ? have_a : have_b) = true;
      for (std::size_t i = 0; i < line.fields.size(); ++i) {
        const double v =
            parse_number(line.fields[i], field_id(origin, line, line.key, i));
        if (line.key == "a" && !(v > 0.0))
          throw ParseError(field_id(origin, line, "a", i) +
                           ": off-diagonal entries must be positive");
        dst.push_back(v);
      }
    } else if (line.key == "tail") {
      have_tail = true;
      if (line.fields.empty()) throw ParseError(where + ": tail needs a kind");
      if (line.fields[0] == "free") {
        free_tail = true;
      } else if (line.fields[0] == "envelope") {
        if (line.fields.size() != 3)
          throw ParseError(where + ": tail envelope needs C and R");
        free_tail = false;
        env.C = parse_number(line.fields[1], where + ": envelope C");
        env.R = parse_number(line.fields[2], where + ": envelope R");
      } else {
        throw ParseError(where + ": malformed tail '" + line.fields[0] + "'");
      }
    } else {
      throw ParseError(where + ": unknown key '" + line.key + "'");
    }
  }
  if (!have_a || !have_b)
    throw ParseError(origin + ": jacobi input needs both a and b lines");
  if (!have_tail) throw ParseError(origin + ": jacobi input needs a tail line");
  if (a.size() != b.size())
    throw ParseError(origin + ": a and b must have the same length");
  try {
    if (free_tail) return JacobiParams(std::move(a), std::move(b));
    return JacobiParams(std::move(a), std::move(b), env);
  } catch (const ArgumentError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

ParsedInput parse_spectral(const std::vector<Line>& lines,
                           const std::string& origin) {
  std::vector<double> u;
  double radius = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> states;
  bool have_u = false;

  for (const Line& line : lines) {
    const std::string where = origin + ":" + std::to_string(line.number);
    if (line.key == "type") continue;
    if (line.key == "u") {
      have_u = true;
      for (std::size_t i = 0; i < line.fields.size(); ++i)
        u.push_back(parse_number(line.fields[i], field_id(origin, line, "u", i)));
    } else if (line.key == "radius") {
      if (line.fields.size() != 1)
        throw ParseError(where + ": radius needs one value");
      radius = parse_number(line.fields[0], where + ": radius");
      if (!(radius > 1.0))
        throw ParseError(where + ": radius must exceed 1");
    } else if (line.key == "state") {
      if (line.fields.size() != 2)
        throw ParseError(where + ": state needs z and w");
      const double z = parse_number(line.fields[0], where + ": state z");
      const double w = parse_number(line.fields[1], where + ": state w");
      if (!(std::abs(z) < 1.0) || z == 0.0)
        throw ParseError(where + ": state z must lie in (-1,1) \\ {0}");
      if (!(w > 0.0)) throw ParseError(where + ": state weight must be positive");
      states.emplace_back(z, w);
    } else {
      throw ParseError(where + ": unknown key '" + line.key + "'");
    }
  }
  if (!have_u || u.empty())
    throw ParseError(origin + ": spectral input needs a u line");
  try {
    return make_spectral_data(TaylorSeries(std::move(u), radius), states);
  } catch (const Error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

ParsedInput parse_opuc(const std::vector<Line>& lines,
                       const std::string& origin) {
  std::vector<Complex> alphas;
  for (const Line& line : lines) {
    const std::string where = origin + ":" + std::to_string(line.number);
    if (line.key == "type") continue;
    if (line.key != "alpha")
      throw ParseError(where + ": unknown key '" + line.key + "'");
    if (line.fields.size() != 2)
      throw ParseError(where + ": alpha needs re and im");
    const double re = parse_number(line.fields[0], where + ": alpha re");
    const double im = parse_number(line.fields[1], where + ": alpha im");
    if (!(std::hypot(re, im) < 1.0))
      throw ParseError(where + ": |alpha| must be < 1, got |" +
                       line.fields[0] + " + " + line.fields[1] + " i|");
    alphas.emplace_back(re, im);
  }
  if (alphas.empty()) throw ParseError(origin + ": opuc input needs alpha lines");
  return OpucInput{opuc::VerblunskySeq(std::move(alphas))};
}

}  // namespace

ParsedInput parse_input(std::istream& in, const std::string& origin) {
  const std::vector<Line> lines = tokenize(in, origin);
  const Line* type_line = nullptr;
  for (const Line& line : lines) {
    if (line.key == "type") {
      type_line = &line;
      break;
    }
  }
  if (!type_line || type_line->fields.size() != 1)
    throw ParseError(origin + ": missing 'type jacobi|spectral|opuc' line");
  const std::string& kind = type_line->fields[0];
  if (kind == "jacobi") return parse_jacobi(lines, origin);
  if (kind == "spectral") return parse_spectral(lines, origin);
  if (kind == "opuc") return parse_opuc(lines, origin);
  throw ParseError(origin + ": unknown type '" + kind + "'");
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_input(in, path);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_jacobi(std::ostream& out, const JacobiParams& J) {
  out << "type jacobi\n";
  out << "a";
  for (double v : J.a_list()) out << ' ' << format_double(v);
  out << "\nb";
  for (double v : J.b_list()) out << ' ' << format_double(v);
  out << "\n";
  if (J.is_free_tail()) {
    out << "tail free\n";
  } else {
    out << "tail envelope " << format_double(J.envelope().C) << ' '
        << format_double(J.envelope().R) << "\n";
  }
}

void write_spectral(std::ostream& out, const SpectralData& data) {
  out << "type spectral\nu";
  for (double v : data.u.coeffs()) out << ' ' << format_double(v);
  out << "\n";
  if (std::isfinite(data.u.radius()))
    out << "radius " << format_double(data.u.radius()) << "\n";
  for (const BoundState& st : data.states)
    out << "state " << format_double(st.z) << ' ' << format_double(st.weight)
        << "\n";
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << contents;
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace jost::io
