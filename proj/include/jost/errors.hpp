#ifndef JOST_ERRORS_HPP
#define JOST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jost {

// All library errors derive from Error. The `tag` is a stable,
// machine-readable identifier surfaced in CLI diagnostics.
class Error : public std::runtime_error {
public:
  Error(std::string tag, const std::string& what)
      : std::runtime_error(what), tag_(std::move(tag)) {}
  const std::string& tag() const noexcept { return tag_; }

private:
  std::string tag_;
};

// Bad argument to an operation (wrong range, wrong sizes, ...).
class ArgumentError : public Error {
public:
  explicit ArgumentError(const std::string& what)
      : Error("argument", what) {}
};

// Evaluation requested outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Not enough data for a meaningful estimate.
class DiagnosticError : public Error {
public:
  explicit DiagnosticError(const std::string& what)
      : Error("diagnostic", what) {}
};

// A zero of even order was detected where only simple zeros are admissible.
class DegenerateZeroError : public Error {
public:
  explicit DegenerateZeroError(const std::string& what)
      : Error("degenerate-zero", what) {}
};

// Evaluation hit (or came numerically too close to) a pole.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& what) : Error("pole", what) {}
};

// Validation failures carry the identifier of the violated constraint,
// e.g. "eq-1.13-normalization" or "eq-1.20-canonical".
class ValidationError : public Error {
public:
  ValidationError(std::string tag, const std::string& what)
      : Error(std::move(tag), what) {}
};

// The canonical weight formula has no value at this zero because the
// reflected point is itself a zero of the Jost function.
class NoCanonicalWeightError : public ValidationError {
public:
  explicit NoCanonicalWeightError(const std::string& what)
      : ValidationError("eq-1.20-canonical", what) {}
};

// The reflected point lies outside the disk where the Jost function is known.
class InsufficientAnalyticityError : public ValidationError {
public:
  explicit InsufficientAnalyticityError(const std::string& what)
      : ValidationError("insufficient-analyticity", what) {}
};

// Coefficient stripping produced a non-real or non-positive off-diagonal.
class NonphysicalDataError : public ValidationError {
public:
  explicit NonphysicalDataError(const std::string& what)
      : ValidationError("nonphysical-data", what) {}
};

// Negative Laurent modes above the noise floor: the stripped Jost function
// failed to stay analytic in the working annulus (noncanonical weights).
class AnalyticityLossError : public ValidationError {
public:
  explicit AnalyticityLossError(const std::string& what)
      : ValidationError("analyticity-loss", what) {}
};

// Internal consistency check failed (e.g. negative computed weight).
class InternalConsistencyError : public Error {
public:
  explicit InternalConsistencyError(const std::string& what)
      : Error("internal-consistency", what) {}
};

}  // namespace jost

#endif  // JOST_ERRORS_HPP
