#include "jost/jacobi.hpp"

#include <cmath>
#include <string>

#include "jost/errors.hpp"

namespace jost {

JacobiParams::JacobiParams(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  validate();
}

JacobiParams::JacobiParams(std::vector<double> a, std::vector<double> b,
                           EnvelopeTail tail)
    : a_(std::move(a)), b_(std::move(b)), envelope_(true), tail_(tail) {
  validate();
}

void JacobiParams::validate() const {
  if (a_.size() != b_.size())
    throw ArgumentError("JacobiParams: a and b must have equal length");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] > 0.0))
      throw ArgumentError("JacobiParams: a[" + std::to_string(i) +
                          "] must be positive");
    if (!std::isfinite(a_[i]) || !std::isfinite(b_[i]))
      throw ArgumentError("JacobiParams: entries must be finite");
  }
  if (envelope_) {
    if (!(tail_.R > 1.0) || !(tail_.C > 0.0))
      throw ArgumentError("JacobiParams: envelope needs C > 0 and R > 1");
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      const double bound = tail_.C * std::pow(tail_.R, -2.0 * n);
      const double size = std::abs(b_[i]) + std::abs(a_[i] * a_[i] - 1.0);
      if (size > bound * (1.0 + 1e-12))
        throw ArgumentError("JacobiParams: entry " + std::to_string(i + 1) +
                            " violates the declared envelope");
    }
  }
}

const EnvelopeTail& JacobiParams::envelope() const {
  if (!envelope_) throw ArgumentError("JacobiParams: no envelope declared");
  return tail_;
}

JacobiParams JacobiParams::shifted(std::size_t n) const {
  std::vector<double> sa, sb;
  if (n < a_.size()) {
    sa.assign(a_.begin() + static_cast<long>(n), a_.end());
    sb.assign(b_.begin() + static_cast<long>(n), b_.end());
  }
  if (!envelope_) return JacobiParams(std::move(sa), std::move(sb));
  // |b_{k+n}| + |a_{k+n}^2 - 1| <= C R^{-2n} R^{-2k}.
  EnvelopeTail t{tail_.C * std::pow(tail_.R, -2.0 * static_cast<double>(n)),
                 tail_.R};
  return JacobiParams(std::move(sa), std::move(sb), t);
}

double JacobiParams::perturbation_l1(std::size_t count) const {
  double s = 0.0;
  for (std::size_t n = 1; n <= count; ++n)
    s += std::abs(a(n) - 1.0) + std::abs(b(n));
  return s;
}

}  // namespace jost
