#include "jost/taylor_series.hpp"

#include <cmath>

#include "jost/errors.hpp"

namespace jost {

TaylorSeries::TaylorSeries(std::vector<double> coeffs, double radius)
    : coeffs_(std::move(coeffs)), radius_(radius) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (!(radius_ > 0.0))
    throw ArgumentError("TaylorSeries: radius must be positive");
  for (double c : coeffs_) {
    if (!std::isfinite(c))
      throw ArgumentError("TaylorSeries: coefficients must be finite");
  }
}

TaylorSeries TaylorSeries::one() { return TaylorSeries({1.0}); }

int TaylorSeries::degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  }
  return 0;
}

double TaylorSeries::leading_coefficient() const noexcept {
  return coeffs_[static_cast<std::size_t>(degree())];
}

Complex TaylorSeries::evaluate(Complex z) const {
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

double TaylorSeries::evaluate_real(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

TaylorSeries TaylorSeries::derivative() const {
  if (coeffs_.size() <= 1) return TaylorSeries({0.0}, radius_);
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return TaylorSeries(std::move(d), radius_);
}

TaylorSeries TaylorSeries::trimmed(double floor) const {
  std::size_t n = coeffs_.size();
  while (n > 1 && std::abs(coeffs_[n - 1]) <= floor) --n;
  return TaylorSeries(std::vector<double>(coeffs_.begin(),
                                          coeffs_.begin() + static_cast<long>(n)),
                      radius_);
}

TaylorSeries TaylorSeries::scaled(double factor) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= factor;
  return TaylorSeries(std::move(c), radius_);
}

TaylorSeries TaylorSeries::deflate(double root, double* remainder) const {
  if (root == 0.0) throw ArgumentError("TaylorSeries::deflate: zero root");
  // Write p(z) = (1 - z/root) q(z) + r. Synthetic division from the top.
  const int d = degree();
  std::vector<double> q(static_cast<std::size_t>(d > 0 ? d : 1), 0.0);
  double carry = 0.0;  // coefficient flowing down; q_k = -root*(p_{k+1} + q_{k+1}/root)...
  // Use the standard division by (z - root) then rescale: p(z) = (z - root) s(z) + r
  // and (1 - z/root) = -(z - root)/root, so q = -root * s.
  std::vector<double> s(static_cast<std::size_t>(d > 0 ? d : 1), 0.0);
  carry = at(static_cast<std::size_t>(d));
  for (int k = d - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = carry;
    carry = at(static_cast<std::size_t>(k)) + root * carry;
  }
  if (remainder) *remainder = carry;
  for (std::size_t k = 0; k < s.size(); ++k) q[k] = -root * s[k];
  return TaylorSeries(std::move(q), radius_);
}

}  // namespace jost
