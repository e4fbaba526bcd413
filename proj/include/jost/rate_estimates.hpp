#ifndef JOST_RATE_ESTIMATES_HPP
#define JOST_RATE_ESTIMATES_HPP

#include <vector>

namespace jost {

// Least-squares slope/intercept of y against x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Cauchy-Hadamard radius 1/limsup |c_k|^{1/k}, estimated by regressing
// log|c_k| against k over the trailing half of the coefficients, ignoring
// zero entries. Returns +inf when the tail is identically zero.
double radius_estimate(const std::vector<double>& coeffs);

}  // namespace jost

#endif  // JOST_RATE_ESTIMATES_HPP
