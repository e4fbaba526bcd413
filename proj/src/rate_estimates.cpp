#include "jost/rate_estimates.hpp"

#include <cmath>
#include <limits>

#include "jost/errors.hpp"

namespace jost {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ArgumentError("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw ArgumentError("fit_line: degenerate abscissae");
  LinearFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

double radius_estimate(const std::vector<double>& coeffs) {
  if (coeffs.size() < 8)
    throw DiagnosticError("radius_estimate: need at least 8 coefficients");
  const std::size_t start = coeffs.size() / 2;
  std::vector<double> ks, logs;
  for (std::size_t k = start; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0.0) {
      ks.push_back(static_cast<double>(k));
      logs.push_back(std::log(std::abs(coeffs[k])));
    }
  }
  if (ks.empty()) return std::numeric_limits<double>::infinity();
  if (ks.size() < 2)
    throw DiagnosticError("radius_estimate: too few nonzero tail coefficients");
  const LinearFit f = fit_line(ks, logs);
  return std::exp(-f.slope);
}

}  // namespace jost
