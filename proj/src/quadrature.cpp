#include "jost/quadrature.hpp"

#include <numbers>

#include "jost/errors.hpp"

namespace jost {

double unit_circle_quadrature(const std::function<double(double)>& f, int n) {
  if (n < 2) throw ArgumentError("unit_circle_quadrature: need n >= 2");
  const double h = std::numbers::pi / static_cast<double>(n);
  double sum = 0.5 * (f(0.0) + f(std::numbers::pi));
  for (int j = 1; j < n; ++j) sum += f(h * static_cast<double>(j));
  return h * sum;
}

}  // namespace jost
