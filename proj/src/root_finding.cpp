#include "jost/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jost/errors.hpp"

namespace jost {

namespace {

double bisect(const TaylorSeries& u, double a, double b, double fa,
              double root_tol) {
  for (int it = 0; it < 200 && (b - a) > root_tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = u.evaluate_real(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> find_real_zeros(const TaylorSeries& u, double lo, double hi,
                                    double root_tol, int scan_points) {
  if (!(lo < hi) || lo <= -1.0 || hi >= 1.0)
    throw ArgumentError("find_real_zeros: need [lo,hi] inside (-1,1)");
  if (scan_points < 8) throw ArgumentError("find_real_zeros: scan too coarse");

  // Scale for "numerically zero" relative to the coefficient size.
  double scale = 0.0;
  for (double c : u.coeffs()) scale += std::abs(c);
  if (scale == 0.0) scale = 1.0;

  const double h = (hi - lo) / static_cast<double>(scan_points);
  std::vector<double> roots;
  double x0 = lo;
  double f0 = u.evaluate_real(x0);

  // Tracks a run of samples with |u| below the degenerate-zero floor but no
  // sign change, which indicates an even-order zero.
  int small_run = 0;
  const double small_floor = root_tol * scale;

  for (int j = 1; j <= scan_points; ++j) {
    const double x1 = lo + h * static_cast<double>(j);
    const double f1 = u.evaluate_real(x1);

    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0)) {
      roots.push_back(bisect(u, x0, x1, f0, root_tol));
      small_run = 0;
    } else if (std::abs(f0) < small_floor && std::abs(f1) < small_floor) {
      if (++small_run >= 2)
        throw DegenerateZeroError(
            "find_real_zeros: |u| vanishes without sign change near x=" +
            std::to_string(0.5 * (x0 + x1)) + "; zero of even order");
    } else {
      small_run = 0;
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(x0);

  // De-duplicate (a root can be caught by two neighboring panels).
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 4.0 * root_tol)
      unique.push_back(r);
  }

  const TaylorSeries du = u.derivative();
  for (double r : unique) {
    if (std::abs(du.evaluate_real(r)) <= root_tol)
      throw DegenerateZeroError("find_real_zeros: zero at x=" +
                                std::to_string(r) + " is not simple");
  }
  return unique;
}

}  // namespace jost
