#ifndef JOST_ROOT_FINDING_HPP
#define JOST_ROOT_FINDING_HPP

#include <vector>

#include "jost/taylor_series.hpp"

namespace jost {

// All sign-change zeros of a real-on-the-reals series in [lo, hi], refined by
// bisection to root_tol and verified simple (|u'| > root_tol at the root).
// A subinterval where |u| dips below root_tol without a sign change signals a
// zero of even order, which no valid Jost function can have.
std::vector<double> find_real_zeros(const TaylorSeries& u, double lo, double hi,
                                    double root_tol, int scan_points = 4096);

}  // namespace jost

#endif  // JOST_ROOT_FINDING_HPP
