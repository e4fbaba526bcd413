#ifndef JOST_GERONIMO_CASE_HPP
#define JOST_GERONIMO_CASE_HPP

#include <cstddef>

#include "jost/jacobi.hpp"
#include "jost/taylor_series.hpp"

namespace jost {

// State of the Geronimo-Case recursion after n steps:
//   c_n(z) = z^n p_n(z + 1/z),   exact degree 2n, leading 1/(a_1...a_n)
//   g_n(z) = Jost function of the matrix truncated to free past row n,
//            degree <= 2n, with (a_1...a_n) g_n(0) = 1.
struct GCState {
  std::size_t n = 0;
  TaylorSeries c = TaylorSeries::one();
  TaylorSeries g = TaylorSeries::one();
  double prefactor = 1.0;  // a_1 ... a_n
};

// One step of the coupled recursion
//   a c' = (z^2 - b z) c + g
//   a g' = ((1 - a^2) z^2 - b z) c + g
// carried out in exact polynomial coefficient arithmetic.
GCState gc_step(const GCState& state, double a_next, double b_next);

// Jost function of a finite-range J: runs the recursion through the support
// and returns g_K, which is exact. Degree 2K with leading (1-a_K^2)/(a_1..a_K)
// when a_K != 1; degree 2K-1 with leading -b_K/(a_1..a_K) when a_K = 1,
// b_K != 0.
TaylorSeries jost_from_finite(const JacobiParams& J);

struct JostTailResult {
  TaylorSeries u;
  double error_bound = 0.0;  // rigorous bound on |u - g_n| at working_radius
};

// Jost approximation g_{n_terms} for an envelope-tail J, together with a
// rigorous tail bound at |z| = working_radius derived from the declared
// envelope. The bound needs working_radius < R.
JostTailResult jost_tail_limit(const JacobiParams& J, std::size_t n_terms,
                               double working_radius = 1.0);

// Convenience: exact polynomial for free tails, or the envelope limit over
// all stored entries. `target` is a hard ceiling on the certified tail bound
// at `working_radius`; the default admits measure-grade accuracy for
// envelope classes that store only a few dozen entries.
TaylorSeries jost_function(const JacobiParams& J, double working_radius = 1.0,
                           double target = 1e-6);

}  // namespace jost

#endif  // JOST_GERONIMO_CASE_HPP
