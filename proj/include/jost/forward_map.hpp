#ifndef JOST_FORWARD_MAP_HPP
#define JOST_FORWARD_MAP_HPP

#include <functional>
#include <vector>

#include "jost/geronimo_case.hpp"
#include "jost/jacobi.hpp"
#include "jost/taylor_series.hpp"
#include "jost/tolerances.hpp"

namespace jost {

// A real zero z of u in (-1,1)\{0}: eigenvalue E = z + 1/z outside [-2,2],
// spectral weight w > 0, and the associated M-function residue data
//   w_tilde = lim_{z'->z} (z - z') M(z'),   w = (1/z - z)(1/z) w_tilde.
struct BoundState {
  double z = 0.0;
  double energy = 0.0;
  double weight = 0.0;
  double residue = 0.0;
};

double weight_from_residue(double z, double residue);
double residue_from_weight(double z, double weight);

// Jost solution u_n(z;J) = a_n^{-1} z^n u(z;J^{(n)}).
Complex jost_solution(const JacobiParams& J, std::size_t n, Complex z);

// W(f,k)(n) = a_n (f_{n+1} k_n - f_n k_{n+1}); constant in n when both
// sequences solve the Jacobi difference equation.
Complex wronskian(const std::function<Complex(std::size_t)>& f,
                  const std::function<Complex(std::size_t)>& k,
                  const JacobiParams& J, std::size_t n);

// Backward continued fraction M^(n) = 1/(z + 1/z - b_{n+1} - a_{n+1}^2 M^(n+1))
// seeded with the free value M = z at the given depth. Exact for free tails
// once depth covers the support.
Complex m_continued_fraction(const JacobiParams& J, Complex z, int depth);

// M(z) = z u(z;J^(1)) / (a_1 u(z;J)).
Complex m_from_jost(const JacobiParams& J, Complex z);

// Fredholm determinant det(1 + (J-J0)[J0 - (z+1/z)]^{-1}) over the finite
// block carrying J-J0, using the free resolvent kernel
//   [J0-(z+1/z)]^{-1}_{nm} = (z^{|n-m|} - z^{n+m}) / (z - 1/z).
// Equals u(z)/u(0); kept as an independent cross-check of the recursion.
Complex perturbation_determinant(const JacobiParams& J, Complex z);

// All bound states of J with weights and residues.
std::vector<BoundState> bound_states(const JacobiParams& J,
                                     const ToleranceConfig& tol = {});

// Eigenvalue counts in (2, inf) and (-inf, -2) by Sturm oscillation: sign
// flips of p_n(2) and of (-1)^n p_n(-2). The scan runs to n_max and then
// closes out the (free) tail analytically, so the counts are exact.
struct SturmCounts {
  int above = 0;
  int below = 0;
};
SturmCounts sturm_count(const JacobiParams& J, std::size_t n_max);

// max over the grid of |Im(u_1 conj(u_0)) - sin(theta)| on |z| = 1.
double boundary_identity_check(const JacobiParams& J,
                               const std::vector<double>& thetas);
double boundary_identity_check(const JacobiParams& J, int n_points);

}  // namespace jost

#endif  // JOST_FORWARD_MAP_HPP
