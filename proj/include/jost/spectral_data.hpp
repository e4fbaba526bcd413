#ifndef JOST_SPECTRAL_DATA_HPP
#define JOST_SPECTRAL_DATA_HPP

#include <utility>
#include <vector>

#include "jost/forward_map.hpp"
#include "jost/jacobi.hpp"
#include "jost/taylor_series.hpp"
#include "jost/tolerances.hpp"

namespace jost {

// The spectral side of the correspondence: a Jost function plus the bound
// state weights. The underlying measure is
//   d gamma = f(E) dE + sum_j w_j delta(E_j),  f(2 cos t) = sin t / (pi |u|^2)
// normalized to total mass one.
struct SpectralData {
  TaylorSeries u;
  std::vector<BoundState> states;

  double weight_sum() const;
};

// Builds spectral data by the forward map.
SpectralData spectral_data_from_jacobi(const JacobiParams& J,
                                       const ToleranceConfig& tol = {});

// Type invariants: zeros of u in (-1,1)\{0} in one-to-one correspondence
// with the states, positive weights, residue/weight conversion consistent,
// and (when check_mass) the total-mass constraint within mass_tol.
void validate_spectral(const SpectralData& data, const ToleranceConfig& tol = {},
                       bool check_mass = true, double mass_tol = 1e-8);

// Assembles data from a Jost function and (z, weight) pairs, filling the
// residues via the weight/residue conversion.
SpectralData make_spectral_data(TaylorSeries u,
                                const std::vector<std::pair<double, double>>& zw);

// (2/pi) int_0^pi sin^2(theta) / |u(e^{i theta})|^2 dtheta.
double ac_mass(const TaylorSeries& u, int theta_points = 512);

// Same integral with the resolution doubled until the Fourier tail of the
// boundary density drops below the noise floor (zeros of u near the circle
// slow the decay); min_points is the starting resolution.
double ac_mass_adaptive(const TaylorSeries& u, int min_points = 512);

// |sum_j w_j + (2/pi) int_0^pi sin^2 / |u|^2 - 1|.
double normalization_check(const SpectralData& data, int theta_points = 512);

// Rescales u by the positive constant that restores total mass one for the
// given weights; the measure and everything derived from it depend only on
// the rescaled data. Returns the factor applied to u.
double normalize_mass(SpectralData& data, int theta_points = 512);

// The sampled measure: trapezoid nodes of [0, pi], the a.c. density there,
// and the point masses.
struct SampledMeasure {
  std::vector<double> thetas;
  std::vector<double> density;   // f(2 cos theta)
  std::vector<std::pair<double, double>> point_masses;  // (E_j, w_j)
  double total_mass = 0.0;
};
SampledMeasure measure_from_jost(const SpectralData& data, int theta_points,
                                 double mass_tol = 1e-10);

// M(z) = -m(z + 1/z) evaluated from the measure: quadrature over the a.c.
// part plus the exact point-mass terms.
Complex m_evaluate(const SpectralData& data, Complex z, int theta_points = 512);

// Meromorphic extension to 1 < |z| < radius(u) through the reflection
// identity M(z) = M#(z) + (z - 1/z)/(u(z) u#(z)), where g#(z) = conj(g(1/z̄)).
Complex m_reflection_extend(const SpectralData& data, Complex z,
                            int theta_points = 512);

// The canonical residue at a simple zero z_j of u:
//   w~ = -(z_j - 1/z_j) / (u'(z_j) u#(z_j)).
// Requires u analytic past 1/|z_j| and u(1/z_j) != 0.
double canonical_weight(const TaylorSeries& u, double z_j,
                        const ToleranceConfig& tol = {});

struct CanonicityReport {
  double z = 0.0;
  bool is_canonical = false;
  double deviation = 0.0;  // |residue - canonical residue|
};

// Compares data residues against canonical ones for every state with
// |z_j| > 1/R_work; states outside the annulus of analyticity are skipped.
std::vector<CanonicityReport> canonicity_check(const SpectralData& data,
                                               double R_work,
                                               const ToleranceConfig& tol = {});

}  // namespace jost

#endif  // JOST_SPECTRAL_DATA_HPP
