#include "jost/spectral_data.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jost/circle_grid.hpp"
#include "jost/errors.hpp"
#include "jost/quadrature.hpp"
#include "jost/root_finding.hpp"

namespace jost {

namespace {

double boundary_density(const TaylorSeries& u, double theta) {
  const Complex v = u.evaluate(Complex(std::cos(theta), std::sin(theta)));
  const double mod2 = std::norm(v);
  return std::sin(theta) / (std::numbers::pi * mod2);
}

double coefficient_scale(const TaylorSeries& u) {
  double s = 0.0;
  for (double c : u.coeffs()) s += std::abs(c);
  return s == 0.0 ? 1.0 : s;
}

}  // namespace

double ac_mass(const TaylorSeries& u, int theta_points) {
  return unit_circle_quadrature(
      [&](double th) {
        const double s = std::sin(th);
        return 2.0 / std::numbers::pi * s * s /
               std::norm(u.evaluate(Complex(std::cos(th), std::sin(th))));
      },
      theta_points);
}

double ac_mass_adaptive(const TaylorSeries& u, int min_points) {
  std::size_t n = 512;
  while (n < static_cast<std::size_t>(min_points)) n <<= 1;
  constexpr std::size_t kMax = 1u << 17;
  for (;; n <<= 1) {
    std::vector<Complex> h(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      const double s = std::sin(th);
      h[j] = Complex(
          s * s / std::norm(u.evaluate(Complex(std::cos(th), std::sin(th)))),
          0.0);
    }
    fft(h, false);
    const double base = std::abs(h[0]) + 1e-300;
    auto window_max = [&](std::size_t center) {
      double m = 0.0;
      for (std::size_t k = center - center / 8; k <= center; ++k)
        m = std::max(m, std::abs(h[k]));
      return m;
    };
    const double t_quarter = window_max(n / 4);
    const double t_half = window_max(n / 2);
    const bool converged =
        t_half <= 1e-13 * base ||
        (t_quarter > t_half && t_half * (t_half / t_quarter) <= 1e-13 * base);
    // (1/pi) int_0^{2pi} = (2/n) * (DC mode of the sample sum).
    if (converged || n >= kMax)
      return 2.0 * h[0].real() / static_cast<double>(n);
  }
}

double SpectralData::weight_sum() const {
  double s = 0.0;
  for (const BoundState& st : states) s += st.weight;
  return s;
}

SpectralData spectral_data_from_jacobi(const JacobiParams& J,
                                       const ToleranceConfig& tol) {
  SpectralData data;
  data.u = jost_function(J);
  data.states = bound_states(J, tol);
  return data;
}

SpectralData make_spectral_data(
    TaylorSeries u, const std::vector<std::pair<double, double>>& zw) {
  SpectralData data;
  data.u = std::move(u);
  for (const auto& [z, w] : zw) {
    if (!(w > 0.0))
      throw ValidationError("eq-1.13-normalization",
                            "make_spectral_data: weights must be positive");
    if (!(std::abs(z) < 1.0) || z == 0.0)
      throw ArgumentError("make_spectral_data: states must lie in (-1,1)\\{0}");
    BoundState st;
    st.z = z;
    st.energy = z + 1.0 / z;
    st.weight = w;
    st.residue = residue_from_weight(z, w);
    data.states.push_back(st);
  }
  return data;
}

void validate_spectral(const SpectralData& data, const ToleranceConfig& tol,
                       bool check_mass, double mass_tol) {
  tol.validate();
  const double edge = 1.0 - 1e-8;
  const std::vector<double> zeros =
      find_real_zeros(data.u, -edge, edge, tol.root_tol);
  if (zeros.size() != data.states.size())
    throw ValidationError("eq-1.12-states",
                          "spectral data: " + std::to_string(zeros.size()) +
                              " zeros of u vs " +
                              std::to_string(data.states.size()) + " states");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (std::abs(zeros[i] - data.states[i].z) > 1e4 * tol.root_tol)
      throw ValidationError("eq-1.12-states",
                            "spectral data: state at z=" +
                                std::to_string(data.states[i].z) +
                                " does not match a zero of u");
    if (!(data.states[i].weight > 0.0))
      throw ValidationError("eq-1.13-normalization",
                            "spectral data: weights must be positive");
    const double w = weight_from_residue(data.states[i].z, data.states[i].residue);
    if (std::abs(w - data.states[i].weight) >
        1e-10 * std::max(1.0, std::abs(w)))
      throw ValidationError("eq-1.19-residue",
                            "spectral data: weight/residue mismatch at z=" +
                                std::to_string(data.states[i].z));
  }
  if (check_mass) {
    const double dev = normalization_check(data, tol.quad_points);
    if (dev > mass_tol)
      throw ValidationError("eq-1.13-normalization",
                            "spectral data: total mass off by " +
                                std::to_string(dev));
  }
}

double normalization_check(const SpectralData& data, int theta_points) {
  return std::abs(data.weight_sum() + ac_mass(data.u, theta_points) - 1.0);
}

double normalize_mass(SpectralData& data, int theta_points) {
  const double ws = data.weight_sum();
  if (!(ws < 1.0))
    throw ValidationError("eq-1.13-normalization",
                          "normalize_mass: point masses already exhaust mass one");
  const double ac = ac_mass_adaptive(data.u, theta_points);
  if (!(ac > 0.0))
    throw ValidationError("eq-1.13-normalization",
                          "normalize_mass: vanishing a.c. mass");
  const double factor = std::sqrt(ac / (1.0 - ws));
  data.u = data.u.scaled(factor);
  return factor;
}

SampledMeasure measure_from_jost(const SpectralData& data, int theta_points,
                                 double mass_tol) {
  if (theta_points < 2) throw ArgumentError("measure_from_jost: too few points");
  SampledMeasure m;
  m.thetas.resize(static_cast<std::size_t>(theta_points) + 1);
  m.density.resize(m.thetas.size());
  for (std::size_t j = 0; j < m.thetas.size(); ++j) {
    const double th = std::numbers::pi * static_cast<double>(j) /
                      static_cast<double>(theta_points);
    m.thetas[j] = th;
    m.density[j] = boundary_density(data.u, th);
  }
  for (const BoundState& st : data.states)
    m.point_masses.emplace_back(st.energy, st.weight);

  m.total_mass = data.weight_sum() + ac_mass(data.u, theta_points);
  if (std::abs(m.total_mass - 1.0) > mass_tol)
    throw ValidationError(
        "eq-1.13-normalization",
        "measure_from_jost: total mass " + std::to_string(m.total_mass) +
            " violates the normalization constraint");
  return m;
}

Complex m_evaluate(const SpectralData& data, Complex z, int theta_points) {
  const Complex e = z + 1.0 / z;
  for (const BoundState& st : data.states) {
    if (std::abs(z - Complex(st.z, 0.0)) < 1e-13)
      throw PoleError("m_evaluate: z coincides with a bound state");
  }

  // A.c. part: (2/pi) int_0^pi sin^2 / (|u|^2 (E(z) - 2 cos)).
  const int n = theta_points;
  const double h = std::numbers::pi / static_cast<double>(n);
  Complex acc(0.0, 0.0);
  for (int j = 0; j <= n; ++j) {
    const double th = h * static_cast<double>(j);
    const double s = std::sin(th);
    const Complex uval = data.u.evaluate(Complex(std::cos(th), std::sin(th)));
    Complex term = s * s / (std::norm(uval) * (e - 2.0 * std::cos(th)));
    if (j == 0 || j == n) term *= 0.5;
    acc += term;
  }
  Complex m = acc * (2.0 / std::numbers::pi) * h;

  for (const BoundState& st : data.states) m += st.weight / (e - st.energy);
  return m;
}

Complex m_reflection_extend(const SpectralData& data, Complex z,
                            int theta_points) {
  const double r = std::abs(z);
  if (!(r > 1.0) || !(r < data.u.radius()))
    throw DomainError("m_reflection_extend: need 1 < |z| < radius(u)");
  const Complex zr = 1.0 / std::conj(z);
  const Complex msharp = std::conj(m_evaluate(data, zr, theta_points));
  const Complex uz = data.u.evaluate(z);
  const Complex usharp = std::conj(data.u.evaluate(zr));
  const Complex denom = uz * usharp;
  const double scale = coefficient_scale(data.u);
  if (std::abs(denom) < 1e-13 * scale * scale)
    throw PoleError("m_reflection_extend: u(z) u#(z) vanishes");
  return msharp + (z - 1.0 / z) / denom;
}

double canonical_weight(const TaylorSeries& u, double z_j,
                        const ToleranceConfig& tol) {
  tol.validate();
  if (!(std::abs(z_j) < 1.0) || z_j == 0.0)
    throw ArgumentError("canonical_weight: zero must lie in (-1,1)\\{0}");

  const double scale = coefficient_scale(u);
  if (std::abs(u.evaluate_real(z_j)) > 1e-8 * scale)
    throw ArgumentError("canonical_weight: z_j is not a zero of u");

  const double zr = 1.0 / z_j;
  if (std::abs(zr) >= u.radius())
    throw InsufficientAnalyticityError(
        "canonical_weight: 1/z_j lies outside the disk of analyticity");

  const double du = u.derivative().evaluate_real(z_j);
  if (std::abs(du) <= tol.root_tol)
    throw DegenerateZeroError("canonical_weight: zero is not simple");

  // Scale of u near 1/z_j, for deciding that u(1/z_j) vanishes.
  double refl_scale = 0.0;
  double p = 1.0;
  for (double c : u.coeffs()) {
    refl_scale += std::abs(c) * p;
    p *= std::abs(zr);
  }
  const double u_refl = u.evaluate_real(zr);
  if (std::abs(u_refl) < 1e-9 * refl_scale)
    throw NoCanonicalWeightError(
        "no canonical weight at z=" + std::to_string(z_j) +
        ": u vanishes at the reflected point 1/z_j");

  return -(z_j - zr) / (du * u_refl);
}

std::vector<CanonicityReport> canonicity_check(const SpectralData& data,
                                               double R_work,
                                               const ToleranceConfig& tol) {
  if (!(R_work > 1.0))
    throw ArgumentError("canonicity_check: working radius must exceed 1");
  std::vector<CanonicityReport> reports;
  for (const BoundState& st : data.states) {
    if (!(std::abs(st.z) > 1.0 / R_work)) continue;  // outside the annulus
    CanonicityReport rep;
    rep.z = st.z;
    const double canonical = canonical_weight(data.u, st.z, tol);
    rep.deviation = std::abs(st.residue - canonical);
    rep.is_canonical = rep.deviation <= tol.residue_tol;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace jost
