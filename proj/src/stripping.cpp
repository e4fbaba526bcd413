#include "jost/stripping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jost/circle_grid.hpp"
#include "jost/errors.hpp"
#include "jost/rate_estimates.hpp"
#include "jost/root_finding.hpp"

namespace jost {

namespace {

// M-function evaluator backed by the measure of the current Jost data:
// cached boundary-density samples plus exact point-mass terms. The boundary
// resolution starts at min_points and doubles until the Fourier tail of the
// density falls below the noise floor (zeros of u near the circle slow the
// decay and need finer grids).
class MeasureEvaluator {
public:
  MeasureEvaluator(const SpectralData& data, int min_points)
      : data_(&data) {
    std::size_t n = 512;
    while (n < static_cast<std::size_t>(min_points)) n <<= 1;
    constexpr std::size_t kMax = 1u << 17;
    for (;; n <<= 1) {
      build(n);
      if (n >= kMax || tail_ok()) break;
    }
  }

  int points() const { return static_cast<int>(g_.size()); }

  // M(z) for z off the support; valid for |z| < 1 and, because the point
  // terms are exact rationals, anywhere the a.c. kernel stays regular.
  // (1/pi) int_0^{2pi} sin^2 / (|u|^2 (E - 2cos)) by the uniform sum.
  Complex disk(Complex z) const {
    const Complex e = z + 1.0 / z;
    const std::size_t n = g_.size();
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      acc += g_[j] / (e - two_cos_[j]);
    Complex m = acc * (2.0 / static_cast<double>(n));
    for (const BoundState& st : data_->states) m += st.weight / (e - st.energy);
    return m;
  }

  // Meromorphic extension through M = M# + (z - 1/z)/(u u#).
  Complex annulus(Complex z) const {
    const Complex zr = 1.0 / std::conj(z);
    const Complex msharp = std::conj(disk(zr));
    const Complex denom =
        data_->u.evaluate(z) * std::conj(data_->u.evaluate(zr));
    return msharp + (z - 1.0 / z) / denom;
  }

private:
  void build(std::size_t n) {
    g_.resize(n);
    two_cos_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      const double s = std::sin(th);
      const Complex uval =
          data_->u.evaluate(Complex(std::cos(th), std::sin(th)));
      g_[j] = s * s / std::norm(uval);
      two_cos_[j] = 2.0 * std::cos(th);
    }
  }

  // The aliasing error of the cached sums behaves like the Fourier mode at
  // N, so accept once the geometric extrapolation of the measured tail
  // (windows near N/4 and N/2) projects below the noise floor.
  bool tail_ok() const {
    std::vector<Complex> hat(g_.size());
    for (std::size_t j = 0; j < g_.size(); ++j) hat[j] = Complex(g_[j], 0.0);
    fft(hat, false);
    const double base = std::abs(hat[0]) + 1e-300;
    auto window_max = [&](std::size_t center) {
      double m = 0.0;
      for (std::size_t k = center - center / 8; k <= center; ++k)
        m = std::max(m, std::abs(hat[k]));
      return m;
    };
    const double t_quarter = window_max(g_.size() / 4);
    const double t_half = window_max(g_.size() / 2);
    if (t_half <= 1e-13 * base) return true;
    if (t_quarter <= t_half) return false;  // no clean decay yet
    const double projected = t_half * (t_half / t_quarter);
    return projected <= 1e-13 * base;
  }

  const SpectralData* data_;
  std::vector<double> g_;
  std::vector<double> two_cos_;
};

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 2;
  while (p < n) p <<= 1;
  return p;
}

double min_state_abs(const SpectralData& data) {
  double m = std::numeric_limits<double>::infinity();
  for (const BoundState& st : data.states) m = std::min(m, std::abs(st.z));
  return m;
}

// Sampling radius for the stripped Jost function, kept away from the bound
// state moduli where u * M suffers cancellation.
double pick_extraction_radius(const SpectralData& data) {
  static constexpr double kCandidates[] = {0.75, 0.85, 0.65, 0.6,
                                           0.8,  0.7,  0.9,  0.55};
  double best = kCandidates[0];
  double best_gap = -1.0;
  for (double r : kCandidates) {
    double gap = 1.0;
    for (const BoundState& st : data.states)
      gap = std::min(gap, std::abs(std::abs(st.z) - r));
    if (gap > 0.04) return r;
    if (gap > best_gap) {
      best_gap = gap;
      best = r;
    }
  }
  return best;
}

double series_seminorm_on_circle(const TaylorSeries& u, double radius,
                                 std::size_t n) {
  CircleGrid g = CircleGrid::sample(radius, n,
                                    [&](Complex z) { return u.evaluate(z); });
  return seminorm_triple(g);
}

bool is_free_fixed_point(const SpectralData& data) {
  if (!data.states.empty()) return false;
  const std::vector<double>& c = data.u.coeffs();
  double tail = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) tail += std::abs(c[k]);
  return tail <= 1e-9 * std::abs(c[0]);
}

}  // namespace

StripState make_strip_state(SpectralData data, const StripOptions& opt) {
  opt.tol.validate();
  if (!(data.u.radius() > 1.0))
    throw ArgumentError("make_strip_state: u must be analytic past |z| = 1");
  for (const BoundState& st : data.states) {
    if (!(st.weight > 0.0))
      throw ValidationError("eq-1.13-normalization",
                            "make_strip_state: weights must be positive");
  }
  StripState s;
  normalize_mass(data, opt.theta_points);
  s.data = std::move(data);
  s.terminated = is_free_fixed_point(s.data);
  return s;
}

StripState strip_once(const StripState& state, const StripOptions& opt) {
  opt.tol.validate();
  const SpectralData& data = state.data;
  StripDiagnostics diag;

  MeasureEvaluator eval(data, opt.theta_points);
  diag.boundary_points = eval.points();

  // (1)-(3): Taylor coefficients of M(z)/z on |z| = r0, then the recovered
  // pair from log(M/z) = b z + ((a^2 - 1) + b^2/2) z^2 + O(z^3).
  // The circle must stay inside the first pole of M; the 256-point grid
  // keeps the alias ratio (r0/|z|_min)^N negligible even at the 0.8 clamp.
  double r0 = opt.r0;
  const double zmin = min_state_abs(data);
  if (zmin < std::numeric_limits<double>::infinity())
    r0 = std::min(r0, 0.8 * zmin);
  CircleGrid small = CircleGrid::sample(
      r0, 256, [&](Complex z) { return eval.disk(z) / z; });
  const std::vector<Complex> c = coefficients_from_grid(small, 2);
  const double mass = c[0].real();
  const double t1 = (c[1] / c[0]).real();
  const double t2 = (c[2] / c[0]).real() - 0.5 * t1 * t1;

  diag.b = t1;
  const double radicand = 1.0 + t2 - 0.5 * t1 * t1;
  if (!(radicand > 0.0))
    throw NonphysicalDataError(
        "strip_once: off-diagonal radicand " + std::to_string(radicand) +
        " is not positive");
  diag.a = std::sqrt(radicand);
  (void)mass;

  // (4): resample u^{(n+1)} = a z^{-1} u M into Taylor coefficients.
  const double r_u = pick_extraction_radius(data);
  const std::size_t len = std::max<std::size_t>(data.u.coeffs().size(), 2);
  const std::size_t nu = next_pow2(std::max<std::size_t>(128, 2 * len + 2));
  CircleGrid ugrid = CircleGrid::sample(r_u, nu, [&](Complex z) {
    return diag.a * data.u.evaluate(z) * eval.disk(z) / z;
  });
  const std::vector<Complex> uc =
      coefficients_from_grid(ugrid, static_cast<int>(len - 1));
  std::vector<double> next_coeffs(uc.size());
  for (std::size_t k = 0; k < uc.size(); ++k) next_coeffs[k] = uc[k].real();
  TaylorSeries u_next =
      TaylorSeries(std::move(next_coeffs), data.u.radius());
  {
    double peak = 0.0;
    for (double v : u_next.coeffs()) peak = std::max(peak, std::abs(v));
    u_next = u_next.trimmed(1e-13 * peak);
  }

  // Contraction diagnostics on |z| = R1 and the analyticity monitor on the
  // detection circle. Both sample the true update a z^{-1} u M through the
  // reflection extension of M, so negative Laurent modes are visible.
  double radius_cap = data.u.radius();
  if (!std::isfinite(radius_cap)) radius_cap = std::numeric_limits<double>::infinity();
  const double r1 = std::min(opt.seminorm_radius, 0.98 * radius_cap);
  if (!(r1 > 1.0))
    throw ArgumentError("strip_once: seminorm radius must exceed 1 within the disk of analyticity");
  auto annulus_update = [&](Complex z) {
    return diag.a * data.u.evaluate(z) * eval.annulus(z) / z;
  };
  diag.seminorm_before = series_seminorm_on_circle(data.u, r1, 256);
  CircleGrid ann1 = CircleGrid::sample(r1, 256, annulus_update);
  diag.seminorm_after = seminorm_triple(ann1);

  double sup_n = 0.0;
  for (std::size_t j = 0; j < 256; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / 256.0;
    const Complex w = (1.0 / r1) * Complex(std::cos(th), std::sin(th));
    sup_n = std::max(sup_n, std::abs(eval.disk(w) / w));
  }
  diag.sup_nsharp = sup_n;

  const double rdet = std::min(opt.detect_radius, 0.98 * radius_cap);
  if (rdet > 1.02) {
    CircleGrid det = rdet == r1 ? ann1 : CircleGrid::sample(rdet, 256, annulus_update);
    diag.neg_mode = negative_mode_energy(det);
    if (diag.neg_mode > opt.neg_mode_floor)
      throw AnalyticityLossError(
          "strip_once: negative Laurent modes at |z| = " + std::to_string(rdet) +
          " carry relative energy " + std::to_string(diag.neg_mode) +
          "; weights are not canonical");
  }

  // (6): surviving bound states with canonical residues. The residues pair
  // with the normalized u, and the normalization constant is itself fixed by
  // the canonical weights: scaling u by c scales every mass term by 1/c^2.
  const double edge = 1.0 - 1e-8;
  std::vector<double> zeros =
      find_real_zeros(u_next, -edge, edge, opt.tol.root_tol);
  if (zeros.size() > data.states.size())
    throw InternalConsistencyError(
        "strip_once: bound state count increased from " +
        std::to_string(data.states.size()) + " to " +
        std::to_string(zeros.size()));

  std::vector<double> residues0(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i)
    residues0[i] = canonical_weight(u_next, zeros[i], opt.tol);

  double mass0 = ac_mass_adaptive(u_next, eval.points());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double w0 = weight_from_residue(zeros[i], residues0[i]);
    if (!(w0 > 0.0))
      throw ValidationError("negative-canonical-weight",
                            "strip_once: canonical weight at z=" +
                                std::to_string(zeros[i]) + " is not positive");
    mass0 += w0;
  }

  diag.u_at_zero = u_next.coeffs()[0];
  const double scale = std::sqrt(mass0);
  diag.normalization = scale;

  SpectralData next;
  next.u = u_next.scaled(scale);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    BoundState st;
    st.z = zeros[i];
    st.energy = zeros[i] + 1.0 / zeros[i];
    st.residue = residues0[i] / mass0;
    st.weight = weight_from_residue(st.z, st.residue);
    next.states.push_back(st);
  }

  StripState out;
  out.n = state.n + 1;
  out.data = std::move(next);
  out.recovered_a = state.recovered_a;
  out.recovered_b = state.recovered_b;
  out.recovered_a.push_back(diag.a);
  out.recovered_b.push_back(diag.b);
  out.log = state.log;
  out.log.push_back(diag);
  out.terminated = is_free_fixed_point(out.data);
  return out;
}

RecoveryResult recover_jacobi(const SpectralData& data, std::size_t N,
                              const StripOptions& opt) {
  StripState s = make_strip_state(data, opt);
  RecoveryResult res;
  for (std::size_t step = 1; step <= N; ++step) {
    if (s.terminated) {
      if (res.terminated_at == 0) res.terminated_at = static_cast<int>(step);
      res.a.push_back(1.0);
      res.b.push_back(0.0);
      continue;
    }
    try {
      s = strip_once(s, opt);
    } catch (const AnalyticityLossError&) {
      res.analyticity_loss = true;
      res.loss_step = static_cast<int>(step);
      break;
    }
    res.a.push_back(s.recovered_a.back());
    res.b.push_back(s.recovered_b.back());
    res.log.push_back(s.log.back());
  }
  return res;
}

double decay_rate_estimate(const JacobiParams& J) {
  std::vector<double> ns, logs;
  for (std::size_t n = 1; n <= J.support(); ++n) {
    const double s = std::abs(J.a(n) - 1.0) + std::abs(J.b(n));
    if (s < 1e-14) continue;
    ns.push_back(2.0 * static_cast<double>(n));
    logs.push_back(std::log(s));
  }
  if (ns.empty()) return std::numeric_limits<double>::infinity();
  if (ns.size() < 10)
    throw DiagnosticError("decay_rate_estimate: need at least 10 nontrivial entries");
  const std::size_t start = ns.size() / 2;
  std::vector<double> xs(ns.begin() + static_cast<long>(start), ns.end());
  std::vector<double> ys(logs.begin() + static_cast<long>(start), logs.end());
  const LinearFit f = fit_line(xs, ys);
  return std::exp(-f.slope);
}

}  // namespace jost
