#include "jost/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jost/errors.hpp"
#include "jost/rate_estimates.hpp"

namespace jost::opuc {

VerblunskySeq::VerblunskySeq(std::vector<Complex> a) : alphas(std::move(a)) {
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    if (!(std::abs(alphas[n]) < 1.0))
      throw ArgumentError("VerblunskySeq: |alpha_" + std::to_string(n) +
                          "| must be < 1");
  }
}

std::vector<Complex> reversed_conjugate(const std::vector<Complex>& coeffs) {
  std::vector<Complex> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out[k] = std::conj(coeffs[coeffs.size() - 1 - k]);
  return out;
}

SzegoPair szego_recursion(const VerblunskySeq& alphas, std::size_t n) {
  if (n > alphas.size())
    throw ArgumentError("szego_recursion: level exceeds the coefficient list");
  std::vector<Complex> phi{Complex(1.0, 0.0)};
  std::vector<Complex> star{Complex(1.0, 0.0)};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = alphas.at(k);
    std::vector<Complex> phi_next(k + 2, Complex(0.0, 0.0));
    std::vector<Complex> star_next(k + 2, Complex(0.0, 0.0));
    for (std::size_t j = 0; j <= k; ++j) {
      phi_next[j + 1] += phi[j];            // z Phi_k
      phi_next[j] -= std::conj(a) * star[j];
      star_next[j] += star[j];              // Phi_k^*
      star_next[j + 1] -= a * phi[j];
    }
    phi = std::move(phi_next);
    star = std::move(star_next);
  }
  SzegoPair out;
  out.n = n;
  out.phi = std::move(phi);
  out.phi_star = std::move(star);
  return out;
}

SchurEvaluator::SchurEvaluator()
    : level_(0), eval_([](Complex) { return Complex(0.0, 0.0); }) {}

SchurEvaluator::SchurEvaluator(int level, std::function<Complex(Complex)> eval)
    : level_(level), eval_(std::move(eval)) {}

SchurEvaluator schur_forward(Complex alpha_n, const SchurEvaluator& f_next) {
  const SchurEvaluator inner = f_next;
  return SchurEvaluator(f_next.level() - 1, [alpha_n, inner](Complex z) {
    const Complex zf = z * inner(z);
    return (alpha_n + zf) / (Complex(1.0, 0.0) + std::conj(alpha_n) * zf);
  });
}

SchurEvaluator schur_from_alphas(const VerblunskySeq& alphas, int level) {
  SchurEvaluator f(static_cast<int>(alphas.size()),
                   [](Complex) { return Complex(0.0, 0.0); });
  for (int k = static_cast<int>(alphas.size()) - 1; k >= level; --k)
    f = schur_forward(alphas.at(static_cast<std::size_t>(k)), f);
  return f;
}

VerblunskySeq schur_inverse(const SchurEvaluator& f, std::size_t n_max) {
  // Works on circle samples: the constant Fourier mode reads off f^(n)(0)
  // and the inverse Moebius step maps samples to samples.
  constexpr std::size_t kN = 512;
  constexpr double kRho = 0.9;
  CircleGrid grid = CircleGrid::sample(kRho, kN, [&](Complex z) { return f(z); });

  std::vector<Complex> alphas;
  alphas.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Complex a = coefficients_from_grid(grid, 0)[0];
    if (!(std::abs(a) < 1.0))
      throw ValidationError("not-a-schur-function",
                            "schur_inverse: |f^(n)(0)| >= 1 at level " +
                                std::to_string(n));
    alphas.push_back(a);
    for (std::size_t j = 0; j < kN; ++j) {
      const Complex z = grid.node(j);
      const Complex fv = grid.values()[j];
      grid.values()[j] = (fv - a) / ((Complex(1.0, 0.0) - std::conj(a) * fv) * z);
    }
  }
  return VerblunskySeq(std::move(alphas));
}

Complex caratheodory_from_schur(const SchurEvaluator& f, Complex z) {
  const Complex zf = z * f(z);
  const Complex denom = Complex(1.0, 0.0) - zf;
  if (std::abs(denom) < 1e-300)
    throw PoleError("caratheodory_from_schur: z f(z) = 1");
  return (Complex(1.0, 0.0) + zf) / denom;
}

Complex szego_function(const std::function<double(double)>& w, Complex z,
                       int quad_points) {
  if (quad_points < 4) throw ArgumentError("szego_function: too few points");
  const std::size_t n = static_cast<std::size_t>(quad_points);
  Complex acc(0.0, 0.0);
  // Midpoint-offset nodes: same spectral accuracy for periodic integrands,
  // and weights with removable zeros at theta = 0, pi stay evaluable.
  for (std::size_t j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi *
                      (static_cast<double>(j) + 0.5) / static_cast<double>(n);
    const double wv = w(th);
    if (!(wv > 0.0))
      throw DomainError("szego_function: weight must be positive at theta=" +
                        std::to_string(th));
    const Complex eit(std::cos(th), std::sin(th));
    acc += (eit + z) / (eit - z) * std::log(wv);
  }
  return std::exp(acc / (2.0 * static_cast<double>(n)));
}

Complex relative_szego(Complex alpha_n, const SchurEvaluator& f_n,
                       const SchurEvaluator& f_next, Complex z) {
  const double rho = std::sqrt(1.0 - std::norm(alpha_n));
  const Complex fn = f_n(z);
  const Complex denom = Complex(1.0, 0.0) - z * fn;
  if (std::abs(denom) < 1e-300) throw PoleError("relative_szego: 1 - z f^(n) = 0");
  return (Complex(1.0, 0.0) - std::conj(alpha_n) * fn) / rho *
         (Complex(1.0, 0.0) - z * f_next(z)) / denom;
}

Complex relative_szego_caratheodory(Complex alpha_n, const SchurEvaluator& f_n,
                                    Complex z) {
  if (z == Complex(0.0, 0.0))
    throw PoleError("relative_szego_caratheodory: z = 0 is removable, evaluate nearby");
  const double rho = std::sqrt(1.0 - std::norm(alpha_n));
  const Complex F = caratheodory_from_schur(f_n, z);
  const Complex m = z * (Complex(1.0, 0.0) + alpha_n) * (F + 1.0) -
                    (Complex(1.0, 0.0) + std::conj(alpha_n)) * (F - 1.0);
  return m / (2.0 * rho * z);
}

DinvUpdateResult dinv_update(const CircleGrid& dinv,
                             const SchurEvaluator& f_level, Complex alpha) {
  const double r1 = dinv.radius();
  if (!(r1 > 1.0)) throw ArgumentError("dinv_update: need a circle with R1 > 1");
  const std::size_t n = dinv.size();

  // Taylor coefficients of D^{-1} from the grid, used to evaluate at the
  // reflected points 1/conj(z) inside the disk.
  const std::vector<Complex> taylor =
      coefficients_from_grid(dinv, static_cast<int>(n / 2) - 1);
  auto dinv_at = [&](Complex w) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = taylor.size(); k-- > 0;) acc = acc * w + taylor[k];
    return acc;
  };

  const double rho = std::sqrt(1.0 - std::norm(alpha));
  const Complex one(1.0, 0.0);

  CircleGrid out(r1, n);
  double sup_a = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex z = dinv.node(j);
    const Complex zr = 1.0 / std::conj(z);
    // F#(z) = conj(F(1/conj z)) through the Schur parametrization.
    const Complex Fsharp = std::conj(caratheodory_from_schur(f_level, zr));
    const Complex A = 0.5 * (z * (one + alpha) * (one - Fsharp) +
                             (one + std::conj(alpha)) * (one + Fsharp));
    const Complex Dsharp = one / std::conj(dinv_at(zr));
    const Complex B = ((one + alpha) - (one + std::conj(alpha)) / z) * Dsharp;
    out.values()[j] = (A / z * dinv.values()[j] + B) / rho;
    sup_a = std::max(sup_a, std::abs(A));
  }
  return DinvUpdateResult{std::move(out), sup_a};
}

DecayCheckResult verblunsky_decay_check(const TaylorSeries& dinv,
                                        const VerblunskySeq& alphas) {
  if (alphas.size() < 4)
    throw DiagnosticError("verblunsky_decay_check: too few coefficients");

  // limsup |alpha_n|^{1/n} by regression over the trailing nonzero entries.
  std::vector<double> ns, logs;
  for (std::size_t n = 1; n < alphas.size(); ++n) {
    const double a = std::abs(alphas.at(n));
    if (a < 1e-290) continue;
    ns.push_back(static_cast<double>(n));
    logs.push_back(std::log(a));
  }
  DecayCheckResult res;
  double decay;  // limsup |alpha_n|^{1/n}
  if (ns.empty()) {
    decay = 0.0;
    res.R_est = std::numeric_limits<double>::infinity();
  } else {
    const std::size_t start = ns.size() / 2;
    std::vector<double> xs(ns.begin() + static_cast<long>(start), ns.end());
    std::vector<double> ys(logs.begin() + static_cast<long>(start), logs.end());
    if (xs.size() < 2) {
      xs = ns;
      ys = logs;
    }
    const LinearFit f = fit_line(xs, ys);
    decay = std::exp(f.slope);
    res.R_est = 1.0 / decay;
  }

  const double rd = radius_estimate(dinv.coeffs());
  const double limit = std::isinf(rd) ? 0.0 : 1.0 / rd;
  res.pass = decay <= limit * 1.05;
  return res;
}

SzegoMapReport szego_map_identity_check(const TaylorSeries& u,
                                        const TaylorSeries& dinv) {
  double scale = 0.0;
  for (double c : u.coeffs()) scale += std::abs(c);
  if (std::abs(u.evaluate_real(1.0)) > 1e-10 * scale ||
      std::abs(u.evaluate_real(-1.0)) > 1e-10 * scale)
    throw ValidationError("eq-1.21-inapplicable",
                          "szego_map_identity_check: u(+1) = u(-1) = 0 required");

  // u/(1-z^2) as a series, by deflating the two boundary zeros.
  TaylorSeries v = u.deflate(1.0).deflate(-1.0);

  constexpr std::size_t kN = 64;
  constexpr double kR = 0.5;
  std::vector<Complex> lhs(kN), rhs(kN);
  Complex num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t j = 0; j < kN; ++j) {
    const double th =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(kN);
    const Complex z = kR * Complex(std::cos(th), std::sin(th));
    lhs[j] = dinv.evaluate(z);
    rhs[j] = v.evaluate(z);
    num += lhs[j] * std::conj(rhs[j]);
    den += std::norm(rhs[j]);
  }
  SzegoMapReport rep;
  const Complex c = num / den;
  rep.best_fit_constant = c.real();
  const double c_paper = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < kN; ++j) {
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs[j] - c * rhs[j]));
    rep.paper_constant_deviation =
        std::max(rep.paper_constant_deviation, std::abs(lhs[j] - c_paper * rhs[j]));
  }
  return rep;
}

}  // namespace jost::opuc
