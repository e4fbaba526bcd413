#include "jost/geronimo_case.hpp"

#include <cmath>

#include "jost/errors.hpp"

namespace jost {

GCState gc_step(const GCState& state, double a_next, double b_next) {
  if (!(a_next > 0.0)) throw ArgumentError("gc_step: a must be positive");

  const std::vector<double>& c = state.c.coeffs();
  const std::vector<double>& g = state.g.coeffs();
  const std::size_t deg_next = 2 * state.n + 2;

  std::vector<double> cn(deg_next + 1, 0.0);
  std::vector<double> gn(deg_next + 1, 0.0);
  const double offdiag = 1.0 - a_next * a_next;
  auto cat = [&](std::size_t k) { return k < c.size() ? c[k] : 0.0; };
  auto gat = [&](std::size_t k) { return k < g.size() ? g[k] : 0.0; };

  for (std::size_t k = 0; k <= deg_next; ++k) {
    const double c2 = k >= 2 ? cat(k - 2) : 0.0;
    const double c1 = k >= 1 ? cat(k - 1) : 0.0;
    cn[k] = (c2 - b_next * c1 + gat(k)) / a_next;
    gn[k] = (offdiag * c2 - b_next * c1 + gat(k)) / a_next;
  }

  GCState next;
  next.n = state.n + 1;
  next.c = TaylorSeries(std::move(cn));
  next.g = TaylorSeries(std::move(gn));
  next.prefactor = state.prefactor * a_next;
  return next;
}

TaylorSeries jost_from_finite(const JacobiParams& J) {
  GCState s;
  for (std::size_t n = 1; n <= J.support(); ++n) s = gc_step(s, J.a(n), J.b(n));
  return s.g.trimmed();
}

namespace {

// Bound on sup_n |C_n(z)| / (1+n) / max(1,r)^{2n} over |z| = r, from the
// declared envelope. Two regimes: an induction bound valid for r <= 1, and a
// diagonalization bound valid for r > 1 (it degrades like 1/|r^2-1| near 1).
double growth_constant(const JacobiParams& J, double r) {
  const EnvelopeTail& env = J.envelope();
  const double q = 1.0 / (env.R * env.R);
  const std::size_t K = J.support();

  if (r <= 1.0) {
    double log_a = 0.0;
    for (std::size_t j = 1; j <= K; ++j) {
      const double s = std::abs(J.b(j)) + std::abs(J.a(j) * J.a(j) - 1.0);
      log_a += std::log1p(static_cast<double>(j) * s);
    }
    // sum_{j>K} j q^j = q^{K+1} ((K+1) - K q) / (1-q)^2, and log(1+x) <= x.
    const double Kd = static_cast<double>(K);
    log_a += env.C * std::pow(q, Kd + 1.0) * ((Kd + 1.0) - Kd * q) /
             ((1.0 - q) * (1.0 - q));
    return std::exp(log_a);
  }

  const double mu = 1.0 / (r * r - 1.0);
  const double lam = (1.0 + mu) * (1.0 + mu);
  double log_a = 0.0;
  for (std::size_t j = 1; j <= K; ++j) {
    const double s = std::abs(J.b(j)) + std::abs(J.a(j) * J.a(j) - 1.0);
    log_a += std::log1p(lam * s);
  }
  log_a += lam * env.C * std::pow(q, static_cast<double>(K) + 1.0) / (1.0 - q);
  return std::sqrt(2.0) * lam * std::exp(log_a);
}

}  // namespace

JostTailResult jost_tail_limit(const JacobiParams& J, std::size_t n_terms,
                               double working_radius) {
  if (!(working_radius > 0.0))
    throw ArgumentError("jost_tail_limit: radius must be positive");
  if (n_terms < J.support())
    throw ArgumentError("jost_tail_limit: n_terms must cover the stored support");

  GCState s;
  for (std::size_t n = 1; n <= n_terms; ++n) s = gc_step(s, J.a(n), J.b(n));

  JostTailResult out;
  if (J.is_free_tail()) {
    out.u = s.g.trimmed();
    out.error_bound = 0.0;
    return out;
  }

  const EnvelopeTail& env = J.envelope();
  if (env.R <= working_radius)
    throw DiagnosticError(
        "jost_tail_limit: envelope too weak for the requested radius");

  const double r = working_radius;
  const double A = growth_constant(J, r);
  const double x = std::max(1.0, r) * std::max(1.0, r) / (env.R * env.R);
  const double N = static_cast<double>(n_terms);
  const double tail_sum =
      std::pow(x, N + 1.0) * ((N + 2.0) - (N + 1.0) * x) / ((1.0 - x) * (1.0 - x));

  out.u = s.g.trimmed();
  out.u.set_radius(env.R);
  out.error_bound = env.C * std::max(r, r * r) * A * tail_sum;
  return out;
}

TaylorSeries jost_function(const JacobiParams& J, double working_radius,
                           double target) {
  if (J.is_free_tail()) return jost_from_finite(J);
  JostTailResult res = jost_tail_limit(J, J.support(), working_radius);
  if (res.error_bound > target)
    throw DiagnosticError(
        "jost_function: stored entries cannot certify the requested accuracy");
  return res.u;
}

}  // namespace jost
