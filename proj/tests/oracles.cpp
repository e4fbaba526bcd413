#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

std::vector<double> poly_mul(const std::vector<double>& p,
                             const std::vector<double>& q) {
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

std::vector<Complex> poly_mul_c(const std::vector<Complex>& p,
                                const std::vector<Complex>& q) {
  std::vector<Complex> r(p.size() + q.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

double poly_eval(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

Complex poly_eval(const std::vector<Complex>& p, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

std::vector<double> orthonormal_values(const jost::JacobiParams& J, double E,
                                       std::size_t N) {
  std::vector<double> p(N + 1);
  p[0] = 1.0;
  double pm1 = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    const double pn = ((E - J.b(n + 1)) * p[n] - (n == 0 ? 0.0 : J.a(n)) * pm1) /
                      J.a(n + 1);
    pm1 = p[n];
    p[n + 1] = pn;
  }
  return p;
}

namespace {

// #eigenvalues of the N x N truncation strictly above E: sign flips of the
// Sturm sequence p_0(E), ..., p_N(E), zeros skipped. The running pair is
// rescaled on the fly; only signs matter and raw values overflow for large N.
int count_above(const jost::JacobiParams& J, double E, std::size_t N) {
  double pm1 = 0.0;
  double p0 = 1.0;
  int flips = 0;
  int last = 1;
  for (std::size_t n = 0; n < N; ++n) {
    double pn = ((E - J.b(n + 1)) * p0 - (n == 0 ? 0.0 : J.a(n)) * pm1) /
                J.a(n + 1);
    pm1 = p0;
    p0 = pn;
    const double m = std::max(std::abs(pm1), std::abs(p0));
    if (m > 1e100) {
      pm1 /= m;
      p0 /= m;
      pn = p0;
    }
    const int s = pn > 0.0 ? 1 : (pn < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (s != last) ++flips;
    last = s;
  }
  return flips;
}

// Solves (J_N - lambda) x = b by banded LU with partial pivoting (one extra
// superdiagonal of fill-in).
std::vector<double> tridiag_shifted_solve(const jost::JacobiParams& J,
                                          double lambda, std::size_t N,
                                          std::vector<double> rhs) {
  std::vector<double> sub(N, 0.0), dia(N), up1(N, 0.0), up2(N, 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    dia[i] = J.b(i + 1) - lambda;
    if (i + 1 < N) up1[i] = J.a(i + 1);
    if (i >= 1) sub[i] = J.a(i);
  }
  for (std::size_t i = 0; i + 1 < N; ++i) {
    if (std::abs(sub[i + 1]) > std::abs(dia[i])) {
      std::swap(dia[i], sub[i + 1]);
      std::swap(up1[i], dia[i + 1]);
      std::swap(up2[i], up1[i + 1]);
      std::swap(rhs[i], rhs[i + 1]);
    }
    if (dia[i] == 0.0) dia[i] = 1e-300;
    const double m = sub[i + 1] / dia[i];
    dia[i + 1] -= m * up1[i];
    up1[i + 1] -= m * up2[i];
    rhs[i + 1] -= m * rhs[i];
  }
  if (dia[N - 1] == 0.0) dia[N - 1] = 1e-300;
  std::vector<double> x(N);
  for (std::size_t ii = N; ii-- > 0;) {
    double v = rhs[ii];
    if (ii + 1 < N) v -= up1[ii] * x[ii + 1];
    if (ii + 2 < N) v -= up2[ii] * x[ii + 2];
    x[ii] = v / dia[ii];
  }
  return x;
}

std::vector<double> inverse_iteration(const jost::JacobiParams& J,
                                      double lambda, std::size_t N) {
  std::vector<double> v(N, 1.0 / std::sqrt(static_cast<double>(N)));
  for (int iter = 0; iter < 3; ++iter) {
    v = tridiag_shifted_solve(J, lambda, N, std::move(v));
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

double norm_bound(const jost::JacobiParams& J) {
  double bound = 2.0;
  for (std::size_t n = 1; n <= J.support() + 1; ++n) {
    bound = std::max(bound,
                     std::abs(J.b(n)) + J.a(n) + (n > 1 ? J.a(n - 1) : 0.0));
  }
  return bound + 1.0;
}

// All eigenvalues in (lo, hi) by recursive bisection on the counter.
void isolate(const jost::JacobiParams& J, std::size_t N, double lo, double hi,
             int expected, std::vector<double>* out) {
  if (expected == 0) return;
  if (expected == 1) {
    double a = lo, b = hi;
    const int above_hi = count_above(J, b, N);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b));
         ++it) {
      const double m = 0.5 * (a + b);
      if (count_above(J, m, N) - above_hi >= 1)
        a = m;
      else
        b = m;
    }
    out->push_back(0.5 * (a + b));
    return;
  }
  const double m = 0.5 * (lo + hi);
  const int upper = count_above(J, m, N) - count_above(J, hi, N);
  isolate(J, N, m, hi, upper, out);
  isolate(J, N, lo, m, expected - upper, out);
}

}  // namespace

OutsideCounts truncated_counts_outside(const jost::JacobiParams& J,
                                       std::size_t N) {
  OutsideCounts c;
  const double B = norm_bound(J);
  c.above = count_above(J, 2.0, N) - count_above(J, B, N);
  c.below = count_above(J, -B, N) - count_above(J, -2.0, N);
  return c;
}

TruncatedSpectrum truncated_spectrum_outside(const jost::JacobiParams& J,
                                             std::size_t N) {
  TruncatedSpectrum spec;
  const double B = norm_bound(J);
  const int above = count_above(J, 2.0, N) - count_above(J, B, N);
  const int below = count_above(J, -B, N) - count_above(J, -2.0, N);
  isolate(J, N, 2.0, B, above, &spec.eigenvalues);
  isolate(J, N, -B, -2.0, below, &spec.eigenvalues);
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());

  for (double lambda : spec.eigenvalues) {
    const std::vector<double> v = inverse_iteration(J, lambda, N);
    spec.weights.push_back(v[0] * v[0]);
  }
  return spec;
}

std::uint64_t Rng::next() {
  // xorshift64*
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dull;
}

double Rng::uniform(double lo, double hi) {
  const double u =
      static_cast<double>(next() >> 11) / static_cast<double>(1ull << 53);
  return lo + (hi - lo) * u;
}

jost::JacobiParams random_jacobi(Rng& rng, std::size_t K) {
  std::vector<double> a(K), b(K);
  for (std::size_t i = 0; i < K; ++i) {
    a[i] = rng.uniform(0.5, 2.0);
    b[i] = rng.uniform(-1.0, 1.0);
  }
  return jost::JacobiParams(std::move(a), std::move(b));
}

}  // namespace oracle
