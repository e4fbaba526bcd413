#include "jost/forward_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jost/errors.hpp"
#include "jost/root_finding.hpp"

namespace jost {

double weight_from_residue(double z, double residue) {
  return (1.0 / z - z) * (1.0 / z) * residue;
}

double residue_from_weight(double z, double weight) {
  return weight * z * z / (1.0 - z * z);
}

Complex jost_solution(const JacobiParams& J, std::size_t n, Complex z) {
  const TaylorSeries u_shift = jost_function(J.shifted(n));
  return std::pow(z, static_cast<double>(n)) * u_shift.evaluate(z) / J.a(n);
}

Complex wronskian(const std::function<Complex(std::size_t)>& f,
                  const std::function<Complex(std::size_t)>& k,
                  const JacobiParams& J, std::size_t n) {
  return J.a(n) * (f(n + 1) * k(n) - f(n) * k(n + 1));
}

Complex m_continued_fraction(const JacobiParams& J, Complex z, int depth) {
  if (std::abs(z) >= 1.0)
    throw DomainError("m_continued_fraction: z must lie in the open disk");
  if (depth < 0) throw ArgumentError("m_continued_fraction: negative depth");
  Complex m = z;  // free fixed point seeds the tail
  const Complex e = z + 1.0 / z;
  for (int n = depth - 1; n >= 0; --n) {
    const double a = J.a(static_cast<std::size_t>(n) + 1);
    const double b = J.b(static_cast<std::size_t>(n) + 1);
    const Complex denom = e - b - a * a * m;
    if (std::abs(denom) < 1e-300)
      throw PoleError("m_continued_fraction: pole encountered at level " +
                      std::to_string(n));
    m = 1.0 / denom;
  }
  return m;
}

Complex m_from_jost(const JacobiParams& J, Complex z) {
  const TaylorSeries u0 = jost_function(J);
  const TaylorSeries u1 = jost_function(J.shifted(1));
  const Complex u0z = u0.evaluate(z);
  double scale = 0.0;
  for (double c : u0.coeffs()) scale += std::abs(c);
  if (std::abs(u0z) < 1e-14 * scale)
    throw PoleError("m_from_jost: z is a zero of the Jost function");
  return z * u1.evaluate(z) / (J.a(1) * u0z);
}

namespace {

Complex block_determinant(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det(1.0, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[col][cc];
    }
  }
  return det;
}

}  // namespace

Complex perturbation_determinant(const JacobiParams& J, Complex z) {
  if (!J.is_free_tail())
    throw ArgumentError("perturbation_determinant: finite range required");
  if (std::abs(z) >= 1.0 || z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0) ||
      z == Complex(-1.0, 0.0))
    throw DomainError("perturbation_determinant: need z in D \\ {0, +1, -1}");

  const std::size_t K = J.support();
  if (K == 0) return Complex(1.0, 0.0);
  const std::size_t n = K + 1;

  const Complex wr = z - 1.0 / z;  // Wronskian of the free solutions
  std::vector<Complex> zp(2 * n + 2, Complex(1.0, 0.0));
  for (std::size_t k = 1; k < zp.size(); ++k) zp[k] = zp[k - 1] * z;
  auto resolvent = [&](std::size_t r, std::size_t c) {
    const std::size_t d = r > c ? r - c : c - r;
    return (zp[d] - zp[r + c]) / wr;
  };

  // V = J - J0 on rows/columns 1..K+1.
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = 1; c <= n; ++c) {
      Complex v(0.0, 0.0);
      // (V R0)_{rc} = sum_s V_{rs} R0_{sc} with V tridiagonal.
      if (r <= K) v += J.b(r) * resolvent(r, c);
      if (r >= 2) v += (J.a(r - 1) - 1.0) * resolvent(r - 1, c);
      if (r <= K) v += (J.a(r) - 1.0) * resolvent(r + 1, c);
      a[r - 1][c - 1] = v + (r == c ? Complex(1.0, 0.0) : Complex(0.0, 0.0));
    }
  }
  return block_determinant(std::move(a));
}

std::vector<BoundState> bound_states(const JacobiParams& J,
                                     const ToleranceConfig& tol) {
  tol.validate();
  const TaylorSeries u = jost_function(J);
  const double edge = 1.0 - 1e-8;
  std::vector<double> zeros = find_real_zeros(u, -edge, edge, tol.root_tol);

  std::vector<BoundState> states;
  states.reserve(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double zj = zeros[i];
    // Keep the probe step well inside the gap to the nearest singularity.
    double gap = std::min(1.0 - std::abs(zj), std::abs(zj));
    if (i > 0) gap = std::min(gap, zj - zeros[i - 1]);
    if (i + 1 < zeros.size()) gap = std::min(gap, zeros[i + 1] - zj);
    const double h = std::min(1e-3, 0.125 * gap);

    // residue of M at z_j with reversed sign, by symmetric difference
    // quotients of (z_j - z) M(z) at steps h, h/2, h/4, Richardson-combined.
    // The symmetric average leaves only even powers of the step, so two
    // eliminations reach O(h^6); close state pairs need that headroom.
    auto probe = [&](double step) {
      const Complex plus = m_from_jost(J, Complex(zj + step, 0.0));
      const Complex minus = m_from_jost(J, Complex(zj - step, 0.0));
      return 0.5 * (-step * plus.real() + step * minus.real());
    };
    const double s1 = probe(h);
    const double s2 = probe(0.5 * h);
    const double s4 = probe(0.25 * h);
    const double r1 = (4.0 * s2 - s1) / 3.0;
    const double r2 = (4.0 * s4 - s2) / 3.0;
    const double residue = (16.0 * r2 - r1) / 15.0;

    BoundState st;
    st.z = zj;
    st.energy = zj + 1.0 / zj;
    st.residue = residue;
    st.weight = weight_from_residue(zj, residue);
    if (!(st.weight > 0.0))
      throw InternalConsistencyError(
          "bound_states: nonpositive weight at z=" + std::to_string(zj));
    states.push_back(st);
  }
  return states;
}

namespace {

// Sign flips with exact zeros skipped: a zero contributes a flip exactly when
// the nearest nonzero neighbors have opposite signs.
int count_flips(const std::vector<double>& seq) {
  int flips = 0;
  int last = 0;
  for (double v : seq) {
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

}  // namespace

SturmCounts sturm_count(const JacobiParams& J, std::size_t n_max) {
  if (n_max < J.support() + 2)
    throw ArgumentError("sturm_count: n_max smaller than support");

  // Orthonormal polynomials at E = 2 and the flipped sequence at E = -2.
  // Past the support both sequences obey s_{n+1} = 2 s_n - s_{n-1}, so their
  // increments freeze; two extra terms decide whether one last crossing is
  // still ahead of the scan window.
  auto scan = [&](double E, bool flip) {
    std::vector<double> seq;
    seq.reserve(n_max + 3);
    double pm1 = 0.0;
    double p0 = 1.0;
    seq.push_back(p0);
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
      const double pn =
          ((E - J.b(n + 1)) * p0 - (n == 0 ? 0.0 : J.a(n)) * pm1) / J.a(n + 1);
      pm1 = p0;
      p0 = pn;
      seq.push_back(flip && ((n + 1) % 2 == 1) ? -pn : pn);
    }
    const double last = seq[seq.size() - 1];
    const double prev = seq[seq.size() - 2];
    const double slope = last - prev;
    // The tail is the arithmetic progression last + k*slope, which is
    // eventually of one sign; a single sentinel entry with that sign lets the
    // flip counter absorb any remaining crossing.
    if (slope != 0.0) seq.push_back(slope);
    return count_flips(seq);
  };

  SturmCounts counts;
  counts.above = scan(2.0, false);
  counts.below = scan(-2.0, true);
  return counts;
}

double boundary_identity_check(const JacobiParams& J,
                               const std::vector<double>& thetas) {
  const TaylorSeries u0 = jost_function(J);
  const TaylorSeries u1s = jost_function(J.shifted(1));
  const double a1 = J.a(1);
  double worst = 0.0;
  for (double th : thetas) {
    const Complex z(std::cos(th), std::sin(th));
    const Complex v0 = u0.evaluate(z);
    const Complex v1 = z * u1s.evaluate(z) / a1;
    const double dev = std::abs(std::imag(v1 * std::conj(v0)) - std::sin(th));
    worst = std::max(worst, dev);
  }
  return worst;
}

double boundary_identity_check(const JacobiParams& J, int n_points) {
  if (n_points < 1) throw ArgumentError("boundary_identity_check: empty grid");
  std::vector<double> thetas(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j)
    thetas[static_cast<std::size_t>(j)] =
        2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) /
        static_cast<double>(n_points);
  return boundary_identity_check(J, thetas);
}

}  // namespace jost
