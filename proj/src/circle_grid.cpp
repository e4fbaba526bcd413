#include "jost/circle_grid.hpp"

#include <cmath>
#include <numbers>

#include "jost/errors.hpp"

namespace jost {

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

CircleGrid::CircleGrid(double radius, std::size_t size)
    : radius_(radius), values_(size, Complex(0.0, 0.0)) {
  if (!(radius > 0.0)) throw ArgumentError("CircleGrid: radius must be positive");
  if (!is_pow2(size)) throw ArgumentError("CircleGrid: size must be a power of two >= 2");
}

CircleGrid::CircleGrid(double radius, std::vector<Complex> values)
    : radius_(radius), values_(std::move(values)) {
  if (!(radius > 0.0)) throw ArgumentError("CircleGrid: radius must be positive");
  if (!is_pow2(values_.size()))
    throw ArgumentError("CircleGrid: size must be a power of two >= 2");
}

Complex CircleGrid::node(std::size_t k) const {
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size());
  return radius_ * Complex(std::cos(theta), std::sin(theta));
}

CircleGrid CircleGrid::sample(double radius, std::size_t size,
                              const std::function<Complex(Complex)>& f) {
  CircleGrid g(radius, size);
  for (std::size_t k = 0; k < size; ++k) g.values_[k] = f(g.node(k));
  return g;
}

void fft(std::vector<Complex>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 1) return;
  if (!is_pow2(n)) throw ArgumentError("fft: length must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<Complex> coefficients_from_grid(const CircleGrid& g, int max_k) {
  const std::size_t n = g.size();
  if (max_k < 0 || static_cast<std::size_t>(max_k) >= n / 2)
    throw ArgumentError("coefficients_from_grid: need max_k < N/2");
  std::vector<Complex> hat = g.values();
  fft(hat, false);
  std::vector<Complex> out(static_cast<std::size_t>(max_k) + 1);
  double rk = 1.0;
  for (int k = 0; k <= max_k; ++k) {
    out[static_cast<std::size_t>(k)] = hat[static_cast<std::size_t>(k)] /
                                       (static_cast<double>(n) * rk);
    rk *= g.radius();
  }
  return out;
}

CircleGrid project_plus(const CircleGrid& g) {
  const std::size_t n = g.size();
  std::vector<Complex> hat = g.values();
  fft(hat, false);
  // Keep modes 1..N/2-1; the DC mode, the Nyquist mode, and all negative
  // modes (indices > N/2) are set to zero.
  hat[0] = Complex(0.0, 0.0);
  for (std::size_t k = n / 2; k < n; ++k) hat[k] = Complex(0.0, 0.0);
  fft(hat, true);
  for (Complex& v : hat) v /= static_cast<double>(n);
  return CircleGrid(g.radius(), std::move(hat));
}

double seminorm_triple(const CircleGrid& g) {
  const std::size_t n = g.size();
  std::vector<Complex> hat = g.values();
  fft(hat, false);
  double sum = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k)
    sum += std::norm(hat[k] / static_cast<double>(n));
  return std::sqrt(sum);
}

double negative_mode_energy(const CircleGrid& g) {
  const std::size_t n = g.size();
  std::vector<Complex> hat = g.values();
  fft(hat, false);
  double neg = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = std::norm(hat[k]);
    total += e;
    if (k > n / 2) neg += e;  // indices N/2+1..N-1 alias to negative modes
  }
  if (total == 0.0) return 0.0;
  return std::sqrt(neg / total);
}

}  // namespace jost
