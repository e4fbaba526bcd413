#ifndef JOST_CIRCLE_GRID_HPP
#define JOST_CIRCLE_GRID_HPP

#include <complex>
#include <functional>
#include <vector>

#include "jost/taylor_series.hpp"

namespace jost {

// Uniform samples of a function on the circle |z| = radius, taken at
// z_k = radius * exp(2*pi*i*k/N) with N a power of two.
class CircleGrid {
public:
  CircleGrid(double radius, std::size_t size);
  CircleGrid(double radius, std::vector<Complex> values);

  static CircleGrid sample(double radius, std::size_t size,
                           const std::function<Complex(Complex)>& f);

  double radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Complex>& values() const noexcept { return values_; }
  std::vector<Complex>& values() noexcept { return values_; }

  Complex node(std::size_t k) const;

private:
  double radius_;
  std::vector<Complex> values_;
};

// In-place radix-2 FFT; `inverse` applies the conjugate transform without
// the 1/N factor. data.size() must be a power of two.
void fft(std::vector<Complex>& data, bool inverse);

// Discrete Fourier coefficients scaled back to Taylor/Laurent coefficients:
// a_k = (1/N) sum_j v_j exp(-2*pi*i*j*k/N) / r^k for k = 0..max_k.
// Exact for polynomials of degree < N sampled on the grid.
std::vector<Complex> coefficients_from_grid(const CircleGrid& g, int max_k);

// Projection onto strictly positive Fourier modes (the Nyquist mode and all
// nonpositive modes are annihilated). Idempotent.
CircleGrid project_plus(const CircleGrid& g);

// ||| g ||| = ( sum_{k>=1} |a_k|^2 r^{2k} )^{1/2}, the L^2 norm of the
// positive-mode part of a function analytic near the closed disk.
double seminorm_triple(const CircleGrid& g);

// Relative energy in strictly negative Fourier modes; the detector for loss
// of analyticity of a function sampled on a circle inside its alleged disk.
double negative_mode_energy(const CircleGrid& g);

}  // namespace jost

#endif  // JOST_CIRCLE_GRID_HPP
