#ifndef JOST_TAYLOR_SERIES_HPP
#define JOST_TAYLOR_SERIES_HPP

#include <complex>
#include <limits>
#include <vector>

namespace jost {

using Complex = std::complex<double>;

// Real-coefficient power series c0 + c1 z + ... + cd z^d together with the
// radius of the disk on which it is trusted. Polynomials carry radius = inf.
class TaylorSeries {
public:
  TaylorSeries() : coeffs_{0.0} {}
  explicit TaylorSeries(std::vector<double> coeffs,
                        double radius = std::numeric_limits<double>::infinity());

  static TaylorSeries one();

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double radius() const noexcept { return radius_; }
  void set_radius(double r) { radius_ = r; }

  // Coefficient access; indices past the stored degree read as zero.
  double at(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }

  // Degree of the trimmed polynomial part (index of last nonzero coefficient).
  int degree() const noexcept;
  double leading_coefficient() const noexcept;

  Complex evaluate(Complex z) const;
  double evaluate_real(double x) const;

  TaylorSeries derivative() const;

  // Removes trailing coefficients below `floor` in absolute value.
  TaylorSeries trimmed(double floor = 0.0) const;

  TaylorSeries scaled(double factor) const;

  // Divides by (1 - z/root) assuming `root` is a zero; returns the quotient
  // and writes the remainder (should be ~0 for an actual zero).
  TaylorSeries deflate(double root, double* remainder = nullptr) const;

private:
  std::vector<double> coeffs_;
  double radius_ = std::numeric_limits<double>::infinity();
};

}  // namespace jost

#endif  // JOST_TAYLOR_SERIES_HPP
