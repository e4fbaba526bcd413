#ifndef JOST_OPUC_HPP
#define JOST_OPUC_HPP

#include <functional>
#include <memory>
#include <vector>

#include "jost/circle_grid.hpp"
#include "jost/taylor_series.hpp"

namespace jost::opuc {

using jost::Complex;

// Verblunsky coefficients; zero beyond the stored list.
struct VerblunskySeq {
  VerblunskySeq() = default;
  explicit VerblunskySeq(std::vector<Complex> a);
  std::vector<Complex> alphas;

  std::size_t size() const noexcept { return alphas.size(); }
  Complex at(std::size_t n) const noexcept {
    return n < alphas.size() ? alphas[n] : Complex(0.0, 0.0);
  }
};

// Monic orthogonal polynomial and its reversed companion at level n.
struct SzegoPair {
  std::size_t n = 0;
  std::vector<Complex> phi;       // Phi_n, monic
  std::vector<Complex> phi_star;  // Phi_n^*, conjugate-reversed coefficients
};

// Szego recursion Phi_{k+1} = z Phi_k - conj(alpha_k) Phi_k^*,
// Phi_{k+1}^* = Phi_k^* - alpha_k z Phi_k, from Phi_0 = 1.
SzegoPair szego_recursion(const VerblunskySeq& alphas, std::size_t n);

// Conjugate-reversal of a degree-n coefficient list (an involution).
std::vector<Complex> reversed_conjugate(const std::vector<Complex>& coeffs);

// Lazy pointwise evaluator for a Schur function at a given level; the
// composition of Moebius steps is exact, no series truncation involved.
class SchurEvaluator {
public:
  SchurEvaluator();  // f == 0 at level 0
  SchurEvaluator(int level, std::function<Complex(Complex)> eval);

  int level() const noexcept { return level_; }
  Complex operator()(Complex z) const { return eval_(z); }

private:
  int level_ = 0;
  std::function<Complex(Complex)> eval_;
};

// One step of the Szego algorithm: the level-n function from the level-(n+1)
// one, f^(n) = (alpha_n + z f^(n+1)) / (1 + conj(alpha_n) z f^(n+1)).
SchurEvaluator schur_forward(Complex alpha_n, const SchurEvaluator& f_next);

// f^(level) for the sequence, zero tail beyond the list.
SchurEvaluator schur_from_alphas(const VerblunskySeq& alphas, int level = 0);

// Geronimus correspondence: recovers alpha_0..alpha_{n_max} from a Schur
// function by alpha_n = f^(n)(0) and the inverse Moebius step
// z f^(n+1) = (f^(n) - alpha_n) / (1 - conj(alpha_n) f^(n)).
VerblunskySeq schur_inverse(const SchurEvaluator& f, std::size_t n_max);

// Caratheodory function F = (1 + z f)/(1 - z f); Re F > 0 on the disk,
// F(0) = 1.
Complex caratheodory_from_schur(const SchurEvaluator& f, Complex z);

// Szego function D(z) = exp( (1/(4 pi)) int (e^{it}+z)/(e^{it}-z) log w(t) dt )
// by full-circle trapezoid quadrature; w must be strictly positive on the
// sampled grid.
Complex szego_function(const std::function<double(double)>& w, Complex z,
                       int quad_points);

// Relative Szego function (delta_n D)(z) =
//   [(1 - conj(alpha_n) f^(n)) / rho_n] * (1 - z f^(n+1)) / (1 - z f^(n)).
Complex relative_szego(Complex alpha_n, const SchurEvaluator& f_n,
                       const SchurEvaluator& f_next, Complex z);

// The same function computed through the Caratheodory route
//   delta_n D = M^(n)(z) / (2 rho_n z),
//   M^(n) = z (1+alpha_n)(F^(n)+1) - (1+conj(alpha_n))(F^(n)-1).
// (The rho_n in the denominator is required for consistency with the
// defining product formula; see the module tests.)
Complex relative_szego_caratheodory(Complex alpha_n, const SchurEvaluator& f_n,
                                    Complex z);

struct DinvUpdateResult {
  CircleGrid grid;       // (D^{(n+1)})^{-1} on the same circle
  double sup_A = 0.0;    // sup over the circle of |A(z)|, the contraction factor
};

// One relative-Szego update of D^{-1} on a circle |z| = R1 > 1:
//   (D^(1))^{-1} = ( z^{-1} A(z) D^{-1}(z) + B(z) ) / rho_0
// with A, B built from the reflections F#, D# evaluated through the Taylor
// coefficients of the supplied grid.
DinvUpdateResult dinv_update(const CircleGrid& dinv,
                             const SchurEvaluator& f_level, Complex alpha);

struct DecayCheckResult {
  double R_est = 0.0;  // 1 / limsup |alpha_n|^{1/n}
  bool pass = false;
};

// Nevai-Totik consistency: limsup |alpha_n|^{1/n} <= 1/radius(Dinv) up to 5%.
DecayCheckResult verblunsky_decay_check(const TaylorSeries& dinv,
                                        const VerblunskySeq& alphas);

struct SzegoMapReport {
  double best_fit_constant = 0.0;   // c with Dinv ~ c * u/(1-z^2)
  double max_deviation = 0.0;       // after the best-fit constant
  double paper_constant_deviation = 0.0;  // against c = 2^{-1/2}
};

// Checks proportionality of D^{-1} and u(z)/(1-z^2) on |z| = 1/2; requires
// u(+1) = u(-1) = 0. The proportionality constant is reported rather than
// asserted, since it depends on the measure normalization conventions.
SzegoMapReport szego_map_identity_check(const TaylorSeries& u,
                                        const TaylorSeries& dinv);

}  // namespace jost::opuc

#endif  // JOST_OPUC_HPP
