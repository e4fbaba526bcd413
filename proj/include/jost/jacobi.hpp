#ifndef JOST_JACOBI_HPP
#define JOST_JACOBI_HPP

#include <cstddef>
#include <vector>

namespace jost {

// Tail class of a Jacobi parameter sequence past the stored entries.
//   Free:     a_n = 1, b_n = 0 for n > K.
//   Envelope: |b_n| + |a_n^2 - 1| <= C * R^{-2n}, stored entries included.
struct EnvelopeTail {
  double C = 1.0;
  double R = 2.0;
};

class JacobiParams {
public:
  // Free tail. `a` and `b` are a_1..a_K and b_1..b_K.
  JacobiParams(std::vector<double> a, std::vector<double> b);
  // Envelope tail; entries beyond K are treated as zero perturbation but the
  // envelope still controls the truncation error bookkeeping.
  JacobiParams(std::vector<double> a, std::vector<double> b, EnvelopeTail tail);

  static JacobiParams free_matrix() { return JacobiParams({}, {}); }
  static JacobiParams single_b(double b1) { return JacobiParams({1.0}, {b1}); }
  static JacobiParams single_a(double a1) { return JacobiParams({a1}, {0.0}); }

  std::size_t support() const noexcept { return a_.size(); }
  bool is_free_tail() const noexcept { return !envelope_; }
  const EnvelopeTail& envelope() const;

  // 1-based access following the recurrence indexing; entries past the
  // support return the free values.
  double a(std::size_t n) const noexcept {
    return (n >= 1 && n <= a_.size()) ? a_[n - 1] : 1.0;
  }
  double b(std::size_t n) const noexcept {
    return (n >= 1 && n <= b_.size()) ? b_[n - 1] : 0.0;
  }

  const std::vector<double>& a_list() const noexcept { return a_; }
  const std::vector<double>& b_list() const noexcept { return b_; }

  // The shifted operator with parameters a_{k+n}, b_{k+n}.
  JacobiParams shifted(std::size_t n) const;

  // sum over the first `count` entries of |a_n - 1| + |b_n| (diagnostics).
  double perturbation_l1(std::size_t count) const;

private:
  void validate() const;

  std::vector<double> a_;
  std::vector<double> b_;
  bool envelope_present() const { return envelope_; }
  bool envelope_ = false;
  EnvelopeTail tail_{};
};

}  // namespace jost

#endif  // JOST_JACOBI_HPP
