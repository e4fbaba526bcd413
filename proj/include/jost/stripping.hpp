#ifndef JOST_STRIPPING_HPP
#define JOST_STRIPPING_HPP

#include <cstddef>
#include <vector>

#include "jost/jacobi.hpp"
#include "jost/spectral_data.hpp"
#include "jost/tolerances.hpp"

namespace jost {

struct StripOptions {
  int theta_points = 512;        // minimum boundary resolution for M
  double r0 = 0.25;              // Taylor extraction circle for log(M/z)
  double seminorm_radius = 1.2;  // R1 circle for contraction diagnostics
  double detect_radius = 3.0;    // annulus circle watched for negative modes
  double neg_mode_floor = 1e-8;  // relative negative-mode energy threshold
  ToleranceConfig tol;
};

// Per-step record: recovered pair, seminorms on the R1 circle before/after,
// the measured sup of |M^(n)(z)/z| on |z| = 1/R1 entering the contraction
// bound, the negative-mode monitor value, and normalization drift.
struct StripDiagnostics {
  double a = 1.0;
  double b = 0.0;
  double seminorm_before = 0.0;
  double seminorm_after = 0.0;
  double sup_nsharp = 0.0;
  double neg_mode = 0.0;
  double u_at_zero = 0.0;       // u^{(n+1)}(0) before renormalization
  double normalization = 1.0;   // factor applied to u^{(n+1)}
  int boundary_points = 0;      // resolution the measure evaluator settled on
};

// Immutable state of the inverse iteration: the current Jost data (with
// surviving bound states carrying canonical residues) plus everything
// recovered so far.
struct StripState {
  std::size_t n = 0;
  SpectralData data;
  std::vector<double> recovered_a;
  std::vector<double> recovered_b;
  std::vector<StripDiagnostics> log;
  bool terminated = false;  // data has reached the free fixed point
};

// Validates, normalizes, and wraps spectral data for stripping.
StripState make_strip_state(SpectralData data, const StripOptions& opt = {});

// One coefficient-stripping step:
//   b_{n+1} and a_{n+1} from the first two Taylor coefficients of
//   log(M^(n)(z)/z), then u^{(n+1)} = a_{n+1} z^{-1} u^{(n)} M^(n) resampled
//   into coefficients, bound states refreshed with canonical residues, and
//   the annulus monitor checked for loss of analyticity.
StripState strip_once(const StripState& state, const StripOptions& opt = {});

struct RecoveryResult {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<StripDiagnostics> log;
  bool analyticity_loss = false;
  int loss_step = 0;      // 1-based step at which the monitor fired (0: none)
  int terminated_at = 0;  // 1-based first step with free data (0: never)
};

// Runs strip_once N times. After the data reaches the free fixed point the
// remaining parameters are reported as exactly (1, 0). On loss of analyticity
// the iteration stops early and returns the partial recovery with the flag
// set; every other error propagates.
RecoveryResult recover_jacobi(const SpectralData& data, std::size_t N,
                              const StripOptions& opt = {});

// Decay rate R with |a_n - 1| + |b_n| ~ R^{-2n}, from a log-linear fit of the
// trailing entries; entries below 1e-14 are skipped. Returns +inf when every
// entry sits below the floor.
double decay_rate_estimate(const JacobiParams& J);

}  // namespace jost

#endif  // JOST_STRIPPING_HPP
