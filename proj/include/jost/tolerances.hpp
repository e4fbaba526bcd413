#ifndef JOST_TOLERANCES_HPP
#define JOST_TOLERANCES_HPP

#include "jost/errors.hpp"

namespace jost {

// Numeric knobs shared across the library. All entries are strictly positive.
struct ToleranceConfig {
  double root_tol = 1e-12;       // bisection target for real zeros
  double residue_tol = 1e-8;     // canonicity comparison threshold
  double roundtrip_tol = 1e-7;   // parameter recovery target
  int quad_points = 512;         // trapezoid panels on [0, pi]

  void validate() const {
    if (!(root_tol > 0.0) || !(residue_tol > 0.0) || !(roundtrip_tol > 0.0))
      throw ArgumentError("ToleranceConfig: tolerances must be positive");
    if (quad_points <= 0)
      throw ArgumentError("ToleranceConfig: quad_points must be positive");
  }
};

}  // namespace jost

#endif  // JOST_TOLERANCES_HPP
