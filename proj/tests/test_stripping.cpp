#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "jost/errors.hpp"
#include "jost/stripping.hpp"
#include "oracles.hpp"

using jost::JacobiParams;
using jost::SpectralData;
using jost::StripOptions;
using jost::StripState;
using jost::TaylorSeries;

namespace {

SpectralData b2_data(double w = 0.75) {
  return jost::make_spectral_data(TaylorSeries({1.0, -2.0}), {{0.5, w}});
}

JacobiParams alternating_envelope(std::size_t K, double R) {
  std::vector<double> a(K, 1.0), b(K);
  for (std::size_t n = 1; n <= K; ++n)
    b[n - 1] = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(R, -2.0 * static_cast<double>(n));
  return JacobiParams(a, b, jost::EnvelopeTail{1.0, R});
}

}  // namespace

TEST_CASE("strip_once at the free fixed point") {
  SpectralData free;
  free.u = TaylorSeries::one();
  StripState s0 = jost::make_strip_state(free);
  CHECK(s0.terminated);

  StripState s1 = jost::strip_once(s0);
  CHECK(s1.recovered_a.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s1.recovered_b.back()) < 1e-12);
  CHECK(s1.data.u.at(0) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(s1.data.states.empty());
}

TEST_CASE("strip_once on the b1=2 data") {
  // log(M/z) = -log(1-2z) = 2z + 2z^2 + ...: t1 = 2, t2 = 2 = 0 + b^2/2.
  StripState s = jost::make_strip_state(b2_data());
  CHECK(!s.terminated);
  StripState s1 = jost::strip_once(s);
  CHECK(s1.recovered_b.back() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s1.recovered_a.back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s1.data.u.at(0) == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t k = 1; k < s1.data.u.coeffs().size(); ++k)
    CHECK(std::abs(s1.data.u.at(k)) < 1e-9);
  CHECK(s1.data.states.empty());
  CHECK(s1.terminated);
}

TEST_CASE("strip_once on the a1=sqrt5 data") {
  const double r5 = std::sqrt(5.0);
  const SpectralData data =
      jost::spectral_data_from_jacobi(JacobiParams::single_a(r5));
  StripState s1 = jost::strip_once(jost::make_strip_state(data));
  CHECK(s1.recovered_a.back() == doctest::Approx(r5).epsilon(1e-9));
  CHECK(std::abs(s1.recovered_b.back()) < 1e-9);
  CHECK(s1.terminated);
}

TEST_CASE("strip output is invariant under rescaling u") {
  SpectralData scaled = b2_data();
  scaled.u = scaled.u.scaled(3.7);
  StripState a = jost::strip_once(jost::make_strip_state(b2_data()));
  StripState b = jost::strip_once(jost::make_strip_state(scaled));
  CHECK(a.recovered_a.back() == doctest::Approx(b.recovered_a.back()).epsilon(1e-13));
  CHECK(a.recovered_b.back() == doctest::Approx(b.recovered_b.back()).epsilon(1e-13));
}

TEST_CASE("canonicity closure after one strip") {
  oracle::Rng rng(77);
  int exercised = 0;
  while (exercised < 4) {
    JacobiParams J = oracle::random_jacobi(rng, 4);
    SpectralData data = jost::spectral_data_from_jacobi(J);
    if (data.states.size() < 2) continue;
    bool deep = false;
    for (const auto& st : data.states)
      if (std::abs(st.z) < 0.3) deep = true;
    if (deep) continue;
    ++exercised;
    StripState s1 = jost::strip_once(jost::make_strip_state(data));
    for (const auto& rep : jost::canonicity_check(s1.data, 3.0)) {
      CHECK(rep.is_canonical);
      CHECK(rep.deviation < 1e-8);
    }
    CHECK(s1.data.states.size() <= data.states.size());
  }
}

TEST_CASE("roundtrip on random finite-range data") {
  oracle::Rng rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t K = 1 + static_cast<std::size_t>(rng.uniform(0.0, 7.99));
    JacobiParams J = oracle::random_jacobi(rng, K);
    const SpectralData data = jost::spectral_data_from_jacobi(J);
    const std::size_t steps = K + 4;
    const jost::RecoveryResult rec = jost::recover_jacobi(data, steps);
    REQUIRE(!rec.analyticity_loss);
    REQUIRE(rec.a.size() == steps);

    for (std::size_t n = 1; n <= steps; ++n) {
      if (n <= K) {
        CHECK(std::abs(rec.a[n - 1] - J.a(n)) < 1e-7);
        CHECK(std::abs(rec.b[n - 1] - J.b(n)) < 1e-7);
      } else {
        CHECK(std::abs(rec.a[n - 1] - 1.0) < 1e-8);
        CHECK(std::abs(rec.b[n - 1]) < 1e-8);
      }
    }

    const int degree = jost::jost_function(J).degree();
    const int deadline = (degree + 1) / 2 + 2;
    CHECK(rec.terminated_at != 0);
    CHECK(rec.terminated_at <= deadline + 1);
  }
}

TEST_CASE("contraction of the annulus seminorms") {
  // Per-step bound |||u^(n+1)||| <= a R1^{-2} sup|N#| |||u^(n)||| on the
  // decay ensemble, R1 = 1.2.
  const JacobiParams J = alternating_envelope(25, 1.5);
  const SpectralData data = jost::spectral_data_from_jacobi(J);
  StripOptions opt;
  opt.seminorm_radius = 1.2;
  const jost::RecoveryResult rec = jost::recover_jacobi(data, 12, opt);
  REQUIRE(!rec.analyticity_loss);
  const double r1sq = 1.2 * 1.2;
  for (const auto& d : rec.log) {
    const double bound = d.a / r1sq * d.sup_nsharp * d.seminorm_before;
    CHECK(d.seminorm_after <= bound * (1.0 + 1e-9) + 1e-14);
  }
  // u^(n)(0) stays pinned to 1 along the way.
  for (const auto& d : rec.log) CHECK(std::abs(d.u_at_zero - 1.0) < 1e-6);
}

TEST_CASE("envelope data roundtrip") {
  const JacobiParams J = alternating_envelope(25, 1.5);
  const SpectralData data = jost::spectral_data_from_jacobi(J);
  const jost::RecoveryResult rec = jost::recover_jacobi(data, 15);
  REQUIRE(!rec.analyticity_loss);
  for (std::size_t n = 1; n <= 15; ++n) {
    CHECK(std::abs(rec.a[n - 1] - J.a(n)) < 1e-6);
    CHECK(std::abs(rec.b[n - 1] - J.b(n)) < 1e-6);
  }
}

TEST_CASE("noncanonical weights lose analyticity within three steps") {
  StripOptions opt;
  opt.detect_radius = 3.0;
  const jost::RecoveryResult bad = jost::recover_jacobi(b2_data(0.80), 40, opt);
  CHECK(bad.analyticity_loss);
  CHECK(bad.loss_step <= 3);

  const jost::RecoveryResult good = jost::recover_jacobi(b2_data(0.75), 40, opt);
  CHECK(!good.analyticity_loss);
  CHECK(good.a.size() == 40);
}

TEST_CASE("decay_rate_estimate") {
  {
    std::vector<double> a(20, 1.0), b(20);
    for (std::size_t n = 1; n <= 20; ++n)
      b[n - 1] = std::pow(4.0, -static_cast<double>(n));
    CHECK(jost::decay_rate_estimate(JacobiParams(a, b,
                                                 jost::EnvelopeTail{1.0, 2.0})) ==
          doctest::Approx(2.0).epsilon(0.05));
  }
  CHECK(std::isinf(jost::decay_rate_estimate(JacobiParams::free_matrix())));
  CHECK(jost::decay_rate_estimate(alternating_envelope(25, 1.5)) ==
        doctest::Approx(1.5).epsilon(0.05));
  CHECK_THROWS_AS((void)jost::decay_rate_estimate(JacobiParams::single_b(2.0)),
                  jost::DiagnosticError);
}
