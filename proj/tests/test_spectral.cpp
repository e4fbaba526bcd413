#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "jost/errors.hpp"
#include "jost/spectral_data.hpp"
#include "oracles.hpp"

using jost::Complex;
using jost::JacobiParams;
using jost::SpectralData;
using jost::TaylorSeries;

namespace {

SpectralData free_data() {
  SpectralData d;
  d.u = TaylorSeries::one();
  return d;
}

SpectralData b2_data(double w = 0.75) {
  return jost::make_spectral_data(TaylorSeries({1.0, -2.0}), {{0.5, w}});
}

}  // namespace

TEST_CASE("weight/residue conversion") {
  CHECK(jost::weight_from_residue(0.5, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(jost::residue_from_weight(0.5, 0.75) == doctest::Approx(0.25).epsilon(1e-15));
  oracle::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const double z = rng.uniform(-0.95, 0.95);
    if (std::abs(z) < 0.05) continue;
    const double w = rng.uniform(0.01, 1.0);
    CHECK(jost::weight_from_residue(z, jost::residue_from_weight(z, w)) ==
          doctest::Approx(w).epsilon(1e-14));
  }
}

TEST_CASE("measure_from_jost") {
  const jost::SampledMeasure free = jost::measure_from_jost(free_data(), 256);
  CHECK(free.total_mass == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t j = 0; j < free.thetas.size(); ++j)
    CHECK(free.density[j] ==
          doctest::Approx(std::sin(free.thetas[j]) / std::numbers::pi).epsilon(1e-14));

  // |1-2e^{it}|^2 = 5 - 4 cos t: the a.c. mass is 1/4 in closed form.
  CHECK(jost::ac_mass(TaylorSeries({1.0, -2.0}), 256) ==
        doctest::Approx(0.25).epsilon(1e-12));
  const jost::SampledMeasure m = jost::measure_from_jost(b2_data(), 256);
  CHECK(m.total_mass == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(m.point_masses.size() == 1);
  CHECK(m.point_masses[0].first == doctest::Approx(2.5));
  CHECK(m.point_masses[0].second == doctest::Approx(0.75));

  // Wrong weight: mass is off and the op refuses.
  CHECK_THROWS_AS((void)jost::measure_from_jost(b2_data(0.8), 256),
                  jost::ValidationError);

  // Symmetric two-state data sums to one as well.
  const SpectralData sym =
      jost::spectral_data_from_jacobi(JacobiParams::single_a(std::sqrt(5.0)));
  CHECK(jost::measure_from_jost(sym, 256).total_mass ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("normalization_check") {
  CHECK(jost::normalization_check(free_data(), 256) < 1e-12);
  CHECK(jost::normalization_check(b2_data(), 256) < 1e-10);
  CHECK(jost::normalization_check(b2_data(0.8), 256) ==
        doctest::Approx(0.05).epsilon(1e-8));
}

TEST_CASE("normalize_mass rescales u only") {
  SpectralData scaled = b2_data();
  scaled.u = scaled.u.scaled(3.7);
  const double factor = jost::normalize_mass(scaled, 512);
  CHECK(factor == doctest::Approx(1.0 / 3.7).epsilon(1e-9));
  CHECK(jost::normalization_check(scaled, 512) < 1e-12);
  CHECK(scaled.states[0].weight == doctest::Approx(0.75));

  SpectralData bad = b2_data();
  bad.states[0].weight = 1.2;
  CHECK_THROWS_AS((void)jost::normalize_mass(bad, 256), jost::ValidationError);
}

TEST_CASE("validate_spectral") {
  CHECK_NOTHROW(jost::validate_spectral(b2_data()));
  SpectralData missing;
  missing.u = TaylorSeries({1.0, -2.0});
  CHECK_THROWS_AS(jost::validate_spectral(missing), jost::ValidationError);
}

TEST_CASE("m_evaluate matches the forward-side m functions") {
  CHECK(std::abs(jost::m_evaluate(free_data(), Complex(0.3, 0.0), 512) - 0.3) < 1e-12);

  const Complex z(0.25, 0.0);
  CHECK(std::abs(jost::m_evaluate(b2_data(), z, 512) - 0.5) < 1e-10);

  oracle::Rng rng(13);
  for (int rep = 0; rep < 6; ++rep) {
    JacobiParams J = oracle::random_jacobi(rng, 5);
    const SpectralData data = jost::spectral_data_from_jacobi(J);
    const Complex zt(rng.uniform(-0.3, 0.3), rng.uniform(0.05, 0.35));
    CHECK(std::abs(jost::m_evaluate(data, zt, 2048) - jost::m_from_jost(J, zt)) < 1e-9);
  }

  CHECK_THROWS_AS((void)jost::m_evaluate(b2_data(), Complex(0.5, 0.0), 512),
                  jost::PoleError);
}

TEST_CASE("m_evaluate residue at a bound state") {
  // (z_j - z) M(z) -> residue 1/4; Richardson over h and h/2 removes the
  // linear term of the regular part.
  auto probe = [&](double h) {
    const Complex plus = jost::m_evaluate(b2_data(), Complex(0.5 + h, 0.0), 512);
    const Complex minus = jost::m_evaluate(b2_data(), Complex(0.5 - h, 0.0), 512);
    return 0.5 * ((-h) * plus.real() + h * minus.real());
  };
  const double s1 = probe(1e-3);
  const double s2 = probe(5e-4);
  CHECK((4.0 * s2 - s1) / 3.0 == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("m_reflection_extend") {
  // Free data: M(z) = z extends to the whole plane; at z = 1.5 the identity
  // reads M#(1.5) + (1.5 - 1/1.5) = 1/1.5 + 5/6 = 1.5.
  CHECK(std::abs(jost::m_reflection_extend(free_data(), Complex(1.5, 0.0), 512) - 1.5) <
        1e-12);

  // Canonical weight: residues cancel at 1/z_j = 2, the extension stays
  // bounded. Noncanonical weight: a genuine pole appears.
  double prev = 0.0;
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const double val =
        std::abs(jost::m_reflection_extend(b2_data(), Complex(2.0 + h, 0.0), 512));
    CHECK(val < 50.0);
    prev = val;
  }
  (void)prev;
  const double near = std::abs(
      jost::m_reflection_extend(b2_data(0.8), Complex(2.0 + 1e-4, 0.0), 512));
  const double far = std::abs(
      jost::m_reflection_extend(b2_data(0.8), Complex(2.0 + 1e-2, 0.0), 512));
  CHECK(near > 50.0 * far);

  CHECK_THROWS_AS(
      (void)jost::m_reflection_extend(b2_data(), Complex(0.5, 0.0), 512),
      jost::DomainError);
}

TEST_CASE("canonical_weight on the worked cases") {
  CHECK(jost::canonical_weight(TaylorSeries({1.0, -2.0}), 0.5) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(jost::weight_from_residue(0.5, 0.25) == doctest::Approx(0.75));

  // (1-2z)(1-z/2): u vanishes at the reflected point, no canonical weight.
  const std::vector<double> prod = oracle::poly_mul({1.0, -2.0}, {1.0, -0.5});
  CHECK_THROWS_AS((void)jost::canonical_weight(TaylorSeries(prod), 0.5),
                  jost::NoCanonicalWeightError);

  const double r5 = std::sqrt(5.0);
  const TaylorSeries u5({1.0 / r5, 0.0, -4.0 / r5});
  const double wp = jost::canonical_weight(u5, 0.5);
  const double wm = jost::canonical_weight(u5, -0.5);
  CHECK(wp == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(wm == doctest::Approx(0.125).epsilon(1e-12));
  const oracle::TruncatedSpectrum spec =
      oracle::truncated_spectrum_outside(JacobiParams::single_a(r5), 61);
  CHECK(jost::weight_from_residue(0.5, wp) ==
        doctest::Approx(spec.weights[1]).epsilon(1e-10));

  // Analyticity gate: a series trusted only on |z| < 1.5 cannot reach 1/0.5.
  TaylorSeries small({1.0, -2.0}, 1.5);
  CHECK_THROWS_AS((void)jost::canonical_weight(small, 0.5),
                  jost::InsufficientAnalyticityError);
}

TEST_CASE("canonicity_check") {
  oracle::Rng rng(29);
  for (int rep = 0; rep < 6; ++rep) {
    JacobiParams J = oracle::random_jacobi(rng, 5);
    const SpectralData data = jost::spectral_data_from_jacobi(J);
    bool reachable = true;
    for (const auto& st : data.states)
      if (std::abs(st.z) <= 1.0 / 3.0) reachable = false;
    if (!reachable) continue;
    for (const auto& rep2 : jost::canonicity_check(data, 3.0)) {
      CHECK(rep2.is_canonical);
      CHECK(rep2.deviation < 1e-8);
    }
  }

  const auto reports = jost::canonicity_check(b2_data(0.8), 3.0);
  REQUIRE(reports.size() == 1);
  CHECK(!reports[0].is_canonical);
  CHECK(reports[0].deviation ==
        doctest::Approx(std::abs(0.8 / 3.0 - 0.25)).epsilon(1e-10));

  // A state inside |z| <= 1/R_work is outside the theorem's annulus and is
  // not reported.
  SpectralData inner =
      jost::make_spectral_data(TaylorSeries({1.0, -1.0 / 0.3}), {{0.3, 0.5}});
  CHECK(jost::canonicity_check(inner, 3.0).empty());
  CHECK(jost::canonicity_check(inner, 4.0).size() == 1);
}
