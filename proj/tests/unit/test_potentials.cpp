#include <doctest.h>

#include <cmath>
#include <random>

#include "lagmesh/experiment.hpp"
#include "lagmesh/potentials.hpp"
#include "oracles.hpp"

using namespace lagmesh;

TEST_SUITE("potentials") {
  TEST_CASE("harmonic") {
    const auto v = harmonic();
    CHECK(evaluate(v, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(v.tail_z == 0.0);
    CHECK(v.confining);
    CHECK(v.is_power_sum());
    CHECK(origin_inverse_power(v) == 0);
  }

  TEST_CASE("coulomb") {
    const auto v = coulomb();
    CHECK(evaluate(v, 4.0) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(v.tail_z == -1.0);
    CHECK(origin_inverse_power(v) == 1);
    CHECK(v.is_power_sum());
    const auto w = builtin("coulomb:-2");
    CHECK(w.tail_z == -2.0);
    CHECK(evaluate(w, 0.5) == doctest::Approx(-4.0).epsilon(1e-15));
  }

  TEST_CASE("eckart") {
    const auto v = eckart(2.0, -1.0);
    CHECK(v.eckart->beta() == doctest::Approx(3.0));
    // V(0) = -4 b^2 beta / (1 + beta)^2
    CHECK(evaluate(v, 1e-12) == doctest::Approx(-3.0).epsilon(1e-10));
    const double e = std::exp(-4.0);
    CHECK(evaluate(v, 1.0) == doctest::Approx(-48.0 * e / ((1 + 3 * e) * (1 + 3 * e))).epsilon(1e-14));
    CHECK_FALSE(v.is_power_sum());
    CHECK(origin_inverse_power(v) == 0);
    const auto w = builtin("eckart:3,0.5");
    CHECK(w.eckart->b == 3.0);
    CHECK(w.eckart->c == 0.5);
  }

  TEST_CASE("eckart depth property") {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> bdist(0.5, 4.0), cdist(-0.9, 0.9);
    for (int trial = 0; trial < 50; ++trial) {
      const double b = bdist(rng), c = cdist(rng) * b;
      const auto v = eckart(b, c);
      const double beta = (b - c) / (b + c);
      const double v0 = -4.0 * b * b * beta / ((1 + beta) * (1 + beta));
      CHECK(evaluate(v, 1e-14) == doctest::Approx(v0).epsilon(1e-9));
      // the well never goes below -b^2, attained where beta e^{-2br} = 1
      for (double r : {0.1, 0.5, 1.0, 3.0}) CHECK(evaluate(v, r) >= -b * b * (1 + 1e-14));
    }
  }

  TEST_CASE("alpha-alpha") {
    const auto v = buck_alpha_alpha();
    CHECK(v.energy_scale == kAlphaAlphaHbar2OverM);
    CHECK(v.energy_unit == "MeV");
    // problem units: -122.6225 e^{-0.22 r^2} + (5.76 / r) erf(0.75 r)
    for (double r : {0.3, 1.0, 2.5, 3.5}) {
      const double want = -122.6225 * std::exp(-0.22 * r * r) + 5.76 / r * oracles::erf_series(0.75 * r);
      CHECK(evaluate(v, r) * kAlphaAlphaHbar2OverM == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK(v.tail_z * kAlphaAlphaHbar2OverM == doctest::Approx(5.76).epsilon(1e-15));
    CHECK(evaluate(v, 60.0) * 60.0 == doctest::Approx(v.tail_z).epsilon(1e-13));
    CHECK(builtin("buck_alpha_alpha").label == builtin("alpha-alpha").label);
  }

  TEST_CASE("origin and tail conditions") {
    for (const auto& v : {harmonic(), coulomb(), eckart(), buck_alpha_alpha()}) {
      CHECK(satisfies_origin_condition(v));
      CHECK(satisfies_tail_condition(v, 1.0));
    }
    PotentialSpec bad;
    bad.label = "inverse-cube";
    bad.terms.push_back({1.0, -3.0, 0.0, 0.0});
    CHECK_FALSE(satisfies_origin_condition(bad));
    PotentialSpec mismatch = coulomb(-1.0);
    mismatch.tail_z = 0.0;
    CHECK_FALSE(satisfies_tail_condition(mismatch, 1.0));
    PotentialSpec long_range;
    long_range.terms.push_back({1.0, -1.5, 0.0, 0.0});
    CHECK_FALSE(satisfies_tail_condition(long_range, 1.0));
  }

  TEST_CASE("json round trip") {
    for (const auto& v : {harmonic(), coulomb(-2.0), eckart(2.0, -1.0), buck_alpha_alpha()}) {
      const auto back = potential_from_json(to_json(v));
      CHECK(back.label == v.label);
      CHECK(back.tail_z == v.tail_z);
      CHECK(back.energy_scale == v.energy_scale);
      CHECK(back.confining == v.confining);
      for (double r : {0.2, 1.0, 4.0}) CHECK(evaluate(back, r) == evaluate(v, r));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(builtin("yukawa"), Error);
    CHECK_THROWS_AS(builtin("eckart:1"), Error);
    CHECK_THROWS_AS(evaluate(harmonic(), 0.0), Error);
    CHECK_THROWS_AS(evaluate(harmonic(), -1.0), Error);
    CHECK_THROWS_AS(potential_from_json(nlohmann::json::array()), Error);
    CHECK_THROWS_AS(potential_from_json({{"energyScale", -1.0}}), Error);
  }
}
