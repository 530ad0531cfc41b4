#include <doctest.h>

#include <cmath>

#include "singosc/model.hpp"

using singosc::CollapseError;
using singosc::make_model;

TEST_CASE("weight derivation at reference couplings") {
  CHECK(make_model(0.0).weight == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(make_model(3.0).weight == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(make_model(8.0).weight == doctest::Approx(-1.25).epsilon(1e-15));
}

TEST_CASE("collapse regime is rejected") {
  CHECK_THROWS_AS(make_model(-1.0), CollapseError);
  CHECK_THROWS_AS(make_model(-1.5), CollapseError);
  CHECK_THROWS_AS(make_model(-2.0, true), CollapseError);
  CHECK_THROWS_AS(make_model(std::nan("")), CollapseError);
}

TEST_CASE("boundary coupling admitted only with the flag") {
  const auto boundary = make_model(-1.0, true);
  CHECK(boundary.weight == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(boundary.origin_exponent == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("casimir identity 16 j (j+1) = g - 3 across the coupling range") {
  for (int i = 0; i <= 170; ++i) {
    const double g = -0.999 + i * 0.1;
    const auto model = make_model(g);
    const double defect =
        16.0 * model.weight * (model.weight + 1.0) - (g - 3.0);
    CHECK(std::abs(defect) < 1e-12);
  }
}

TEST_CASE("near-origin exponent satisfies s = -2j - 1/2") {
  for (const double g : {-0.99, 0.0, 1.0, 3.0, 8.0, 15.0}) {
    const auto model = make_model(g);
    CHECK(model.origin_exponent ==
          doctest::Approx(-2.0 * model.weight - 0.5).epsilon(1e-15));
    CHECK(model.minus_two_j() ==
          doctest::Approx(-2.0 * model.weight).epsilon(1e-15));
  }
}

TEST_CASE("weight decreases monotonically with coupling") {
  CHECK(make_model(0.0).weight > make_model(1.0).weight);
  CHECK(make_model(1.0).weight > make_model(8.0).weight);
  // j <= -1/2 everywhere, approaching -1/2 at the boundary
  CHECK(make_model(-0.999999).weight < -0.5);
  CHECK(make_model(-0.999999).weight == doctest::Approx(-0.5).epsilon(1e-3));
}
