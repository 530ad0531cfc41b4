#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "common/test_helpers.hpp"
#include "singosc/model.hpp"
#include "singosc/special_functions.hpp"
#include "singosc/transitions.hpp"

using namespace singosc;

namespace {

// Frozen 60-digit-arithmetic evaluations of the closed form.
struct FrozenW {
  double g, rho;
  int m, n;
  double w;
};
const std::vector<FrozenW> kFrozen = {
    {2.0, 0.3, 3, 5, 0.023845015232069600672},
    {0.0, 0.5, 2, 4, 0.032741020622414832501},
    {8.0, 0.9, 6, 6, 0.00038784579212864321753},
    {-0.99, 0.1, 0, 3, 0.00097959460356932665525},
    {0.0, 0.36, 0, 1, 0.27648},
    {1.0, 0.5, 4, 2, 0.044113207533042560149},
    {8.0, 0.25, 0, 3, 0.049950806065447663647},
};

OscillatorModel model_for(double g) {
  return make_model(g, /*allow_boundary=*/g == -1.0);
}

}  // namespace

TEST_CASE("energy levels") {
  CHECK(energy_level(make_model(3.0), 0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(energy_level(make_model(0.0), 2, 0.5) ==
        doctest::Approx(2.75).epsilon(1e-15));
  const auto m = make_model(5.5);
  for (int n = 0; n < 6; ++n) {
    CHECK(energy_level(m, n + 1, 0.7) - energy_level(m, n, 0.7) ==
          doctest::Approx(2.0 * 0.7).epsilon(1e-13));
  }
  CHECK_THROWS_AS(energy_level(m, -1, 1.0), RangeError);
  CHECK_THROWS_AS(energy_level(m, 2, 0.0), RangeError);
}

TEST_CASE("transition probabilities match the frozen references") {
  for (const auto& f : kFrozen) {
    const double w = transition_probability(model_for(f.g), f.m, f.n, f.rho);
    CHECK(w == doctest::Approx(f.w).epsilon(1e-12));
    const double wh = transition_probability_hypergeometric(
        model_for(f.g), f.m, f.n, f.rho);
    CHECK(wh == doctest::Approx(f.w).epsilon(1e-12));
  }
}

TEST_CASE("rho = 0 reduces to the identity") {
  for (const double g : {-0.99, 0.0, 1.0, 8.0}) {
    const auto model = model_for(g);
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        CHECK(transition_probability(model, m, n, 0.0) ==
              (m == n ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("rho domain enforcement") {
  const auto model = make_model(0.0);
  CHECK_THROWS_AS(transition_probability(model, 0, 0, -0.1), RangeError);
  CHECK_THROWS_AS(transition_probability(model, 0, 0, 1.0), RangeError);
  CHECK_THROWS_AS(transition_probability(model, 0, 0, 1.0 - 1e-10),
                  RangeError);
  CHECK_NOTHROW(transition_probability(model, 0, 0, 1.0 - 1e-9));
  CHECK_THROWS_AS(vacuum_probability(model, 0, 2.0), RangeError);
  CHECK_THROWS_AS(transition_probability(model, -1, 0, 0.5), RangeError);
}

TEST_CASE("boundary coupling gives the geometric law") {
  const auto boundary = make_model(-1.0, true);
  for (const double rho : {0.1, 0.3, 0.5}) {
    for (int n = 0; n <= 50; ++n) {
      const double expected = std::pow(rho, n) * (1.0 - rho);
      const double w = transition_probability(boundary, 0, n, rho);
      CHECK(std::abs(w - expected) <= 1e-12 * expected);
    }
  }
  // m = n = 1 at the boundary: (1-rho)(1-2rho)^2 = 0 at rho = 1/2
  CHECK(transition_probability(boundary, 1, 1, 0.5) ==
        doctest::Approx(0.0).epsilon(1e-30));
  CHECK(transition_probability(boundary, 1, 1, 0.25) ==
        doctest::Approx(0.75 * 0.25).epsilon(1e-13));
}

TEST_CASE("symmetry w_mn = w_nm is exact") {
  for (const double g : {-0.99, 0.0, 1.0, 8.0}) {
    const auto model = model_for(g);
    for (const double rho : {0.1, 0.5, 0.9}) {
      for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
          // identical code path through (L, S): bitwise equality
          CHECK(transition_probability(model, m, n, rho) ==
                transition_probability(model, n, m, rho));
        }
      }
    }
  }
  CHECK(transition_probability(make_model(2.0), 3, 5, 0.3) ==
        transition_probability(make_model(2.0), 5, 3, 0.3));
}

TEST_CASE("rows sum to one within the reported tail") {
  for (const double g : {-0.99, 0.0, 1.0, 8.0}) {
    const auto model = model_for(g);
    for (const double rho : {0.1, 0.5, 0.9}) {
      for (int m = 0; m <= 6; ++m) {
        const auto row = row_probabilities(model, m, rho, 1e-12);
        const double sum =
            std::accumulate(row.begin(), row.end(), 0.0);
        CHECK(std::abs(sum - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("frozen w_1n row and the node at n = 1 (g = 0, rho = 0.4)") {
  const auto model = make_model(0.0);
  CHECK(transition_probability(model, 1, 0, 0.4) ==
        doctest::Approx(0.27885480092693401573).epsilon(1e-13));
  // exact polynomial node: P_1^(0, 1/2)(0.2) = 0
  CHECK(transition_probability(model, 1, 1, 0.4) < 1e-25);
  CHECK(transition_probability(model, 1, 2, 0.4) ==
        doctest::Approx(0.083656440278080204720).epsilon(1e-13));
  CHECK(transition_probability(model, 1, 3, 0.4) ==
        doctest::Approx(0.15615868851908304881).epsilon(1e-13));
  CHECK(transition_probability(model, 1, 4, 0.4) ==
        doctest::Approx(0.15811067212557158692).epsilon(1e-13));
}

TEST_CASE("hypergeometric and jacobi paths agree") {
  for (const double g : {-0.99, 0.0, 1.0, 8.0}) {
    const auto model = model_for(g);
    for (const double rho : {0.1, 0.5, 0.9}) {
      for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 12; ++n) {
          const double a = transition_probability(model, m, n, rho);
          const double b =
              transition_probability_hypergeometric(model, m, n, rho);
          // Near a polynomial node both paths cancel ~ |P'| * (distance
          // to the node); agreement there is absolute at the level of
          // the cancellation floor, relative 1e-10 elsewhere.
          const int small_s = std::min(m, n);
          const int big_l = std::max(m, n);
          const double scale_p = std::exp(
              log_gamma(small_s + (big_l - small_s) + 1.0) -
              log_gamma(big_l - small_s + 1.0) - log_gamma(small_s + 1.0));
          const double logpre =
              log_gamma(small_s + 1.0) - log_gamma(big_l + 1.0) +
              gamma_ratio(big_l + model.minus_two_j(),
                          small_s + model.minus_two_j())
                  .log_value +
              (big_l - small_s) * std::log(rho) +
              model.minus_two_j() * std::log1p(-rho);
          const double floor =
              std::exp(logpre) * (1e-3 * scale_p) * (1e-3 * scale_p);
          const double tol =
              1e-10 * std::max({std::abs(a), std::abs(b), floor});
          CHECK(std::abs(a - b) <= tol);
        }
      }
    }
  }
}

TEST_CASE("vacuum formula equals the general form at m = 0") {
  for (const double g : {-1.0, -0.99, 0.0, 1.0, 8.0}) {
    const auto model = model_for(g);
    for (const double rho : {0.1, 0.5, 0.9}) {
      for (int n = 0; n <= 30; ++n) {
        const double direct = vacuum_probability(model, n, rho);
        const double general = transition_probability(model, 0, n, rho);
        CHECK(std::abs(direct - general) <= 1e-12 * direct);
      }
    }
  }
}

TEST_CASE("vacuum formula special values") {
  const auto model = make_model(0.0);  // j = -3/4
  // n = 0: (1-rho)^{-2j}
  CHECK(vacuum_probability(model, 0, 0.5) ==
        doctest::Approx(std::pow(0.5, 1.5)).epsilon(1e-14));
  // n = 1, rho = 0.36: 1.5 * 0.36 * 0.64^1.5 = 0.27648
  CHECK(vacuum_probability(model, 1, 0.36) ==
        doctest::Approx(0.27648).epsilon(1e-13));
}

TEST_CASE("table construction") {
  SUBCASE("identity block at rho = 0") {
    const auto t = build_table(make_model(1.0), 0.0, 3, 3);
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        CHECK(t.w(m, n) == (m == n ? 1.0 : 0.0));
      }
      CHECK(std::abs(t.row_tail_mass(m)) < 1e-15);
    }
  }
  SUBCASE("rows sum to one when the tail is captured") {
    const auto t = build_table(make_model(0.0), 0.5, 3, 75);
    for (int m = 0; m <= 3; ++m) {
      CHECK(t.row_tail_mass(m) > -1e-10);
      CHECK(std::abs(t.row_tail_mass(m)) < 1e-10);
    }
  }
  SUBCASE("symmetric block and probability range") {
    const auto t = build_table(make_model(2.0), 0.3, 5, 5);
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        CHECK(t.w(m, n) >= 0.0);
        CHECK(t.w(m, n) <= 1.0);
        CHECK(t.w(m, n) == t.w(n, m));
      }
    }
    CHECK(t.w(3, 5) == doctest::Approx(0.023845015232069600672).epsilon(1e-12));
  }
}

TEST_CASE("generating functions: normalization, endpoints, pole") {
  const auto model = make_model(0.0);
  const double rho = 0.4;
  CHECK(std::abs(generating_g0(model, rho, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(generating_g1(model, rho, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(generating_g0(model, rho, 0.0) -
                 vacuum_probability(model, 0, rho)) < 1e-13);
  CHECK(std::abs(generating_g1(model, rho, 0.0) -
                 transition_probability(model, 1, 0, rho)) < 1e-13);
  CHECK_THROWS_AS(generating_g0(model, rho, 1.0 / rho), PoleError);
  CHECK_THROWS_AS(generating_g1(model, rho, 1.0 / rho), PoleError);
}

TEST_CASE("boundary generating function is the geometric series") {
  const auto boundary = make_model(-1.0, true);
  // sum_n 0.5^n (0.5) 0.5^n = 0.5 / (1 - 0.25) = 2/3
  CHECK(std::abs(generating_g0(boundary, 0.5, 0.5) - 2.0 / 3.0) < 1e-13);
}

TEST_CASE("taylor coefficients of G0 and G1 reproduce the rows") {
  const auto model = make_model(0.0);
  const double rho = 0.4;
  const auto c0 = singosc_test::taylor_coefficients(
      [&](std::complex<double> z) { return generating_g0(model, rho, z); },
      20);
  const auto c1 = singosc_test::taylor_coefficients(
      [&](std::complex<double> z) { return generating_g1(model, rho, z); },
      20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(std::abs(c0[n] - vacuum_probability(model, n, rho)) < 1e-10);
    CHECK(std::abs(c1[n] - transition_probability(model, 1, n, rho)) <
          1e-10);
  }
}

TEST_CASE("adiabatic invariant ratio and mean-excitation diagnostic") {
  const auto model = make_model(0.0);
  CHECK(adiabatic_invariant_ratio(model, 0, 0.0) == 1.0);
  CHECK(adiabatic_invariant_ratio(model, 2, 0.5) ==
        doctest::Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(adiabatic_invariant_ratio(model, 0, 1.0), RangeError);

  for (const double g : {0.0, 2.0}) {
    const auto mod = make_model(g);
    for (const double rho : {0.2, 0.6}) {
      for (int m = 0; m <= 4; ++m) {
        const auto diag = mean_excitation_diagnostic(mod, m, rho);
        CHECK(diag.residual < 1e-8);
        CHECK(diag.terms > m);
      }
    }
  }
}

TEST_CASE("boundary mean excitation reproduces the geometric mean") {
  // g = -1, m = 0: sum (n + 1/2) rho^n (1-rho) / (1/2) = 1 + 2 rho/(1-rho)
  const auto boundary = make_model(-1.0, true);
  const double rho = 0.37;
  const auto diag = mean_excitation_diagnostic(boundary, 0, rho, 1e-14);
  CHECK(diag.summed_ratio ==
        doctest::Approx((1.0 + rho) / (1.0 - rho)).epsilon(1e-10));
}

TEST_CASE("row truncation honours the tail target") {
  const auto model = make_model(1.0);
  const auto row = row_probabilities(model, 2, 0.6, 1e-12);
  const double sum = std::accumulate(row.begin(), row.end(), 0.0);
  CHECK(std::abs(sum - 1.0) < 1e-10);
  // tightening the target can only lengthen the row
  const auto longer = row_probabilities(model, 2, 0.6, 1e-14);
  CHECK(longer.size() >= row.size());
}
