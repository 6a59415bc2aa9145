#include "doctest.h"
#include "oracles.hpp"

#include "fzeta/coeffs.hpp"
#include "fzeta/errors.hpp"
#include "fzeta/quadrature.hpp"
#include "fzeta/series.hpp"

#include <cmath>
#include <numbers>

using namespace fzeta;
using namespace fzeta::series;

TEST_CASE("choose_K_R") {
  const double pi = std::numbers::pi;
  auto kr = choose_K_R(100.0);
  CHECK(kr.K == 11);
  CHECK(kr.R == doctest::Approx(std::exp(0.22 * pi)).epsilon(1e-15));
  CHECK(kr.R <= 2.0);
  CHECK(kr.R * std::exp(2 * pi / 100.0) > 2.0);
  kr = choose_K_R(1000.0);
  CHECK(kr.K == 110);
  kr = choose_K_R(2 * pi / std::numbers::ln2);
  CHECK(kr.K == 1);
  CHECK(kr.R == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(choose_K_R(5.0), PreconditionError);
  CHECK_THROWS_AS(choose_K_R(100.0, 4.0), PreconditionError);
  CHECK(choose_K_R(100.0, pi).R < pi);
}

TEST_CASE("taylor coefficients are the exact ones and even terms vanish") {
  for (int n : {0, 1, 3, 11, 15, 39})
    CHECK(taylor_coefficient(n) == coeffs::g_taylor_coefficient(n).to_double());
  for (int n = 2; n <= 60; n += 2)
    CHECK(taylor_coefficient(n) == 0.0);
  // |g^(n)(0)|/n! <= 2 zeta(2) / pi^{n+1}
  for (int n = 1; n <= kMaxSeriesIndex; n += 2)
    CHECK(std::abs(taylor_coefficient(n)) <= std::numbers::pi / 3.0 / std::pow(std::numbers::pi, n));
}

TEST_CASE("maclaurin series of the logistic kernel") {
  for (double R : {0.5, 1.0, 1.996, 2.5})
    CHECK(std::abs(logistic_maclaurin(R, 1e-13) - 1.0 / (std::exp(R) + 1.0)) < 1e-12);
  // 1e-16 at R = 2.5 needs more exact coefficients than are tabulated
  CHECK_THROWS_AS(logistic_maclaurin(2.5), NonConvergence);
}

TEST_CASE("series against quadrature of the lower integral") {
  quad::QuadratureSpec q;
  q.target_tol = 1e-12;
  for (double a : {0.1, 0.5, 0.9})
    for (double b : {100.0, 316.0, 1000.0}) {
      const auto kr = choose_K_R(b);
      const auto s = series_lower_integral(a, b, kr.K, kr.R, 1e-13);
      const auto r = quad::integrate_finite(quad::IntegrandSpec::f_sin(a, b), 0.0, kr.R, q);
      CHECK(std::abs(s.value - r.value) < 1e-10);
      CHECK(s.tail_bound < 1e-13);
      CHECK(s.terms_used % 2 == 1);
    }
}

TEST_CASE("tail bound is honest") {
  const auto kr = choose_K_R(100.0);
  const auto s = series_lower_integral(0.5, 100.0, kr.K, kr.R, 1e-8);
  const auto more = raw_series_terms(0.5, 100.0, kr.R, s.terms_used + 10);
  CHECK(std::abs(more.value - s.value) < s.tail_bound);
  CHECK(std::abs(more.value - s.value) > 0.0);
}

TEST_CASE("the series needs b log R to be a multiple of 2 pi") {
  quad::QuadratureSpec q;
  q.target_tol = 1e-12;
  const double b = 100.0;
  const auto kr = choose_K_R(b);
  const double R_off = kr.R * std::exp(std::numbers::pi / (2 * b));
  const auto s = raw_series(0.5, b, R_off, 1e-13);
  const auto r = quad::integrate_finite(quad::IntegrandSpec::f_sin(0.5, b), 0.0, R_off, q);
  CHECK(std::abs(s.value - r.value) > 1e-6);
  CHECK_THROWS_AS(series_lower_integral(0.5, b, kr.K, R_off, 1e-12), PreconditionError);
}

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS_AS(series_lower_integral(0.5, 100.0, 0, 1.0, 1e-10), PreconditionError);
  CHECK_THROWS_AS(raw_series(0.5, 100.0, 3.2, 1e-10), DomainError);
  CHECK_THROWS_AS(series_lower_integral(1.0, 100.0, 11, choose_K_R(100.0).R, 1e-10), DomainError);
}

TEST_CASE("lower bound, its alternative form and the intermediate constants") {
  const std::vector<double> as{0.01, 0.05, 0.1};
  const std::vector<double> bs{100.0, 300.0, 1000.0};
  const auto rep = check_theorem5(as, bs);
  CHECK(rep.passed());
  int alt = 0, alt_holding = 0;
  for (const auto& c : rep.cells)
    if (c.check == "lower_bound_alternative_form") {
      ++alt;
      CHECK_FALSE(c.gating);
      alt_holding += c.passed;
    }
  CHECK(alt == 9);
  CHECK(alt_holding == 0);

  const auto kr = choose_K_R(100.0);
  const auto parts = lower_bound_parts(0.05, 100.0, kr.R);
  CHECK(std::abs(parts.bracket) < 0.76667 / 1e4);
  CHECK(parts.pair_sum > 0.29490 / 1e4);

  const std::vector<double> bad_a{0.2};
  CHECK_THROWS_AS(check_theorem5(bad_a, bs), PreconditionError);
}

TEST_CASE("margin scales with the leading term") {
  const std::vector<double> as{0.05};
  double m100 = 0, m1000 = 0, lead100 = 0, lead1000 = 0;
  for (double b : {100.0, 1000.0}) {
    const std::vector<double> bs{b};
    for (const auto& c : check_theorem5(as, bs).cells)
      if (c.check == "lower_bound") {
        const double R = choose_K_R(b).R;
        const double lead = std::pow(R, 0.05) / (b * (std::exp(R) + 1.0));
        (b == 100.0 ? m100 : m1000) = c.margin;
        (b == 100.0 ? lead100 : lead1000) = lead;
      }
  }
  CHECK(m100 > 0.0);
  CHECK(m1000 > 0.0);
  // margin ~ lead * const / b^2: ratio of (margin/lead) near 100 between b = 100 and 1000
  const double ratio = (m100 / lead100) / (m1000 / lead1000);
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);
}
