#include "doctest.h"
#include "oracles.hpp"

#include "fzeta/decomposition.hpp"
#include "fzeta/errors.hpp"
#include "fzeta/series.hpp"
#include "fzeta/special.hpp"

#include <cmath>
#include <numbers>

using namespace fzeta;
using namespace fzeta::special;

namespace {

quad::QuadratureSpec spec(double tol = 1e-12) {
  quad::QuadratureSpec q;
  q.target_tol = tol;
  return q;
}

} // namespace

TEST_CASE("F at real points") {
  const auto q = spec();
  CHECK(F({1.0, 0.0}, q).re == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(F({2.0, 0.0}, q).re == doctest::Approx(std::numbers::pi * std::numbers::pi / 12).epsilon(1e-12));
  CHECK(F({1.0, 0.0}, q).im == 0.0);
  CHECK_THROWS_AS(F({0.0, 1.0}, q), DomainError);
  CHECK_THROWS_AS(F({-0.5, 1.0}, q), DomainError);
}

TEST_CASE("F vanishes at the first zeta zero") {
  const auto q = spec();
  CHECK(F({0.5, 14.134725}, q).abs() < 1e-5);
  CHECK(F({0.5, 14.134725141734694}, q).abs() < 1e-17);
}

TEST_CASE("F is conjugate symmetric") {
  const auto q = spec();
  for (double b : {0.7, 5.0, 14.0, 60.0}) {
    const auto p = F({0.3, b}, q);
    const auto m = F({0.3, -b}, q);
    CHECK(std::abs(p.re - m.re) <= 1e-10 * p.abs());
    CHECK(std::abs(p.im + m.im) <= 1e-10 * p.abs());
  }
}

TEST_CASE("G directly and through the identity") {
  const auto q = spec();
  const double pi = std::numbers::pi;
  const auto g2 = G({2.0, 0.0}, q);
  CHECK(g2.method == GMethod::direct);
  CHECK(g2.re == doctest::Approx(pi * pi / 6).epsilon(1e-12));
  CHECK(G({4.0, 0.0}, q).re == doctest::Approx(std::pow(pi, 4) / 15).epsilon(1e-12));
  const auto g_strip = G({0.5, 25.0}, q);
  CHECK(g_strip.method == GMethod::via_identity);
  const auto expected = F({0.5, 25.0}, q).z() / eta_factor({0.5, 25.0});
  CHECK(std::abs(g_strip.z() - expected) <= 1e-15 * std::abs(expected));
  CHECK_THROWS_AS(G_direct({0.5, 25.0}, q), DomainError);
  CHECK_THROWS_AS(G({1.0, 0.0}, q), DomainError); // 1 - 2^{1-s} = 0
}

TEST_CASE("Gamma by quadrature") {
  const auto q = spec();
  CHECK(Gamma({1.0, 0.0}, q).re == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(Gamma({5.0, 0.0}, q).re == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(Gamma({0.5, 0.0}, q).re == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  const std::complex<double> s(0.3, 40.0);
  CHECK(std::abs(Gamma({0.3, 40.0}, q).z() - oracle::gamma(s)) < 1e-11 * std::abs(oracle::gamma(s)));
}

TEST_CASE("zeta on and off the strip") {
  const auto q = spec();
  CHECK(zeta_strip({2.0, 0.0}, q).re ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-12));
  CHECK(zeta_strip({0.5, 0.0}, q).re == doctest::Approx(-1.4603545088095868).epsilon(1e-11));
  CHECK(zeta_strip({0.5, 14.134725}, q).abs() < 1e-4);
  const std::complex<double> s(0.8, 50.0);
  CHECK(std::abs(zeta_strip({0.8, 50.0}, q).z() - oracle::zeta(s)) < 1e-9 * std::abs(oracle::zeta(s)));
  CHECK_THROWS_AS(zeta_strip({0.5, 600.0}, q), DomainError); // Gamma underflows
}

TEST_CASE("identity check on the strip grid with an independent eta") {
  const auto q = spec(1e-10);
  std::vector<ComplexPoint> grid;
  for (double a : {0.2, 0.5, 0.8})
    for (double b : {5.0, 10.0, 14.1347, 50.0, 100.0})
      grid.push_back({a, b});
  const EtaOracle eta = [](ComplexPoint s) { return oracle::eta(s.s()); };
  const auto rep = check_theorem1(grid, q, eta);
  CHECK(rep.cells.size() == 15);
  CHECK(rep.passed());
  const std::vector<ComplexPoint> outside{{1.0, 9.06}};
  CHECK_THROWS_AS(check_theorem1(outside, q, eta), PreconditionError);
}

TEST_CASE("imaginary part of F equals series plus paired upper integral") {
  const auto q = spec();
  for (double b : {100.0, 200.0}) {
    const auto plan = decomp::make_plan(0.5, b, q);
    const double lower = series::series_lower_integral(0.5, b, plan.K, plan.R, 1e-14).value;
    const double upper = decomp::upper_integral(plan, q).value;
    CHECK(std::abs(F({0.5, b}, q).im - (lower + upper)) < 1e-8);
  }
}
