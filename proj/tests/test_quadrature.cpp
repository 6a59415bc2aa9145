#include "doctest.h"
#include "oracles.hpp"

#include "fzeta/errors.hpp"
#include "fzeta/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace fzeta;
using namespace fzeta::quad;

namespace {

QuadratureSpec tight() {
  QuadratureSpec q;
  q.target_tol = 1e-13;
  return q;
}

double rel(std::complex<double> x, std::complex<double> ref) {
  return std::abs(x - ref) / std::abs(ref);
}

} // namespace

TEST_CASE("spec validation") {
  QuadratureSpec q;
  CHECK_NOTHROW(q.validate());
  q.target_tol = 1e-15;
  CHECK_THROWS_AS(q.validate(), PreconditionError);
  q.target_tol = 1e-10;
  q.max_refinement_depth = 0;
  CHECK_THROWS_AS(q.validate(), PreconditionError);
}

TEST_CASE("integrand values") {
  CHECK(eval_integrand(IntegrandSpec::g(), 0.0) == 0.5);
  CHECK(eval_integrand(IntegrandSpec::f(0.5), 1.0) == doctest::Approx(1.0 / (std::exp(1.0) + 1.0)));
  CHECK(eval_integrand(IntegrandSpec::f(0.5), 800.0) >= 0.0);
  CHECK_THROWS_AS(eval_integrand(IntegrandSpec::f(0.5), 0.0), DomainError);
  CHECK_THROWS_AS(eval_integrand(IntegrandSpec::g(), -1.0), DomainError);
  CHECK_THROWS_AS(eval_integrand(IntegrandSpec::f_sin(0.5, 3.0), 0.0), DomainError);
  // h = f(t) - c f(ct), c = e^{pi/b}
  const double c = std::exp(std::numbers::pi / 10.0);
  const double t = 1.7;
  const double h = eval_integrand(IntegrandSpec::h(0.3, 10.0), t);
  CHECK(h == doctest::Approx(oracle::fermi(t, 0.3) - c * oracle::fermi(c * t, 0.3)).epsilon(1e-13));
}

TEST_CASE("cutoff and tail bound") {
  const double T = truncation_point(0.5, 1e-10);
  CHECK(T >= 60.0);
  CHECK(exponential_tail_bound(0.5, T) < 1e-20);
  CHECK(exponential_tail_bound(0.5, 80.0) < exponential_tail_bound(0.5, 60.0));
}

TEST_CASE("real integrals with known values") {
  const auto q = tight();
  CHECK(integrate_to_infinity(IntegrandSpec::f(1.0), 0.0, q).value ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-13));
  CHECK(integrate_to_infinity(IntegrandSpec::f(2.0), 0.0, q).value ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 12).epsilon(1e-13));
  // F(1/2) = Gamma(1/2) eta(1/2)
  const double f_half = oracle::F({0.5, 0.0}).real();
  CHECK(integrate_to_infinity(IntegrandSpec::f(0.5), 0.0, q).value ==
        doctest::Approx(f_half).epsilon(1e-12));
  CHECK(integrate_to_infinity(IntegrandSpec::f(0.05), 0.0, q).value ==
        doctest::Approx(oracle::F({0.05, 0.0}).real()).epsilon(1e-11));
  CHECK(integrate_finite(IntegrandSpec::power(0.25), 0.0, 1.0, q).value ==
        doctest::Approx(4.0).epsilon(1e-13));
  const double g01 = 1.0 - std::log1p(std::exp(1.0)) + std::numbers::ln2;
  CHECK(integrate_finite(IntegrandSpec::g(), 0.0, 1.0, q).value == doctest::Approx(g01).epsilon(1e-14));
  CHECK(integrate_to_infinity(IntegrandSpec::gamma_kernel(5.0), 0.0, q).value ==
        doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("oscillatory integral over sign-change nodes") {
  const auto q = tight();
  for (double b : {10.0, 100.0, 1000.0}) {
    for (std::int64_t k : {0, 3, 40}) {
      const double t0 = std::exp(2.0 * k * std::numbers::pi / b);
      const double t1 = std::exp((2.0 * k + 1) * std::numbers::pi / b);
      const double ref = static_cast<double>(oracle::sine_mean(t0, t1, b)) * (t1 - t0);
      const auto r = integrate_nodes(IntegrandSpec::sin_log(b), 2 * k, 2 * k + 1, q);
      CHECK(std::abs(r.value - ref) < 1e-13 * std::abs(ref));
    }
  }
}

TEST_CASE("sine and cosine parts of F on the real axis") {
  const auto q = tight();
  const std::complex<double> s(0.5, 5.0);
  const auto ref = oracle::F(s);
  const double re = integrate_to_infinity(IntegrandSpec::f_cos(0.5, 5.0), 0.0, q).value;
  const double im = integrate_to_infinity(IntegrandSpec::f_sin(0.5, 5.0), 0.0, q).value;
  CHECK(std::abs(re - ref.real()) < 1e-12);
  CHECK(std::abs(im - ref.imag()) < 1e-12);
  // sin(b log t) is odd in b
  const double im_neg = integrate_to_infinity(IntegrandSpec::f_sin(0.5, -5.0), 0.0, q).value;
  CHECK(im_neg == doctest::Approx(-im).epsilon(1e-12));
}

TEST_CASE("mellin transforms against independent gamma and eta") {
  const auto q = tight();
  SUBCASE("real arguments") {
    CHECK(mellin(MellinKernel::gamma, 0.5, q).value.real() ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(mellin(MellinKernel::fermi, 1.0, q).value.real() ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-13));
    CHECK(mellin(MellinKernel::bose, 2.0, q).value.real() ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
  }
  SUBCASE("complex arguments, rotated ray") {
    for (double a : {0.2, 0.5, 0.8})
      for (double b : {5.0, 14.1347, 50.0, 100.0, -30.0}) {
        const std::complex<double> s(a, b);
        const auto f = mellin(MellinKernel::fermi, s, q);
        const auto g = mellin(MellinKernel::gamma, s, q);
        CHECK(f.route == Route::rotated_ray);
        CHECK(rel(g.value, oracle::gamma(s)) < 1e-11);
        // F is tiny near a zeta zero, so compare against |Gamma| there.
        CHECK(std::abs(f.value - oracle::F(s)) < 1e-11 * std::abs(oracle::gamma(s)));
      }
  }
  SUBCASE("both routes agree where the real axis is still accurate") {
    const std::complex<double> s(0.5, 3.0);
    const auto a = mellin(MellinKernel::fermi, s, q, Route::real_axis);
    const auto b = mellin(MellinKernel::fermi, s, q, Route::rotated_ray);
    CHECK(rel(a.value, b.value) < 1e-11);
  }
  SUBCASE("small |b| stays on the real axis") {
    CHECK(mellin(MellinKernel::fermi, {0.5, 1.0}, q).route == Route::real_axis);
    CHECK(rotation_angle(1.0) == 0.0);
    CHECK(rotation_angle(-100.0) < 0.0);
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(mellin(MellinKernel::fermi, {0.0, 1.0}, q), DomainError);
    CHECK_THROWS_AS(mellin(MellinKernel::bose, {1.0, 1.0}, q), DomainError);
  }
}
