#include "fzeta/series.hpp"

#include "fzeta/coeffs.hpp"
#include "fzeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace fzeta::series {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoZeta2 = kPi * kPi / 3.0;

// Neumaier compensated sum.
struct Sum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Bound on the terms with n > n_last, from |g^(n)(0)|/n! <= 2 zeta(2) / pi^{n+1}.
double tail_bound(double a, double b, double R, int n_last) {
  const double rho = R / kPi;
  return kTwoZeta2 * std::pow(rho, n_last + 1) / (1.0 - rho) * std::pow(R, a) / b;
}

void check_R(double R) {
  if (!(R > 0.0) || !std::isfinite(R))
    throw DomainError("series: R must be positive");
  if (!(R < kPi))
    throw DomainError("series: R >= pi is outside the radius of convergence");
}

// Walks n = 0, 1, 3, 5, ... calling visit(n, coefficient, R^{n+a}); stops when
// visit returns false or the coefficient table is exhausted. Returns last n.
template <class Visit>
int walk_terms(double a, double R, Visit&& visit) {
  const double logR = std::log(R);
  double pw = std::exp(a * logR);
  int steps = 0;
  for (int n = 0; n <= kMaxSeriesIndex; n = (n == 0 ? 1 : n + 2)) {
    if (n == 1)
      pw *= R;
    else if (n > 1) {
      pw *= R * R;
      if (++steps % 16 == 0)
        pw = std::exp((n + a) * logR);
    }
    if (!visit(n, taylor_coefficient(n), pw))
      return n;
  }
  return kMaxSeriesIndex;
}

} // namespace

double taylor_coefficient(int n) {
  static std::once_flag once;
  static std::vector<double> cache;
  std::call_once(once, [] {
    cache.resize(kMaxSeriesIndex + 1);
    for (int k = 0; k <= kMaxSeriesIndex; ++k)
      cache[k] = coeffs::g_taylor_coefficient(static_cast<unsigned>(k)).to_double();
  });
  if (n < 0 || n > kMaxSeriesIndex)
    throw PreconditionError("taylor_coefficient: index out of range");
  return cache[n];
}

KR choose_K_R(double b, double cap) {
  if (!(cap > 1.0) || cap > kPi)
    throw PreconditionError("choose_K_R: cap must lie in (1, pi]");
  if (!(b > 0.0) || !std::isfinite(b))
    throw PreconditionError("choose_K_R: b must be positive");
  const double x = b * std::log(cap) / (2.0 * kPi);
  // Allow a few ulps so the boundary b = 2 pi / log(cap) still yields K = 1.
  double K = std::floor(x * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()));
  while (K >= 1.0 && std::exp(2.0 * K * kPi / b) > cap * (1.0 + 1e-14))
    K -= 1.0;
  if (K < 1.0)
    throw PreconditionError("choose_K_R: b = " + std::to_string(b) +
                            " is too small for K >= 1 with this cap");
  if (K > 1e9)
    throw PreconditionError("choose_K_R: b too large");
  KR out;
  out.K = static_cast<int>(K);
  out.R = std::exp(2.0 * K * kPi / b);
  return out;
}

SeriesEval raw_series_terms(double a, double b, double R, int n_max) {
  check_R(R);
  Sum sum;
  const int last = walk_terms(a, R, [&](int n, double coef, double pw) {
    if (n > n_max)
      return false;
    const double na = n + a;
    sum.add(-coef * b * pw / (na * na + b * b));
    return true;
  });
  SeriesEval out;
  out.value = sum.value();
  out.terms_used = std::min(last, n_max);
  if (out.terms_used % 2 == 0 && out.terms_used > 0)
    --out.terms_used;
  out.tail_bound = tail_bound(a, b, R, std::max(out.terms_used, 1));
  out.R = R;
  return out;
}

SeriesEval raw_series(double a, double b, double R, double tol) {
  check_R(R);
  if (!(tol > 0.0))
    throw PreconditionError("series: tol must be positive");
  Sum sum;
  int last = -1;
  double bound = 0.0;
  bool done = false;
  walk_terms(a, R, [&](int n, double coef, double pw) {
    const double na = n + a;
    sum.add(-coef * b * pw / (na * na + b * b));
    last = n;
    if (n >= 1) {
      bound = tail_bound(a, b, R, n);
      if (bound < tol) {
        done = true;
        return false;
      }
    }
    return true;
  });
  if (!done)
    throw NonConvergence("series: tail bound above tol after n = " + std::to_string(last),
                         sum.value(), bound);
  SeriesEval out;
  out.value = sum.value();
  out.terms_used = last;
  out.tail_bound = bound;
  out.R = R;
  return out;
}

SeriesEval series_lower_integral(double a, double b, int K, double R, double tol) {
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("series_lower_integral: a must lie in (0, 1)");
  if (!(b > 0.0))
    throw DomainError("series_lower_integral: b must be positive");
  if (K < 1)
    throw PreconditionError("series_lower_integral: K must be >= 1");
  const double expected = std::exp(2.0 * K * kPi / b);
  if (std::abs(R - expected) > 1e-12 * expected)
    throw PreconditionError("series_lower_integral: R must equal exp(2 K pi / b)");
  SeriesEval out = raw_series(a, b, R, tol);
  out.K = K;
  return out;
}

double logistic_maclaurin(double R, double tol) {
  check_R(R);
  Sum sum;
  double bound = 0.0;
  bool done = false;
  walk_terms(0.0, R, [&](int n, double coef, double pw) {
    sum.add(coef * pw);
    if (n >= 1) {
      const double rho = R / kPi;
      bound = kTwoZeta2 / kPi * std::pow(rho, n + 1) / (1.0 - rho);
      if (bound < tol) {
        done = true;
        return false;
      }
    }
    return true;
  });
  if (!done)
    throw NonConvergence("logistic_maclaurin: tail bound above tol", sum.value(), bound);
  return sum.value();
}

LowerBoundParts lower_bound_parts(double a, double b, double R) {
  check_R(R);
  Sum bracket;
  Sum pairs;
  walk_terms(a, R, [&](int n, double coef, double pw) {
    const double na = n + a;
    const double w = na * na / (na * na + b * b);
    const double term = coef * std::pow(R, n) * w;
    if (n <= 5)
      bracket.add(term);
    else
      pairs.add(term);
    (void)pw;
    return n < 7 || std::abs(term) > 1e-30 * std::abs(pairs.value());
  });
  return {bracket.value(), pairs.value()};
}

VerificationReport check_theorem2(std::span<const double> a_grid, std::span<const double> b_grid,
                                  const quad::QuadratureSpec& q, double tol) {
  quad::QuadratureSpec qi = q;
  qi.target_tol = std::min(q.target_tol, 1e-12);
  VerificationReport rep;
  rep.theorem = 2;
  rep.title = "series for the lower integral against quadrature";
  for (double b : b_grid) {
    const KR kr = choose_K_R(b, 2.0);
    for (double a : a_grid) {
      const Params params{{"a", a}, {"b", b}, {"K", double(kr.K)}, {"R", kr.R}};
      const SeriesEval s = series_lower_integral(a, b, kr.K, kr.R, 1e-3 * tol);
      const auto quadv = quad::integrate_finite(quad::IntegrandSpec::f_sin(a, b), 0.0, kr.R, qi);
      rep.cells.push_back(within_abs("series_vs_quadrature", params, s.value, quadv.value, tol));

      const double R_off = kr.R * std::exp(kPi / (2.0 * b));
      const SeriesEval off = raw_series(a, b, R_off, 1e-3 * tol);
      const auto q_off = quad::integrate_finite(quad::IntegrandSpec::f_sin(a, b), 0.0, R_off, qi);
      const Params p_off{{"a", a}, {"b", b}, {"R", R_off}};
      rep.cells.push_back(strictly_greater("phase_condition_needed", p_off,
                                           std::abs(off.value - q_off.value), 1e-6));
    }
  }
  return rep;
}

VerificationReport check_theorem5(std::span<const double> a_grid, std::span<const double> b_grid) {
  for (double a : a_grid)
    if (!(a > 0.0 && a <= 0.1))
      throw PreconditionError("check_theorem5: a must lie in (0, 0.1]");
  for (double b : b_grid)
    if (!(b >= 100.0))
      throw PreconditionError("check_theorem5: b must be >= 100");

  VerificationReport rep;
  rep.theorem = 5;
  rep.title = "lower bound on the series for the lower integral";
  for (double b : b_grid) {
    const KR kr = choose_K_R(b, 2.0);
    const double R = kr.R;
    const double g_R = 1.0 / (std::exp(R) + 1.0);
    {
      const Params p{{"R", R}};
      rep.cells.push_back(within_abs("maclaurin_identity", p, logistic_maclaurin(R), g_R, 1e-12));
    }
    for (double a : a_grid) {
      const Params params{{"a", a}, {"b", b}, {"K", double(kr.K)}, {"R", R}};
      const double Ra = std::pow(R, a);
      const SeriesEval s = series_lower_integral(a, b, kr.K, R, 1e-12 * Ra / b);

      const double rhs = -Ra * g_R / b - 0.47177 * Ra / (b * b * b);
      rep.cells.push_back(strictly_greater("lower_bound", params, s.value, rhs));

      const double rhs_alt = Ra * g_R / b - 0.47177 * Ra / (b * b);
      CheckCell alt = strictly_greater("lower_bound_alternative_form", params, s.value, rhs_alt);
      const char* status = alt.passed ? "holds" : "does not hold";
      rep.cells.push_back(informational(std::move(alt), status));

      const LowerBoundParts parts = lower_bound_parts(a, b, R);
      rep.cells.push_back(within_abs("regrouping", params, s.value + Ra * g_R / b,
                                     Ra / b * (parts.bracket + parts.pair_sum), 1e-12 * Ra / b));
      rep.cells.push_back(
          strictly_less("bracket_times_b2", params, std::abs(parts.bracket) * b * b, 0.76667));
      rep.cells.push_back(
          strictly_greater("pair_sum_times_b2", params, parts.pair_sum * b * b, 0.29490));
    }
  }
  return rep;
}

} // namespace fzeta::series
