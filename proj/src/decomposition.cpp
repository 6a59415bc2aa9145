#include "fzeta/decomposition.hpp"

#include "fzeta/errors.hpp"
#include "fzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fzeta::decomp {

using quad::Integral;
using quad::IntegrandSpec;
using quad::QuadratureSpec;

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureSpec tightened(const QuadratureSpec& q, double tol) {
  QuadratureSpec t = q;
  t.target_tol = std::min(q.target_tol, tol);
  return t;
}

} // namespace

double DecompositionPlan::endpoint(std::int64_t j) const {
  return std::exp(static_cast<double>(j) * kPi / b);
}

DecompositionPlan make_plan(double a, double b, const QuadratureSpec& q) {
  if (!(a > 0.0 && a < 1.0))
    throw PreconditionError("decomposition: a must lie in (0, 1)");
  if (!(b >= 100.0) || !std::isfinite(b))
    throw PreconditionError("decomposition: b must be >= 100");
  q.validate();
  const series::KR kr = series::choose_K_R(b, 2.0);
  DecompositionPlan p;
  p.a = a;
  p.b = b;
  p.K = kr.K;
  p.R = kr.R;
  p.c = std::exp(kPi / b);
  p.T = quad::truncation_point(a, q.target_tol);
  p.truncation_k = static_cast<std::int64_t>(std::ceil(b * std::log(p.T) / (2.0 * kPi)));
  return p;
}

std::vector<IntervalContribution> interval_contributions(const DecompositionPlan& plan,
                                                         const QuadratureSpec& q) {
  const IntegrandSpec spec = IntegrandSpec::h_sin(plan.a, plan.b);
  std::vector<IntervalContribution> out;
  out.reserve(static_cast<std::size_t>(plan.truncation_k - plan.K + 1));
  double cumulative = 0.0;
  double carry = 0.0;
  for (std::int64_t k = plan.K; k <= plan.truncation_k; ++k) {
    Integral r;
    try {
      r = quad::integrate_nodes(spec, 2 * k, 2 * k + 1, q);
    } catch (const NonConvergence& e) {
      throw NonConvergence("upper_integral: interval k = " + std::to_string(k) + ": " + e.what(),
                           e.best(), e.err_est());
    }
    // Neumaier step for the running total
    const double t = cumulative + r.value;
    carry += std::abs(cumulative) >= std::abs(r.value) ? (cumulative - t) + r.value
                                                       : (r.value - t) + cumulative;
    cumulative = t;
    out.push_back({k, plan.endpoint(2 * k), plan.endpoint(2 * k + 1), r.value, r.err_est,
                   cumulative + carry});
  }
  return out;
}

Integral upper_integral(const DecompositionPlan& plan, const QuadratureSpec& q) {
  const auto parts = interval_contributions(plan, q);
  Integral r;
  for (const auto& p : parts)
    r.err_est += p.err_est;
  r.value = parts.empty() ? 0.0 : parts.back().cumulative;
  r.err_est += quad::exponential_tail_bound(plan.a, plan.endpoint(2 * plan.truncation_k + 2));
  return r;
}

Integral direct_upper_integral(const DecompositionPlan& plan, const QuadratureSpec& q) {
  return quad::integrate_to_infinity(IntegrandSpec::f_sin(plan.a, plan.b), plan.R, q);
}

double average_closed_form(double b) {
  if (!(b > 0.0))
    throw PreconditionError("average_closed_form: b must be positive");
  const double x = kPi / b;
  return (1.0 + std::exp(-x)) / (b * (1.0 / (b * b) + 1.0) * -std::expm1(-x));
}

Average interval_average(std::int64_t k, double b, const QuadratureSpec& q) {
  if (!(b >= 10.0))
    throw PreconditionError("interval_average: b must be >= 10");
  const Integral r = quad::integrate_nodes(IntegrandSpec::sin_log(b), 2 * k, 2 * k + 1, q);
  const double width = std::exp(2.0 * k * kPi / b) * std::expm1(kPi / b);
  return {average_closed_form(b), r.value / width};
}

VerificationReport check_theorem6(std::span<const double> a_grid, std::span<const double> b_grid,
                                  const QuadratureSpec& q) {
  const QuadratureSpec qi = tightened(q, 1e-12);
  VerificationReport rep;
  rep.theorem = 6;
  rep.title = "pairing decomposition of the upper integral";
  for (double b : b_grid) {
    for (double a : a_grid) {
      const DecompositionPlan plan = make_plan(a, b, qi);
      const Params params{{"a", a}, {"b", b}, {"K", double(plan.K)}};
      const auto parts = interval_contributions(plan, qi);
      const Integral paired = upper_integral(plan, qi);
      const Integral direct = direct_upper_integral(plan, qi);
      rep.cells.push_back(within_abs("paired_vs_direct", params, paired.value, direct.value, 1e-9));

      // One period [t_{2K}, t_{2K+2}] as its two halves.
      const IntegrandSpec fs = IntegrandSpec::f_sin(a, b);
      const std::int64_t j = 2 * plan.K;
      const double first = quad::integrate_nodes(fs, j, j + 1, qi).value;
      const double second = quad::integrate_nodes(fs, j + 1, j + 2, qi).value;
      rep.cells.push_back(
          within_abs("period_regrouping", params, first + second, parts.front().contribution, 1e-12));

      // Negative half mapped back onto the positive one by u = t / c.
      const double mapped =
          -std::pow(plan.c, a) * quad::integrate_nodes(fs.scaled(plan.c), j, j + 1, qi).value;
      rep.cells.push_back(within_abs("negative_half_substitution", params, second, mapped, 1e-12));

      for (std::size_t i = 0; i < parts.size() && i <= 20; ++i) {
        const Params pk{{"a", a}, {"b", b}, {"k", double(parts[i].k)}};
        if (a <= 0.731 && parts[i].t_lo >= 1.0)
          rep.cells.push_back(strictly_greater("contribution_positive", pk, parts[i].contribution, 0.0));
      }

      // int of h over K..K+5 full periods collapses to two half-period integrals of f.
      const IntegrandSpec hh = IntegrandSpec::h(a, b);
      const IntegrandSpec ff = IntegrandSpec::f(a);
      const std::int64_t m = 5;
      const double telescoped =
          quad::integrate_finite(hh, plan.endpoint(j), plan.endpoint(j + 2 * m + 2), qi).value;
      const double ends =
          quad::integrate_finite(ff, plan.endpoint(j), plan.endpoint(j + 1), qi).value -
          quad::integrate_finite(ff, plan.endpoint(j + 2 * m + 2), plan.endpoint(j + 2 * m + 3), qi)
              .value;
      rep.cells.push_back(within_abs("telescoping", params, telescoped, ends, 1e-11));
    }
  }
  return rep;
}

VerificationReport check_theorem7(std::span<const double> a_grid, std::span<const double> b_grid,
                                  std::span<const double> R_grid, const QuadratureSpec& q) {
  const QuadratureSpec qi = tightened(q, 1e-12);
  VerificationReport rep;
  rep.theorem = 7;
  rep.title = "telescoped integral of the pairing kernel and its bounds";
  for (double b : b_grid) {
    if (!(b > 0.0))
      throw PreconditionError("check_theorem7: b must be positive");
    const double c = std::exp(kPi / b);
    const double cm1 = std::expm1(kPi / b);
    for (double a : a_grid) {
      if (!(a > 0.0 && a < 1.0))
        throw PreconditionError("check_theorem7: a must lie in (0, 1)");
      for (double R : R_grid) {
        if (!(R >= 1.0))
          throw PreconditionError("check_theorem7: R must be >= 1");
        const Params params{{"a", a}, {"b", b}, {"R", R}};
        const double lhs = quad::integrate_to_infinity(IntegrandSpec::h(a, b), R, qi).value;
        const double rhs = quad::integrate_finite(IntegrandSpec::f(a), R, c * R, qi).value;
        rep.cells.push_back(within_abs("telescoped_equality", params, lhs, rhs, 1e-10));

        const double Ra = std::pow(R, a);
        const double lower = cm1 * std::pow(c, a - 1.0) * Ra / (std::exp(c * R) + 1.0);
        const double upper = cm1 * Ra / (std::exp(R) + 1.0);
        rep.cells.push_back(strictly_greater("lower_bound", params, lhs, lower));
        rep.cells.push_back(strictly_less("upper_bound", params, lhs, upper));
      }
      const Params ps{{"a", a}, {"b", b}, {"alpha", 1.0}, {"beta", 2.0}};
      const double scaled = quad::integrate_finite(IntegrandSpec::f(a).scaled(c), 1.0, 2.0, qi).value;
      const double unscaled =
          std::pow(c, -a) * quad::integrate_finite(IntegrandSpec::f(a), c, 2.0 * c, qi).value;
      rep.cells.push_back(within_abs("scaling_identity", ps, scaled, unscaled, 1e-12));
    }
  }
  return rep;
}

VerificationReport check_theorem8(std::span<const double> b_bounds, std::span<const double> b_quad,
                                  std::span<const std::int64_t> k_grid, const QuadratureSpec& q) {
  const QuadratureSpec qi = tightened(q, 1e-14);
  VerificationReport rep;
  rep.theorem = 8;
  rep.title = "mean of sin(b log t) over a positive half period";
  for (double b : b_quad)
    for (std::int64_t k : k_grid) {
      const Average avg = interval_average(k, b, qi);
      const Params p{{"b", b}, {"k", double(k)}};
      rep.cells.push_back(within_abs("closed_form_vs_quadrature", p, avg.closed_form,
                                     avg.by_quadrature, 1e-12));
    }
  for (double b : b_bounds) {
    if (!(b >= 10.0))
      throw PreconditionError("check_theorem8: b must be >= 10");
    const double A = average_closed_form(b);
    const Params p{{"b", b}};
    rep.cells.push_back(strictly_greater("lower_bound", p, A, 2.0 / kPi - 2.0 / (kPi * b * b)));
    rep.cells.push_back(strictly_less("upper_bound", p, A, 2.0 / kPi));
  }
  return rep;
}

VerificationReport check_theorem9(std::span<const SandwichPoint> points, const QuadratureSpec& q) {
  constexpr int kSamples = 1 << 10;
  const QuadratureSpec qi = tightened(q, 1e-13);
  VerificationReport rep;
  rep.theorem = 9;
  rep.title = "sandwich for the weighted sine integral over a half period";
  for (const auto& pt : points) {
    if (!(pt.b >= 100.0))
      throw PreconditionError("check_theorem9: b must be >= 100");
    if (pt.weight == Weight::pairing && !(pt.a > 0.0 && pt.a < 1.0))
      throw PreconditionError("check_theorem9: a must lie in (0, 1)");
    const double b = pt.b;
    const double t0 = std::exp(2.0 * pt.k * kPi / b);
    const double t1 = std::exp((2.0 * pt.k + 1.0) * kPi / b);
    const double width = t0 * std::expm1(kPi / b);

    const IntegrandSpec w = pt.weight == Weight::pairing ? IntegrandSpec::h(pt.a, b)
                                                         : IntegrandSpec{};
    double m1 = 0.0, m2 = 0.0, delta = 0.0, prev = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
      const double t = i == kSamples ? t1 : t0 + width * i / kSamples;
      const double v = quad::eval_integrand(w, t);
      if (i == 0) {
        m1 = m2 = v;
      } else {
        m1 = std::min(m1, v);
        m2 = std::max(m2, v);
        delta = std::max(delta, std::abs(v - prev));
      }
      prev = v;
    }
    const IntegrandSpec ws = pt.weight == Weight::pairing ? IntegrandSpec::h_sin(pt.a, b)
                                                          : IntegrandSpec::sin_log(b);
    const double middle = quad::integrate_nodes(ws, 2 * pt.k, 2 * pt.k + 1, qi).value;

    const double lo_coef = 2.0 / kPi - 2.0 / (kPi * b * b);
    const double hi_coef = 2.0 / kPi;
    const Params params{{"a", pt.weight == Weight::pairing ? pt.a : 0.0},
                        {"b", b},
                        {"k", double(pt.k)},
                        {"unit_weight", pt.weight == Weight::unit ? 1.0 : 0.0}};

    CheckCell lower = strictly_greater("lower_bound", params, middle, lo_coef * m1 * width);
    const double lo_unc = lo_coef * delta * width;
    lower.margin -= lo_unc;
    lower.passed = lower.margin > 0.0;
    lower.note = "margin net of sampling uncertainty " + format_double(lo_unc);
    rep.cells.push_back(std::move(lower));

    CheckCell upper = strictly_less("upper_bound", params, middle, hi_coef * m2 * width);
    const double hi_unc = hi_coef * delta * width;
    upper.margin -= hi_unc;
    upper.passed = upper.margin > 0.0;
    upper.note = "margin net of sampling uncertainty " + format_double(hi_unc);
    rep.cells.push_back(std::move(upper));
  }
  return rep;
}

VerificationReport check_theorem10(std::span<const double> t_grid, std::span<const double> a_grid,
                                   std::span<const double> b_grid) {
  const double a_max = std::numbers::e / (std::numbers::e + 1.0);
  for (double t : t_grid)
    if (!(t >= 1.0))
      throw PreconditionError("check_theorem10: t must be >= 1");
  for (double a : a_grid)
    if (!(a > 0.0 && a <= a_max))
      throw PreconditionError("check_theorem10: a must lie in (0, e/(e+1)]");
  for (double b : b_grid)
    if (!(b > 0.0))
      throw PreconditionError("check_theorem10: b must be positive");

  VerificationReport rep;
  rep.theorem = 10;
  rep.title = "positivity of the pairing kernel";
  double h_min = 0.0;
  Params at;
  bool first = true;
  for (double b : b_grid)
    for (double a : a_grid)
      for (double t : t_grid) {
        const double h = quad::eval_integrand(IntegrandSpec::h(a, b), t);
        const Params p{{"t", t}, {"a", a}, {"b", b}};
        if (first || h < h_min) {
          h_min = h;
          at = p;
          first = false;
        }
        rep.cells.push_back(strictly_greater("h_positive", p, h, 0.0));
      }
  if (!first) {
    CheckCell m = strictly_greater("grid_minimum", at, h_min, 0.0);
    rep.cells.push_back(std::move(m));
  }
  for (double b : b_grid) {
    const double h = quad::eval_integrand(IntegrandSpec::h(0.9, b), 1.0);
    const Params p{{"t", 1.0}, {"a", 0.9}, {"b", b}};
    rep.cells.push_back(informational(strictly_greater("outside_region_probe", p, h, 0.0),
                                      h > 0.0 ? "positive" : "negative"));
  }
  return rep;
}

} // namespace fzeta::decomp
