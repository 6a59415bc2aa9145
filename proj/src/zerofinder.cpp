#include "fzeta/zerofinder.hpp"

#include "fzeta/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace fzeta::zeros {

using special::ComplexPoint;
using special::ComplexValue;
using cplx = std::complex<double>;

namespace {

using lcplx = std::complex<long double>;

// Cohen, Villegas, Zagier: sum_{k<n} (-1)^k a_k with weights from the
// Chebyshev polynomial T_n(1 - 2x).
lcplx cvz_sum(lcplx s, int n) {
  const long double r = 3.0L + std::sqrt(8.0L);
  long double d = std::pow(r, static_cast<long double>(n));
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L;
  long double c = -d;
  lcplx acc = 0.0L;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const lcplx term = std::exp(-s * std::log(static_cast<long double>(k + 1)));
    acc += c * term;
    b = b * (static_cast<long double>(k) + n) * (static_cast<long double>(k) - n) /
        ((static_cast<long double>(k) + 0.5L) * (static_cast<long double>(k) + 1.0L));
  }
  return acc / d;
}

double wrapped(double x) { return std::remainder(x, 2.0 * std::numbers::pi); }

cplx value_at(double b, ZeroMethod method, const quad::QuadratureSpec& q) {
  const ComplexPoint s{0.5, b};
  if (method == ZeroMethod::integral)
    return special::F(s, q).z();
  return eta_oracle(s).z();
}

double projection(cplx v, cplx u) { return (v * std::conj(u)).real(); }

} // namespace

ComplexValue eta_oracle(ComplexPoint s, double tol) {
  if (!(s.a > 0.0))
    throw DomainError("eta_oracle: requires Re(s) > 0");
  if (!(tol > 0.0))
    throw PreconditionError("eta_oracle: tol must be positive");
  const double beta = std::abs(s.b);
  const double growth = std::numbers::pi * beta / 2.0 + std::log(3.0 * (1.0 + 2.0 * beta) / tol);
  const int n = static_cast<int>(std::ceil(growth / std::log(3.0 + std::sqrt(8.0)))) + 4;
  if (n > 4000)
    throw PreconditionError("eta_oracle: |b| too large");
  const lcplx z(s.a, s.b);
  const lcplx v = cvz_sum(z, n);
  const lcplx w = cvz_sum(z, n + 8);
  const double err = static_cast<double>(std::abs(w - v));
  // err of the n + 8 sum is below err; report the better sum.
  if (err > tol)
    throw NonConvergence("eta_oracle: change " + std::to_string(err) + " above tol",
                         static_cast<double>(std::abs(w)), err);
  return {static_cast<double>(w.real()), static_cast<double>(w.imag()), err,
          quad::Route::real_axis};
}

const char* method_name(ZeroMethod m) { return m == ZeroMethod::integral ? "integral" : "oracle"; }

std::vector<ScanSample> sample_line(double b_min, double b_max, double step, ZeroMethod method,
                                    const quad::QuadratureSpec& q) {
  if (!std::isfinite(b_min) || !std::isfinite(b_max) || !(b_min < b_max))
    throw PreconditionError("scan: need b_min < b_max");
  if (!(step > 0.0) || step > 0.5)
    throw PreconditionError("scan: step must lie in (0, 0.5]");
  const auto n = static_cast<long>(std::floor((b_max - b_min) / step + 1e-9));
  std::vector<ScanSample> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    const double b = b_min + static_cast<double>(i) * step;
    const cplx v = value_at(b, method, q);
    out.push_back({b, v.real(), v.imag(), std::abs(v)});
  }
  return out;
}

std::vector<ZeroBracket> brackets_from_samples(const std::vector<ScanSample>& samples) {
  std::vector<ZeroBracket> out;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& p = samples[i];
    const auto& n = samples[i + 1];
    const bool component_flip = (p.re * n.re < 0.0) || (p.im * n.im < 0.0);
    if (!component_flip || p.abs == 0.0)
      continue;
    const double jump = wrapped(std::atan2(n.im, n.re) - std::atan2(p.im, p.re));
    if (std::abs(jump) <= std::numbers::pi / 2.0)
      continue;
    const cplx u = cplx(p.re, p.im) / p.abs;
    out.push_back({p.b, n.b, p.abs, projection(cplx(n.re, n.im), u)});
  }
  return out;
}

std::vector<ZeroBracket> scan_critical_line(double b_min, double b_max, double step,
                                            const quad::QuadratureSpec& q, ZeroMethod method) {
  return brackets_from_samples(sample_line(b_min, b_max, step, method, q));
}

LocatedZero refine_zero(const ZeroBracket& bracket, double zero_tol, const quad::QuadratureSpec& q,
                        ZeroMethod method) {
  if (!(bracket.b_lo < bracket.b_hi))
    throw PreconditionError("refine_zero: empty bracket");
  if (!(zero_tol > 0.0))
    throw PreconditionError("refine_zero: zero_tol must be positive");
  double lo = bracket.b_lo;
  double hi = bracket.b_hi;
  const cplx v_lo = value_at(lo, method, q);
  if (std::abs(v_lo) == 0.0)
    throw PreconditionError("refine_zero: value vanishes at b_lo");
  const cplx u = v_lo / std::abs(v_lo);
  const double p_hi = projection(value_at(hi, method, q), u);
  if (p_hi >= 0.0)
    throw NonConvergence("refine_zero: no sign change of the projection in the bracket",
                         0.5 * (lo + hi), hi - lo);
  for (int it = 0; it < 200 && hi - lo >= 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (projection(value_at(mid, method, q), u) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double b_star = 0.5 * (lo + hi);
  const ComplexPoint s{0.5, b_star};
  const double gamma_abs = special::Gamma(s, q).abs();
  const double eta_abs = eta_oracle(s).abs();

  LocatedZero z;
  z.b_star = b_star;
  z.method = method;
  if (method == ZeroMethod::integral) {
    z.residual = special::F(s, q).abs();
    z.scaled_residual = z.residual / gamma_abs;
  } else {
    z.residual = gamma_abs * eta_abs;
    z.scaled_residual = eta_abs;
  }
  const double worst = std::max(z.scaled_residual, eta_abs);
  if (!(worst < zero_tol))
    throw NonConvergence("refine_zero: residual " + std::to_string(worst) +
                             " above zero_tol; the bracket holds no zero",
                         b_star, worst);
  return z;
}

ZeroSearch find_zeros(double b_min, double b_max, double step, double zero_tol,
                      const quad::QuadratureSpec& q, ZeroMethod method) {
  ZeroSearch out;
  out.scan = sample_line(b_min, b_max, step, method, q);
  out.brackets = brackets_from_samples(out.scan);
  for (const auto& br : out.brackets)
    out.zeros.push_back(refine_zero(br, zero_tol, q, method));
  return out;
}

} // namespace fzeta::zeros
