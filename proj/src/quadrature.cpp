#include "fzeta/quadrature.hpp"

#include "fzeta/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace fzeta::quad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod nodes on [0, 1) (symmetric), with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct PanelEstimate {
  T value{};
  double err = 0.0;
  double l1 = 0.0;
};

template <class T, class Fn>
PanelEstimate<T> gauss_kronrod(Fn& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  double l1 = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[j];
    l1 += (std::abs(f1) + std::abs(f2)) * kWgk[j];
    if (j % 2 == 1)
      gauss += (f1 + f2) * kWg[j / 2];
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), l1 * std::abs(half)};
}

// Neumaier-compensated running sum.
template <class T>
struct CompensatedSum {
  T sum{};
  T carry{};
  void add(T x) {
    if constexpr (std::is_same_v<T, double>) {
      const double t = sum + x;
      if (std::abs(sum) >= std::abs(x))
        carry += (sum - t) + x;
      else
        carry += (x - t) + sum;
      sum = t;
    } else {
      CompensatedSum<double> re{sum.real(), carry.real()};
      CompensatedSum<double> im{sum.imag(), carry.imag()};
      re.add(x.real());
      im.add(x.imag());
      sum = {re.sum, im.sum};
      carry = {re.carry, im.carry};
    }
  }
  T total() const { return sum + carry; }
};

template <class T>
struct Accumulator {
  CompensatedSum<T> value;
  double err = 0.0;
  double l1 = 0.0;
  bool converged = true;

  void add(const PanelEstimate<T>& p) {
    value.add(p.value);
    err += p.err;
    l1 += p.l1;
  }
};

template <class T, class Fn>
void refine(Fn& f, double lo, double hi, const PanelEstimate<T>& est, double rel_tol, int depth,
            int max_depth, Accumulator<T>& acc) {
  const double tol = std::max(rel_tol * est.l1, 50.0 * kEps * est.l1);
  if (est.err <= tol || !std::isfinite(est.err)) {
    if (!std::isfinite(est.err))
      acc.converged = false;
    acc.add(est);
    return;
  }
  if (depth >= max_depth) {
    acc.converged = false;
    acc.add(est);
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const auto left = gauss_kronrod<T>(f, lo, mid);
  const auto right = gauss_kronrod<T>(f, mid, hi);
  refine(f, lo, mid, left, rel_tol, depth + 1, max_depth, acc);
  refine(f, mid, hi, right, rel_tol, depth + 1, max_depth, acc);
}

// Adaptive integration of f over one panel, accumulated into acc.
template <class T, class Fn>
void integrate_panel(Fn& f, double lo, double hi, const QuadratureSpec& q, Accumulator<T>& acc) {
  if (!(hi > lo))
    return;
  const auto est = gauss_kronrod<T>(f, lo, hi);
  refine(f, lo, hi, est, q.target_tol, 0, q.max_refinement_depth, acc);
}

struct Partial {
  double value = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  bool converged = true;

  void add(const Partial& o) {
    CompensatedSum<double> s{value, 0.0};
    s.add(o.value);
    value = s.total();
    err += o.err;
    l1 += o.l1;
    converged = converged && o.converged;
  }
};

template <class T>
Partial to_partial(const Accumulator<T>& acc) {
  return {acc.value.total(), acc.err, acc.l1, acc.converged};
}

// ---- kernels as t^{p-1} phi(t), phi smooth on [0, inf) ------------------

double logistic(double t) {
  const double e = std::exp(-t);
  return e / (1.0 + e);
}

double pairing_ratio(double b) { return std::exp(kPi / b); }

double exponent(const IntegrandSpec& s) {
  switch (s.kernel) {
  case Kernel::fermi:
  case Kernel::pairing:
  case Kernel::gamma:
  case Kernel::power:
    return s.a;
  case Kernel::bose:
    return s.a - 1.0;
  case Kernel::logistic:
  case Kernel::unit:
    return 1.0;
  }
  return 1.0;
}

double smooth_part(const IntegrandSpec& s, double t) {
  switch (s.kernel) {
  case Kernel::fermi:
    return logistic(s.scale * t);
  case Kernel::logistic:
    return logistic(t);
  case Kernel::pairing: {
    const double c = pairing_ratio(s.b);
    return logistic(t) - std::pow(c, s.a) * logistic(c * t);
  }
  case Kernel::gamma:
    return std::exp(-t);
  case Kernel::bose:
    return t == 0.0 ? 1.0 : t / std::expm1(t);
  case Kernel::power:
  case Kernel::unit:
    return 1.0;
  }
  return 0.0;
}

// sup |phi| over [0, inf)
double smooth_part_bound(const IntegrandSpec& s) {
  switch (s.kernel) {
  case Kernel::fermi:
  case Kernel::logistic:
    return 0.5;
  case Kernel::pairing:
    return 0.5 * std::pow(pairing_ratio(s.b), s.a);
  default:
    return 1.0;
  }
}

// |phi(t)| <= D e^{-t} for t >= 40
double decay_constant(const IntegrandSpec& s) {
  switch (s.kernel) {
  case Kernel::pairing:
    return std::pow(pairing_ratio(s.b), s.a);
  case Kernel::bose:
    return 1.0 / (1.0 - std::exp(-40.0));
  default:
    return 1.0;
  }
}

double oscillation_sign(const IntegrandSpec& s) {
  return (s.oscillation == Oscillation::sine && s.b < 0.0) ? -1.0 : 1.0;
}

// ---- oscillatory integration in x = log t -------------------------------

// Integrates e^{p x} phi(e^x) osc(beta x) over x in [x0, x1], where the panel
// j covers [j h, (j + 1) h] with h = pi / beta and the phase inside it is
// j pi + beta y, y being the offset from the panel start.
Partial oscillatory_span(const IntegrandSpec& s, double x0, double x1, bool snap,
                         const QuadratureSpec& q) {
  const double beta = std::abs(s.b);
  const double h = kPi / beta;
  const double p = exponent(s);
  const double osc_sign = oscillation_sign(s);
  const bool is_sine = s.oscillation == Oscillation::sine;

  auto node_index = [&](double x, bool up) {
    const double r = x / h;
    const double nearest = std::nearbyint(r);
    if (snap && std::abs(r - nearest) <= 1e-9 * std::max(1.0, std::abs(r)))
      return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(up ? std::ceil(r) : std::floor(r));
  };
  std::int64_t j_begin = node_index(x0, false);
  std::int64_t j_end = node_index(x1, true);
  const bool x0_on_node = snap && std::abs(x0 / h - std::nearbyint(x0 / h)) <=
                                      1e-9 * std::max(1.0, std::abs(x0 / h));
  const bool x1_on_node = snap && std::abs(x1 / h - std::nearbyint(x1 / h)) <=
                                      1e-9 * std::max(1.0, std::abs(x1 / h));

  Accumulator<double> acc;
  for (std::int64_t j = j_begin; j < j_end; ++j) {
    const double start = static_cast<double>(j) * h;
    const double y0 = (j == j_begin && !x0_on_node) ? std::max(0.0, x0 - start) : 0.0;
    const double y1 = (j == j_end - 1 && !x1_on_node) ? std::min(h, x1 - start) : h;
    if (!(y1 > y0))
      continue;
    const double parity = (j % 2 == 0) ? 1.0 : -1.0;
    auto fn = [&](double y) {
      const double x = start + y;
      const double t = std::exp(x);
      const double amp = std::exp(p * x) * smooth_part(s, t);
      const double phase = beta * y;
      return parity * osc_sign * amp * (is_sine ? std::sin(phase) : std::cos(phase));
    };
    integrate_panel<double>(fn, y0, y1, q, acc);
  }
  return to_partial(acc);
}

Partial oscillatory_finite(const IntegrandSpec& s, double lo, double hi, const QuadratureSpec& q) {
  const double x1 = std::log(hi);
  if (lo > 0.0)
    return oscillatory_span(s, std::log(lo), x1, true, q);

  const double p = exponent(s);
  if (!(p > 0.0))
    throw DomainError("integrand is not integrable at t = 0 (exponent must be positive)");
  // bulk first, to learn the scale that sets the lower cutoff
  const double xa = std::min(x1, 0.0) - 2.0;
  Partial bulk = oscillatory_span(s, xa, x1, true, q);
  const double bound = smooth_part_bound(s);
  const double target = 0.1 * q.target_tol * std::max(bulk.l1, 1e-300);
  double x_min = std::log(target * p / bound) / p;
  Partial total;
  if (x_min < xa) {
    total = oscillatory_span(s, x_min, xa, true, q);
  } else {
    x_min = xa;
  }
  total.add(bulk);
  total.err += bound * std::exp(p * x_min) / p;
  return total;
}

// ---- non-oscillatory integration in t ------------------------------------

Partial plain_span(const IntegrandSpec& s, double lo, double hi, const QuadratureSpec& q) {
  const double p = exponent(s);
  const double sign = (s.oscillation == Oscillation::cosine || s.oscillation == Oscillation::none)
                          ? 1.0
                          : 0.0; // sin(0 * log t) = 0
  auto fn = [&](double t) {
    const double power = (p == 1.0) ? 1.0 : std::pow(t, p - 1.0);
    return sign * power * smooth_part(s, t);
  };
  const auto panels =
      static_cast<int>(std::clamp(std::ceil(hi - lo), 1.0, 4096.0));
  const double w = (hi - lo) / panels;
  Accumulator<double> acc;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * w;
    const double b = (i == panels - 1) ? hi : lo + (i + 1) * w;
    integrate_panel<double>(fn, a, b, q, acc);
  }
  return to_partial(acc);
}

Partial plain_finite(const IntegrandSpec& s, double lo, double hi, const QuadratureSpec& q) {
  const double p = exponent(s);
  if (lo > 0.0 || p >= 1.0)
    return plain_span(s, lo, hi, q);
  if (!(p > 0.0))
    throw DomainError("integrand is not integrable at t = 0 (exponent must be positive)");
  const double sign = s.oscillation == Oscillation::sine ? 0.0 : 1.0;
  // t = t1 u^{1/p} maps t^{p-1} dt onto (t1^p / p) du
  const double t1 = std::min(1.0, hi);
  const double jac = std::pow(t1, p) / p;
  auto fn = [&](double u) { return sign * jac * smooth_part(s, t1 * std::pow(u, 1.0 / p)); };
  Accumulator<double> acc;
  integrate_panel<double>(fn, 0.0, 1.0, q, acc);
  Partial out = to_partial(acc);
  if (hi > t1)
    out.add(plain_span(s, t1, hi, q));
  return out;
}

Partial finite_partial(const IntegrandSpec& s, double lo, double hi, const QuadratureSpec& q) {
  if (s.is_oscillatory())
    return oscillatory_finite(s, lo, hi, q);
  return plain_finite(s, lo, hi, q);
}

Integral finish(const Partial& p, const char* what) {
  if (!p.converged)
    throw NonConvergence(std::string(what) + ": refinement depth exhausted", p.value, p.err);
  return {p.value, p.err};
}

} // namespace

void QuadratureSpec::validate() const {
  if (!(target_tol >= 1e-14) || !(target_tol < 1.0))
    throw PreconditionError("QuadratureSpec: target_tol must lie in [1e-14, 1)");
  if (max_refinement_depth < 1 || max_refinement_depth > 30)
    throw PreconditionError("QuadratureSpec: max_refinement_depth must lie in [1, 30]");
}

void IntegrandSpec::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(scale))
    throw PreconditionError("IntegrandSpec: parameters must be finite");
  if (kernel == Kernel::pairing && !(b > 0.0))
    throw PreconditionError("IntegrandSpec: the pairing kernel needs b > 0");
  if (kernel == Kernel::fermi && !(scale > 0.0))
    throw PreconditionError("IntegrandSpec: scale must be positive");
}

double truncation_point(double a, double tol) {
  const double rhs = -std::log(tol) + 5.0;
  // t - (a - 1) log t is increasing for t > max(0, a - 1); bisection on [1, 1e4]
  auto lhs = [a](double t) { return t - (a - 1.0) * std::log(t); };
  double lo = std::max(1.0, a), hi = 1e4;
  if (lhs(lo) >= rhs)
    return std::max(60.0, lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < rhs ? lo : hi) = mid;
  }
  return std::max(60.0, hi);
}

double exponential_tail_bound(double a, double T) {
  const double base = std::pow(T, a - 1.0) * std::exp(-T);
  if (a <= 1.0)
    return base;
  const double shrink = 1.0 - (a - 1.0) / T;
  return shrink > 0.0 ? base / shrink : std::numeric_limits<double>::infinity();
}

double eval_integrand(const IntegrandSpec& spec, double t) {
  spec.validate();
  if (!(t >= 0.0))
    throw DomainError("eval_integrand: t must be non-negative");
  const double p = exponent(spec);
  double osc = 1.0;
  if (spec.is_oscillatory()) {
    if (t == 0.0)
      throw DomainError("eval_integrand: oscillatory integrand has no value at t = 0");
    const double phase = spec.b * std::log(t);
    osc = spec.oscillation == Oscillation::sine ? std::sin(phase) : std::cos(phase);
  } else if (spec.oscillation == Oscillation::sine) {
    osc = 0.0;
  }
  if (t == 0.0) {
    if (p < 1.0)
      throw DomainError("eval_integrand: integrand is singular at t = 0");
    return p == 1.0 ? smooth_part(spec, 0.0) : 0.0;
  }
  const double power = (p == 1.0) ? 1.0 : std::pow(t, p - 1.0);
  return power * smooth_part(spec, t) * osc;
}

Integral integrate_finite(const IntegrandSpec& spec, double lo, double hi,
                          const QuadratureSpec& q) {
  spec.validate();
  q.validate();
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw PreconditionError("integrate_finite: need 0 <= lo < hi < inf");
  return finish(finite_partial(spec, lo, hi, q), "integrate_finite");
}

Integral integrate_to_infinity(const IntegrandSpec& spec, double lo, const QuadratureSpec& q) {
  spec.validate();
  q.validate();
  if (!spec.decays())
    throw PreconditionError("integrate_to_infinity: integrand does not decay");
  if (!(lo >= 0.0) || !std::isfinite(lo))
    throw PreconditionError("integrate_to_infinity: need finite lo >= 0");

  // kernels are bounded by D t^{a'-1} e^{-t}, with a' = a except logistic (a' = 1)
  const double tail_exp = spec.kernel == Kernel::logistic ? 1.0 : spec.a;
  const double d = decay_constant(spec);
  double T = std::max(truncation_point(tail_exp, q.target_tol), lo + 40.0);
  for (;;) {
    double cut = T;
    if (spec.is_oscillatory()) {
      const double h = kPi / std::abs(spec.b);
      cut = std::exp(std::ceil(std::log(T) / h) * h);
    }
    Partial part = finite_partial(spec, lo, cut, q);
    const double tail = d * exponential_tail_bound(tail_exp, cut);
    if (tail < 0.1 * q.target_tol * part.l1 || T > 1e4 || part.l1 == 0.0) {
      part.err += tail;
      return finish(part, "integrate_to_infinity");
    }
    T *= 2.0;
  }
}

Integral integrate_nodes(const IntegrandSpec& spec, std::int64_t j0, std::int64_t j1,
                         const QuadratureSpec& q) {
  spec.validate();
  q.validate();
  if (!spec.is_oscillatory())
    throw PreconditionError("integrate_nodes: integrand must oscillate (b != 0)");
  if (j1 <= j0)
    throw PreconditionError("integrate_nodes: need j1 > j0");
  const double h = kPi / std::abs(spec.b);
  return finish(oscillatory_span(spec, static_cast<double>(j0) * h,
                                 static_cast<double>(j1) * h, true, q),
                "integrate_nodes");
}

// ---------------------------------------------------------------------------

double rotation_angle(double b) {
  if (b == 0.0)
    return 0.0;
  const double delta = std::min(2.0 / std::abs(b), kPi / 2.0);
  return std::copysign(kPi / 2.0 - delta, b);
}

namespace {

using cplx = std::complex<double>;

IntegrandSpec real_kernel(MellinKernel k, double a) {
  switch (k) {
  case MellinKernel::fermi:
    return IntegrandSpec::f(a);
  case MellinKernel::bose:
    return IntegrandSpec::bose(a);
  case MellinKernel::gamma:
    return IntegrandSpec::gamma_kernel(a);
  }
  return IntegrandSpec::f(a);
}

ComplexIntegral mellin_real_axis(MellinKernel k, cplx s, const QuadratureSpec& q) {
  const IntegrandSpec base = real_kernel(k, s.real());
  if (s.imag() == 0.0) {
    const auto r = integrate_to_infinity(base, 0.0, q);
    return {cplx(r.value, 0.0), r.err_est, Route::real_axis, 0.0};
  }
  const auto re = integrate_to_infinity(base.oscillating(Oscillation::cosine, s.imag()), 0.0, q);
  const auto im = integrate_to_infinity(base.oscillating(Oscillation::sine, s.imag()), 0.0, q);
  return {cplx(re.value, im.value), std::hypot(re.err_est, im.err_est), Route::real_axis, 0.0};
}

// r-part of the integrand along the ray, without the r^{sigma - 1 + ib} factor.
struct RayKernel {
  MellinKernel kind;
  cplx dir; // e^{i theta}

  cplx operator()(double r) const {
    const cplx z = r * dir;
    switch (kind) {
    case MellinKernel::fermi: {
      const cplx e = std::exp(-z);
      return e / (1.0 + e);
    }
    case MellinKernel::bose: {
      // r / (e^z - 1) = conj(dir) * z / (e^z - 1)
      cplx ratio;
      if (std::abs(z) < 1e-3)
        ratio = 1.0 - z / 2.0 + z * z / 12.0 - z * z * z * z / 720.0;
      else {
        const cplx e = std::exp(-z);
        ratio = z * e / (1.0 - e);
      }
      return std::conj(dir) * ratio;
    }
    case MellinKernel::gamma:
      return std::exp(-z);
    }
    return {};
  }
};

ComplexIntegral mellin_rotated(MellinKernel k, cplx s, double theta, const QuadratureSpec& q) {
  const double a = s.real();
  const double b = s.imag();
  const double sigma = (k == MellinKernel::bose) ? a - 1.0 : a;
  const RayKernel psi{k, std::polar(1.0, theta)};
  const double cos_t = std::cos(theta);
  const double beta = std::abs(b);

  Accumulator<cplx> upper;
  // [1, r_max]: the phase b log r - r sin(theta) changes at rate <= |b|/r + 1
  auto upper_fn = [&](double r) {
    const double logr = std::log(r);
    return std::exp((sigma - 1.0) * logr) * std::polar(1.0, b * logr) * psi(r);
  };
  // |k| <= e^{-r cos} / (1 - e^{-cos}) for r >= 1; an extra factor r for bose
  const double d = (k == MellinKernel::gamma) ? 1.0 : 1.0 / (-std::expm1(-cos_t));
  const double sig_tail = (k == MellinKernel::bose) ? sigma + 1.0 : sigma;
  auto tail_bound = [&](double r) {
    const double base = d * std::pow(r, sig_tail - 1.0) * std::exp(-r * cos_t);
    const double denom = cos_t - std::max(0.0, sig_tail - 1.0) / r;
    return denom > 0.0 ? base / denom : std::numeric_limits<double>::infinity();
  };

  std::vector<double> breaks{1.0};
  const double pole_step = (k == MellinKernel::bose) ? 2.0 * kPi : kPi;
  const double pole_start = (k == MellinKernel::bose) ? 2.0 * kPi : kPi;
  double next_pole = (k == MellinKernel::gamma) ? std::numeric_limits<double>::infinity() : pole_start;
  double r = 1.0;
  double r_max = 40.0 / cos_t;
  double covered = 1.0;
  auto extend_to = [&](double limit) {
    while (r < limit) {
      double step = std::min(2.0, kPi / (beta / r + 1.0));
      double nr = r + step;
      if (next_pole < nr) {
        nr = next_pole;
        next_pole += (k == MellinKernel::bose ? pole_step : 2.0 * pole_step);
      }
      breaks.push_back(nr);
      r = nr;
    }
  };

  const QuadratureSpec& qq = q;
  for (;;) {
    extend_to(r_max);
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      if (breaks[i] <= covered)
        continue;
      integrate_panel<cplx>(upper_fn, breaks[i - 1], breaks[i], qq, upper);
      covered = breaks[i];
    }
    if (tail_bound(covered) < 0.1 * q.target_tol * std::max(upper.l1, 1e-300) ||
        covered > 1e7)
      break;
    r_max *= 1.5;
  }
  const double upper_tail = tail_bound(covered);

  // (0, 1] in x = -log r: e^{-sigma x} e^{-i b x} psi(e^{-x}); panels of width pi/|b|
  Accumulator<cplx> lower;
  const double bound0 = (k == MellinKernel::bose) ? 2.0 : 1.0;
  if (!(sigma > 0.0))
    throw DomainError("mellin: transform diverges at t = 0 for this real part");
  const double target = 0.1 * q.target_tol * std::max(upper.l1, 1e-300);
  const double x_max = std::max(1.0, std::log(bound0 / (target * sigma)) / sigma);
  const double h = beta > 0.0 ? kPi / beta : 1.0;
  const auto panels = static_cast<std::int64_t>(std::ceil(x_max / h));
  for (std::int64_t j = 0; j < panels; ++j) {
    const double start = static_cast<double>(j) * h;
    const double parity = (beta > 0.0 && j % 2 == 1) ? -1.0 : 1.0;
    auto fn = [&](double y) {
      const double x = start + y;
      return parity * std::exp(-sigma * x) * std::polar(1.0, -b * y) * psi(std::exp(-x));
    };
    integrate_panel<cplx>(fn, 0.0, h, q, lower);
  }
  const double lower_tail = bound0 * std::exp(-sigma * static_cast<double>(panels) * h) / sigma;

  CompensatedSum<cplx> total;
  total.add(lower.value.total());
  total.add(upper.value.total());
  const cplx rot = std::exp(cplx(0.0, theta) * s);
  const double scale = std::abs(rot);
  const double err = scale * (lower.err + upper.err + lower_tail + upper_tail);
  if (!lower.converged || !upper.converged)
    throw NonConvergence("mellin: refinement depth exhausted", std::abs(rot * total.total()), err);
  return {rot * total.total(), err, Route::rotated_ray, theta};
}

} // namespace

ComplexIntegral mellin(MellinKernel kernel, std::complex<double> s, const QuadratureSpec& q,
                       Route route) {
  q.validate();
  const double a = s.real();
  if (!std::isfinite(a) || !std::isfinite(s.imag()))
    throw PreconditionError("mellin: s must be finite");
  if (kernel == MellinKernel::bose ? !(a > 1.0) : !(a > 0.0))
    throw DomainError("mellin: integral diverges at t = 0 for this real part");
  const double theta = rotation_angle(s.imag());
  switch (route) {
  case Route::real_axis:
    return mellin_real_axis(kernel, s, q);
  case Route::rotated_ray:
    return mellin_rotated(kernel, s, theta, q);
  case Route::automatic:
    if (theta == 0.0)
      return mellin_real_axis(kernel, s, q);
    return mellin_rotated(kernel, s, theta, q);
  }
  return mellin_real_axis(kernel, s, q);
}

} // namespace fzeta::quad
