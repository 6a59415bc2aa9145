#pragma once

// Quadrature for the kernels t^{a-1}/(e^t+1), 1/(e^t+1), the pairing
// difference h(t,a,b), and their products with sin/cos(b log t).
//
// Oscillatory integrals are computed in x = log t on panels aligned with the
// sign changes of sin(b log t), i.e. t_j = exp(j pi / |b|). Inside a panel the
// phase is evaluated from the panel-local offset, so it stays accurate even
// when b log t is in the thousands. The endpoint singularity t^{a-1} at 0 is
// removed by t = u^{1/a} (non-oscillatory) or absorbed by x = log t
// (oscillatory), where it becomes the decaying factor e^{a x}.

#include <complex>
#include <cstdint>

namespace fzeta::quad {

struct QuadratureSpec {
  /// Relative to the integral of |integrand|; bounded below by 1e-14.
  double target_tol = 1e-10;
  int max_refinement_depth = 24;

  void validate() const;
};

/// Upper cutoff T for integrands decaying like t^{a-1} e^{-t}:
/// T = max(60, root of t - (a-1) log t = -log(tol) + 5).
double truncation_point(double a, double tol);

/// Analytic bound on the integral of t^{a-1} e^{-t} over [T, inf).
double exponential_tail_bound(double a, double T);

enum class Kernel {
  fermi,    // t^{a-1} / (e^{scale t} + 1)
  logistic, // 1 / (e^t + 1)
  pairing,  // t^{a-1}/(e^t+1) - t^{a-1} c^a / (e^{c t}+1),  c = e^{pi/b}
  gamma,    // t^{a-1} e^{-t}
  bose,     // t^{a-1} / (e^t - 1)
  power,    // t^{a-1}
  unit,     // 1
};

enum class Oscillation { none, sine, cosine };

struct IntegrandSpec {
  Kernel kernel = Kernel::unit;
  Oscillation oscillation = Oscillation::none;
  double a = 1.0;
  double b = 0.0;
  double scale = 1.0;

  static IntegrandSpec f(double a) { return {Kernel::fermi, Oscillation::none, a, 0.0, 1.0}; }
  static IntegrandSpec g() { return {Kernel::logistic, Oscillation::none, 1.0, 0.0, 1.0}; }
  static IntegrandSpec h(double a, double b) { return {Kernel::pairing, Oscillation::none, a, b, 1.0}; }
  static IntegrandSpec f_sin(double a, double b) { return {Kernel::fermi, Oscillation::sine, a, b, 1.0}; }
  static IntegrandSpec f_cos(double a, double b) { return {Kernel::fermi, Oscillation::cosine, a, b, 1.0}; }
  static IntegrandSpec h_sin(double a, double b) { return {Kernel::pairing, Oscillation::sine, a, b, 1.0}; }
  static IntegrandSpec sin_log(double b) { return {Kernel::unit, Oscillation::sine, 1.0, b, 1.0}; }
  static IntegrandSpec gamma_kernel(double a) { return {Kernel::gamma, Oscillation::none, a, 0.0, 1.0}; }
  static IntegrandSpec bose(double a) { return {Kernel::bose, Oscillation::none, a, 0.0, 1.0}; }
  static IntegrandSpec power(double a) { return {Kernel::power, Oscillation::none, a, 0.0, 1.0}; }

  IntegrandSpec oscillating(Oscillation osc, double freq) const {
    IntegrandSpec s = *this;
    s.oscillation = osc;
    s.b = freq;
    return s;
  }
  IntegrandSpec scaled(double lambda) const {
    IntegrandSpec s = *this;
    s.scale = lambda;
    return s;
  }

  bool is_oscillatory() const { return oscillation != Oscillation::none && b != 0.0; }
  bool decays() const { return kernel != Kernel::power && kernel != Kernel::unit; }
  void validate() const;
};

struct Integral {
  double value = 0.0;
  double err_est = 0.0;
};

/// Integrand value at t. Throws DomainError for t < 0, and for t = 0 where the
/// integrand is singular or oscillates without limit. Large t uses the
/// e^{-t} form, so there is no overflow.
double eval_integrand(const IntegrandSpec& spec, double t);

/// Throws NonConvergence (carrying the best estimate) when a panel still
/// misses its tolerance at max_refinement_depth.
Integral integrate_finite(const IntegrandSpec& spec, double lo, double hi, const QuadratureSpec& q);

/// Integral over [lo, inf) for decaying kernels. The cutoff comes from
/// truncation_point() and, for oscillatory integrands, is moved up to the next
/// sign-change node; the analytic tail bound is added to err_est.
Integral integrate_to_infinity(const IntegrandSpec& spec, double lo, const QuadratureSpec& q);

/// Oscillatory integrand over [exp(j0 pi/|b|), exp(j1 pi/|b|)], the panels
/// taken exactly on the sign-change nodes.
Integral integrate_nodes(const IntegrandSpec& spec, std::int64_t j0, std::int64_t j1,
                         const QuadratureSpec& q);

// ---------------------------------------------------------------------------
// Complex Mellin transforms  M(s) = int_0^inf t^{s-1} k(t) dt.

enum class MellinKernel { fermi, bose, gamma }; // 1/(e^t+1), 1/(e^t-1), e^{-t}

enum class Route {
  automatic,   // real axis for |b| <= 4/pi, rotated ray otherwise
  real_axis,   // two real quadratures, of k(t) t^{a-1} cos(b log t) and ... sin(b log t)
  rotated_ray, // t = r e^{i theta}, theta = sign(b) (pi/2 - 2/|b|)
};

struct ComplexIntegral {
  std::complex<double> value;
  double err_est = 0.0;
  Route route = Route::automatic;
  double angle = 0.0; // ray angle theta actually used
};

/// On the real axis |M(a+ib)| is of order e^{-pi |b| / 2} times the size of
/// the integrand, so the cancellation eats all of binary64 once |b| passes
/// ~25. Turning the contour towards the poles of k (Cauchy's theorem; no pole
/// is crossed for |theta| < pi/2) keeps that cancellation to a factor ~e^2.
ComplexIntegral mellin(MellinKernel kernel, std::complex<double> s, const QuadratureSpec& q,
                       Route route = Route::automatic);

double rotation_angle(double b);

} // namespace fzeta::quad
