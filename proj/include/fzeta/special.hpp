#pragma once

// F(s) = int t^{s-1}/(e^t+1), G(s) = int t^{s-1}/(e^t-1), Gamma(s) and zeta(s)
// for s = a + ib, all by quadrature.

#include "fzeta/quadrature.hpp"
#include "fzeta/report.hpp"

#include <complex>
#include <functional>
#include <span>

namespace fzeta::special {

struct ComplexPoint {
  double a = 0.0;
  double b = 0.0;

  std::complex<double> s() const { return {a, b}; }
  bool in_strip() const { return a > 0.0 && a < 1.0; }
};

struct ComplexValue {
  double re = 0.0;
  double im = 0.0;
  double err_est = 0.0;
  quad::Route route = quad::Route::real_axis;

  std::complex<double> z() const { return {re, im}; }
  double abs() const { return std::abs(z()); }
};

enum class GMethod { direct, via_identity };

struct GValue : ComplexValue {
  GMethod method = GMethod::direct;
};

/// 1 - 2^{1-s}.
std::complex<double> eta_factor(std::complex<double> s);

/// re = F1, im = F2. Route::automatic integrates along the real axis for
/// small |b| and along a rotated ray otherwise.
ComplexValue F(ComplexPoint s, const quad::QuadratureSpec& q,
               quad::Route route = quad::Route::automatic);

/// Direct quadrature for a > 1, else F(s) / (1 - 2^{1-s}) (the integral
/// diverges at t = 0 once a <= 1).
GValue G(ComplexPoint s, const quad::QuadratureSpec& q);

/// Throws DomainError for a <= 1.
GValue G_direct(ComplexPoint s, const quad::QuadratureSpec& q);

ComplexValue Gamma(ComplexPoint s, const quad::QuadratureSpec& q,
                   quad::Route route = quad::Route::automatic);

/// G(s) / Gamma(s). Throws DomainError when Gamma underflows or s sits on a
/// zero of 1 - 2^{1-s}.
ComplexValue zeta_strip(ComplexPoint s, const quad::QuadratureSpec& q);

/// Independent eta(s) = sum (-1)^{n-1} n^{-s}; injected so the identity check
/// does not reuse the quadrature it is checking.
using EtaOracle = std::function<std::complex<double>(ComplexPoint)>;

/// F(s) against (1 - 2^{1-s}) * zeta_oracle(s) * Gamma(s), relative to
/// max(|F|, floor). Every point must lie in 0 < a < 1.
VerificationReport check_theorem1(std::span<const ComplexPoint> grid, const quad::QuadratureSpec& q,
                                  const EtaOracle& eta, double tol = 1e-7, double floor = 1e-9);

} // namespace fzeta::special
