#pragma once

// Zeros of zeta on the line a = 1/2, located as zeros of F (F = Gamma * eta
// and Gamma has no zeros), with an alternating-series eta for comparison.

#include "fzeta/quadrature.hpp"
#include "fzeta/special.hpp"

#include <vector>

namespace fzeta::zeros {

/// eta(s) = sum_{n>=1} (-1)^{n-1} n^{-s} with Chebyshev-weighted
/// acceleration; err_est is the change from adding 8 more terms. Throws
/// NonConvergence when that exceeds tol.
special::ComplexValue eta_oracle(special::ComplexPoint s, double tol = 1e-13);

enum class ZeroMethod { integral, oracle };

const char* method_name(ZeroMethod m);

struct ScanSample {
  double b = 0.0;
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;
};

struct ZeroBracket {
  double b_lo = 0.0;
  double b_hi = 0.0;
  // Projection of the value onto the direction of the value at b_lo.
  double indicator_lo = 0.0;
  double indicator_hi = 0.0;
};

struct LocatedZero {
  double b_star = 0.0;
  double residual = 0.0;        // |F(1/2 + i b_star)|
  double scaled_residual = 0.0; // |F| / |Gamma| at b_star, i.e. |eta|
  ZeroMethod method = ZeroMethod::integral;
};

/// F (integral) or eta (oracle) at 1/2 + ib on the grid b_min, b_min + step, ...
std::vector<ScanSample> sample_line(double b_min, double b_max, double step, ZeroMethod method,
                                    const quad::QuadratureSpec& q);

/// A bracket is a step where F1 or F2 changes sign and the argument of the
/// sampled value jumps by more than pi/2. Away from zeros the argument
/// turns slowly; across a simple zero it jumps by about pi.
std::vector<ZeroBracket> brackets_from_samples(const std::vector<ScanSample>& samples);

std::vector<ZeroBracket> scan_critical_line(double b_min, double b_max, double step,
                                            const quad::QuadratureSpec& q,
                                            ZeroMethod method = ZeroMethod::integral);

/// Bisection on the projection until the bracket is narrower than 1e-9, then
/// a residual check against zero_tol on |F|/|Gamma|. Throws NonConvergence
/// (best = the last midpoint) for a bracket without a zero.
LocatedZero refine_zero(const ZeroBracket& bracket, double zero_tol, const quad::QuadratureSpec& q,
                        ZeroMethod method = ZeroMethod::integral);

struct ZeroSearch {
  std::vector<ScanSample> scan;
  std::vector<ZeroBracket> brackets;
  std::vector<LocatedZero> zeros;
};

ZeroSearch find_zeros(double b_min, double b_max, double step, double zero_tol,
                      const quad::QuadratureSpec& q, ZeroMethod method = ZeroMethod::integral);

} // namespace fzeta::zeros
