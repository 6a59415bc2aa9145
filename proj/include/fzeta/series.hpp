#pragma once

// Power-series evaluation of the lower integral
//   int_0^R t^{a-1}/(e^t+1) sin(b log t) dt
//     = -sum_n g^(n)(0) b R^{n+a} / (n! ((n+a)^2 + b^2)),
// valid when b log R is a multiple of 2 pi and R < pi.

#include "fzeta/quadrature.hpp"
#include "fzeta/report.hpp"

#include <span>

namespace fzeta::series {

struct KR {
  int K = 0;
  double R = 1.0;
};

/// Largest K with R = exp(2 K pi / b) <= cap. cap must lie in (1, pi].
/// Throws PreconditionError when no K >= 1 fits.
KR choose_K_R(double b, double cap = 2.0);

struct SeriesEval {
  double value = 0.0;
  int terms_used = 0; // highest n included
  double tail_bound = 0.0;
  int K = 0;
  double R = 0.0;
};

/// Checks the hypotheses (K >= 1, R = exp(2 K pi / b), R < pi) and sums until
/// the rigorous tail bound drops below tol.
SeriesEval series_lower_integral(double a, double b, int K, double R, double tol);

/// The same sum for any 0 < R < pi, without the phase hypothesis. Only the
/// sum itself; it equals the integral only when b log R = 2 K pi.
SeriesEval raw_series(double a, double b, double R, double tol);

/// As raw_series, stopping after n = n_max regardless of the tail bound.
SeriesEval raw_series_terms(double a, double b, double R, int n_max);

/// g^(n)(0)/n! as double, from the exact values. n up to kMaxSeriesIndex.
double taylor_coefficient(int n);
inline constexpr int kMaxSeriesIndex = 160;

/// sum_n g^(n)(0) R^n / n!, the Maclaurin series of 1/(e^R+1).
double logistic_maclaurin(double R, double tol = 1e-16);

/// Pieces of the lower-bound argument for the series at (a, b, R):
/// the n <= 5 bracket and the paired tail sum_{m>=2} c_m, both already
/// without the common factor R^a / b.
struct LowerBoundParts {
  double bracket = 0.0;
  double pair_sum = 0.0;
};
LowerBoundParts lower_bound_parts(double a, double b, double R);

/// Series against quadrature of the lower integral at each (a, b), with
/// (K, R) = choose_K_R(b, 2). Also shows a perturbed R breaks the equality.
VerificationReport check_theorem2(std::span<const double> a_grid, std::span<const double> b_grid,
                                  const quad::QuadratureSpec& q, double tol = 1e-9);

/// Lower bound on the series for 0 < a <= 0.1, b >= 100; the alternative
/// stated form is reported without gating.
VerificationReport check_theorem5(std::span<const double> a_grid, std::span<const double> b_grid);

} // namespace fzeta::series
