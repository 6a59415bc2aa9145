#pragma once

// Pairing decomposition of the upper integral int_R^inf f(t,a) sin(b log t) dt
// over the half periods [t_{2k}, t_{2k+1}], t_j = exp(j pi / b), with the
// difference kernel h(t,a,b) = f(t,a) - c^a t^{a-1}/(e^{ct}+1), c = e^{pi/b}.

#include "fzeta/quadrature.hpp"
#include "fzeta/report.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fzeta::decomp {

struct DecompositionPlan {
  double a = 0.5;
  double b = 100.0;
  int K = 0;
  double R = 1.0;            // exp(2 K pi / b)
  double c = 1.0;            // exp(pi / b)
  double T = 60.0;           // quadrature cutoff
  std::int64_t truncation_k = 0; // last k summed; t_{2 truncation_k} >= T

  /// t_j = exp(j pi / b).
  double endpoint(std::int64_t j) const;
};

/// K and R from the largest K with R <= 2. Requires 0 < a < 1 and b >= 100.
DecompositionPlan make_plan(double a, double b, const quad::QuadratureSpec& q);

struct IntervalContribution {
  std::int64_t k = 0;
  double t_lo = 0.0; // t_{2k}
  double t_hi = 0.0; // t_{2k+1}
  double contribution = 0.0;
  double err_est = 0.0;
  double cumulative = 0.0;
};

/// int over [t_{2k}, t_{2k+1}] of h sin(b log t) for k = K .. truncation_k.
/// A failing interval is reported through NonConvergence naming its k.
std::vector<IntervalContribution> interval_contributions(const DecompositionPlan& plan,
                                                         const quad::QuadratureSpec& q);

/// Sum of the contributions plus the analytic tail bound in err_est.
quad::Integral upper_integral(const DecompositionPlan& plan, const quad::QuadratureSpec& q);

/// The same integral without pairing: f sin(b log t) over [R, inf).
quad::Integral direct_upper_integral(const DecompositionPlan& plan, const quad::QuadratureSpec& q);

/// Mean of sin(b log t) over [t_{2k}, t_{2k+1}]. The closed form does not
/// depend on k.
struct Average {
  double closed_form = 0.0;
  double by_quadrature = 0.0;
};
double average_closed_form(double b);
Average interval_average(std::int64_t k, double b, const quad::QuadratureSpec& q);

/// Paired sum against direct quadrature, the two-half regrouping of one
/// period, the substitution u = t / c on the negative half, positivity of
/// the first 21 contributions and the telescoped integral of h.
VerificationReport check_theorem6(std::span<const double> a_grid, std::span<const double> b_grid,
                                  const quad::QuadratureSpec& q);

/// int_R^inf h = int_R^{cR} f, its two-sided bound, and the scaling identity
/// on [1, 2].
VerificationReport check_theorem7(std::span<const double> a_grid, std::span<const double> b_grid,
                                  std::span<const double> R_grid, const quad::QuadratureSpec& q);

/// Closed form against quadrature on b_quad x k_grid, and the strict bounds
/// 2/pi - 2/(pi b^2) < A < 2/pi on b_bounds.
VerificationReport check_theorem8(std::span<const double> b_bounds, std::span<const double> b_quad,
                                  std::span<const std::int64_t> k_grid,
                                  const quad::QuadratureSpec& q);

enum class Weight { pairing, unit };

struct SandwichPoint {
  double a = 0.5;
  double b = 100.0;
  std::int64_t k = 0;
  Weight weight = Weight::pairing;
};

/// (2/pi - 2/(pi b^2)) M1 (t1 - t0) < int h sin < (2/pi) M2 (t1 - t0), with
/// M1, M2 the min and max of the weight over 2^10 + 1 samples. A cell passes
/// only if its margin also exceeds the sampling uncertainty.
VerificationReport check_theorem9(std::span<const SandwichPoint> points,
                                  const quad::QuadratureSpec& q);

/// h > 0 for t >= 1 and 0 < a <= e/(e+1). Also probes a = 0.9, t = 1 without
/// gating.
VerificationReport check_theorem10(std::span<const double> t_grid, std::span<const double> a_grid,
                                   std::span<const double> b_grid);

} // namespace fzeta::decomp
