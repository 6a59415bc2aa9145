#pragma once

// Exact Bernoulli numbers and the Maclaurin coefficients of g(t) = 1/(e^t + 1).

#include "fzeta/rational.hpp"
#include "fzeta/report.hpp"

#include <string>
#include <vector>

namespace fzeta::coeffs {

/// Largest index held by a CoefficientTable.
inline constexpr int kMaxTableIndex = 40;

/// B_n with B_1 = -1/2 (generating function t/(e^t - 1)). Memoized; safe to
/// call concurrently.
ExactRational bernoulli(unsigned n);

/// n-th derivative of g(t) = 1/(e^t + 1) at t = 0, exactly:
/// (1 - 2^{n+1}) / (n + 1) * B_{n+1}.
ExactRational g_deriv_at_zero(unsigned n);

/// g^(n)(0) / n!, exactly.
ExactRational g_taylor_coefficient(unsigned n);

/// Maclaurin coefficients of 1/(e^t + 1), obtained by inverting the power
/// series of e^t + 1 term by term. Independent of the Bernoulli route.
std::vector<ExactRational> logistic_series_by_division(int n_max);

struct CoefficientTable {
  int max_index = 0;
  std::vector<ExactRational> bernoulli;     // B_0 .. B_{max_index + 1}
  std::vector<ExactRational> g_deriv;       // g^(0)(0) .. g^(max_index)(0)
  std::vector<double> g_deriv_over_factorial;
};

/// Throws PreconditionError for n_max outside [0, kMaxTableIndex].
CoefficientTable make_table(int n_max);

/// The full table (n_max = kMaxTableIndex), built once.
const CoefficientTable& table();

/// Columns n, g^(n)(0), B_{n+1}, g^(n)(0)/n!. The text form lists the
/// non-zero derivatives only.
std::string render_table(const CoefficientTable& t, Format format);

/// zeta(2m) from the Bernoulli closed form with exact B_{2m}.
double zeta_even(unsigned m);

/// zeta(2m) by direct summation plus an Euler-Maclaurin tail; the truncation
/// remainder is below tol / 10. Shares nothing with zeta_even().
double zeta_even_direct(unsigned m, double tol = 1e-15);

/// [g^(4m-1)(0)/(4m-1)!] / [-g^(4m+1)(0)/(4m+1)!] as an exact rational.
ExactRational coefficient_ratio_exact(unsigned m);
double coefficient_ratio(unsigned m);
/// The same ratio written through zeta values:
/// pi^2 (1 - 2^{-4m}) zeta(4m) / ((1 - 2^{-4m-2}) zeta(4m+2)), direct-sum zeta.
double coefficient_ratio_zeta_form(unsigned m);

/// Rational enclosure of pi good to ~1e-110, for comparisons whose slack is far
/// below binary64 resolution.
struct PiEnclosure {
  ExactRational lo;
  ExactRational hi;
};
const PiEnclosure& pi_enclosure();

/// Sign/zero structure, the zeta closed form, the ratio sandwich (m >= 2 gates,
/// m = 1 informational), the lower bound 2/pi^{2m} and the tanh form of g.
VerificationReport check_theorem4(unsigned m_max, double tol);

/// Bernoulli route vs. series division for every n <= n_max.
VerificationReport check_theorem3(int n_max);

} // namespace fzeta::coeffs
