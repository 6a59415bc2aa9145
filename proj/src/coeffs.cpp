#include "fzeta/coeffs.hpp"

#include "fzeta/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>

namespace fzeta::coeffs {

namespace {

constexpr double kPi = std::numbers::pi;

// 110 correct decimals of pi.
constexpr const char* kPiDigits =
    "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280"
    "348253421170679821480865132";

std::mutex g_bernoulli_mutex;
std::vector<ExactRational> g_bernoulli_memo{ExactRational(1)};

ExactRational pow_rational(const ExactRational& x, unsigned n) {
  ExactRational r(1);
  for (unsigned i = 0; i < n; ++i)
    r *= x;
  return r;
}

} // namespace

ExactRational bernoulli(unsigned n) {
  std::lock_guard lock(g_bernoulli_mutex);
  auto& memo = g_bernoulli_memo;
  while (memo.size() <= n) {
    const unsigned k_next = static_cast<unsigned>(memo.size());
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    ExactRational acc(0);
    BigInt choose(1); // C(k_next + 1, k)
    for (unsigned k = 0; k < k_next; ++k) {
      if (k > 0)
        choose = choose * (k_next + 2 - k) / k;
      if (k > 1 && (k % 2) == 1)
        continue; // odd Bernoulli numbers past B_1 vanish
      acc += ExactRational(choose, BigInt(1)) * memo[k];
    }
    memo.push_back(-acc / ExactRational(static_cast<std::int64_t>(k_next) + 1));
  }
  return memo[n];
}

ExactRational g_deriv_at_zero(unsigned n) {
  const ExactRational factor = (ExactRational(1) - pow2(static_cast<int>(n) + 1)) /
                               ExactRational(static_cast<std::int64_t>(n) + 1);
  return factor * bernoulli(n + 1);
}

ExactRational g_taylor_coefficient(unsigned n) {
  return g_deriv_at_zero(n) / ExactRational(factorial(n), BigInt(1));
}

std::vector<ExactRational> logistic_series_by_division(int n_max) {
  if (n_max < 0)
    throw PreconditionError("logistic_series_by_division: n_max must be >= 0");
  // e^t + 1 = 2 + sum_{k>=1} t^k / k!
  std::vector<ExactRational> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = ExactRational(2);
  for (int k = 1; k <= n_max; ++k)
    c[k] = ExactRational(BigInt(1), factorial(static_cast<unsigned>(k)));
  std::vector<ExactRational> d(c.size());
  d[0] = ExactRational(BigInt(1), BigInt(2));
  for (int n = 1; n <= n_max; ++n) {
    ExactRational acc(0);
    for (int k = 1; k <= n; ++k)
      acc += c[k] * d[n - k];
    d[n] = -acc / c[0];
  }
  return d;
}

CoefficientTable make_table(int n_max) {
  if (n_max < 0 || n_max > kMaxTableIndex)
    throw PreconditionError("coefficient table supports 0 <= n_max <= " +
                            std::to_string(kMaxTableIndex) + ", got " +
                            std::to_string(n_max));
  CoefficientTable t;
  t.max_index = n_max;
  for (int n = 0; n <= n_max + 1; ++n)
    t.bernoulli.push_back(bernoulli(static_cast<unsigned>(n)));
  for (int n = 0; n <= n_max; ++n) {
    t.g_deriv.push_back(g_deriv_at_zero(static_cast<unsigned>(n)));
    t.g_deriv_over_factorial.push_back(g_taylor_coefficient(static_cast<unsigned>(n)).to_double());
  }
  return t;
}

const CoefficientTable& table() {
  static const CoefficientTable full = make_table(kMaxTableIndex);
  return full;
}

std::string render_table(const CoefficientTable& t, Format format) {
  std::ostringstream os;
  switch (format) {
  case Format::json: {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= t.max_index; ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["g_deriv"] = t.g_deriv[n].to_string();
      row["bernoulli_n_plus_1"] = t.bernoulli[n + 1].to_string();
      row["g_deriv_over_factorial"] = t.g_deriv_over_factorial[n];
      rows.push_back(std::move(row));
    }
    nlohmann::ordered_json root;
    root["n_max"] = t.max_index;
    root["coefficients"] = std::move(rows);
    os << root.dump(2) << '\n';
    break;
  }
  case Format::csv:
    os << "n,g_deriv,bernoulli_n_plus_1,g_deriv_over_factorial\n";
    for (int n = 0; n <= t.max_index; ++n)
      os << n << ',' << t.g_deriv[n] << ',' << t.bernoulli[n + 1] << ','
         << format_double(t.g_deriv_over_factorial[n]) << '\n';
    break;
  case Format::text:
    for (int n = 0; n <= t.max_index; ++n) {
      if (t.g_deriv[n].is_zero())
        continue;
      os << "g^(" << n << ")(0) = " << t.g_deriv[n] << '\n';
    }
    break;
  }
  return os.str();
}

double zeta_even(unsigned m) {
  if (m == 0)
    throw PreconditionError("zeta_even: m must be >= 1");
  const unsigned n = 2 * m;
  ExactRational q = bernoulli(n) / ExactRational(factorial(n), BigInt(1));
  if (q.sign() < 0)
    q = -q;
  // |B_2m| / (2m)! * (2 pi)^{2m} / 2, the sign (-1)^{m+1} cancelling sign(B_2m)
  return q.to_double() * std::pow(2.0 * kPi, static_cast<double>(n)) / 2.0;
}

double zeta_even_direct(unsigned m, double tol) {
  if (m == 0)
    throw PreconditionError("zeta_even_direct: m must be >= 1");
  const double s = 2.0 * m;
  // Euler-Maclaurin after N terms; remainder is bounded by the first
  // omitted correction, s(s+1)(s+2)(s+3)(s+4) N^{-s-5} / 30240.
  auto remainder = [s](double n) {
    return s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(n, -s - 5) / 30240.0;
  };
  double n_terms = 8;
  while (remainder(n_terms) >= tol / 10.0)
    n_terms *= 2;
  const auto big_n = static_cast<long>(n_terms);

  double sum = 0.0;
  for (long n = big_n; n >= 1; --n) // smallest terms first
    sum += std::pow(static_cast<double>(n), -s);
  const double nd = n_terms;
  const double tail = std::pow(nd, 1.0 - s) / (s - 1.0) - std::pow(nd, -s) / 2.0 +
                      s * std::pow(nd, -s - 1.0) / 12.0 -
                      s * (s + 1) * (s + 2) * std::pow(nd, -s - 3.0) / 720.0;
  return sum + tail;
}

ExactRational coefficient_ratio_exact(unsigned m) {
  if (m == 0)
    throw PreconditionError("coefficient_ratio: m must be >= 1");
  return g_taylor_coefficient(4 * m - 1) / (-g_taylor_coefficient(4 * m + 1));
}

double coefficient_ratio(unsigned m) { return coefficient_ratio_exact(m).to_double(); }

double coefficient_ratio_zeta_form(unsigned m) {
  if (m == 0)
    throw PreconditionError("coefficient_ratio: m must be >= 1");
  const double num = (1.0 - std::ldexp(1.0, -4 * static_cast<int>(m))) * zeta_even_direct(2 * m);
  const double den =
      (1.0 - std::ldexp(1.0, -4 * static_cast<int>(m) - 2)) * zeta_even_direct(2 * m + 1);
  return num / den * kPi * kPi;
}

const PiEnclosure& pi_enclosure() {
  static const PiEnclosure enclosure = [] {
    const std::string digits(kPiDigits);
    BigInt scale = 1;
    for (std::size_t i = 1; i < digits.size(); ++i)
      scale *= 10;
    const BigInt lo(digits);
    return PiEnclosure{ExactRational(lo, scale), ExactRational(lo + 1, scale)};
  }();
  return enclosure;
}

namespace {

double logistic(double t) {
  const double e = std::exp(-t);
  return e / (1.0 + e);
}

// The relative slack (x - y) / y evaluated in rationals, then rounded once.
double relative_slack(const ExactRational& x, const ExactRational& y) {
  return ((x - y) / y).to_double();
}

} // namespace

VerificationReport check_theorem4(unsigned m_max, double tol) {
  if (m_max < 2)
    throw PreconditionError("check_theorem4: m_max must be >= 2");
  VerificationReport rep;
  rep.theorem = 4;
  rep.title = "structure and size of the Maclaurin coefficients of 1/(e^t+1)";

  const unsigned n_struct = std::max(40u, 4 * m_max + 1);
  for (unsigned n = 2; n <= n_struct; n += 2)
    rep.cells.push_back(exact_match("even_derivative_vanishes", {{"n", double(n)}},
                                    g_deriv_at_zero(n).is_zero()));
  for (unsigned n = 1; n <= n_struct; n += 4)
    rep.cells.push_back(exact_match("derivative_4m_plus_1_negative", {{"n", double(n)}},
                                    g_deriv_at_zero(n).sign() < 0));
  for (unsigned n = 3; n <= n_struct; n += 4)
    rep.cells.push_back(exact_match("derivative_4m_minus_1_positive", {{"n", double(n)}},
                                    g_deriv_at_zero(n).sign() > 0));

  const auto& pi = pi_enclosure();
  const ExactRational pi_mid = (pi.lo + pi.hi) / ExactRational(2);

  for (unsigned m = 1; m <= m_max; ++m) {
    const Params p{{"m", double(m)}};
    const ExactRational coef = g_taylor_coefficient(2 * m - 1);
    // zeta closed form with an independently summed zeta(2m)
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double zeta_form = sign * (1.0 - std::ldexp(1.0, -2 * static_cast<int>(m))) *
                             zeta_even_direct(m) * 2.0 /
                             std::pow(kPi, 2.0 * m);
    rep.cells.push_back(within_rel("odd_coefficient_zeta_form", p, coef.to_double(), zeta_form, tol));

    // |coef| > 2/pi^{2m}: compare against 2/pi_lo^{2m}, which exceeds 2/pi^{2m}
    const ExactRational abs_coef = coef.sign() < 0 ? -coef : coef;
    const ExactRational bound_hi = ExactRational(2) / pow_rational(pi.lo, 2 * m);
    const ExactRational bound_mid = ExactRational(2) / pow_rational(pi_mid, 2 * m);
    CheckCell lower{"odd_coefficient_lower_bound", p, abs_coef.to_double(), bound_mid.to_double(),
                    relative_slack(abs_coef, bound_mid), 0.0, abs_coef > bound_hi, true, {}};
    lower.note = "margin relative to 2/pi^(2m)";
    rep.cells.push_back(lower);
  }

  const ExactRational pi2_lo = pi.lo * pi.lo;
  const ExactRational pi2_hi = pi.hi * pi.hi;
  const ExactRational pi2_mid = pi_mid * pi_mid;
  const ExactRational upper_const = ExactRational::from_string("100013814/100000000");
  for (unsigned m = 1; m <= m_max; ++m) {
    const Params p{{"m", double(m)}};
    const ExactRational v = coefficient_ratio_exact(m);
    const ExactRational scaled = v / pi2_mid;
    CheckCell lo{"coefficient_ratio_above_pi2", p, scaled.to_double(), 1.0,
                 (scaled - ExactRational(1)).to_double(), 0.0, v > pi2_hi, true, {}};
    CheckCell hi{"coefficient_ratio_below_bound", p, scaled.to_double(), upper_const.to_double(),
                 (upper_const - scaled).to_double(), 0.0, v < upper_const * pi2_lo, true, {}};
    if (m == 1) {
      rep.cells.push_back(informational(lo, "m = 1 lies outside the stated range m >= 2"));
      rep.cells.push_back(informational(hi, "m = 1 lies outside the stated range m >= 2"));
    } else {
      rep.cells.push_back(lo);
      rep.cells.push_back(hi);
    }
    if (m + 1 <= m_max)
      rep.cells.push_back(exact_match("coefficient_ratio_decreasing", p,
                                      v > coefficient_ratio_exact(m + 1)));
  }

  // The numeric constant bounding the ratio at m = 2, through direct-sum zeta.
  const double r2 = coefficient_ratio_zeta_form(2) / (kPi * kPi);
  rep.cells.push_back(strictly_greater("ratio_constant_above_one", {{"m", 2.0}}, r2, 1.0));
  rep.cells.push_back(strictly_less("ratio_constant_below_bound", {{"m", 2.0}}, r2, 1.00013814));

  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 40.0})
    rep.cells.push_back(within_abs("logistic_tanh_form", {{"t", t}}, logistic(t),
                                   0.5 - 0.5 * std::tanh(t / 2.0), tol));
  return rep;
}

VerificationReport check_theorem3(int n_max) {
  VerificationReport rep;
  rep.theorem = 3;
  rep.title = "derivatives of 1/(e^t+1) at zero from Bernoulli numbers";
  const auto by_division = logistic_series_by_division(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<unsigned>(n);
    const ExactRational via_series = by_division[n] * ExactRational(factorial(un), BigInt(1));
    const ExactRational via_bernoulli = g_deriv_at_zero(un);
    rep.cells.push_back(exact_match("bernoulli_route_matches_series_division", {{"n", double(n)}},
                                    via_series == via_bernoulli, via_bernoulli.to_string()));
  }
  return rep;
}

} // namespace fzeta::coeffs
