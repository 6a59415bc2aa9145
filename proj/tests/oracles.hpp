#pragma once

// Reference values computed without any of the library's numerics.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;
using rational = boost::multiprecision::cpp_rational;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

// g^(n)(0) for n <= 15 as printed in the source table (only odd n and n = 0).
struct AppendixEntry {
  int n;
  const char* value;
};
inline const std::vector<AppendixEntry>& appendix() {
  static const std::vector<AppendixEntry> v{
      {0, "1/2"},   {1, "-1/4"},   {3, "1/8"},       {5, "-1/4"},       {7, "17/16"},
      {9, "-31/4"}, {11, "691/8"}, {13, "-5461/4"}, {15, "929569/32"},
  };
  return v;
}

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2.
inline std::vector<rational> bernoulli_akiyama_tanigawa(int n_max) {
  std::vector<rational> out;
  std::vector<rational> a(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

inline std::string to_string(const rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Bernoulli numbers B_{2k}, k = 1..12, for the Euler-Maclaurin sums below.
inline const long double* even_bernoulli() {
  static const long double b[] = {
      1.0L / 6,          -1.0L / 30,       1.0L / 42,          -1.0L / 30,       5.0L / 66,
      -691.0L / 2730,    7.0L / 6,         -3617.0L / 510,     43867.0L / 798,   -174611.0L / 330,
      854513.0L / 138,   -236364091.0L / 2730,
  };
  return b;
}

// zeta(s) for s != 1 by Euler-Maclaurin with N = 30 + |b| direct terms.
inline cplx zeta(cplx s_in) {
  const lcplx s(s_in.real(), s_in.imag());
  const int N = 30 + static_cast<int>(std::abs(s_in.imag()));
  lcplx sum = 0.0L;
  for (int n = 1; n < N; ++n)
    sum += std::exp(-s * std::log(static_cast<long double>(n)));
  const long double lnN = std::log(static_cast<long double>(N));
  const lcplx Ns = std::exp(-s * lnN);
  sum += Ns * static_cast<long double>(N) / (s - 1.0L) + Ns / 2.0L;
  // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  lcplx rising = s;
  lcplx Npow = Ns / static_cast<long double>(N);
  long double fact = 2.0L;
  const long double* B = even_bernoulli();
  for (int k = 1; k <= 12; ++k) {
    sum += B[k - 1] / fact * rising * Npow;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    Npow /= static_cast<long double>(N) * N;
    fact *= static_cast<long double>(2 * k + 1) * (2 * k + 2);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

inline cplx eta(cplx s) { return (1.0 - std::pow(cplx(2.0), 1.0 - s)) * zeta(s); }

// log Gamma(s), Re s > 0: shift up by 12 and apply Stirling's series.
inline lcplx log_gamma_l(lcplx s) {
  lcplx shift = 0.0L;
  for (int k = 0; k < 12; ++k)
    shift += std::log(s + static_cast<long double>(k));
  const lcplx z = s + 12.0L;
  const long double* B = even_bernoulli();
  lcplx series = 0.0L;
  lcplx zp = z;
  for (int k = 1; k <= 10; ++k) {
    series += B[k - 1] / (static_cast<long double>(2 * k) * (2 * k - 1) * zp);
    zp *= z * z;
  }
  const lcplx lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPi) + series;
  return lg - shift;
}

inline cplx gamma(cplx s) {
  const lcplx v = std::exp(log_gamma_l(lcplx(s.real(), s.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// F(s) = Gamma(s) eta(s), with the product formed in log space so tiny
// values near large |b| keep their relative accuracy.
inline cplx F(cplx s) {
  const lcplx ls(s.real(), s.imag());
  const cplx e = eta(s);
  const lcplx v = std::exp(log_gamma_l(ls)) * lcplx(e.real(), e.imag());
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Exact mean of sin(b log t) over [t0, t1] from the antiderivative
// t (sin(b log t) - b cos(b log t)) / (1 + b^2).
inline long double sine_mean(long double t0, long double t1, long double b) {
  auto prim = [b](long double t) {
    const long double x = b * std::log(t);
    return t * (std::sin(x) - b * std::cos(x)) / (1.0L + b * b);
  };
  return (prim(t1) - prim(t0)) / (t1 - t0);
}

// Composite Simpson on a smooth integrand.
template <class Fn>
long double simpson(Fn&& f, long double lo, long double hi, int panels) {
  const long double h = (hi - lo) / panels;
  long double s = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i)
    s += f(lo + i * h) * ((i % 2) ? 4.0L : 2.0L);
  return s * h / 3.0L;
}

inline long double fermi(long double t, long double a) {
  return std::pow(t, a - 1.0L) / (std::exp(t) + 1.0L);
}

} // namespace oracle
