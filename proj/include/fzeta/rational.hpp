#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
///
/// Every arithmetic operation is exact; the only place rounding ever happens
/// is to_double(), which converts numerator and denominator and divides once.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(std::int64_t n) : value_(n) {} // NOLINT: implicit by design of arithmetic
  ExactRational(const BigInt& num, const BigInt& den);

  static ExactRational from_string(const std::string& text); // "p/q" or "p"

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  double to_double() const;
  std::string to_string() const; // "p/q", or "p" when q = 1

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational l, const ExactRational& r) { return l += r; }
  friend ExactRational operator-(ExactRational l, const ExactRational& r) { return l -= r; }
  friend ExactRational operator*(ExactRational l, const ExactRational& r) { return l *= r; }
  friend ExactRational operator/(ExactRational l, const ExactRational& r) { return l /= r; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& l, const ExactRational& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& l, const ExactRational& r);

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& q);

private:
  using Storage = boost::multiprecision::cpp_rational;
  explicit ExactRational(Storage v) : value_(std::move(v)) {}

  Storage value_{0};
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// 2^n as an exact rational (n may be negative).
ExactRational pow2(int n);

} // namespace fzeta
