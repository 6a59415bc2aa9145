#include "fzeta/rational.hpp"

#include "fzeta/errors.hpp"

#include <ostream>
#include <vector>

namespace fzeta {

namespace mp = boost::multiprecision;

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw DomainError("ExactRational: zero denominator");
  value_ = Storage(num, den); // normalizes sign and reduces
}

ExactRational ExactRational::from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return ExactRational(BigInt(text), BigInt(1));
  return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

BigInt ExactRational::numerator() const { return mp::numerator(value_); }
BigInt ExactRational::denominator() const { return mp::denominator(value_); }

int ExactRational::sign() const {
  const BigInt n = mp::numerator(value_);
  return n.sign();
}

double ExactRational::to_double() const {
  const double num = mp::numerator(value_).convert_to<double>();
  const double den = mp::denominator(value_).convert_to<double>();
  return num / den;
}

std::string ExactRational::to_string() const {
  const BigInt den = mp::denominator(value_);
  if (den == 1)
    return mp::numerator(value_).str();
  return mp::numerator(value_).str() + "/" + den.str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero())
    throw DomainError("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(Storage(-value_)); }

std::strong_ordering operator<=>(const ExactRational& l, const ExactRational& r) {
  if (l.value_ < r.value_)
    return std::strong_ordering::less;
  if (l.value_ > r.value_)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactRational pow2(int n) {
  BigInt p = 1;
  p <<= static_cast<unsigned>(n < 0 ? -n : n);
  return n < 0 ? ExactRational(BigInt(1), p) : ExactRational(p, BigInt(1));
}

} // namespace fzeta
