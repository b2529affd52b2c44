#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhahn {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Text form is "p/q" or "p" with an optional leading minus; this is the form
/// used on the command line and in JSON reports.
class Rational {
public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  static Rational parse(std::string_view text);

  const mpq_class &raw() const { return value_; }
  std::string to_string() const;
  /// Decimal rendering with `digits` fractional digits, rounded toward zero.
  std::string to_decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Smallest multiple of 1/den that is >= value.
Rational round_up_to(const Rational &value, const mpz_class &den);
/// Nearest multiple of 1/den (ties round up).
Rational round_to(const Rational &value, const mpz_class &den);

} // namespace qhahn
