#include "qhahn/rational.hpp"

#include <cctype>
#include <ostream>

#include "qhahn/errors.hpp"

namespace qhahn {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty())
    return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-')
    i = 1;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

} // namespace

Rational::Rational(long num, long den) {
  if (den == 0)
    throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num, true))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den, false))
      throw ParseError("not a rational: '" + std::string(text) + "'");
    d = mpz_class(std::string(den), 10);
    if (d == 0)
      throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = value_.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
  const bool negative = sgn(value_) < 0;
  mpz_class mag = ::abs(scaled);
  std::string s = mag.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + s;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0)
    return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.value_ = mpq_class(num, den);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational &Rational::operator+=(const Rational &o) {
  value_ += o.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  value_ -= o.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  value_ *= o.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

Rational round_up_to(const Rational &value, const mpz_class &den) {
  mpz_class scaled = value.raw().get_num() * den;
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value.raw().get_den_mpz_t());
  return Rational(mpq_class(scaled, den));
}

Rational round_to(const Rational &value, const mpz_class &den) {
  mpz_class num = value.raw().get_num() * den * 2 + value.raw().get_den();
  mpz_class d2 = value.raw().get_den() * 2;
  // floor(v*den + 1/2)
  mpz_fdiv_q(num.get_mpz_t(), num.get_mpz_t(), d2.get_mpz_t());
  return Rational(mpq_class(num, den));
}

} // namespace qhahn
