#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qhahn/errors.hpp"
#include "qhahn/rational.hpp"

namespace qhahn {

/// The fixed variable alphabet. Order matters: it is the lexicographic
/// tie-break of the monomial order and the exponent-vector layout.
enum class Var : std::uint8_t { x = 0, y = 1, u = 2, v = 3, t = 4, s = 5 };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::x, Var::y, Var::u, Var::v, Var::t, Var::s};

char var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

/// Exponent vector over (x, y, u, v, t, s).
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::array<Exponent, kNumVars> e) : exp_(e) {}
  static Monomial of(Var v, unsigned power = 1);
  static Monomial of(std::initializer_list<std::pair<Var, unsigned>> powers);

  unsigned operator[](Var v) const { return exp_[static_cast<std::size_t>(v)]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial &other) const;

  Monomial with(Var v, unsigned power) const;
  Monomial operator*(const Monomial &o) const;
  /// Requires divides(o).
  Monomial operator/(const Monomial &o) const;

  const std::array<Exponent, kNumVars> &exponents() const { return exp_; }
  std::string to_string() const;

  friend bool operator==(const Monomial &, const Monomial &) = default;

private:
  std::array<Exponent, kNumVars> exp_{};
};

/// Graded lexicographic order: total degree first, then exponents of x, y, u, v, t, s.
struct GrlexLess {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Exact multivariate polynomial over Rational. Zero coefficients are never stored.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational &c);
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational &c, const Monomial &m);
  static Polynomial variable(Var v, const Rational &c = 1, unsigned power = 1);

  /// Parses the canonical text form (e.g. "x^2 - 3/2*x*y + 1/2*y^2").
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant or zero.
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }

  Rational coeff(const Monomial &m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Highest exponent of v; -1 for the zero polynomial.
  int degree_in(Var v) const;
  /// Largest degree in the pair (x, y) over all terms; -1 for zero.
  int degree_in_xy() const;
  const std::pair<const Monomial, Rational> &leading_term() const;

  void add_term(const Monomial &m, const Rational &c);

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  Polynomial &operator*=(const Rational &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

/// Product with every term of t-degree > cap_t or s-degree > cap_s dropped.
Polynomial mul_truncated(const Polynomial &a, const Polynomial &b, int cap_t, int cap_s);
/// Drops terms above the caps.
Polynomial truncate(const Polynomial &p, int cap_t, int cap_s);

Polynomial pow(const Polynomial &p, unsigned n);

/// p with var replaced by c*var.
Polynomial substitute_scale(const Polynomial &p, Var var, const Rational &c);
/// p with var replaced by the polynomial r.
Polynomial substitute(const Polynomial &p, Var var, const Polynomial &r);

/// Raised by divide_exact when the division leaves a remainder.
class NotDivisible : public Error {
public:
  NotDivisible(const std::string &what, Polynomial remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const Polynomial &remainder() const { return remainder_; }

private:
  Polynomial remainder_;
};

/// Quotient r with p = d*r, by multivariate reduction against d's leading
/// term. Throws NotDivisible if the reduction leaves a remainder and
/// DivisionByZero for d = 0.
Polynomial divide_exact(const Polynomial &p, const Polynomial &d);

using Assignment = std::map<Var, Rational>;
/// Throws MissingAssignment if a variable occurring in p is unassigned.
Rational eval(const Polynomial &p, const Assignment &assignment);
/// Evaluates only the assigned variables, leaving the others symbolic.
Polynomial partial_eval(const Polynomial &p, const Assignment &assignment);

} // namespace qhahn
