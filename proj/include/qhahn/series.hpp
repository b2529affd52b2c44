#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhahn/polynomial.hpp"
#include "qhahn/rational.hpp"

namespace qhahn {

/// Per-variable degree caps on the series variables t and s.
struct Caps {
  int t = 0;
  int s = 0;
  friend bool operator==(const Caps &, const Caps &) = default;
};

Caps min_caps(Caps a, Caps b);

/// A rational coefficient times a monomial: the argument / parameter form of
/// the Pochhammer and basic hypergeometric expanders (xt, ys, b*s*q^n, d*v*y*t, ...).
struct ScaledMonomial {
  Rational coeff = 0;
  Monomial mono{};

  ScaledMonomial() = default;
  ScaledMonomial(const Rational &c) : coeff(c) {}
  ScaledMonomial(const Rational &c, const Monomial &m) : coeff(c), mono(c.is_zero() ? Monomial{} : m) {}
  static ScaledMonomial of(Var v, const Rational &c = 1) { return {c, Monomial::of(v)}; }

  bool is_zero() const { return coeff.is_zero(); }
  /// No variables: a pure rational parameter.
  bool is_scalar() const { return mono.is_one(); }
  /// Positive degree in t or s.
  bool has_series_content() const { return !is_zero() && (mono[Var::t] > 0 || mono[Var::s] > 0); }
  Polynomial to_polynomial() const { return Polynomial(coeff, mono); }
  ScaledMonomial pow(unsigned n) const;
  std::string to_string() const { return to_polynomial().to_string(); }

  friend ScaledMonomial operator*(const ScaledMonomial &a, const ScaledMonomial &b) {
    return {a.coeff * b.coeff, a.mono * b.mono};
  }
  friend ScaledMonomial operator*(const ScaledMonomial &a, const Rational &c) { return {a.coeff * c, a.mono}; }
  friend bool operator==(const ScaledMonomial &, const ScaledMonomial &) = default;
};

/// Polynomial representative of a formal power series in (t, s) modulo
/// (t^{cap_t + 1}, s^{cap_s + 1}), with coefficients in Q[x, y, u, v].
class TruncatedSeries {
public:
  TruncatedSeries() = default;
  /// Truncates body to the caps.
  TruncatedSeries(const Polynomial &body, Caps caps);

  static TruncatedSeries one(Caps caps) { return {Polynomial(1), caps}; }

  const Polynomial &body() const { return body_; }
  Caps caps() const { return caps_; }
  bool is_zero() const { return body_.is_zero(); }

  /// Re-truncates to caps no larger than the current ones.
  TruncatedSeries truncated(Caps caps) const;

  /// Coefficient of t^i s^j as a polynomial in x, y, u, v.
  Polynomial coefficient(int i, int j) const;

  TruncatedSeries operator-() const { return {-body_, caps_}; }
  TruncatedSeries &operator+=(const TruncatedSeries &o);
  TruncatedSeries &operator-=(const TruncatedSeries &o);
  TruncatedSeries &operator*=(const TruncatedSeries &o);
  TruncatedSeries &operator*=(const Polynomial &p);
  TruncatedSeries &operator*=(const Rational &c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries &b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Polynomial &p) { return a *= p; }
  friend TruncatedSeries operator*(const Polynomial &p, TruncatedSeries a) { return a *= p; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational &c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational &c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  /// Canonical polynomial text plus "(+O(t^{Nt+1}) + O(s^{Ns+1}))".
  std::string to_string() const;

private:
  Polynomial body_;
  Caps caps_;
};

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f);

/// g with f*g = 1 up to the caps. Throws NotInvertible unless the t^0 s^0
/// coefficient of f is a nonzero rational constant.
TruncatedSeries series_invert(const TruncatedSeries &f);

/// prod_{k<n} (1 - w q^k), expanded exactly.
Polynomial pochhammer_poly(const ScaledMonomial &w, const Rational &q, int n);
/// As pochhammer_poly, truncated at the caps.
TruncatedSeries pochhammer_series(const ScaledMonomial &w, const Rational &q, int n, Caps caps);
/// 1 / (w;q)_n as a series; requires w to carry t or s (else NotInvertible).
TruncatedSeries pochhammer_inverse_series(const ScaledMonomial &w, const Rational &q, int n, Caps caps);

/// 1/(w;q)_inf = sum_k w^k/(q;q)_k. Throws NonTerminating if w has no t/s content.
TruncatedSeries euler_recip(const ScaledMonomial &w, const Rational &q, Caps caps);
/// (w;q)_inf = sum_k (-1)^k q^{k(k-1)/2} w^k/(q;q)_k. Same precondition as euler_recip.
TruncatedSeries euler_product(const ScaledMonomial &w, const Rational &q, Caps caps);

/// Basic hypergeometric series r_Phi_s(numerator; denominator | q; z), with
/// the [(-1)^m q^{m(m-1)/2}]^{1+s-r} weight, truncated at the caps.
///
/// Scalar parameters contribute rational Pochhammer factors; monomial
/// parameters expand as polynomials (numerator) or inverted series
/// (denominator). The index m is bounded by the caps through z's t/s degree,
/// or by k when a numerator parameter equals q^{-k}.
///
/// Throws NonTerminating, DenominatorPole or NotInvertible.
TruncatedSeries phi_series(std::span<const ScaledMonomial> numerator,
                           std::span<const ScaledMonomial> denominator, const Rational &q,
                           const ScaledMonomial &z, Caps caps);

/// k >= 0 with a = q^{-k}, if any (the terminating case of a numerator parameter).
std::optional<int> terminating_index(const Rational &a, const Rational &q);

} // namespace qhahn
