#pragma once

#include "qhahn/polynomial.hpp"
#include "qhahn/rational.hpp"
#include "qhahn/series.hpp"

/// q-derivative, homogeneous divided difference and the operator series
/// built from them.
namespace qhahn::ops {

/// D_q on `var`: (f(var) - f(q var))/var, so var^n -> (1 - q^n) var^{n-1}.
Polynomial dq(const Polynomial &f, Var var, const Rational &q);

/// Termwise D_q. Differentiating in t or s lowers that cap by one; throws
/// NonTerminating when the cap is already 0.
TruncatedSeries dq(const TruncatedSeries &f, Var var, const Rational &q);

Polynomial dq_power(const Polynomial &f, Var var, const Rational &q, int n);

/// theta_xy f = (f(x/q, y) - f(x, q y)) / (x/q - y). Partial: throws
/// NotDivisible when the numerator has no exact quotient.
Polynomial theta(const Polynomial &f, const Rational &q);
TruncatedSeries theta(const TruncatedSeries &f, const Rational &q);

/// theta^k p_n(y,x) = (-1)^k (q;q)_n/(q;q)_{n-k} p_{n-k}(y,x). IndexError if k > n.
Polynomial theta_power_on_cauchy(int n, int k, const Rational &q);

enum class OperatorKind {
  E_tilde, ///< sum_k (-1)^k q^{k(k-1)/2} (a;q)_k/(q;q)_k (b D_q)^k
  R,       ///< E_tilde with a = 0
  L_tilde, ///< sum_k q^{k(k-1)/2} (a;q)_k/(q;q)_k (b theta_xy)^k
  L,       ///< L_tilde with a = 0
};

struct OperatorSpec {
  OperatorKind kind = OperatorKind::E_tilde;
  Rational a = 0;
  ScaledMonomial b = Rational(1);
  Rational q;
  /// Variable of D_q; ignored by the theta family, which acts on (x, y).
  Var acts_on = Var::x;

  /// R and L are stored as E_tilde / L_tilde with a = 0.
  static OperatorSpec make(OperatorKind kind, const Rational &a, const ScaledMonomial &b, const Rational &q,
                           Var acts_on = Var::x);
  static OperatorSpec e_tilde(const Rational &a, const ScaledMonomial &b, const Rational &q, Var acts_on = Var::x) {
    return make(OperatorKind::E_tilde, a, b, q, acts_on);
  }
  static OperatorSpec r(const ScaledMonomial &b, const Rational &q, Var acts_on = Var::x) {
    return make(OperatorKind::R, 0, b, q, acts_on);
  }
  static OperatorSpec l_tilde(const Rational &a, const ScaledMonomial &b, const Rational &q) {
    return make(OperatorKind::L_tilde, a, b, q);
  }
  static OperatorSpec l(const ScaledMonomial &b, const Rational &q) { return make(OperatorKind::L, 0, b, q); }

  bool uses_theta() const { return kind == OperatorKind::L_tilde; }
  /// Weight of (b Op)^k in the operator series.
  Rational weight(int k) const;
};

/// Exact on polynomials: D_q and theta are nilpotent there, which bounds k.
Polynomial apply_operator(const OperatorSpec &op, const Polynomial &f);

/// Termwise on a truncated series. k is bounded by b's t/s degree against the
/// caps or by the operator running out of degree in every coefficient. The
/// result caps are the minimum of the caps of every D_q^k f that was used.
TruncatedSeries apply_operator(const OperatorSpec &op, const TruncatedSeries &f);

} // namespace qhahn::ops
