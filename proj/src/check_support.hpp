#pragma once

// Builders shared by the check translation units.

#include <initializer_list>
#include <string>
#include <vector>

#include "qhahn/families.hpp"
#include "qhahn/operators.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/series.hpp"
#include "qhahn/verify.hpp"

namespace qhahn::verify::support {

using families::FamilyParams;
using ops::OperatorSpec;
using qkernel::gauss_power;
using qkernel::q_binomial;
using qkernel::q_pochhammer;

inline ScaledMonomial sm(const Rational &c, std::initializer_list<std::pair<Var, unsigned>> powers) {
  return {c, Monomial::of(powers)};
}
inline ScaledMonomial sm(std::initializer_list<std::pair<Var, unsigned>> powers) { return sm(1, powers); }

inline Polynomial var(Var v, unsigned power = 1) { return Polynomial::variable(v, 1, power); }

inline Rational sign(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

inline const ScaledMonomial zero{Rational(0)};

inline TruncatedSeries phi(std::initializer_list<ScaledMonomial> num, std::initializer_list<ScaledMonomial> den,
                           const Rational &q, const ScaledMonomial &z, Caps caps) {
  const std::vector<ScaledMonomial> n(num), d(den);
  return phi_series(n, d, q, z, caps);
}

/// sum_{n <= caps.t} term(n) t^n / (q;q)_n
template <class Term> TruncatedSeries t_generating(Term term, const Rational &q, Caps caps) {
  Polynomial body;
  for (int n = 0; n <= caps.t; ++n)
    body += term(n) * var(Var::t, static_cast<unsigned>(n)) * q_pochhammer(q, q, n).inverse();
  return {body, caps};
}

/// sum_{n <= caps.t, m <= caps.s} term(n + m) t^n s^m / ((q;q)_n (q;q)_m)
template <class Term> TruncatedSeries ts_generating(Term term, const Rational &q, Caps caps) {
  Polynomial body;
  for (int n = 0; n <= caps.t; ++n)
    for (int m = 0; m <= caps.s; ++m)
      body += term(n + m) * Polynomial(Rational(1), Monomial::of({{Var::t, static_cast<unsigned>(n)}, {Var::s, static_cast<unsigned>(m)}})) *
              (q_pochhammer(q, q, n) * q_pochhammer(q, q, m)).inverse();
  return {body, caps};
}

/// x^k/(xt;q)_inf sum_n (-1)^n q^{C(n,2)} (a;q)_n (ty)^n/(q;q)_n
///   * 3Phi2(q^{-k}, a q^n, xt; 0, 0 | q; (y/x) q^{n+k}),
/// with x^k (y/x)^m folded into x^{k-m} y^m.
TruncatedSeries shifted_pgen_rhs(int k, const Rational &a, const Rational &q, Caps caps);

/// 1/(xt, xs;q)_inf sum_n (-1)^n q^{C(n,2)} (a;q)_n (sy)^n/(q;q)_n
///   * 2Phi2(a q^n, xs; 0, 0 | q; y t q^n).
TruncatedSeries rogers_pgen_rhs(const Rational &a, const Rational &q, Caps caps);

inline std::string at(std::initializer_list<std::pair<const char *, long>> indices) {
  std::string out;
  for (const auto &[name, value] : indices) {
    if (!out.empty())
      out += ",";
    out += name;
    out += "=";
    out += std::to_string(value);
  }
  return out;
}

} // namespace qhahn::verify::support
