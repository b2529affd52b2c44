#include "qhahn/families.hpp"

#include "qhahn/errors.hpp"
#include "qhahn/qkernel.hpp"

namespace qhahn::families {

using qkernel::gauss_power;
using qkernel::q_binomial;
using qkernel::q_pochhammer;

namespace {

Rational signed_gauss(int k, const Rational &q) {
  const Rational g = gauss_power(k, q);
  return k % 2 == 0 ? g : -g;
}

} // namespace

Polynomial cauchy_p(int n, const Rational &q, Var first, Var second) {
  Polynomial r = 1;
  Rational qj = 1;
  for (int j = 0; j < n; ++j, qj *= q)
    r *= Polynomial::variable(first) - Polynomial::variable(second, qj);
  return r;
}

Polynomial cauchy_p_general(int n, const FamilyParams &params, Var first, Var second) {
  const Rational &q = params.q;
  Polynomial r;
  for (int k = 0; k <= n; ++k) {
    const Rational c = q_binomial(n, k, q) * signed_gauss(k, q) * q_pochhammer(params.a, q, k);
    r.add_term(Monomial::of({{first, static_cast<unsigned>(n - k)}, {second, static_cast<unsigned>(k)}}), c);
  }
  return r;
}

Polynomial hahn_h(int n, const FamilyParams &params, Var first, Var second) {
  const Rational &q = params.q;
  const Polynomial b = params.b.to_polynomial();
  Polynomial r;
  Polynomial bk = 1;
  for (int k = 0; k <= n; ++k) {
    const Rational c = q_binomial(n, k, q) * signed_gauss(k, q) * q_pochhammer(params.a, q, k);
    r += cauchy_p(n - k, q, second, first) * bk * c;
    bk *= b;
  }
  return r;
}

Polynomial trivariate_F(int n, const Rational &q, const ScaledMonomial &z) {
  const FamilyParams params{q, 0, z};
  return hahn_h(n, params) * signed_gauss(n, q).inverse();
}

Polynomial hahn_psi(PsiVariant variant, int n, const Rational &a_scale, const Rational &q,
                    const ScaledMonomial &b_for_two) {
  // Variant two carries b on the placeholder u while y is rewritten as a*x,
  // then moves it back onto y.
  const ScaledMonomial b = variant == PsiVariant::one ? ScaledMonomial(1) : ScaledMonomial::of(Var::u);
  const Polynomial h = hahn_h(n, FamilyParams{q, 0, b});
  Polynomial psi = substitute(h, Var::y, Polynomial::variable(Var::x, a_scale));
  if (variant == PsiVariant::two)
    psi = substitute(psi, Var::u, b_for_two.to_polynomial());
  return psi * signed_gauss(n, q).inverse();
}

bool cauchy_symmetry_check(int n, const Rational &q) {
  const Polynomial lhs = cauchy_p(n, q);
  const Polynomial rhs = substitute_scale(cauchy_p(n, q, Var::y, Var::x), Var::x, q.pow(1 - n)) * signed_gauss(n, q);
  return lhs == rhs;
}

bool shifted_symmetry_check(int n, int k, const Rational &q) {
  if (k < 0 || k > n)
    throw IndexError("shifted_symmetry_check: k outside [0, n]");
  const Polynomial lhs = substitute_scale(cauchy_p(n - k, q), Var::y, q.pow(1 - n));
  Rational c = q.pow(static_cast<long>(k) * (k - 1) / 2 - static_cast<long>(n) * (n - 1) / 2);
  if ((n - k) % 2 == 1)
    c = -c;
  const Polynomial rhs = substitute_scale(cauchy_p(n - k, q, Var::y, Var::x), Var::x, q.pow(k)) * c;
  return lhs == rhs;
}

} // namespace qhahn::families
