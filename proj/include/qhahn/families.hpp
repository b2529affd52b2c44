#pragma once

#include "qhahn/polynomial.hpp"
#include "qhahn/rational.hpp"
#include "qhahn/series.hpp"

/// Cauchy, generalized Cauchy and generalized Hahn polynomial families.
namespace qhahn::families {

/// q, a and b of p_n(x,y,a) and h_n(x,y,a,b|q). b is a rational or a
/// monomial in x, y, u, v.
struct FamilyParams {
  Rational q;
  Rational a = 0;
  ScaledMonomial b = Rational(1);
};

/// p_n(first, second) = prod_{j<n} (first - q^j second).
Polynomial cauchy_p(int n, const Rational &q, Var first = Var::x, Var second = Var::y);

/// p_n(first, second, a) = sum_k [n,k] (-1)^k q^{k(k-1)/2} (a;q)_k first^{n-k} second^k.
Polynomial cauchy_p_general(int n, const FamilyParams &params, Var first = Var::x, Var second = Var::y);

/// h_n(first, second, a, b|q) = sum_k [n,k] (-1)^k q^{k(k-1)/2} b^k (a;q)_k p_{n-k}(second, first).
Polynomial hahn_h(int n, const FamilyParams &params, Var first = Var::x, Var second = Var::y);

/// F_n(x, y, z; q) through h_n(x, y, 0, z|q) = (-1)^n q^{n(n-1)/2} F_n(x, y, z; q).
Polynomial trivariate_F(int n, const Rational &q, const ScaledMonomial &z);

enum class PsiVariant { one, two };

/// Hahn polynomials psi_n^{(a)}(x|q) (variant one, b = 1) and
/// psi_n^{(a)}(x, y|q) (variant two, b = b_for_two), from
/// h_n(x, a x, 0, b|q) = (-1)^n q^{n(n-1)/2} psi_n.
Polynomial hahn_psi(PsiVariant variant, int n, const Rational &a_scale, const Rational &q,
                    const ScaledMonomial &b_for_two = ScaledMonomial::of(Var::y));

/// p_n(x,y) == (-1)^n q^{n(n-1)/2} p_n(y, q^{1-n} x), as polynomials.
bool cauchy_symmetry_check(int n, const Rational &q);

/// p_{n-k}(x, q^{1-n} y) == (-1)^{n-k} q^{k(k-1)/2 - n(n-1)/2} p_{n-k}(y, q^k x), for 0 <= k <= n.
bool shifted_symmetry_check(int n, int k, const Rational &q);

} // namespace qhahn::families
