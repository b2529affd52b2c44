// Alternative readings of several identities. Each case pins down which
// reading holds and that the other one is detectably false, so the checks in
// the registry are not silently relying on a weaker form.

#include <doctest.h>

#include "qhahn/families.hpp"
#include "qhahn/operators.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/series.hpp"

using namespace qhahn;
using namespace qhahn::qkernel;
using ops::OperatorSpec;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
Rational sgn(long k) { return k % 2 ? R(-1) : R(1); }
ScaledMonomial sm(std::initializer_list<std::pair<Var, unsigned>> p, const Rational &c = 1) {
  return {c, Monomial::of(p)};
}
Polynomial mono(const Rational &c, std::initializer_list<std::pair<Var, unsigned>> p) {
  return {c, Monomial::of(p)};
}
const ScaledMonomial kZero{Rational(0)};

TruncatedSeries phi(std::vector<ScaledMonomial> num, std::vector<ScaledMonomial> den, const Rational &q,
                    const ScaledMonomial &z, Caps caps) {
  return phi_series(num, den, q, z, caps);
}
} // namespace

TEST_CASE("D_q^n (xt)_inf needs the (-1)^n sign") {
  const Rational q = R(1, 2);
  const Caps caps{6, 0};
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  const auto product = euler_product(xt, q, caps);
  TruncatedSeries d = product;
  for (int n = 0; n <= 4; ++n) {
    const auto unsigned_form =
        gauss_power(n, q) * Polynomial::variable(Var::t, 1, n) * product * pochhammer_inverse_series(xt, q, n, caps);
    CHECK(d == sgn(n) * unsigned_form);
    CHECK((d == unsigned_form) == (n % 2 == 0));
    d = ops::dq(d, Var::x, q);
  }
}

TEST_CASE("Leibniz rule: differentiate g(q^k x), not (D^{n-k} g)(q^k x)") {
  const Rational q = R(1, 2);
  const Polynomial f = Polynomial::variable(Var::x), g = Polynomial::variable(Var::x, 1, 2);
  const int n = 2;
  Polynomial literal, rescaled_after;
  for (int k = 0; k <= n; ++k) {
    const Rational c = q_binomial(n, k, q) * q.pow(static_cast<long>(k) * (k - n));
    const Polynomial dkf = ops::dq_power(f, Var::x, q, k);
    literal += c * dkf * ops::dq_power(substitute_scale(g, Var::x, q.pow(k)), Var::x, q, n - k);
    rescaled_after += c * dkf * substitute_scale(ops::dq_power(g, Var::x, q, n - k), Var::x, q.pow(k));
  }
  const Polynomial truth = ops::dq_power(f * g, Var::x, q, n);
  CHECK(literal == truth);
  CHECK(rescaled_after != truth);
}

TEST_CASE("E(a,y) on 1/(xt,xs): the inner series carries the 2Phi2 weight") {
  const Rational q = R(1, 2), a = R(1, 7);
  const Caps caps{4, 4};
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}}), xs = sm({{Var::x, 1}, {Var::s, 1}});
  const auto recip = euler_recip(xt, q, caps) * euler_recip(xs, q, caps);
  const auto lhs = ops::apply_operator(OperatorSpec::e_tilde(a, ScaledMonomial::of(Var::y), q), recip);
  auto rhs_with = [&](std::vector<ScaledMonomial> den) {
    TruncatedSeries sum(Polynomial(), caps);
    for (int n = 0; n <= caps.s; ++n) {
      const Rational c = sgn(n) * gauss_power(n, q) * q_pochhammer(a, q, n) / q_pochhammer(q, q, n);
      sum += mono(c, {{Var::y, static_cast<unsigned>(n)}, {Var::s, static_cast<unsigned>(n)}}) *
             phi({a * q.pow(n), xs}, den, q, sm({{Var::y, 1}, {Var::t, 1}}, q.pow(n)), caps);
    }
    return recip * sum;
  };
  CHECK(lhs == rhs_with({kZero, kZero}));
  CHECK(lhs != rhs_with({kZero}));
}

TEST_CASE("E(a,t;D_s) triple sum: only the (-1)^j form with b^n y^k x^j holds") {
  const Rational q = R(1, 2), a = R(1, 7), b = R(1, 3);
  const int ct = 4, cs = 4;
  const Caps caps{ct, cs}, wide{ct, cs + ct};
  const auto xs = sm({{Var::x, 1}, {Var::s, 1}}), ys = sm({{Var::y, 1}, {Var::s, 1}});
  const auto input =
      euler_product(ys, q, wide) * euler_recip(xs, q, wide) * phi({a}, {kZero}, q, ScaledMonomial::of(Var::s, b), wide);
  const auto lhs = ops::apply_operator(OperatorSpec::e_tilde(a, ScaledMonomial::of(Var::t), q, Var::s), input);

  auto rhs = [&](bool sign_jk, bool monomials) {
    TruncatedSeries sum(Polynomial(), caps);
    for (int n = 0; n <= ct; ++n)
      for (int k = 0; n + k <= ct; ++k)
        for (int j = 0; n + k + j <= ct; ++j) {
          const int N = n + j + k;
          Rational c = sgn(sign_jk ? j + k : j) * gauss_power(k, q) * gauss_power(n, q) * gauss_power(N, q) *
                       q_pochhammer(a, q, n) * q_pochhammer(a, q, N) /
                       (q_pochhammer(q, q, k) * q_pochhammer(q, q, n) * q_pochhammer(q, q, j));
          unsigned xj = 0, yk = 0;
          if (monomials) {
            c *= b.pow(n);
            xj = static_cast<unsigned>(j);
            yk = static_cast<unsigned>(k);
          }
          sum += mono(c, {{Var::x, xj}, {Var::y, yk}, {Var::t, static_cast<unsigned>(N)}}) *
                 pochhammer_series(xs, q, k, caps) * pochhammer_inverse_series(ys, q, k, caps) *
                 phi({a * q.pow(n)}, {kZero}, q, ScaledMonomial::of(Var::s, b * q.pow(N)), caps);
        }
    return euler_product(ys, q, caps) * euler_recip(xs, q, caps) * sum;
  };
  CHECK(lhs == rhs(false, true));
  CHECK(lhs != rhs(true, false));
  CHECK(lhs != rhs(true, true));
  CHECK(lhs != rhs(false, false));
}

TEST_CASE("h_n Mehler: the 3Phi3 side equals sum h_N g_N t^N/(q)_N, not the bilinear sum") {
  const Rational q = R(1, 2), a = R(1, 7), b = R(1, 3), c = R(3, 7), d = R(1, 5);
  const Caps caps{5, 0};
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}}), yt = sm({{Var::y, 1}, {Var::t, 1}});
  const families::FamilyParams first{q, a, b}, second{q, c, d};

  TruncatedSeries three_phi_three(Polynomial(), caps);
  for (int k = 0; k <= caps.t; ++k)
    three_phi_three += sgn(k) * gauss_power(k, q) * q_pochhammer(c, q, k) * d.pow(k) / q_pochhammer(q, q, k) *
                       families::cauchy_p(k, q, Var::y, Var::x) * families::cauchy_p(k, q, Var::v, Var::u) *
                       Polynomial::variable(Var::t, 1, k) * pochhammer_inverse_series(xt, q, k, caps);
  const auto rhs = ops::apply_operator(OperatorSpec::l_tilde(a, b, q),
                                       euler_product(xt, q, caps) * euler_recip(yt, q, caps) * three_phi_three);

  Polynomial bilinear, actual;
  for (int N = 0; N <= caps.t; ++N) {
    Polynomial g;
    for (int k = 0; k <= N; ++k)
      g += q_binomial(N, k, q) * sgn(k) * gauss_power(k, q) * q_pochhammer(c, q, k) * d.pow(k) *
           families::cauchy_p(k, q, Var::v, Var::u);
    const Polynomial tn = Polynomial::variable(Var::t, q_pochhammer(q, q, N).inverse(), N);
    actual += families::hahn_h(N, first) * g * tn;
    bilinear += families::hahn_h(N, first) * families::hahn_h(N, second, Var::u, Var::v) * tn;
  }
  CHECK(rhs == TruncatedSeries(actual, caps));
  CHECK(rhs != TruncatedSeries(bilinear, caps));

  // At d = 0 the 3Phi3 side no longer depends on u, v while the bilinear sum does.
  CHECK(families::hahn_h(1, {q, c, Rational(0)}, Var::u, Var::v) == families::cauchy_p(1, q, Var::v, Var::u));
}
