#include <doctest.h>

#include "qhahn/errors.hpp"
#include "qhahn/families.hpp"
#include "qhahn/operators.hpp"
#include "qhahn/qkernel.hpp"

using namespace qhahn;
using namespace qhahn::ops;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
Polynomial P(const char *text) { return Polynomial::parse(text); }
ScaledMonomial mono(Var a, Var b) { return {1, Monomial::of({{a, 1}, {b, 1}})}; }
} // namespace

TEST_CASE("dq examples") {
  const Rational q = R(1, 2);
  CHECK(dq(P("x^2"), Var::x, q) == P("3/4*x"));
  CHECK(dq(P("7/3"), Var::x, q).is_zero());
  CHECK(dq(P("x^2*y + y^3"), Var::y, q) == P("1/2*x^2 + 7/8*y^2"));
  CHECK(dq_power(P("x^3"), Var::x, q, 2) == P("21/32*x"));
}

TEST_CASE("dq^n(x^k) equals iterated dq, n <= k <= 6") {
  for (const Rational &q : {R(1, 2), R(2, 3)})
    for (int k = 0; k <= 6; ++k)
      for (int n = 0; n <= k; ++n) {
        Polynomial iterated = Polynomial::variable(Var::x, 1, k);
        for (int i = 0; i < n; ++i)
          iterated = dq(iterated, Var::x, q);
        CHECK(dq_power(Polynomial::variable(Var::x, 1, k), Var::x, q, n) == iterated);
        CHECK(iterated == Polynomial::variable(Var::x, qkernel::q_pochhammer(q.pow(k - n + 1), q, n), k - n));
      }
}

TEST_CASE("dq on series lowers the differentiated cap") {
  const Rational q = R(1, 2);
  const TruncatedSeries f(P("1 + t + t^2 + x*s"), {2, 1});
  const auto g = dq(f, Var::t, q);
  CHECK(g.caps() == Caps{1, 1});
  CHECK(g.body() == P("1/2 + 3/4*t"));
  CHECK(dq(f, Var::x, q).caps() == Caps{2, 1});
  CHECK_THROWS_AS(dq(TruncatedSeries(P("1 + x"), {0, 0}), Var::t, q), NonTerminating);
}

TEST_CASE("theta examples") {
  const Rational q = R(1, 2);
  CHECK(theta(P("y - x"), q) == P("-1/2"));
  CHECK(theta(P("1"), q).is_zero());
  CHECK_THROWS_AS(theta(P("x*y"), q), NotDivisible);
}

TEST_CASE("theta_power_on_cauchy examples and k-fold theta oracle") {
  CHECK(theta_power_on_cauchy(1, 1, R(1, 2)) == P("-1/2"));
  CHECK(theta_power_on_cauchy(3, 0, R(1, 2)) == families::cauchy_p(3, R(1, 2), Var::y, Var::x));
  CHECK(theta_power_on_cauchy(2, 2, R(1, 2)) == P("3/8"));
  CHECK_THROWS_AS(theta_power_on_cauchy(2, 3, R(1, 2)), IndexError);
  for (const Rational &q : {R(1, 2), R(2, 3)})
    for (int n = 0; n <= 6; ++n) {
      Polynomial current = families::cauchy_p(n, q, Var::y, Var::x);
      for (int k = 0; k <= n; ++k) {
        CHECK(theta_power_on_cauchy(n, k, q) == current);
        current = theta(current, q);
      }
      CHECK(current.is_zero());
    }
}

TEST_CASE("theta^k on (xt)_inf/(yt)_inf is multiplication by (-t)^k") {
  for (const Rational &q : {R(1, 2), R(2, 3)}) {
    const Caps caps{6, 0};
    const auto f = euler_product(mono(Var::x, Var::t), q, caps) * euler_recip(mono(Var::y, Var::t), q, caps);
    TruncatedSeries current = f;
    for (int k = 0; k <= 6; ++k) {
      CHECK(current == f * Polynomial::variable(Var::t, k % 2 ? R(-1) : R(1), k));
      current = theta(current, q);
    }
  }
}

TEST_CASE("operator specs") {
  const Rational q = R(1, 2);
  const auto r = OperatorSpec::r(ScaledMonomial::of(Var::y), q);
  CHECK(r.kind == OperatorKind::E_tilde);
  CHECK(r.a.is_zero());
  const auto l = OperatorSpec::l(R(1), q);
  CHECK(l.kind == OperatorKind::L_tilde);
  CHECK(l.uses_theta());
  const auto e = OperatorSpec::e_tilde(R(1, 7), R(1), q);
  CHECK(e.weight(0) == 1);
  CHECK(e.weight(1) == R(-12, 7));
  CHECK(OperatorSpec::l_tilde(R(1, 7), R(1), q).weight(1) == R(12, 7));
}

TEST_CASE("apply_operator examples") {
  const Rational q = R(1, 2);
  const auto y = ScaledMonomial::of(Var::y);
  CHECK(apply_operator(OperatorSpec::e_tilde(R(1, 7), y, q), P("x")) == P("x - 6/7*y"));
  CHECK(apply_operator(OperatorSpec::e_tilde(0, y, q), P("x^2")) == P("x^2 - 3/2*x*y + 1/2*y^2"));
  CHECK(apply_operator(OperatorSpec::l_tilde(0, R(1), q), P("1")) == P("1"));
}

TEST_CASE("apply_operator on series") {
  const Rational q = R(1, 2);
  const Caps caps{5, 0};
  // R(y D_q) on 1/(xt)_inf gives (yt)_inf/(xt)_inf.
  const auto recip = euler_recip(mono(Var::x, Var::t), q, caps);
  CHECK(apply_operator(OperatorSpec::r(ScaledMonomial::of(Var::y), q), recip) ==
        euler_product(mono(Var::y, Var::t), q, caps) * recip);

  // b carrying t bounds k by the t cap; differentiating in s consumes the s cap.
  const TruncatedSeries f(P("1 + s + s^2 + s^3"), {2, 3});
  const auto g = apply_operator(OperatorSpec::e_tilde(0, ScaledMonomial::of(Var::t), q, Var::s), f);
  CHECK(g.caps() == Caps{2, 1});

  // A rational b on a series in s that never dies out cannot terminate.
  const TruncatedSeries h(P("1 + s + s^2"), {0, 2});
  CHECK_THROWS_AS(apply_operator(OperatorSpec::e_tilde(0, R(1), q, Var::s), h), NonTerminating);
}
