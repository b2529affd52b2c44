// C1-C10: Euler pair, q-binomial theorem, Cauchy polynomials, q-derivative
// rules and the operator actions of R and E-tilde on series.

#include <random>

#include "check_support.hpp"

namespace qhahn::verify::detail {

using namespace support;

namespace {

void c1_euler_pair(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  const auto ys = sm({{Var::y, 1}, {Var::s, 1}});
  const auto one = TruncatedSeries::one(caps);
  cmp.equal("(xt)_inf / (xt)_inf", euler_product(xt, c.q, caps) * euler_recip(xt, c.q, caps), one);
  cmp.equal("(ys)_inf / (ys)_inf", euler_product(ys, c.q, caps) * euler_recip(ys, c.q, caps), one);
}

void c2_q_binomial_theorem(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const Rational &a = c.param("a");
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  cmp.equal("1Phi0(a;-;xt)", phi({a}, {}, c.q, xt, caps),
            euler_product(xt * a, c.q, caps) * euler_recip(xt, c.q, caps));
}

void c3_cauchy_gf(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto lhs = t_generating([&](int n) { return families::cauchy_p(n, c.q); }, c.q, caps);
  const auto rhs = euler_product(sm({{Var::y, 1}, {Var::t, 1}}), c.q, caps) *
                   euler_recip(sm({{Var::x, 1}, {Var::t, 1}}), c.q, caps);
  cmp.equal("sum p_n(x,y) t^n/(q)_n", lhs, rhs);
}

void c4_cauchy_symmetry(const CheckConfig &c, Comparator &cmp) {
  for (int n = 0; n <= c.max_n; ++n) {
    cmp.require("p_n(x,y) = (-1)^n q^C(n,2) p_n(y, q^{1-n} x)", at({{"n", n}}),
                families::cauchy_symmetry_check(n, c.q));
    for (int k = 0; k <= n; ++k)
      cmp.require("shifted symmetry", at({{"n", n}, {"k", k}}), families::shifted_symmetry_check(n, k, c.q));
  }
}

Polynomial random_poly(std::mt19937_64 &rng) {
  const unsigned degree = static_cast<unsigned>(rng() % 5);
  Polynomial p;
  for (unsigned e = 0; e <= degree; ++e) {
    const long coeff = static_cast<long>(rng() % 19) - 9;
    p += Polynomial::variable(Var::x, coeff, e);
  }
  return p;
}

void c5_leibniz(const CheckConfig &c, Comparator &cmp) {
  std::mt19937_64 rng(c.seed);
  for (int pair = 0; pair < 100; ++pair) {
    const Polynomial f = random_poly(rng);
    const Polynomial g = random_poly(rng);
    for (int n = 0; n <= 4; ++n) {
      Polynomial rhs;
      for (int k = 0; k <= n; ++k) {
        const Polynomial g_scaled = substitute_scale(g, Var::x, c.q.pow(k));
        rhs += q_binomial(n, k, c.q) * c.q.pow(static_cast<long>(k) * (k - n)) *
               ops::dq_power(f, Var::x, c.q, k) * ops::dq_power(g_scaled, Var::x, c.q, n - k);
      }
      cmp.equal("Leibniz " + at({{"pair", pair}, {"n", n}}), ops::dq_power(f * g, Var::x, c.q, n), rhs);
    }
  }
}

void c5b_vandermonde_aux(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (int k = 0; k <= 5; ++k) {
        Rational rhs = 0;
        for (int j = 0; j <= k; ++j)
          rhs += q_binomial(k, j, q) * q.pow(static_cast<long>(j) * (j - k + m)) *
                 q_pochhammer(q.pow(n - j + 1), q, j) * q_pochhammer(q.pow(m - k + j + 1), q, k - j);
        cmp.equal("(q^{n+m-k+1};q)_k sum", at({{"n", n}, {"m", m}, {"k", k}}),
                  q_pochhammer(q.pow(n + m - k + 1), q, k), rhs);
      }
}

void c6_dq_closed_forms(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  for (int k = 0; k <= 6; ++k)
    for (int n = 0; n <= k + 1; ++n) {
      const Polynomial expected =
          n > k ? Polynomial() : Polynomial::variable(Var::x, q_pochhammer(q.pow(k - n + 1), q, n), k - n);
      cmp.equal("D^n x^k " + at({{"n", n}, {"k", k}}), ops::dq_power(var(Var::x, k), Var::x, q, n), expected);
    }

  const Caps caps{c.cap_t, 0};
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  TruncatedSeries lhs = euler_product(xt, q, caps);
  const TruncatedSeries product = lhs;
  for (int n = 0; n <= c.cap_t; ++n) {
    const TruncatedSeries rhs = sign(n) * gauss_power(n, q) * var(Var::t, n) * product *
                                pochhammer_inverse_series(xt, q, n, caps);
    cmp.equal("D^n (xt)_inf " + at({{"n", n}}), lhs, rhs);
    lhs = ops::dq(lhs, Var::x, q);
  }
}

// The capped variable t stands in for the argument of 1Phi1(a; 0 | q; b x).
void c7_dq_phi(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Rational &a = c.param("a");
  const Rational &b = c.param("b");
  constexpr int kMaxOrder = 4;
  const Caps target{c.cap_t, 0};
  TruncatedSeries lhs = phi({a}, {zero}, q, ScaledMonomial::of(Var::t, b), {c.cap_t + kMaxOrder, 0});
  for (int n = 0; n <= kMaxOrder; ++n) {
    const TruncatedSeries rhs = sign(n) * b.pow(n) * q_pochhammer(a, q, n) * gauss_power(n, q) *
                                phi({a * q.pow(n)}, {zero}, q, ScaledMonomial::of(Var::t, b * q.pow(n)), target);
    cmp.equal("D^n 1Phi1 " + at({{"n", n}}), lhs.truncated(target), rhs);
    lhs = ops::dq(lhs, Var::t, q);
  }
}

/// sum_m (lambda;q)_m p_m(x,y) t^m / ((ys;q)_m (q;q)_m): 2Phi1(lambda, y/x; ys | q; xt)
/// with (y/x;q)_m (xt)^m = p_m(x,y) t^m.
TruncatedSeries two_phi_one_homogenized(const Rational &lambda, const Rational &q, Caps caps) {
  const auto ys = sm({{Var::y, 1}, {Var::s, 1}});
  TruncatedSeries out = TruncatedSeries(Polynomial(), caps);
  for (int m = 0; m <= caps.t; ++m)
    out += (q_pochhammer(lambda, q, m) / q_pochhammer(q, q, m)) * families::cauchy_p(m, q) * var(Var::t, m) *
           pochhammer_inverse_series(ys, q, m, caps);
  return out;
}

void c8_r_actions(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Caps caps = c.caps();
  const Rational &lambda = c.param("v_ratio");
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  const auto xs = sm({{Var::x, 1}, {Var::s, 1}});
  const auto yt = sm({{Var::y, 1}, {Var::t, 1}});
  const auto ys = sm({{Var::y, 1}, {Var::s, 1}});
  const auto R = OperatorSpec::r(ScaledMonomial::of(Var::y), q);

  const auto recip_xt = euler_recip(xt, q, caps);
  const auto recip_xs = euler_recip(xs, q, caps);
  cmp.equal("R{1/(xt)}", ops::apply_operator(R, recip_xt), euler_product(yt, q, caps) * recip_xt);

  const auto recip_both = recip_xt * recip_xs;
  const auto ratio_s = euler_product(ys, q, caps) * recip_xs;
  cmp.equal("R{1/(xt,xs)}", ops::apply_operator(R, recip_both),
            euler_product(ys, q, caps) * recip_both * phi({xs}, {ys}, q, yt, caps));

  // v = lambda t keeps (xv;q)_inf a formal series.
  const auto xv = sm(lambda, {{Var::x, 1}, {Var::t, 1}});
  cmp.equal("R{(xv)/(xt,xs)}", ops::apply_operator(R, euler_product(xv, q, caps) * recip_both),
            ratio_s * two_phi_one_homogenized(lambda, q, caps));
  cmp.equal("R{1/(xt,xs)} at v=0", ops::apply_operator(R, recip_both),
            ratio_s * two_phi_one_homogenized(0, q, caps));
  cmp.equal("2Phi1(y/x,0;ys;xt) transformation", two_phi_one_homogenized(0, q, caps),
            recip_xt * phi({xs}, {ys}, q, yt, caps));
}

void c9a_e_on_euler(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Caps caps = c.caps();
  const auto E = OperatorSpec::e_tilde(c.param("a"), ScaledMonomial::of(Var::y), q);
  const auto recip_xt = euler_recip(sm({{Var::x, 1}, {Var::t, 1}}), q, caps);
  cmp.equal("E{1/(xt)}", ops::apply_operator(E, recip_xt),
            recip_xt * phi({c.param("a")}, {zero}, q, sm({{Var::y, 1}, {Var::t, 1}}), caps));
}

void c9b_e_on_euler_pair(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Caps caps = c.caps();
  const auto E = OperatorSpec::e_tilde(c.param("a"), ScaledMonomial::of(Var::y), q);
  const auto input =
      euler_recip(sm({{Var::x, 1}, {Var::t, 1}}), q, caps) * euler_recip(sm({{Var::x, 1}, {Var::s, 1}}), q, caps);
  cmp.equal("E{1/(xt,xs)}", ops::apply_operator(E, input), rogers_pgen_rhs(c.param("a"), q, caps));
}

void c9c_e_on_power_euler(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Caps caps = c.caps();
  const Rational &a = c.param("a");
  const auto E = OperatorSpec::e_tilde(a, ScaledMonomial::of(Var::y), q);
  const auto recip_xt = euler_recip(sm({{Var::x, 1}, {Var::t, 1}}), q, caps);
  for (int k = 0; k <= c.max_shift; ++k)
    cmp.equal("E{x^k/(xt)} " + at({{"k", k}}), ops::apply_operator(E, var(Var::x, k) * recip_xt),
              shifted_pgen_rhs(k, a, q, caps));
  cmp.equal("k=0 collapse", shifted_pgen_rhs(0, a, q, caps),
            recip_xt * phi({a}, {zero}, q, sm({{Var::y, 1}, {Var::t, 1}}), caps));
}

void c10_E_triple_sum(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Rational &a = c.param("a");
  const Rational &b = c.param("b");
  const Caps caps = c.caps();
  const auto xs = sm({{Var::x, 1}, {Var::s, 1}});
  const auto ys = sm({{Var::y, 1}, {Var::s, 1}});

  // Each D_q in s consumes one power of s; t^k pairs with D_q^k, so the
  // input needs cap_t extra powers of s.
  const Caps wide{c.cap_t, c.cap_s + c.cap_t};
  const auto input = euler_product(ys, q, wide) * euler_recip(xs, q, wide) *
                     phi({a}, {zero}, q, ScaledMonomial::of(Var::s, b), wide);
  const auto E = OperatorSpec::e_tilde(a, ScaledMonomial::of(Var::t), q, Var::s);
  const auto lhs = ops::apply_operator(E, input);

  std::vector<TruncatedSeries> ratio; // (xs;q)_k / (ys;q)_k
  for (int k = 0; k <= c.cap_t; ++k)
    ratio.push_back(pochhammer_series(xs, q, k, caps) * pochhammer_inverse_series(ys, q, k, caps));

  TruncatedSeries sum(Polynomial(), caps);
  for (int n = 0; n <= c.cap_t; ++n)
    for (int N = n; N <= c.cap_t; ++N) {
      const auto inner = phi({a * q.pow(n)}, {zero}, q, ScaledMonomial::of(Var::s, b * q.pow(N)), caps);
      for (int k = 0; k <= N - n; ++k) {
        const int j = N - n - k;
        const Rational coeff = sign(j) * gauss_power(k, q) * gauss_power(n, q) * gauss_power(N, q) *
                               q_pochhammer(a, q, n) * q_pochhammer(a, q, N) * b.pow(n) /
                               (q_pochhammer(q, q, k) * q_pochhammer(q, q, n) * q_pochhammer(q, q, j));
        const Polynomial mono(coeff, Monomial::of({{Var::x, static_cast<unsigned>(j)},
                                                   {Var::y, static_cast<unsigned>(k)},
                                                   {Var::t, static_cast<unsigned>(N)}}));
        sum += mono * ratio[static_cast<std::size_t>(k)] * inner;
      }
    }
  const auto rhs = euler_product(ys, q, caps) * euler_recip(xs, q, caps) * sum;
  cmp.equal("E(a,t;D_s) on (ys)/(xs) 1Phi1(a;0;bs)", lhs, rhs);
}

} // namespace

} // namespace qhahn::verify::detail

namespace qhahn::verify::support {

TruncatedSeries shifted_pgen_rhs(int k, const Rational &a, const Rational &q, Caps caps) {
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  TruncatedSeries sum(Polynomial(), caps);
  for (int n = 0; n <= caps.t; ++n) {
    Polynomial inner;
    for (int m = 0; m <= k; ++m) {
      const Rational coeff = q_pochhammer(q.pow(-k), q, m) * q_pochhammer(a * q.pow(n), q, m) *
                             q.pow(static_cast<long>(n + k) * m) / q_pochhammer(q, q, m);
      inner += coeff * pochhammer_poly(xt, q, m) *
               Polynomial(1, Monomial::of({{Var::x, static_cast<unsigned>(k - m)}, {Var::y, static_cast<unsigned>(m)}}));
    }
    const Rational outer = sign(n) * gauss_power(n, q) * q_pochhammer(a, q, n) / q_pochhammer(q, q, n);
    sum += TruncatedSeries(outer * Polynomial(1, Monomial::of({{Var::y, static_cast<unsigned>(n)},
                                                               {Var::t, static_cast<unsigned>(n)}})) *
                               inner,
                           caps);
  }
  return euler_recip(xt, q, caps) * sum;
}

TruncatedSeries rogers_pgen_rhs(const Rational &a, const Rational &q, Caps caps) {
  const auto xt = sm({{Var::x, 1}, {Var::t, 1}});
  const auto xs = sm({{Var::x, 1}, {Var::s, 1}});
  TruncatedSeries sum(Polynomial(), caps);
  for (int n = 0; n <= caps.s; ++n) {
    const Rational outer = sign(n) * gauss_power(n, q) * q_pochhammer(a, q, n) / q_pochhammer(q, q, n);
    const Polynomial mono(outer, Monomial::of({{Var::y, static_cast<unsigned>(n)}, {Var::s, static_cast<unsigned>(n)}}));
    sum += mono * phi({a * q.pow(n), xs}, {zero, zero}, q, sm(q.pow(n), {{Var::y, 1}, {Var::t, 1}}), caps);
  }
  return euler_recip(xt, q, caps) * euler_recip(xs, q, caps) * sum;
}

} // namespace qhahn::verify::support

namespace qhahn::verify::detail {

void add_formal_checks(std::vector<CheckEntry> &out) {
  const auto add = [&](std::string name, std::string description, CheckFn fn) {
    out.push_back({std::move(name), Mode::exact, std::move(description), std::move(fn)});
  };
  add("C1.euler_pair", "(xt;q)_inf * 1/(xt;q)_inf = 1", c1_euler_pair);
  add("C2.q_binomial_theorem", "1Phi0(a;-|q;xt) = (axt;q)_inf/(xt;q)_inf", c2_q_binomial_theorem);
  add("C3.cauchy_gf", "sum p_n(x,y) t^n/(q;q)_n = (yt;q)_inf/(xt;q)_inf", c3_cauchy_gf);
  add("C4.cauchy_symmetry", "p_n(x,y) reflection and shifted reflection, n <= max_n", c4_cauchy_symmetry);
  add("C5.leibniz", "q-Leibniz rule on 100 seeded random polynomial pairs, n <= 4", c5_leibniz);
  add("C5b.vandermonde_aux", "(q^{n+m-k+1};q)_k as a q-binomial sum, n,m,k <= 5", c5b_vandermonde_aux);
  add("C6.dq_closed_forms", "D_q^n x^k and D_q^n (xt;q)_inf in closed form", c6_dq_closed_forms);
  add("C7.dq_phi", "D_q^n 1Phi1(a;0|q;bx) in closed form", c7_dq_phi);
  add("C8.R_actions", "R(yD_q) on 1/(xt), 1/(xt,xs), (xv)/(xt,xs) and the 2Phi1 transformation", c8_r_actions);
  add("C9a.E_on_euler", "E(a,y;D_q) on 1/(xt;q)_inf", c9a_e_on_euler);
  add("C9b.E_on_euler_pair", "E(a,y;D_q) on 1/(xt,xs;q)_inf", c9b_e_on_euler_pair);
  add("C9c.E_on_power_euler", "E(a,y;D_q) on x^k/(xt;q)_inf, k <= max_shift", c9c_e_on_power_euler);
  add("C10.E_triple_sum", "E(a,t;D_q) acting on s over (ys)/(xs) 1Phi1(a;0|q;bs)", c10_E_triple_sum);
}

} // namespace qhahn::verify::detail
