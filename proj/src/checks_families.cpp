// C11-C14: generating functions, operator representations, Rogers and
// Mehler formulas for p_n(x,y,a) and h_n(x,y,a,b|q).

#include "check_support.hpp"

namespace qhahn::verify::detail {

using namespace support;

namespace {

const ScaledMonomial xt_ = sm({{Var::x, 1}, {Var::t, 1}});
const ScaledMonomial yt_ = sm({{Var::y, 1}, {Var::t, 1}});
const ScaledMonomial xs_ = sm({{Var::x, 1}, {Var::s, 1}});
const ScaledMonomial ys_ = sm({{Var::y, 1}, {Var::s, 1}});

FamilyParams pgen(const CheckConfig &c) { return {c.q, c.param("a"), Rational(1)}; }
FamilyParams hahn(const CheckConfig &c) { return {c.q, c.param("a"), c.param("b")}; }

void c11a_pgen_gf(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = pgen(c);
  const auto lhs = t_generating([&](int n) { return families::cauchy_p_general(n, params); }, c.q, caps);
  const auto rhs = euler_recip(xt_, c.q, caps) * phi({params.a}, {zero}, c.q, yt_, caps);
  cmp.equal("sum p_n(x,y,a) t^n/(q)_n", lhs, rhs);
}

void c11b_pgen_ext(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = pgen(c);
  for (int k = 0; k <= c.max_shift; ++k) {
    const auto lhs =
        t_generating([&](int n) { return families::cauchy_p_general(n + k, params); }, c.q, caps);
    cmp.equal("sum p_{n+k}(x,y,a) t^n/(q)_n " + at({{"k", k}}), lhs, shifted_pgen_rhs(k, params.a, c.q, caps));
  }
  cmp.equal("k=0 collapse", shifted_pgen_rhs(0, params.a, c.q, caps),
            euler_recip(xt_, c.q, caps) * phi({params.a}, {zero}, c.q, yt_, caps));
}

void c11c_pgen_rogers(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = pgen(c);
  const auto lhs = ts_generating([&](int n) { return families::cauchy_p_general(n, params); }, c.q, caps);
  cmp.equal("sum p_{n+m}(x,y,a) t^n s^m/((q)_n (q)_m)", lhs, rogers_pgen_rhs(params.a, c.q, caps));
}

void c11d_pgen_mehler(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = pgen(c);
  const FamilyParams second{c.q, c.param("alpha"), Rational(1)};
  const auto lhs = t_generating(
      [&](int n) {
        return families::cauchy_p_general(n, params) * families::cauchy_p_general(n, second, Var::u, Var::v);
      },
      c.q, caps);
  const auto input = euler_recip(sm({{Var::u, 1}, {Var::x, 1}, {Var::t, 1}}), c.q, caps) *
                     phi({second.a}, {zero}, c.q, sm({{Var::v, 1}, {Var::x, 1}, {Var::t, 1}}), caps);
  const auto E = OperatorSpec::e_tilde(params.a, ScaledMonomial::of(Var::y), c.q);
  cmp.equal("sum p_n(x,y,a) p_n(u,v,alpha) t^n/(q)_n", lhs, ops::apply_operator(E, input));
}

void c12_e_on_power(const CheckConfig &c, Comparator &cmp) {
  const auto params = pgen(c);
  const auto y = ScaledMonomial::of(Var::y);
  const auto E = OperatorSpec::e_tilde(params.a, y, c.q);
  const auto E0 = OperatorSpec::e_tilde(0, y, c.q);
  for (int n = 0; n <= c.max_n; ++n) {
    const Polynomial xn = var(Var::x, n);
    cmp.equal("E(a,y;D_q) x^n " + at({{"n", n}}), ops::apply_operator(E, xn), families::cauchy_p_general(n, params));
    cmp.equal("R(yD_q) x^n " + at({{"n", n}}), ops::apply_operator(OperatorSpec::r(y, c.q), xn),
              families::cauchy_p(n, c.q));
    // E(0, y) against the R series written out term by term.
    Polynomial r_series;
    for (int k = 0; k <= n; ++k)
      r_series += sign(k) * gauss_power(k, c.q) / q_pochhammer(c.q, c.q, k) * var(Var::y, k) *
                  ops::dq_power(xn, Var::x, c.q, k);
    cmp.equal("E(0,y) = R(y) " + at({{"n", n}}), ops::apply_operator(E0, xn), r_series);
  }
}

void c13a_l_on_prod(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = hahn(c);
  const auto product = euler_product(xt_, c.q, caps) * euler_recip(yt_, c.q, caps);
  const auto L = OperatorSpec::l_tilde(params.a, params.b, c.q);
  cmp.equal("L(a,b;theta){(xt)/(yt)}", ops::apply_operator(L, product),
            product * phi({params.a}, {zero}, c.q, ScaledMonomial::of(Var::t, params.b.coeff), caps));
}

void c13b_l_on_cauchy(const CheckConfig &c, Comparator &cmp) {
  const auto params = hahn(c);
  const auto L = OperatorSpec::l_tilde(params.a, params.b, c.q);
  const auto L0 = OperatorSpec::l(params.b, c.q);
  for (int n = 0; n <= c.max_n; ++n) {
    const Polynomial pyx = families::cauchy_p(n, c.q, Var::y, Var::x);
    cmp.equal("L(a,b;theta) p_n(y,x) " + at({{"n", n}}), ops::apply_operator(L, pyx), families::hahn_h(n, params));
    cmp.equal("L(b;theta) p_n(y,x) " + at({{"n", n}}), ops::apply_operator(L0, pyx),
              families::hahn_h(n, {c.q, 0, params.b}));
    // L(0, b) against its series written out with repeated theta.
    Polynomial l_series;
    Polynomial current = pyx;
    for (int k = 0; k <= n; ++k) {
      l_series += gauss_power(k, c.q) / q_pochhammer(c.q, c.q, k) * params.b.coeff.pow(k) * current;
      current = ops::theta(current, c.q);
    }
    cmp.equal("L(0,b) = L(b) " + at({{"n", n}}), ops::apply_operator(L0, pyx), l_series);
  }
}

TruncatedSeries hahn_gf_rhs(const FamilyParams &p, Caps caps) {
  return euler_product(xt_, p.q, caps) * euler_recip(yt_, p.q, caps) *
         phi({p.a}, {zero}, p.q, ScaledMonomial::of(Var::t, p.b.coeff), caps);
}

void c14a_h_gf(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = hahn(c);
  FamilyParams lhs_params = params;
  if (c.perturb_h_b)
    lhs_params.b.coeff += *c.perturb_h_b;
  const auto lhs = t_generating([&](int n) { return families::hahn_h(n, lhs_params); }, c.q, caps);
  cmp.equal("sum h_n t^n/(q)_n", lhs, hahn_gf_rhs(params, caps));
}

void c14b_h_ext(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = hahn(c);
  const auto L = OperatorSpec::l_tilde(params.a, params.b, c.q);
  const auto base = euler_product(xt_, c.q, caps) * euler_recip(yt_, c.q, caps);
  auto rhs_for = [&](int k) {
    const auto pk = families::cauchy_p(k, c.q, Var::y, Var::x);
    return ops::apply_operator(L, pk * base * series_invert(pochhammer_series(xt_, c.q, k, caps)));
  };
  for (int k = 0; k <= c.max_shift; ++k) {
    const auto lhs = t_generating([&](int n) { return families::hahn_h(n + k, params); }, c.q, caps);
    cmp.equal("sum h_{n+k} t^n/(q)_n " + at({{"k", k}}), lhs, rhs_for(k));
  }
  cmp.equal("k=0 collapse", rhs_for(0), hahn_gf_rhs(params, caps));
}

void c14c_h_rogers(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = hahn(c);
  const auto L = OperatorSpec::l_tilde(params.a, params.b, c.q);
  const auto lhs = ts_generating([&](int n) { return families::hahn_h(n, params); }, c.q, caps);

  // 2Phi1(x/y, 0; xs | q; yt) through (x/y;q)_n (yt)^n = p_n(y,x) t^n.
  TruncatedSeries two_phi_one(Polynomial(), caps);
  for (int n = 0; n <= caps.t; ++n)
    two_phi_one += families::cauchy_p(n, c.q, Var::y, Var::x) * var(Var::t, n) *
                   q_pochhammer(c.q, c.q, n).inverse() * pochhammer_inverse_series(xs_, c.q, n, caps);
  const auto prefactor = euler_product(xs_, c.q, caps) * euler_recip(ys_, c.q, caps);
  const auto rhs1 = ops::apply_operator(L, prefactor * two_phi_one);
  const auto rhs2 = ops::apply_operator(
      L, prefactor * euler_recip(yt_, c.q, caps) * phi({ys_}, {xs_}, c.q, xt_, caps));
  cmp.equal("double sum = L{(xs)/(ys) 2Phi1}", lhs, rhs1);
  cmp.equal("double sum = L{(xs)/(yt,ys) 1Phi1}", lhs, rhs2);
  cmp.equal("2Phi1 form = 1Phi1 form", rhs1, rhs2);
}

void c14d_h_mehler(const CheckConfig &c, Comparator &cmp) {
  const Caps caps = c.caps();
  const auto params = hahn(c);
  const FamilyParams second{c.q, c.param("c"), c.param("d")};
  const auto lhs = t_generating(
      [&](int n) { return families::hahn_h(n, params) * families::hahn_h(n, second, Var::u, Var::v); }, c.q, caps);

  // 3Phi3(x/y, u/v, c; 0, 0, xt | q; d v y t) with (x/y;q)_k y^k = p_k(y,x)
  // and (u/v;q)_k v^k = p_k(v,u).
  TruncatedSeries three_phi_three(Polynomial(), caps);
  for (int k = 0; k <= caps.t; ++k) {
    const Rational coeff =
        sign(k) * gauss_power(k, c.q) * q_pochhammer(second.a, c.q, k) * second.b.coeff.pow(k) / q_pochhammer(c.q, c.q, k);
    three_phi_three += coeff * families::cauchy_p(k, c.q, Var::y, Var::x) * families::cauchy_p(k, c.q, Var::v, Var::u) *
                       var(Var::t, k) * pochhammer_inverse_series(xt_, c.q, k, caps);
  }
  const auto input = euler_product(xt_, c.q, caps) * euler_recip(yt_, c.q, caps) * three_phi_three;
  const auto L = OperatorSpec::l_tilde(params.a, params.b, c.q);
  cmp.equal("sum h_n(x,y,a,b) h_n(u,v,c,d) t^n/(q)_n", lhs, ops::apply_operator(L, input));
}

} // namespace

void add_family_checks(std::vector<CheckEntry> &out) {
  const auto add = [&](std::string name, std::string description, CheckFn fn) {
    out.push_back({std::move(name), Mode::exact, std::move(description), std::move(fn)});
  };
  add("C11a.pgen_gf", "sum p_n(x,y,a) t^n/(q;q)_n = 1Phi1(a;0|q;yt)/(xt;q)_inf", c11a_pgen_gf);
  add("C11b.pgen_ext", "sum p_{n+k}(x,y,a) t^n/(q;q)_n as a 3Phi2 sum, k <= max_shift", c11b_pgen_ext);
  add("C11c.pgen_rogers", "Rogers-type double sum for p_n(x,y,a)", c11c_pgen_rogers);
  add("C11d.pgen_mehler", "Mehler-type sum p_n(x,y,a) p_n(u,v,alpha) via E(a,y;D_q)", c11d_pgen_mehler);
  add("C12.E_on_power", "E(a,y;D_q) x^n = p_n(x,y,a), n <= max_n", c12_e_on_power);
  add("C13a.L_on_prod", "L(a,b;theta) on (xt;q)_inf/(yt;q)_inf", c13a_l_on_prod);
  add("C13b.L_on_cauchy", "L(a,b;theta) p_n(y,x) = h_n(x,y,a,b), n <= max_n", c13b_l_on_cauchy);
  add("C14a.h_gf", "sum h_n t^n/(q;q)_n = (xt)/(yt) 1Phi1(a;0|q;bt)", c14a_h_gf);
  add("C14b.h_ext", "sum h_{n+k} t^n/(q;q)_n via L(a,b;theta), k <= max_shift", c14b_h_ext);
  add("C14c.h_rogers", "Rogers-type double sum for h_n in 2Phi1 and 1Phi1 forms", c14c_h_rogers);
  add("C14d.h_mehler", "Mehler-type sum h_n(x,y,a,b) h_n(u,v,c,d) as L(a,b;theta) over a 3Phi3", c14d_h_mehler);
}

} // namespace qhahn::verify::detail
