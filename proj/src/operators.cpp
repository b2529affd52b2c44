#include "qhahn/operators.hpp"

#include <string>

#include "qhahn/errors.hpp"
#include "qhahn/families.hpp"
#include "qhahn/qkernel.hpp"

namespace qhahn::ops {

namespace {

constexpr int kMaxOperatorTerms = 4096;

bool is_series_var(Var v) { return v == Var::t || v == Var::s; }

} // namespace

Polynomial dq(const Polynomial &f, Var var, const Rational &q) {
  Polynomial r;
  for (const auto &[m, c] : f.terms()) {
    const unsigned n = m[var];
    if (n == 0)
      continue;
    r.add_term(m.with(var, n - 1), c * (Rational(1) - q.pow(n)));
  }
  return r;
}

TruncatedSeries dq(const TruncatedSeries &f, Var var, const Rational &q) {
  Caps caps = f.caps();
  if (var == Var::t || var == Var::s) {
    int &cap = var == Var::t ? caps.t : caps.s;
    if (cap == 0)
      throw NonTerminating(std::string("D_q in ") + var_name(var) + " with its cap already exhausted");
    --cap;
  }
  return {dq(f.body(), var, q), caps};
}

Polynomial dq_power(const Polynomial &f, Var var, const Rational &q, int n) {
  Polynomial r = f;
  for (int i = 0; i < n && !r.is_zero(); ++i)
    r = dq(r, var, q);
  return r;
}

Polynomial theta(const Polynomial &f, const Rational &q) {
  const Rational qinv = q.inverse();
  const Polynomial numerator = substitute_scale(f, Var::x, qinv) - substitute_scale(f, Var::y, q);
  if (numerator.is_zero())
    return {};
  const Polynomial divisor = Polynomial::variable(Var::x, qinv) - Polynomial::variable(Var::y);
  return divide_exact(numerator, divisor);
}

TruncatedSeries theta(const TruncatedSeries &f, const Rational &q) { return {theta(f.body(), q), f.caps()}; }

Polynomial theta_power_on_cauchy(int n, int k, const Rational &q) {
  if (k < 0 || k > n)
    throw IndexError("theta_power_on_cauchy: k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  Rational c = qkernel::q_pochhammer(q, q, n) / qkernel::q_pochhammer(q, q, n - k);
  if (k % 2 == 1)
    c = -c;
  return families::cauchy_p(n - k, q, Var::y, Var::x) * c;
}

OperatorSpec OperatorSpec::make(OperatorKind kind, const Rational &a, const ScaledMonomial &b, const Rational &q,
                                Var acts_on) {
  OperatorSpec op;
  op.b = b;
  op.q = q;
  op.acts_on = acts_on;
  switch (kind) {
  case OperatorKind::E_tilde:
  case OperatorKind::L_tilde:
    op.kind = kind;
    op.a = a;
    break;
  case OperatorKind::R:
    op.kind = OperatorKind::E_tilde;
    break;
  case OperatorKind::L:
    op.kind = OperatorKind::L_tilde;
    break;
  }
  return op;
}

Rational OperatorSpec::weight(int k) const {
  Rational w = qkernel::gauss_power(k, q) * qkernel::q_pochhammer(a, q, k) / qkernel::q_pochhammer(q, q, k);
  if (!uses_theta() && k % 2 == 1)
    w = -w;
  return w;
}

namespace {

Polynomial step(const OperatorSpec &op, const Polynomial &f) {
  return op.uses_theta() ? theta(f, op.q) : dq(f, op.acts_on, op.q);
}

TruncatedSeries step(const OperatorSpec &op, const TruncatedSeries &f) {
  return op.uses_theta() ? theta(f, op.q) : dq(f, op.acts_on, op.q);
}

} // namespace

Polynomial apply_operator(const OperatorSpec &op, const Polynomial &f) {
  Polynomial result;
  Polynomial current = f;
  const Polynomial b = op.b.to_polynomial();
  Polynomial bk = 1;
  for (int k = 0; !current.is_zero(); ++k) {
    if (k > kMaxOperatorTerms)
      throw NonTerminating("apply_operator: operator is not nilpotent on the input");
    result += current * bk * op.weight(k);
    bk *= b;
    current = step(op, current);
  }
  return result;
}

TruncatedSeries apply_operator(const OperatorSpec &op, const TruncatedSeries &f) {
  const bool differentiates_series_var = !op.uses_theta() && is_series_var(op.acts_on);
  const unsigned b_t = op.b.is_zero() ? 0 : op.b.mono[Var::t];
  const unsigned b_s = op.b.is_zero() ? 0 : op.b.mono[Var::s];

  Caps caps = f.caps();
  Polynomial result;
  TruncatedSeries current = f;
  for (int k = 0;; ++k) {
    if (k > kMaxOperatorTerms)
      throw NonTerminating("apply_operator: no bound on the operator series");
    caps = min_caps(caps, current.caps());
    const Polynomial bk = op.b.pow(static_cast<unsigned>(k)).to_polynomial();
    result += mul_truncated(current.body(), bk, caps.t, caps.s) * op.weight(k);

    const auto next = static_cast<int>(k + 1);
    if (op.b.is_zero() || (b_t > 0 && next * static_cast<int>(b_t) > caps.t) ||
        (b_s > 0 && next * static_cast<int>(b_s) > caps.s))
      break;
    if (differentiates_series_var) {
      const int cap = op.acts_on == Var::t ? current.caps().t : current.caps().s;
      if (cap == 0) {
        if (current.is_zero())
          break;
        throw NonTerminating("apply_operator: D_q exhausts the series cap before b bounds the sum");
      }
    }
    current = step(op, current);
    if (current.is_zero())
      break;
  }
  return {result, caps};
}

} // namespace qhahn::ops
