#include "qhahn/series.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "qhahn/errors.hpp"
#include "qhahn/qkernel.hpp"

namespace qhahn {

Caps min_caps(Caps a, Caps b) { return {std::min(a.t, b.t), std::min(a.s, b.s)}; }

ScaledMonomial ScaledMonomial::pow(unsigned n) const {
  Monomial m;
  for (unsigned i = 0; i < n; ++i)
    m = m * mono;
  return {coeff.pow(n), m};
}

// ---------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(const Polynomial &body, Caps caps)
    : body_(truncate(body, caps.t, caps.s)), caps_(caps) {}

TruncatedSeries TruncatedSeries::truncated(Caps caps) const {
  return {body_, min_caps(caps, caps_)};
}

Polynomial TruncatedSeries::coefficient(int i, int j) const {
  Polynomial r;
  for (const auto &[m, c] : body_.terms())
    if (static_cast<int>(m[Var::t]) == i && static_cast<int>(m[Var::s]) == j)
      r.add_term(m.with(Var::t, 0).with(Var::s, 0), c);
  return r;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o) {
  caps_ = min_caps(caps_, o.caps_);
  body_ = truncate(body_ + o.body_, caps_.t, caps_.s);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o) {
  caps_ = min_caps(caps_, o.caps_);
  body_ = truncate(body_ - o.body_, caps_.t, caps_.s);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &o) {
  caps_ = min_caps(caps_, o.caps_);
  body_ = mul_truncated(body_, o.body_, caps_.t, caps_.s);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Polynomial &p) {
  body_ = mul_truncated(body_, p, caps_.t, caps_.s);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &c) {
  body_ *= c;
  return *this;
}

std::string TruncatedSeries::to_string() const {
  return body_.to_string() + " (+O(t^" + std::to_string(caps_.t + 1) + ") + O(s^" +
         std::to_string(caps_.s + 1) + "))";
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f) { return os << f.to_string(); }

// ---------------------------------------------------------------- inverse

namespace {

using Grid = std::vector<std::vector<Polynomial>>;

Grid to_grid(const TruncatedSeries &f) {
  const Caps caps = f.caps();
  Grid g(static_cast<std::size_t>(caps.t + 1), std::vector<Polynomial>(static_cast<std::size_t>(caps.s + 1)));
  for (const auto &[m, c] : f.body().terms())
    g[m[Var::t]][m[Var::s]].add_term(m.with(Var::t, 0).with(Var::s, 0), c);
  return g;
}

} // namespace

TruncatedSeries series_invert(const TruncatedSeries &f) {
  const Caps caps = f.caps();
  const Grid c = to_grid(f);
  const Polynomial &c00 = c[0][0];
  if (c00.is_zero() || !c00.is_constant())
    throw NotInvertible("series_invert: constant term " + c00.to_string() + " is not a nonzero rational");
  const Rational inv00 = c00.terms().begin()->second.inverse();

  Grid g(c.size(), std::vector<Polynomial>(c[0].size()));
  g[0][0] = Polynomial(inv00);
  for (int i = 0; i <= caps.t; ++i) {
    for (int j = 0; j <= caps.s; ++j) {
      if (i == 0 && j == 0)
        continue;
      Polynomial acc;
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          if ((a == 0 && b == 0) || c[a][b].is_zero() || g[i - a][j - b].is_zero())
            continue;
          acc += c[a][b] * g[i - a][j - b];
        }
      g[i][j] = acc * (-inv00);
    }
  }
  Polynomial body;
  for (int i = 0; i <= caps.t; ++i)
    for (int j = 0; j <= caps.s; ++j)
      body += g[i][j] * Polynomial(1, Monomial::of({{Var::t, static_cast<unsigned>(i)},
                                                    {Var::s, static_cast<unsigned>(j)}}));
  return {body, caps};
}

// ------------------------------------------------------------- Pochhammers

Polynomial pochhammer_poly(const ScaledMonomial &w, const Rational &q, int n) {
  Polynomial r = 1;
  Rational qk = 1;
  for (int k = 0; k < n; ++k, qk *= q)
    r *= Polynomial(1) - ScaledMonomial(w.coeff * qk, w.mono).to_polynomial();
  return r;
}

TruncatedSeries pochhammer_series(const ScaledMonomial &w, const Rational &q, int n, Caps caps) {
  TruncatedSeries r = TruncatedSeries::one(caps);
  Rational qk = 1;
  for (int k = 0; k < n; ++k, qk *= q)
    r *= Polynomial(1) - ScaledMonomial(w.coeff * qk, w.mono).to_polynomial();
  return r;
}

namespace {

/// Largest k with k*deg_t(w) <= cap_t and k*deg_s(w) <= cap_s; w must carry t or s.
int power_bound(const Monomial &w, Caps caps) {
  int bound = std::numeric_limits<int>::max();
  if (w[Var::t] > 0)
    bound = std::min(bound, caps.t / static_cast<int>(w[Var::t]));
  if (w[Var::s] > 0)
    bound = std::min(bound, caps.s / static_cast<int>(w[Var::s]));
  return bound;
}

/// 1/(1 - w) as a geometric series.
TruncatedSeries geometric_inverse(const ScaledMonomial &w, Caps caps) {
  if (w.is_zero())
    return TruncatedSeries::one(caps);
  if (!w.has_series_content())
    throw NotInvertible("1/(1 - " + w.to_string() + ") has a non-constant leading coefficient");
  Polynomial body;
  const int K = power_bound(w.mono, caps);
  for (int k = 0; k <= K; ++k)
    body += w.pow(static_cast<unsigned>(k)).to_polynomial();
  return {body, caps};
}

} // namespace

TruncatedSeries pochhammer_inverse_series(const ScaledMonomial &w, const Rational &q, int n, Caps caps) {
  TruncatedSeries r = TruncatedSeries::one(caps);
  Rational qk = 1;
  for (int k = 0; k < n; ++k, qk *= q)
    r *= geometric_inverse(w * qk, caps);
  return r;
}

namespace {

TruncatedSeries euler_sum(const ScaledMonomial &w, const Rational &q, Caps caps, bool product_form) {
  if (w.is_zero())
    return TruncatedSeries::one(caps);
  if (!w.has_series_content())
    throw NonTerminating("Euler expansion of " + w.to_string() + " has no t/s content to truncate on");
  const int K = power_bound(w.mono, caps);
  Polynomial body;
  Rational qq = 1; // (q;q)_k
  for (int k = 0; k <= K; ++k) {
    if (k > 0)
      qq *= Rational(1) - q.pow(k);
    if (qq.is_zero())
      throw DenominatorPole("(q;q)_" + std::to_string(k) + " vanishes");
    Rational weight = qq.inverse();
    if (product_form) {
      weight *= qkernel::gauss_power(k, q);
      if (k % 2 == 1)
        weight = -weight;
    }
    body += (w.pow(static_cast<unsigned>(k)) * weight).to_polynomial();
  }
  return {body, caps};
}

} // namespace

TruncatedSeries euler_recip(const ScaledMonomial &w, const Rational &q, Caps caps) {
  return euler_sum(w, q, caps, false);
}

TruncatedSeries euler_product(const ScaledMonomial &w, const Rational &q, Caps caps) {
  return euler_sum(w, q, caps, true);
}

// -------------------------------------------------------------- phi series

std::optional<int> terminating_index(const Rational &a, const Rational &q) {
  if (a.is_zero() || q.is_zero())
    return std::nullopt;
  const Rational qa = q.abs();
  Rational aqk = a;
  for (int k = 0; k < 4096; ++k, aqk *= q) {
    if (aqk.is_one())
      return k;
    const Rational mag = aqk.abs();
    if (qa < Rational(1) && mag < Rational(1))
      return std::nullopt;
    if (qa > Rational(1) && mag > Rational(1))
      return std::nullopt;
    if (qa.is_one() && k >= 1)
      return std::nullopt;
  }
  return std::nullopt;
}

TruncatedSeries phi_series(std::span<const ScaledMonomial> numerator,
                           std::span<const ScaledMonomial> denominator, const Rational &q,
                           const ScaledMonomial &z, Caps caps) {
  if (z.is_zero())
    return TruncatedSeries::one(caps);

  std::optional<int> bound;
  if (z.has_series_content())
    bound = power_bound(z.mono, caps);
  for (const auto &a : numerator)
    if (a.is_scalar())
      if (auto k = terminating_index(a.coeff, q))
        bound = bound ? std::min(*bound, *k) : *k;
  if (!bound)
    throw NonTerminating("phi_series: argument " + z.to_string() +
                         " has no t/s content and no numerator parameter terminates the sum");

  const long excess = 1 + static_cast<long>(denominator.size()) - static_cast<long>(numerator.size());

  // Running m-dependent factors, updated with the (m-1)-th Pochhammer factor.
  Rational scalar = 1;
  TruncatedSeries poly_part = TruncatedSeries::one(caps);
  TruncatedSeries result(Polynomial(), caps);
  for (int m = 0; m <= *bound; ++m) {
    if (m > 0) {
      const Rational qm1 = q.pow(m - 1);
      for (const auto &a : numerator) {
        if (a.is_scalar())
          scalar *= Rational(1) - a.coeff * qm1;
        else
          poly_part *= Polynomial(1) - (a * qm1).to_polynomial();
      }
      for (const auto &b : denominator) {
        if (b.is_scalar()) {
          const Rational f = Rational(1) - b.coeff * qm1;
          if (f.is_zero())
            throw DenominatorPole("phi_series: (" + b.coeff.to_string() + ";q)_" + std::to_string(m) +
                                  " vanishes");
          scalar /= f;
        } else {
          poly_part *= geometric_inverse(b * qm1, caps);
        }
      }
      const Rational qf = Rational(1) - q.pow(m);
      if (qf.is_zero())
        throw DenominatorPole("phi_series: (q;q)_" + std::to_string(m) + " vanishes");
      scalar /= qf;
    }
    if (scalar.is_zero())
      break;
    Rational weight = scalar;
    if (excess != 0) {
      Rational sign_power = qkernel::gauss_power(m, q);
      if (m % 2 == 1)
        sign_power = -sign_power;
      weight *= sign_power.pow(excess);
    }
    TruncatedSeries term = poly_part * (z.pow(static_cast<unsigned>(m)) * weight).to_polynomial();
    result += term;
  }
  return result;
}

} // namespace qhahn
