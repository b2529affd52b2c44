// C15: certified numeric versions of C2, C3 and C11a at a rational point.
//
// Partial sums stop at n = 40. For the p_n(x,y,a) series the q-binomial
// theorem gives |p_n(x,y,a)| <= A prod_{j<n} (|x| + q^j |y|) with
// A >= sup_k |(a;q)_k|, and the ratio of consecutive bounds
// (|x| + q^n |y|) |t| / (1 - q^{n+1}) decreases in n, so the tail after N is
// geometric with ratio (|x| + q^{N+1} |y|) |t| / (1 - q^{N+2}).

#include "check_support.hpp"
#include "qhahn/numeric.hpp"

namespace qhahn::verify::detail {

using namespace support;
using numeric::CertifiedValue;

namespace {

constexpr int kTerms = 40;

const Rational &eps() {
  static const Rational value = Rational(mpq_class(mpz_class(1), mpz_class("1" + std::string(30, '0'))));
  return value;
}

/// sum_{n <= N} P_n(x,y) t^n/(q;q)_n with the tail bound above.
CertifiedValue cauchy_type_sum(const CheckConfig &c, const Rational &a, bool general) {
  const Rational &q = c.q;
  const Rational &x = c.param("x"), &y = c.param("y"), &t = c.param("t");
  const Assignment point{{Var::x, x}, {Var::y, y}};
  const FamilyParams params{q, a, Rational(1)};
  Rational sum = 0;
  for (int n = 0; n <= kTerms; ++n) {
    const Polynomial p = general ? families::cauchy_p_general(n, params) : families::cauchy_p(n, q);
    sum += eval(p, point) * t.pow(n) / q_pochhammer(q, q, n);
  }
  Rational first = general ? numeric::pochhammer_abs_upper(a, q) : Rational(1);
  for (int j = 0; j <= kTerms; ++j)
    first *= x.abs() + q.pow(j) * y.abs();
  first *= t.abs().pow(kTerms + 1) / q_pochhammer(q, q, kTerms + 1);
  const Rational ratio = (x.abs() + q.pow(kTerms + 1) * y.abs()) * t.abs() / (Rational(1) - q.pow(kTerms + 2));
  return numeric::with_geometric_tail(sum, first, ratio);
}

void c15_numeric_spot(const CheckConfig &c, Comparator &cmp) {
  const Rational &q = c.q;
  const Rational &a = c.param("a");
  const Rational &x = c.param("x"), &y = c.param("y"), &t = c.param("t");
  const Rational z = x * t;

  // 1Phi0(a; - | q; z) = (az;q)_inf / (z;q)_inf
  Rational sum = 0;
  Rational term = 1;
  for (int k = 0; k <= kTerms; ++k) {
    sum += term;
    term *= (Rational(1) - a * q.pow(k)) * z / (Rational(1) - q.pow(k + 1));
  }
  const Rational ratio = (Rational(1) + a.abs() * q.pow(kTerms + 1)) * z.abs() / (Rational(1) - q.pow(kTerms + 2));
  const CertifiedValue binomial_lhs = numeric::with_geometric_tail(sum, term, ratio);
  const CertifiedValue binomial_rhs = numeric::qpochhammer_inf(a * z, q, eps()) / numeric::qpochhammer_inf(z, q, eps());
  const std::vector<Rational> num{a};
  cmp.agree("q-binomial partial sum", binomial_lhs, binomial_rhs);
  cmp.agree("q-binomial phi_numeric", numeric::phi_numeric(num, {}, q, z, eps()), binomial_rhs);

  // sum p_n(x,y) t^n/(q)_n = (yt;q)_inf / (xt;q)_inf
  cmp.agree("Cauchy generating function", cauchy_type_sum(c, 0, false),
            numeric::qpochhammer_inf(y * t, q, eps()) / numeric::qpochhammer_inf(z, q, eps()));

  // sum p_n(x,y,a) t^n/(q)_n = 1Phi1(a; 0 | q; yt) / (xt;q)_inf
  const std::vector<Rational> den{Rational(0)};
  cmp.agree("p_n(x,y,a) generating function", cauchy_type_sum(c, a, true),
            numeric::phi_numeric(num, den, q, y * t, eps()) / numeric::qpochhammer_inf(z, q, eps()));
}

} // namespace

void add_numeric_checks(std::vector<CheckEntry> &out) {
  out.push_back({"C15.numeric_spot", Mode::numeric,
                 "certified numeric q-binomial, Cauchy and p_n(x,y,a) generating functions at (x,y,t)",
                 c15_numeric_spot});
}

} // namespace qhahn::verify::detail
