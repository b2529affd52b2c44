#pragma once

#include <span>
#include <string>

#include "qhahn/rational.hpp"

/// Certified evaluation of infinite q-products and basic hypergeometric series
/// at rational points, with every error bound an exact rational.
///
/// Tail bounds used here:
///
/// * Products. With S = |a| q^K / (1 - q) <= 1 and 0 < q < 1,
///   |prod_{k>=K} (1 - a q^k) - 1| <= prod_{k>=K} (1 + |a| q^k) - 1
///   <= exp(S) - 1 <= (e - 1) S <= 2 S, so |(a;q)_inf - (a;q)_K| <= 2 S |(a;q)_K|.
///   The same estimate gives prod_{k>=K} (1 + |a| q^k) <= 1 + 2 S, hence an
///   upper bound U on every |(a;q)_n|. The partial product is rounded to a
///   decimal grid after each factor; K roundings of size <= 1/(2 den), each
///   later scaled by at most U, add K U / (2 den).
///
/// * Series. If |T_{m+1} / T_m| <= rho < 1 for every m >= M, then
///   sum_{m>=M} |T_m| <= |T_M| / (1 - rho). For r_Phi_s with e = 1 + s - r >= 0,
///   for m >= M the ratio is bounded by
///   rho_M = q^{M e} prod_i (1 + |a_i| q^M) / prod_j (1 - |b_j| q^M) * |z| / (1 - q^{M+1}),
///   valid once every |b_j| q^M < 1.
///
/// Approximations are rounded to a decimal grid below eps/4; the rounding error
/// is added to the bound, which itself is rounded up.
namespace qhahn::numeric {

struct CertifiedValue {
  Rational approx;
  Rational error_bound;

  bool is_exact() const { return error_bound.is_zero(); }
  Rational lower() const { return approx - error_bound; }
  Rational upper() const { return approx + error_bound; }
  bool contains(const Rational &v) const { return lower() <= v && v <= upper(); }
  /// "approx ± bound"
  std::string to_string() const;
};

CertifiedValue operator+(const CertifiedValue &a, const CertifiedValue &b);
CertifiedValue operator-(const CertifiedValue &a, const CertifiedValue &b);
CertifiedValue operator*(const CertifiedValue &a, const CertifiedValue &b);
/// Throws DomainError when b's interval contains 0.
CertifiedValue operator/(const CertifiedValue &a, const CertifiedValue &b);

/// True iff the two intervals intersect: |a - b| <= bound_a + bound_b.
bool agree(const CertifiedValue &a, const CertifiedValue &b);

/// (a;q)_inf with error_bound <= eps. Requires 0 < q < 1 and eps > 0 (DomainError).
CertifiedValue qpochhammer_inf(const Rational &a, const Rational &q, const Rational &eps);

/// r_Phi_s at a rational argument with error_bound <= eps. Terminating series
/// (a numerator parameter q^{-k}) are summed exactly.
/// Throws DomainError, DenominatorPole or NonConvergent.
CertifiedValue phi_numeric(std::span<const Rational> numerator, std::span<const Rational> denominator,
                           const Rational &q, const Rational &z, const Rational &eps);

/// Upper bound on prod_{k>=0} (1 + |a| q^k), hence on every |(a;q)_n|.
Rational pochhammer_abs_upper(const Rational &a, const Rational &q);

/// A partial sum plus a geometric tail: the first omitted term is bounded by
/// first_omitted and later ratios by ratio (< 1, else NonConvergent).
CertifiedValue with_geometric_tail(const Rational &partial_sum, const Rational &first_omitted,
                                   const Rational &ratio);

} // namespace qhahn::numeric
