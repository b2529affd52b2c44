#include "qhahn/numeric.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "qhahn/errors.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/series.hpp"

namespace qhahn::numeric {

namespace {

constexpr int kHorizon = 4000;

void require_unit_interval(const Rational &q) {
  if (!(Rational(0) < q && q < Rational(1)))
    throw DomainError("numeric evaluation needs 0 < q < 1, got q = " + q.to_string());
}

void require_positive(const Rational &eps) {
  if (eps.sign() <= 0)
    throw DomainError("eps must be positive");
}

/// Rounds a value whose truncation error is at most `bound` (<= eps/2) onto a
/// decimal grid, keeping the total bound <= eps.
CertifiedValue finalize(const Rational &value, const Rational &bound, const Rational &eps) {
  if (bound.is_zero())
    return {value, 0};
  mpz_class den = 1;
  const Rational quarter = eps / Rational(4);
  while (Rational(mpq_class(1, den)) > quarter)
    den *= 10;
  const Rational rounded = round_to(value, den);
  const Rational total = bound + (rounded - value).abs();
  return {rounded, round_up_to(total, den * 10)};
}

} // namespace

std::string CertifiedValue::to_string() const {
  return approx.to_string() + " \xC2\xB1 " + error_bound.to_string();
}

CertifiedValue operator+(const CertifiedValue &a, const CertifiedValue &b) {
  return {a.approx + b.approx, a.error_bound + b.error_bound};
}

CertifiedValue operator-(const CertifiedValue &a, const CertifiedValue &b) {
  return {a.approx - b.approx, a.error_bound + b.error_bound};
}

CertifiedValue operator*(const CertifiedValue &a, const CertifiedValue &b) {
  // |xy - x'y'| <= |x'| e_y + |y'| e_x + e_x e_y
  const Rational bound =
      a.approx.abs() * b.error_bound + b.approx.abs() * a.error_bound + a.error_bound * b.error_bound;
  return {a.approx * b.approx, bound};
}

CertifiedValue operator/(const CertifiedValue &a, const CertifiedValue &b) {
  const Rational margin = b.approx.abs() - b.error_bound;
  if (margin.sign() <= 0)
    throw DomainError("certified division by an interval containing zero");
  // |1/y - 1/y'| <= e_y / (|y'| (|y'| - e_y))
  const CertifiedValue inverse{b.approx.inverse(), b.error_bound / (b.approx.abs() * margin)};
  return a * inverse;
}

bool agree(const CertifiedValue &a, const CertifiedValue &b) {
  return (a.approx - b.approx).abs() <= a.error_bound + b.error_bound;
}

CertifiedValue qpochhammer_inf(const Rational &a, const Rational &q, const Rational &eps) {
  require_unit_interval(q);
  require_positive(eps);
  if (a.is_zero())
    return {1, 0};
  if (terminating_index(a, q))
    return {0, 0};

  // Truncation point: S_K <= 1 and 2 S_K U <= eps/4, with U >= every |(a;q)_K|.
  const Rational upper = pochhammer_abs_upper(a, q);
  const Rational one_minus_q = Rational(1) - q;
  const Rational quarter = eps / Rational(4);
  int K = 0;
  Rational aqK = a.abs();
  while (!(aqK / one_minus_q <= Rational(1) && Rational(2) * aqK / one_minus_q * upper <= quarter)) {
    aqK *= q;
    if (++K > kHorizon)
      throw NonConvergent("qpochhammer_inf: no certified truncation within the horizon");
  }
  const Rational truncation = Rational(2) * aqK / one_minus_q * upper;

  // The partial product is carried on a decimal grid. Each rounding error is
  // at most 1/(2 den) and is later multiplied by factors of total size <= U.
  mpz_class den = 1;
  const Rational needed = Rational(static_cast<long>(K) + 1) * upper / quarter;
  while (Rational(mpq_class(den)) < needed)
    den *= 10;
  Rational partial = 1;
  Rational factor = a;
  for (int k = 0; k < K; ++k) {
    partial = round_to(partial * (Rational(1) - factor), den);
    factor *= q;
  }
  const Rational rounding = Rational(static_cast<long>(K)) * upper / Rational(mpq_class(2 * den));
  return finalize(partial, truncation + rounding, eps);
}

Rational pochhammer_abs_upper(const Rational &a, const Rational &q) {
  require_unit_interval(q);
  const Rational one_minus_q = Rational(1) - q;
  Rational product = 1;
  Rational term = a.abs();
  for (int K = 0; K < kHorizon; ++K) {
    const Rational tail_sum = term / one_minus_q;
    if (tail_sum <= Rational(1, 8))
      return product * (Rational(1) + Rational(2) * tail_sum);
    product *= Rational(1) + term;
    term *= q;
  }
  throw NonConvergent("pochhammer_abs_upper: horizon exceeded");
}

CertifiedValue with_geometric_tail(const Rational &partial_sum, const Rational &first_omitted,
                                   const Rational &ratio) {
  if (!(ratio < Rational(1)))
    throw NonConvergent("geometric tail needs a ratio bound below 1, got " + ratio.to_string());
  return {partial_sum, first_omitted.abs() / (Rational(1) - ratio)};
}

CertifiedValue phi_numeric(std::span<const Rational> numerator, std::span<const Rational> denominator,
                           const Rational &q, const Rational &z, const Rational &eps) {
  require_unit_interval(q);
  require_positive(eps);
  if (z.is_zero())
    return {1, 0};

  std::optional<int> terminate_at;
  for (const auto &a : numerator)
    if (auto k = terminating_index(a, q))
      terminate_at = terminate_at ? std::min(*terminate_at, *k) : *k;

  const long excess = 1 + static_cast<long>(denominator.size()) - static_cast<long>(numerator.size());
  if (!terminate_at && excess < 0)
    throw NonConvergent("phi_numeric: r > s + 1 and no terminating parameter");
  // With e = 0 the term ratio tends to |z|.
  if (!terminate_at && excess == 0 && z.abs() >= Rational(1))
    throw NonConvergent("phi_numeric: |z| >= 1 with r = s + 1");

  const Rational half_eps = eps / Rational(2);
  const Rational abs_z = z.abs();
  Rational sum = 0;
  Rational term = 1; // T_m
  Rational qm = 1;   // q^m
  for (int m = 0; m < kHorizon; ++m) {
    if (terminate_at && m == *terminate_at)
      return {sum + term, 0};
    if (!terminate_at) {
      // Tail from m on, once the ratio bound is below one.
      bool denominators_ok = true;
      Rational rho = qm.pow(excess) * abs_z / (Rational(1) - qm * q);
      for (const auto &a : numerator)
        rho *= Rational(1) + a.abs() * qm;
      for (const auto &b : denominator) {
        const Rational f = Rational(1) - b.abs() * qm;
        if (f.sign() <= 0) {
          denominators_ok = false;
          break;
        }
        rho /= f;
      }
      if (denominators_ok && rho < Rational(1)) {
        const Rational tail = term.abs() / (Rational(1) - rho);
        if (tail <= half_eps)
          return finalize(sum, tail, eps);
      }
    }
    sum += term;
    // T_{m+1} = T_m * [(-1) q^m]^e * prod(1 - a q^m) / prod(1 - b q^m) * z / (1 - q^{m+1})
    Rational ratio = z / (Rational(1) - qm * q);
    if (excess != 0)
      ratio *= (-qm).pow(excess);
    for (const auto &a : numerator)
      ratio *= Rational(1) - a * qm;
    for (const auto &b : denominator) {
      const Rational f = Rational(1) - b * qm;
      if (f.is_zero())
        throw DenominatorPole("phi_numeric: denominator parameter " + b.to_string() + " hits a pole");
      ratio /= f;
    }
    term *= ratio;
    qm *= q;
  }
  throw NonConvergent("phi_numeric: no certified truncation within the horizon");
}

} // namespace qhahn::numeric
