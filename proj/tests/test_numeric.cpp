#include <doctest.h>

#include <random>

#include "qhahn/errors.hpp"
#include "qhahn/families.hpp"
#include "qhahn/numeric.hpp"
#include "qhahn/qkernel.hpp"

using namespace qhahn;
using namespace qhahn::numeric;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
Rational ten_to_minus(int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return Rational(mpq_class(mpz_class(1), den));
}
Rational partial_product(const Rational &a, const Rational &q, int K) {
  Rational p = 1;
  for (int k = 0; k < K; ++k)
    p *= Rational(1) - a * q.pow(k);
  return p;
}
} // namespace

TEST_CASE("qpochhammer_inf examples") {
  const auto one = qpochhammer_inf(0, R(1, 2), ten_to_minus(10));
  CHECK(one.approx == 1);
  CHECK(one.error_bound == 0);
  CHECK(one.to_string() == "1 \xC2\xB1 0");
  const auto zero = qpochhammer_inf(1, R(1, 2), ten_to_minus(10));
  CHECK(zero.approx == 0);
  CHECK(zero.is_exact());
  CHECK(qpochhammer_inf(R(4), R(1, 2), ten_to_minus(10)).approx == 0);

  const Rational eps = ten_to_minus(20);
  const auto v = qpochhammer_inf(R(1, 2), R(1, 2), eps);
  CHECK(v.error_bound <= eps);
  // Oracle: partial products at K = 80 and K = 120 agree far below eps.
  CHECK((v.approx - partial_product(R(1, 2), R(1, 2), 80)).abs() <= Rational(2) * eps);
  CHECK((v.approx - partial_product(R(1, 2), R(1, 2), 120)).abs() <= Rational(2) * eps);
  CHECK(v.approx.to_decimal(10) == "0.2887880950");
}

TEST_CASE("qpochhammer_inf domain") {
  const Rational eps = ten_to_minus(5);
  CHECK_THROWS_AS(qpochhammer_inf(R(1, 3), R(1), eps), DomainError);
  CHECK_THROWS_AS(qpochhammer_inf(R(1, 3), R(0), eps), DomainError);
  CHECK_THROWS_AS(qpochhammer_inf(R(1, 3), R(-1, 2), eps), DomainError);
  CHECK_THROWS_AS(qpochhammer_inf(R(1, 3), R(1, 2), R(0)), DomainError);
}

TEST_CASE("qpochhammer_inf interval consistency on 20 random inputs") {
  std::mt19937_64 rng(5);
  const Rational eps = ten_to_minus(25);
  for (int i = 0; i < 20; ++i) {
    const Rational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    const Rational q(static_cast<long>(rng() % 9) + 1, 10);
    const auto coarse = qpochhammer_inf(a, q, eps);
    const auto fine = qpochhammer_inf(a, q, eps / Rational(100));
    CHECK((coarse.approx - fine.approx).abs() <= eps);
    CHECK(agree(coarse, fine));
  }
}

TEST_CASE("phi_numeric examples") {
  const Rational q = R(1, 2), a = R(1, 7), z = R(1, 3);
  const Rational eps = ten_to_minus(30);
  const std::vector<Rational> num{a}, none;
  const auto lhs = phi_numeric(num, none, q, z, eps);
  CHECK(lhs.error_bound <= eps);
  const auto rhs = qpochhammer_inf(a * z, q, eps / Rational(1000)) / qpochhammer_inf(z, q, eps / Rational(1000));
  CHECK(rhs.error_bound <= eps);
  CHECK((lhs.approx - rhs.approx).abs() <= Rational(2) * eps);

  // Terminating: numerator q^{-2} gives an exact three-term sum.
  const std::vector<Rational> term_num{q.pow(-2), R(1, 3)}, term_den{R(1, 5)};
  const auto exact = phi_numeric(term_num, term_den, q, R(3), eps);
  CHECK(exact.is_exact());
  Rational oracle = 0;
  for (int m = 0; m <= 2; ++m)
    oracle += qkernel::q_pochhammer(q.pow(-2), q, m) * qkernel::q_pochhammer(R(1, 3), q, m) /
              (qkernel::q_pochhammer(R(1, 5), q, m) * qkernel::q_pochhammer(q, q, m)) * R(3).pow(m);
  CHECK(exact.approx == oracle);

  CHECK(phi_numeric(num, none, q, 0, eps).approx == 1);
  CHECK(phi_numeric(num, none, q, 0, eps).is_exact());
}

TEST_CASE("phi_numeric errors") {
  const Rational q = R(1, 2), eps = ten_to_minus(10);
  const std::vector<Rational> three{R(1, 3), R(1, 5), R(1, 7)}, one{R(1, 9)}, none;
  CHECK_THROWS_AS(phi_numeric(three, one, q, R(1, 2), eps), NonConvergent);
  const std::vector<Rational> pole{q.pow(-1)}, num{R(1, 3)};
  CHECK_THROWS_AS(phi_numeric(num, pole, q, R(1, 2), eps), DenominatorPole);
  CHECK_THROWS_AS(phi_numeric(num, none, R(2), R(1, 2), eps), DomainError);
  // |z| > 1 for 1Phi0: the ratio bound never drops below one.
  CHECK_THROWS_AS(phi_numeric(num, none, q, R(3), eps), NonConvergent);
}

TEST_CASE("Euler identity numerically") {
  const Rational q = R(2, 3), x = R(1, 4);
  const Rational eps = ten_to_minus(30);
  Rational sum = 0, term = 1;
  const int N = 60;
  for (int k = 0; k <= N; ++k) {
    sum += term;
    term *= x / (Rational(1) - q.pow(k + 1));
  }
  const auto lhs = with_geometric_tail(sum, term, x / (Rational(1) - q.pow(N + 2)));
  const auto rhs = CertifiedValue{1, 0} / qpochhammer_inf(x, q, eps);
  CHECK(agree(lhs, rhs));
  CHECK_THROWS_AS(with_geometric_tail(0, 1, 1), NonConvergent);
}

TEST_CASE("generating-function partial sums approach the certified value") {
  const Rational q = R(1, 2), a = R(1, 7), x = R(1, 3), y = R(1, 5), t = R(1, 2);
  const Rational eps = ten_to_minus(30);
  const std::vector<Rational> num{a}, den{R(0)};
  const auto rhs = phi_numeric(num, den, q, y * t, eps) / qpochhammer_inf(x * t, q, eps);
  const families::FamilyParams params{q, a, Rational(1)};
  Rational sum = 0;
  Rational last_gap = 1;
  for (int n = 0; n <= 40; ++n) {
    sum += eval(families::cauchy_p_general(n, params), {{Var::x, x}, {Var::y, y}}) * t.pow(n) /
           qkernel::q_pochhammer(q, q, n);
    if (n == 10 || n == 20 || n == 40) {
      const Rational gap = (sum - rhs.approx).abs();
      CHECK(gap < last_gap);
      last_gap = gap;
    }
  }
  // Tail bound at N = 40, as in the numeric check.
  Rational first = pochhammer_abs_upper(a, q) * t.pow(41) / qkernel::q_pochhammer(q, q, 41);
  for (int j = 0; j <= 40; ++j)
    first *= x + q.pow(j) * y;
  const auto lhs = with_geometric_tail(sum, first, (x + q.pow(41) * y) * t / (Rational(1) - q.pow(42)));
  CHECK(last_gap <= lhs.error_bound + rhs.error_bound);
}

TEST_CASE("certified arithmetic encloses the exact result") {
  const CertifiedValue A{R(3, 2), R(1, 100)}, B{R(-2, 3), R(1, 50)};
  for (const Rational &a : {R(3, 2) - R(1, 100), R(3, 2), R(3, 2) + R(1, 100)})
    for (const Rational &b : {R(-2, 3) - R(1, 50), R(-2, 3), R(-2, 3) + R(1, 50)}) {
      CHECK((A + B).contains(a + b));
      CHECK((A - B).contains(a - b));
      CHECK((A * B).contains(a * b));
      CHECK((A / B).contains(a / b));
    }
  const CertifiedValue straddles_zero{R(1, 100), R(1, 50)};
  CHECK_THROWS_AS(A / straddles_zero, DomainError);
  CHECK(pochhammer_abs_upper(0, R(1, 2)) == 1);
  CHECK(pochhammer_abs_upper(R(-1, 5), R(1, 2)) >= partial_product(R(-1, 5), R(1, 2), 200));
}
