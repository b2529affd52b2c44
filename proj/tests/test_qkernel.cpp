#include <doctest.h>

#include "qhahn/errors.hpp"
#include "qhahn/qkernel.hpp"
#include "qhahn/rational.hpp"

using namespace qhahn;
using namespace qhahn::qkernel;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

// Gaussian binomial from its polynomial-in-q recursion, evaluated at q.
Rational gaussian_oracle(int n, int k, const Rational &q) {
  if (k < 0 || k > n)
    return 0;
  if (k == 0 || k == n)
    return 1;
  return gaussian_oracle(n - 1, k - 1, q) + q.pow(k) * gaussian_oracle(n - 1, k, q);
}
} // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(R(2, 4).to_string() == "1/2");
  CHECK(R(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("-3/9") == R(-1, 3));
  CHECK(Rational::parse("7") == R(7));
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(R(0).inverse(), DivisionByZero);
  CHECK(R(2, 3).pow(-2) == R(9, 4));
  CHECK(R(-1, 2).pow(3) == R(-1, 8));
  CHECK(R(1, 3).to_decimal(4) == "0.3333");
  CHECK(R(-5, 4).to_decimal(2) == "-1.25");
}

TEST_CASE("rational rounding helpers") {
  CHECK(round_to(R(1, 3), 10) == R(3, 10));
  CHECK(round_to(R(1, 4), 10) == R(3, 10)); // tie rounds up
  CHECK(round_up_to(R(1, 3), 10) == R(4, 10));
  CHECK(round_up_to(R(3, 10), 10) == R(3, 10));
}

TEST_CASE("q_pochhammer examples and recurrence") {
  CHECK(q_pochhammer(R(1, 2), R(1, 2), 0) == 1);
  CHECK(q_pochhammer(R(1, 2), R(1, 2), 2) == R(3, 8));
  CHECK(q_pochhammer(R(1, 2), R(1, 2), 3) == R(21, 64));
  for (const Rational &a : {R(1, 7), R(-2, 3), R(5)})
    for (const Rational &q : {R(1, 2), R(2, 3), R(-3, 4)})
      for (int n = 0; n < 10; ++n)
        CHECK(q_pochhammer(a, q, n + 1) == q_pochhammer(a, q, n) * (Rational(1) - a * q.pow(n)));
}

TEST_CASE("q_binomial examples, symmetry, Pascal rule and oracles") {
  CHECK(q_binomial(5, 0, R(1, 2)) == 1);
  CHECK(q_binomial(2, 1, R(1, 2)) == R(3, 2));
  CHECK(q_binomial(4, 2, R(1, 2)) == R(35, 16));
  CHECK_THROWS_AS(q_binomial(2, 3, R(1, 2)), IndexError);
  for (const Rational &q : {R(1, 2), R(2, 3), R(-1, 3)})
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        const Rational v = q_binomial(n, k, q);
        CHECK(v == q_binomial(n, n - k, q));
        CHECK(v == gaussian_oracle(n, k, q));
        CHECK(v == q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k)));
        if (k >= 1 && k <= n - 1)
          CHECK(v == q_binomial(n - 1, k - 1, q) + q.pow(k) * q_binomial(n - 1, k, q));
      }
}

TEST_CASE("q-numbers and q-factorials") {
  CHECK(q_factorial(0, R(1, 2)) == 1);
  CHECK(q_number(3, R(1, 2)) == R(7, 4));
  CHECK(q_factorial(2, R(1, 2)) == R(3, 2));
  CHECK_THROWS_AS(q_number(3, R(1)), DivisionByZero);
  CHECK_THROWS_AS(q_factorial(3, R(1)), DivisionByZero);
}

TEST_CASE("gauss_power") {
  CHECK(gauss_power(0, R(1, 2)) == 1);
  CHECK(gauss_power(1, R(1, 2)) == 1);
  CHECK(gauss_power(3, R(1, 2)) == R(1, 8));
  CHECK(gauss_power(4, R(2, 3)) == R(64, 729));
  for (int k = 1; k < 12; ++k)
    CHECK(gauss_power(k, R(2, 3)) / gauss_power(k - 1, R(2, 3)) == R(2, 3).pow(k - 1));
}

TEST_CASE("q_generic_up_to") {
  CHECK(q_generic_up_to(R(1, 2), 50));
  CHECK_FALSE(q_generic_up_to(R(1), 3));
  CHECK_FALSE(q_generic_up_to(R(-1), 3));
  CHECK(q_generic_up_to(R(-1), 1));
}
