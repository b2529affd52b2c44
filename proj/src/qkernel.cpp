#include "qhahn/qkernel.hpp"

#include <string>

#include "qhahn/errors.hpp"

namespace qhahn::qkernel {

Rational q_pochhammer(const Rational &a, const Rational &q, long n) {
  Rational result = 1;
  Rational aqk = a;
  for (long k = 0; k < n; ++k) {
    result *= Rational(1) - aqk;
    aqk *= q;
  }
  return result;
}

Rational q_number(long n, const Rational &q) {
  if (q.is_one())
    throw DivisionByZero("[n]_q has a vanishing denominator at q = 1");
  return (Rational(1) - q.pow(n)) / (Rational(1) - q);
}

Rational q_factorial(long n, const Rational &q) {
  Rational result = 1;
  for (long k = 1; k <= n; ++k)
    result *= q_number(k, q);
  return result;
}

Rational q_binomial(long n, long k, const Rational &q) {
  if (k < 0 || k > n)
    throw IndexError("q_binomial: k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

Rational gauss_power(long k, const Rational &q) { return q.pow(k * (k - 1) / 2); }

bool q_generic_up_to(const Rational &q, long n) {
  if (q.is_zero())
    return false;
  Rational qm = q;
  for (long m = 1; m <= n; ++m, qm *= q)
    if (qm.is_one())
      return false;
  return true;
}

} // namespace qhahn::qkernel
