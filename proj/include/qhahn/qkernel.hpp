#pragma once

#include "qhahn/rational.hpp"

/// Finite q-combinatorial quantities over exact rationals.
///
/// q is any nonzero rational here; callers that need convergence impose
/// |q| < 1 themselves.
namespace qhahn::qkernel {

/// (a;q)_n = prod_{k<n} (1 - a q^k); 1 for n = 0.
Rational q_pochhammer(const Rational &a, const Rational &q, long n);

/// Gaussian binomial [n, k]_q as the ratio of q-factorials.
/// Throws IndexError for k > n.
Rational q_binomial(long n, long k, const Rational &q);

/// [n]_q = (1 - q^n)/(1 - q). Throws DivisionByZero at q = 1.
Rational q_number(long n, const Rational &q);

/// [n]_q! = prod_{k=1..n} [k]_q. Throws DivisionByZero at q = 1 (n >= 1).
Rational q_factorial(long n, const Rational &q);

/// q^{k(k-1)/2}
Rational gauss_power(long k, const Rational &q);

/// True iff q^m != 1 for every 1 <= m <= n, i.e. every (q;q)_m with m <= n is nonzero.
bool q_generic_up_to(const Rational &q, long n);

} // namespace qhahn::qkernel
