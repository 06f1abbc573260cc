#pragma once

// Monic Hermite polynomials H_n, orthogonal for exp(-x^2) on the real line.
//
//   H_{k+1}(x) = x H_k(x) - (k/2) H_{k-1}(x),   ||H_n||^2 = sqrt(pi) n! / 2^n.

#include <gmpxx.h>

#include <vector>

#include "hsob/poly.hpp"
#include "hsob/real.hpp"

namespace hsob {

/// Exact coefficients of H_n (ascending), dyadic rationals.
std::vector<mpq_class> hermite_monic_exact(int n);

/// H_n with correctly rounded coefficients at the working precision.
/// Cached per (degree, precision); the cache is shared across threads.
const Poly& hermite_monic(int n);

Real hermite_norm_sq(int n);

/// H_n(0): 0 for odd n, (-1)^(n/2) n! / (2^n (n/2)!) for even n.
mpq_class hermite_at_zero_exact(int n);
Real hermite_at_zero(int n);

/// p(x) by Horner's scheme at the polynomial's precision.
Real eval_poly(const Poly& p, const Real& x);

/// H_0(x), ..., H_n(x) through the three-term recurrence.
std::vector<Real> hermite_values(int n, const Real& x);

/// H_n(x) and H_n'(x) = n H_{n-1}(x) via the recurrence.
void hermite_value_and_derivative(int n, const Real& x, Real& value, Real& deriv);

mpz_class factorial(long n);

}  // namespace hsob
