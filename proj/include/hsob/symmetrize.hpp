#pragma once

// Quadratic substitution between the line and the half-line. With diagonal
// masses M_0..M_{2r-1} on the Hermite side,
//
//   S_{2n}(x)   = L_n^{(-1/2; N_0, N_2, ...)}(x^2)
//   S_{2n+1}(x) = x L_n^{(1/2; N_1, N_3, ...)}(x^2)
//
// where L^{(alpha; ...)} is monic orthogonal for the Laguerre weight
// t^alpha e^{-t} on (0, inf) plus sum_i N P^{(i)}(0) Q^{(i)}(0), and
// N_{2i} = ((i+1)_i)^2 M_{2i}, N_{2i+1} = ((i+1)_{i+1})^2 M_{2i+1}.

#include <gmpxx.h>

#include <vector>

#include "hsob/poly.hpp"
#include "hsob/real.hpp"

namespace hsob {

/// a (a+1) ... (a+i-1); (a)_0 = 1.
Real pochhammer(const Real& a, int i);
mpz_class pochhammer(long a, int i);

struct MassMap {
  int r = 0;
  std::vector<mpq_class> m;  // M_0 .. M_{2r-1}
  std::vector<mpq_class> n;  // N_0 .. N_{2r-1}

  /// N_0, N_2, ... (even side) or N_1, N_3, ... (odd side).
  std::vector<mpq_class> even_side() const;
  std::vector<mpq_class> odd_side() const;
};

MassMap mass_map(int r, const std::vector<mpq_class>& masses);

/// Monic orthogonal polynomial of degree n for the Laguerre weight with
/// exponent alpha and masses N_i on P^{(i)}(0).
Poly laguerre_sobolev_poly(const mpq_class& alpha, const std::vector<mpq_class>& masses, int n);

struct SymmetrizationResidual {
  Real even;  // max |coeff| of S_{2n}(x) - L_n^{(-1/2)}(x^2)
  Real odd;   // max |coeff| of S_{2n+1}(x) - x L_n^{(1/2)}(x^2)
};

/// Both sides built independently by Gram orthogonalization.
SymmetrizationResidual symmetrization_residual(int n, const std::vector<mpq_class>& masses);

}  // namespace hsob
