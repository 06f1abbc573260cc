#pragma once

// Christoffel-Darboux kernels of the monic Hermite system and their
// derivatives,
//
//   K_n^{(i,j)}(x,y) = sum_{k=0}^{n} H_k^{(i)}(x) H_k^{(j)}(y) / ||H_k||^2.
//
// kernel_sum is the literal sum and serves as the reference for every closed
// form in this header.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

#include "hsob/real.hpp"

namespace hsob {

class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct KernelQuery {
  int n = 0;  // kernel index
  int i = 0;  // derivative order in x
  int j = 0;  // derivative order in y
};

Real kernel_sum(const KernelQuery& q, const Real& x, const Real& y);

/// K_n(x,y) through the Christoffel-Darboux quotient. When |x - y| is below
/// `proximity` (default 2^(-precision/2)) the literal sum is used instead.
Real kernel_cd(int n, const Real& x, const Real& y, std::optional<Real> proximity = std::nullopt);

/// Closed forms of K_n^{(0,j)}(x,0), j = 0..3, for the kernel indices where
/// they are known:
///   j = 0: any n;  j = 1: n >= 1;  j = 2: odd n;  j = 3: even n.
/// Throws DomainError for x = 0 and UnsupportedCase outside those patterns.
Real kernel_closed_at0(int n, int j, const Real& x);

/// K_n^{(0,j)}(x,0) = j!/||H_n||^2 x^{-(j+1)} [T_j(H_n) H_{n+1}(x) - T_j(H_{n+1}) H_n(x)]
/// with T_j the degree-j Taylor polynomial at 0. Any j >= 0, x != 0.
Real kernel_taylor_general(int n, int j, const Real& x);

/// sqrt(pi) * K_n^{(i,j)}(0,0) from the factorial closed forms:
/// (0,0) any n; (1,1) any n; (0,2), (2,2) odd n; (1,3), (3,3) even n;
/// zero whenever i + j is odd. Symmetric in (i,j). Negative-argument
/// factorials in the denominators are read as 1/(-1)! = 0.
mpq_class kernel_const_scaled(int n, int i, int j);

/// K_n^{(i,j)}(0,0) from kernel_const_scaled, correctly rounded.
Real kernel_const(int n, int i, int j);

/// sqrt(pi) * K_n^{(i,j)}(0,0) by exact summation, any (i,j).
mpq_class kernel_origin_scaled_exact(int n, int i, int j);

/// K_n^{(i,j)}(0,0) by exact summation, correctly rounded; any (i,j).
Real kernel_origin(int n, int i, int j);

}  // namespace hsob
