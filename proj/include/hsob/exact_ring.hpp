#pragma once

// Exact arithmetic for the Hermite weight. Every Gram entry is r + s t with
// t = sqrt(pi) and r, s rational, so the monic orthogonal polynomials have
// coefficients in Q(t). They are carried as quotients of polynomials in t
// over Q, with t replaced by sqrt(pi) only when a value is requested.

#include <gmpxx.h>

#include <vector>

#include "hsob/real.hpp"
#include "hsob/sobolev_gram.hpp"

namespace hsob {

/// Polynomial in t = sqrt(pi) with rational coefficients, ascending.
class SqrtPiPoly {
 public:
  SqrtPiPoly() = default;
  SqrtPiPoly(const mpq_class& r, const mpq_class& s);  // r + s t
  explicit SqrtPiPoly(std::vector<mpq_class> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  Real value(precision_t bits = working_precision()) const;

  friend SqrtPiPoly operator+(const SqrtPiPoly& a, const SqrtPiPoly& b);
  friend SqrtPiPoly operator-(const SqrtPiPoly& a, const SqrtPiPoly& b);
  friend SqrtPiPoly operator*(const SqrtPiPoly& a, const SqrtPiPoly& b);
  SqrtPiPoly operator-() const;
  /// Division that must leave no remainder; throws InternalConsistencyError otherwise.
  SqrtPiPoly exact_div(const SqrtPiPoly& d) const;
  friend bool operator==(const SqrtPiPoly& a, const SqrtPiPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct SqrtPiFraction {
  SqrtPiPoly num;
  SqrtPiPoly den;
  Real value(precision_t bits = working_precision()) const;
};

/// Determinant by fraction-free elimination with row pivoting.
SqrtPiPoly exact_determinant(std::vector<std::vector<SqrtPiPoly>> m);

/// Monic degree-n orthogonal polynomial for the Hermite weight plus mass
/// matrix `a`, by Cramer's rule on the exact Gram system.
std::vector<SqrtPiFraction> gram_orthogonalize_exact_hermite(const MassMatrix& a, int n);

}  // namespace hsob
