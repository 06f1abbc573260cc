#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hsob/real.hpp"

namespace hsob {

/// Raised when an algebraic identity that must hold exactly is violated
/// beyond rounding (e.g. a division by x^k that leaves a remainder).
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parity { Even, Odd };

inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
const char* to_string(Parity p);

/// Dense polynomial over Real, coefficients in ascending degree order.
/// All coefficients share one precision.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Real> coeffs);

  static Poly constant(const Real& c);
  static Poly monomial(int k, precision_t bits = working_precision());

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const Real> coeffs() const { return c_; }
  const Real& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  Real& operator[](int k) { return c_.at(static_cast<size_t>(k)); }
  const Real& leading() const { return c_.back(); }
  precision_t precision() const;

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Largest |c_k| over coefficients with parity opposite to the degree.
  Real symmetry_defect() const;
  Real max_abs_coeff() const;

  /// Horner evaluation at the polynomial's precision.
  Real operator()(const Real& x) const;
  /// Value and first derivative in one Horner pass.
  void eval_with_derivative(const Real& x, Real& value, Real& deriv) const;

  Poly derivative(int order = 1) const;
  /// Taylor polynomial of degree j at 0 (truncation).
  Poly truncated(int j) const;
  /// p(x) * x^k.
  Poly shifted_up(int k) const;
  /// p(x) / x^k; the k low coefficients must be negligible relative to
  /// `tolerance * max_abs_coeff()`, otherwise InternalConsistencyError.
  Poly divided_by_x_power(int k, const Real& tolerance) const;
  /// p(c x).
  Poly scaled_argument(const Real& c) const;
  /// p(x^2).
  Poly composed_with_square() const;
  Poly rounded(precision_t bits) const;
  /// Drops leading coefficients that are exactly zero (keeps degree >= 0).
  Poly trimmed() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Real& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Real& s) { return a *= s; }
  friend Poly operator*(const Real& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  std::vector<Real> c_;
};

/// max_k |a_k - b_k| over the union of supports.
Real max_coeff_difference(const Poly& a, const Poly& b);
/// max_k |a_k - b_k| / max(|b_k|, floor), floor = 2^(-prec/2) * max_k |b_k|.
Real max_relative_coeff_difference(const Poly& a, const Poly& b);

}  // namespace hsob
