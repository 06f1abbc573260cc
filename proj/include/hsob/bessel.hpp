#pragma once

// Bessel functions of the first kind of integer and half-integer order, by
// their power series, and the limit functions of the scaled polynomial
// families, which are all of the form
//
//   x -> (x/2)^{1/2} * sum_t c_t J_{alpha_t}(x).

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hsob/poly.hpp"
#include "hsob/real.hpp"

namespace hsob {

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order alpha = twice / 2; supported for alpha >= -1/2.
struct BesselOrder {
  int twice = 0;

  static BesselOrder half(int numerator) { return BesselOrder{numerator}; }
  static BesselOrder integer(int n) { return BesselOrder{2 * n}; }
  Real value(precision_t bits = working_precision()) const;
  std::string to_string() const;
  friend bool operator==(BesselOrder, BesselOrder) = default;
};

/// J_alpha(x) for x >= 0.
Real bessel_j(BesselOrder alpha, const Real& x);
/// x^{-alpha} J_alpha(x); entire, nonzero at 0.
Real bessel_j_normalized(BesselOrder alpha, const Real& x);
/// (x/2)^{1/2} J_alpha(x), continuous at x = 0 for alpha >= -1/2.
Real bessel_j_sqrt_scaled(BesselOrder alpha, const Real& x);

/// k-th positive zero j_{alpha,k}. Throws NumericalError if no bracket is
/// found within the scan budget.
Real bessel_zero(BesselOrder alpha, int k);
/// j_{alpha,1}, ..., j_{alpha,count} from a single scan.
std::vector<Real> bessel_zeros(BesselOrder alpha, int count);

enum class LimitTag { HermiteEven, HermiteOdd, EvenMass, OddMass, EvenBoth, OddBoth, EvenGap, OddGap, Conjecture };

struct LimitFunctionId {
  LimitTag tag = LimitTag::HermiteEven;
  int r = 0;                    // Conjecture only
  Parity parity = Parity::Even;  // Conjecture only

  static LimitFunctionId conjecture(int r, Parity parity);
  std::string name() const;
  friend bool operator==(const LimitFunctionId&, const LimitFunctionId&) = default;
};

struct BesselTerm {
  mpq_class coeff;
  BesselOrder order;
};

/// The signed Bessel combination behind a limit function.
std::vector<BesselTerm> limit_terms(const LimitFunctionId& id);

/// Limit function value at x >= 0.
Real limit_function(const LimitFunctionId& id, const Real& x);
/// Limit function and its derivative.
void limit_function_with_derivative(const LimitFunctionId& id, const Real& x, Real& value, Real& deriv);

/// k-th positive zero of the limit function (x = 0 excluded).
Real limit_function_zero(const LimitFunctionId& id, int k);
std::vector<Real> limit_function_zeros(const LimitFunctionId& id, int count);

}  // namespace hsob
