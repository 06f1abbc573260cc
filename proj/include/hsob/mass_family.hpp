#pragma once

// Pointwise evaluation of the monic Hermite-Sobolev polynomials of a mass
// matrix A (size s) without monomial coefficients. Expanding Q_n in the
// Hermite basis gives the reproducing-kernel identity
//
//   Q_n(x) = H_n(x) - sum_{l,i < s} v_l A_{li} K_{n-1}^{(0,i)}(x, 0),
//   v_l = Q_n^{(l)}(0),   (I + K A) v = h,
//
// with K_{jl} = K_{n-1}^{(j,l)}(0,0) and h_j = H_n^{(j)}(0). Everything is
// driven by the three-term recurrence, so high degrees and large x cost no
// cancellation beyond that of H_n itself.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hsob/real.hpp"
#include "hsob/sobolev_gram.hpp"

namespace hsob {

class MassPerturbedHermite {
 public:
  explicit MassPerturbedHermite(MassMatrix a);

  const MassMatrix& mass() const { return a_; }

  /// Q_n^{(l)}(0) for l < s, at the working precision.
  std::vector<Real> derivatives_at_zero(int n) const;

  /// Q_n(x) at the precision of x.
  Real value(int n, const Real& x) const;
  /// Q_n(x) and Q_n'(x) at the precision of x.
  void value_and_derivative(int n, const Real& x, Real& value, Real& deriv) const;
  /// i^(-n) Q_n(i y) and its y-derivative, for mass matrices that couple only
  /// derivatives of equal parity (then Q_n has the parity of n and the result
  /// is real).
  void imaginary_axis_value(int n, const Real& y, Real& value, Real& deriv) const;

 private:
  // sum_l v_l A_{li}, the weight of K^{(0,i)}(x,0) in the correction.
  std::vector<Real> correction_weights(int n, precision_t bits) const;

  // H_k^{(i)}(0) / ||H_k||^2 for k < count.
  std::shared_ptr<const std::vector<Real>> kernel_coeffs(int i, int count, precision_t bits) const;

  MassMatrix a_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, precision_t>, std::vector<Real>> cache_;
  mutable std::map<std::pair<int, precision_t>, std::shared_ptr<const std::vector<Real>>> coeff_cache_;
};

}  // namespace hsob
