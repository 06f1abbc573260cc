#pragma once

// Monic orthogonal polynomials for discrete Sobolev inner products
//
//   (P, Q) = c * [ int P Q dmu + P(0)^T A Q(0) ],   P(0) = (P(0), P'(0), ..., P^{(s-1)}(0)),
//
// with mu the Hermite weight on the line or a Laguerre weight on the
// half-line, built by factorizing the Gram matrix of the monomials.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsob/poly.hpp"
#include "hsob/real.hpp"

namespace hsob {

class NotPositiveSemidefinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Gram factorization lost more accuracy than the precision ceiling
/// allows; the message names the offending pivot.
class PrecisionInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightSpec {
  enum class Kind { HermiteLine, LaguerreHalfLine };
  Kind kind = Kind::HermiteLine;
  mpq_class alpha = 0;  // Laguerre only: x^alpha e^{-x} on (0, inf), alpha > -1

  static WeightSpec hermite() { return {}; }
  static WeightSpec laguerre(const mpq_class& alpha);
  std::string key() const;
};

/// Symmetric positive semidefinite matrix with exact rational entries.
class MassMatrix {
 public:
  MassMatrix() = default;
  /// Throws NotPositiveSemidefinite for asymmetric or indefinite input.
  explicit MassMatrix(std::vector<std::vector<mpq_class>> entries);
  static MassMatrix diagonal(const std::vector<mpq_class>& masses);

  int size() const { return static_cast<int>(a_.size()); }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  /// Entry (i, j), zero outside the stored block.
  mpq_class at(int i, int j) const;
  bool is_zero() const;
  bool is_diagonal() const;
  /// A_ij = 0 whenever i + j is odd.
  bool parity_decoupled() const;
  std::string key() const;

 private:
  std::vector<std::vector<mpq_class>> a_;
};

struct SobolevProduct {
  WeightSpec weight;
  MassMatrix mass;
  mpq_class scale = 1;  // positive overall factor

  std::string key() const;
};

/// int x^k dmu: Hermite 0 for odd k, (k-1)!! sqrt(pi) / 2^{k/2} for even k;
/// Laguerre Gamma(k + alpha + 1).
Real weight_moment(const WeightSpec& w, int k, precision_t bits = working_precision());

/// (f, g) at the common precision of f and g.
Real sobolev_inner(const SobolevProduct& p, const Poly& f, const Poly& g);

/// (x^i, x^j).
Real gram_entry(const SobolevProduct& p, int i, int j, precision_t bits);

/// LDL^T factorization of the monomial Gram matrix up to a maximal degree.
/// Runs at an internal precision that is doubled until the accuracy lost in
/// the pivots leaves the target precision intact. Under the Hermite weight
/// with a parity-decoupled mass matrix the even and odd monomials are
/// factorized separately.
class GramSystem {
 public:
  struct Options {
    precision_t target_bits = 0;  // 0: working precision
    precision_t ceiling_bits = 16384;
    precision_t guard_bits = 32;
  };

  GramSystem(SobolevProduct product, int max_degree);
  GramSystem(SobolevProduct product, int max_degree, Options options);

  int max_degree() const { return max_degree_; }
  precision_t target_bits() const { return target_; }
  precision_t internal_bits() const { return internal_; }
  /// max_k log2(G_kk / D_k) over all pivots.
  double loss_bits() const { return loss_; }
  bool split_by_parity() const { return split_; }

  /// Monic Q_n, coefficients rounded to the target precision.
  Poly monic(int n) const;
  /// Monic Q_n at the internal precision.
  Poly monic_internal(int n) const;
  /// (Q_n, Q_n), i.e. the pivot D_n.
  Real norm_sq(int n) const;

 private:
  struct Block {
    std::vector<int> degrees;               // monomial degree per local index
    std::vector<std::vector<Real>> lower;   // unit lower factor, strict part
    std::vector<Real> pivots;
  };

  bool factorize(precision_t bits);
  std::pair<const Block*, int> locate(int n) const;

  SobolevProduct product_;
  int max_degree_;
  Options options_;
  precision_t target_ = 0;
  precision_t internal_ = 0;
  double loss_ = 0;
  bool split_ = false;
  std::vector<Block> blocks_;
};

/// Shared, cached GramSystem covering at least degree n at the working
/// precision.
std::shared_ptr<const GramSystem> gram_system(const SobolevProduct& p, int n);

/// Monic degree-n orthogonal polynomial at the working precision.
Poly gram_orthogonalize(const SobolevProduct& p, int n);

/// Exact inner product under the Hermite weight as r + s sqrt(pi).
std::pair<mpq_class, mpq_class> inner_exact_hermite(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g,
                                                    const MassMatrix& a);

}  // namespace hsob
