#pragma once

// Scaled polynomial families near the origin and their Mehler-Heine limits:
//
//   even: (-1)^n sqrt(n)/n! P_{2n}(x / (2 sqrt(n)))
//   odd:  (-1)^n / n!       P_{2n+1}(x / (2 sqrt(n)))

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsob/bessel.hpp"
#include "hsob/mass_family.hpp"
#include "hsob/poly.hpp"
#include "hsob/qlambda.hpp"

namespace hsob {
/// No known Mehler-Heine limit for this family.
/// The paper states no limit for this family.
class UncoveredCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ScaledFamily {
 public:
  enum class Source { Hermite, QLambda, DiagonalS };

  static ScaledFamily hermite(Parity parity);
  static ScaledFamily qlambda(const TwoByTwoCase& c, Parity parity);
  /// Diagonal masses M_0, ..., M_{2r-1}; the length must be even and positive.
  static ScaledFamily diagonal_s(const std::vector<mpq_class>& masses, Parity parity);

  Source source() const { return source_; }
  Parity parity() const { return parity_; }
  const TwoByTwoCase& qcase() const { return qcase_; }
  const std::vector<mpq_class>& masses() const { return masses_; }
  /// Number of mass pairs r for DiagonalS.
  int r() const { return static_cast<int>(masses_.size()) / 2; }
  MassMatrix mass_matrix() const;
  /// True when P_n has the symmetry P_n(-x) = (-1)^n P_n(x).
  bool symmetric() const { return source_ != Source::QLambda || qcase_.diagonal(); }

  /// Degree of the polynomial behind index n: 2n or 2n+1.
  int degree(int n) const { return parity_ == Parity::Even ? 2 * n : 2 * n + 1; }
  /// P_degree(x) and its derivative at the precision of x.
  void poly_value(int degree, const Real& x, Real& value, Real& deriv) const;
  Real poly_value(int degree, const Real& x) const;
  /// i^(-degree) P_degree(i y) and its y-derivative; symmetric families only.
  void imaginary_axis_value(int degree, const Real& y, Real& value, Real& deriv) const;
  /// Same family with the other parity.
  ScaledFamily with_parity(Parity parity) const;

  std::string describe() const;

 private:
  ScaledFamily() = default;

  Source source_ = Source::Hermite;
  Parity parity_ = Parity::Even;
  TwoByTwoCase qcase_;
  std::vector<mpq_class> masses_;
  std::shared_ptr<const MassPerturbedHermite> eval_;
};

Real scaled_eval(const ScaledFamily& fam, int n, const Real& x);

/// Limit function of the family; throws UncoveredCase where no limit is
/// known (DiagonalS with r >= 3 and a zero mass).
LimitFunctionId select_limit(const ScaledFamily& fam);

/// x_k = k * grid_max / points, k = 1..points.
std::vector<Real> default_grid(const Real& grid_max, int points);
std::vector<Real> default_grid();

struct MHThresholds {
  double slack = 1.02;
  double final_sup = 0.05;
  double sign_x = 0.1;
};

struct MHReport {
  std::string family;
  LimitFunctionId limit;
  std::vector<Real> grid;
  std::vector<int> n_list;
  std::vector<Real> sup_errors;
  std::vector<Real> sup_points;  // grid point attaining each sup
  bool decreasing = false;
  bool final_below = false;
  Real sign_x;
  Real scaled_at_sign_x;  // at the largest n
  Real limit_at_sign_x;
  bool sign_ok = false;

  bool passed() const { return decreasing && final_below && sign_ok; }
};

MHReport mh_report(const ScaledFamily& fam, const std::vector<int>& n_list, const std::vector<Real>& grid,
                   const MHThresholds& th = {});

struct ConjectureProbe {
  int r = 0;
  std::vector<MHReport> reports;  // even, odd
  /// For r <= 2: whether the conjectured limits coincide with the proven ones.
  std::optional<bool> consistent_with_theorems;
};

/// Reports against the conjectured limits for r pairs of positive masses.
ConjectureProbe conjecture_probe(int r, const std::vector<mpq_class>& masses, const std::vector<int>& n_list,
                                 const std::vector<Real>& grid, const MHThresholds& th = {});

}  // namespace hsob
