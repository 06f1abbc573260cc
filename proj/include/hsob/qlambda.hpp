#pragma once

// Hermite-Sobolev polynomials Q_n for a 2x2 mass matrix
//
//   A = [[M0, lambda], [lambda, M1]],
//
// built from the connection formulas
//
//   Q_{2n}   = H_{2n}   - a_n H_{2n-1}/x   - b_n (2x H_{2n} + H_{2n-1})/x^2,
//   Q_{2n+1} = H_{2n+1} - c_n H_{2n+1}/x   - d_n (2x H_{2n} + H_{2n-1})/x^2.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hsob/poly.hpp"
#include "hsob/real.hpp"
#include "hsob/sobolev_gram.hpp"

namespace hsob {

struct TwoByTwoCase {
  mpq_class M0 = 0;
  mpq_class M1 = 0;
  mpq_class lambda = 0;

  /// Throws NotPositiveSemidefinite unless M0, M1 >= 0 and M0 M1 >= lambda^2.
  static TwoByTwoCase make(const mpq_class& m0, const mpq_class& m1, const mpq_class& lambda);

  mpq_class det() const { return M0 * M1 - lambda * lambda; }
  int rank() const;
  bool diagonal() const { return lambda == 0; }
  MassMatrix mass_matrix() const;
  SobolevProduct product() const;
  std::string to_string() const;
};

/// 1 + M0 K_{n-1}(0,0) + M1 K^{(1,1)}_{n-1}(0,0) + det K_{n-1}(0,0) K^{(1,1)}_{n-1}(0,0).
Real delta(int n, const TwoByTwoCase& c);

/// (a_n, b_n) for even parity, (c_n, d_n) for odd parity.
class ConnectionCoeffs {
 public:
  ConnectionCoeffs(Parity parity, Real first, Real second);
  Parity parity() const { return parity_; }
  const Real& a() const;
  const Real& b() const;
  const Real& c() const;
  const Real& d() const;

 private:
  Parity parity_;
  Real first_;
  Real second_;
};

ConnectionCoeffs connection_coeffs(int n, Parity parity, const TwoByTwoCase& c);

/// Monic Q_n (degree n). Degrees 0 and 1 come from gram_orthogonalize.
Poly q_poly(int n, const TwoByTwoCase& c);

/// H_{2n-1}(x)/x, (2x H_{2n}(x) + H_{2n-1}(x))/x^2 and H_{2n+1}(x)/x with
/// exact rational coefficients; the removed low coefficients are checked to
/// vanish exactly.
std::vector<mpq_class> hermite_quotient_odd_over_x(int m);
std::vector<mpq_class> hermite_quotient_pair_over_x2(int n);

struct ScaledQuantity {
  std::string name;       // e.g. "a", "n*a", "n^1.5*b"
  Real value;
  std::optional<Real> predicted;  // limit, when one is stated for the case
  /// |value - predicted| / |predicted|, or |value - predicted| for a zero limit
  std::optional<Real> distance;
};

struct CoeffLimitRow {
  int n = 0;
  Real a, b, c, d;
  std::vector<ScaledQuantity> quantities;
};

struct CoeffLimitReport {
  TwoByTwoCase which;
  std::vector<CoeffLimitRow> rows;
  /// Per quantity with a nonzero predicted limit: distances decreasing with
  /// the slack factor along the rows.
  std::vector<std::pair<std::string, bool>> trends;
};

inline constexpr double kTrendSlack = 1.02;

/// True when e_{i+1} < slack * e_i for all consecutive entries.
bool decreasing_with_slack(const std::vector<Real>& e, double slack = kTrendSlack);

CoeffLimitReport coeff_limit_report(const TwoByTwoCase& c, const std::vector<int>& n_list);

}  // namespace hsob
