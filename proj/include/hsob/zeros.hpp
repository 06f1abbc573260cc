#pragma once

// Positive zeros of Hermite and Hermite-Sobolev polynomials, interlacing,
// and the scaled-zero tables of the convergence-acceleration results.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsob/mehler_heine.hpp"
#include "hsob/poly.hpp"
#include "hsob/real.hpp"

namespace hsob {

/// A polynomial expected to have real simple zeros did not show them.
class CertificationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZeroTable {
  int degree = 0;
  std::vector<Real> zeros;          // positive zeros, ascending
  std::vector<Real> scaled_2sqrt;   // 2 sqrt(floor(degree/2)) * zero
  std::vector<Real> scaled_sqrt;    // sqrt(floor(degree/2)) * zero
  /// Moduli y > 0 of zeros +-iy on the imaginary axis, ascending. Only
  /// family_zeros fills this; it is empty whenever all zeros are real.
  std::vector<Real> imaginary;
};

ZeroTable make_zero_table(int degree, std::vector<Real> zeros);

/// All floor(n/2) positive zeros of H_n to working precision. Seeds come from
/// the eigenvalues of the Jacobi matrix in double precision; each is then
/// bracketed by a verified sign change and refined on the recurrence.
ZeroTable hermite_zeros(int n);

/// Positive zeros of a real-rooted polynomial by nested Rolle brackets (the
/// zeros of p^{(k+1)} separate those of p^{(k)}). Symmetric input is reduced
/// to t = x^2 first. Throws CertificationViolation when a bracket shows no
/// sign change or the count differs from floor(deg/2) for symmetric p.
ZeroTable real_zeros(const Poly& p, bool symmetric);

/// Zeros of P_degree from a symmetric family. Positive zeros are bracketed by
/// the zeros of H_degree, with a finer scan when a bracket shows no sign
/// change. Zeros on the imaginary axis are searched the same way on
/// i^(-degree) P(iy). Certified when the real and imaginary counts add up to
/// floor(degree/2), which accounts for every zero.
ZeroTable family_zeros(const ScaledFamily& fam, int degree);

/// Strict alternation of the merged positive zeros, counts differing by at
/// most one.
bool interlace_check(const ZeroTable& inner, const ZeroTable& outer);

/// Number of zeros that converge to 0 faster than 1/sqrt(n) for the family.
int accelerated_zero_count(const LimitFunctionId& limit);

/// Entries are the zeros in the upper half plane ordered by modulus: the
/// positive zeros and the moduli of imaginary ones. The first
/// accelerated_zero_count entries are expected to tend to 0 faster than
/// 1/sqrt(n); later real entries are matched in order with the positive
/// zeros of the limit function.
struct ZeroAsymptoticsEntry {
  int n = 0;
  int k = 0;
  bool imaginary = false;
  Real zero;  // modulus for imaginary entries
  Real scaled_2sqrt;
  Real scaled_sqrt;
  bool accelerated = false;
  std::optional<Real> target;  // limit of 2 sqrt(n) zero; absent for accelerated and imaginary entries
  std::optional<Real> relative_error;
};

struct ZeroTrend {
  int k = 0;
  bool accelerated = false;
  bool tracked = true;       // false when no target exists (imaginary, not accelerated)
  bool decreasing = false;   // accelerated: sqrt(n) zero; otherwise |target - 2 sqrt(n) zero|
  bool final_within = true;  // non-accelerated: final relative error below threshold
  bool ok() const { return !tracked || (decreasing && final_within); }
};

struct ZeroAsymptoticsReport {
  std::string family;
  LimitFunctionId limit;
  std::vector<int> n_list;
  int k_max = 0;
  std::vector<ZeroAsymptoticsEntry> entries;  // ordered by n, then k
  std::vector<ZeroTrend> trends;              // one per k
  /// Interlacing of the positive zeros with those of H_degree at every n
  /// (identity when the masses are inactive for the parity).
  bool interlacing = true;
  /// Interlacing counts towards passed() only for the 2x2 family and
  /// Hermite, where all zeros are known to be real.
  bool interlacing_asserted = true;
  /// Number of imaginary zero pairs at each n.
  std::vector<int> imaginary_pairs;

  bool passed() const;
};

struct ZeroThresholds {
  double slack = 1.02;
  double final_relative = 0.05;
  /// Relative errors below this count as settled: a zero can cross its
  /// target, so tiny errors need not shrink monotonically.
  double settled_relative = 0.005;
};

ZeroAsymptoticsReport zero_asymptotics_report(const ScaledFamily& fam, const std::vector<int>& n_list, int k_max,
                                              const ZeroThresholds& th = {});

/// Compare P_degree with H_degree: true when all zeros are real and the
/// positive ones strictly interlace, or when P_degree is H_degree itself.
bool interlaces_with_hermite(const ScaledFamily& fam, int degree);

}  // namespace hsob
