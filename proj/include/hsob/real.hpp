#pragma once

// Extended-precision real scalar backed by MPFR.
//
// Every Real carries its own precision in bits. Binary operations between two
// Reals require equal precision; mixing precisions throws PrecisionMismatch.
// Integer and double operands adopt the precision of the Real they meet.
// New values built from literals use the thread's working precision, which
// defaults to 256 bits and is changed with set_default_precision() or scoped
// with PrecisionScope.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hsob {

using precision_t = long;

inline constexpr precision_t kDefaultPrecisionBits = 256;
inline constexpr precision_t kMinPrecisionBits = 64;

class PrecisionMismatch : public std::logic_error {
 public:
  PrecisionMismatch(precision_t a, precision_t b);
};

/// Working precision (bits) for values created on this thread.
precision_t working_precision();
/// Process-wide default picked up by threads that never set their own.
void set_default_precision(precision_t bits);
precision_t default_precision();

/// Number of decimal digits carried by `bits` of mantissa (floor).
int precision_decimal(precision_t bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(precision_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  precision_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);  // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  Real(long long v);  // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)

  /// Exact integer at the given precision.
  Real(long v, precision_t bits);
  /// Value rounded to `bits`.
  Real(const Real& other, precision_t bits);
  static Real with_bits(precision_t bits);  // zero at the given precision
  /// Parses a decimal string ("1.5", "-3e-7", "1/3" is not accepted).
  static Real parse(std::string_view text, precision_t bits = working_precision());
  static Real from_mpz(const mpz_t z, precision_t bits = working_precision());
  static Real from_mpq(const mpq_t q, precision_t bits = working_precision());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  precision_t precision() const { return mpfr_get_prec(v_); }
  Real rounded(precision_t bits) const { return Real(*this, bits); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 40) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e such that |x| is in [2^(e-1), 2^e); LONG_MIN for 0.
  long exponent2() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  /// this += a * b, single rounding.
  Real& add_product(const Real& a, const Real& b);
  Real& sub_product(const Real& a, const Real& b);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  template <std::integral I>
  friend Real operator+(Real a, I b) { return a += static_cast<long>(b); }
  template <std::integral I>
  friend Real operator+(I b, Real a) { return a += static_cast<long>(b); }
  template <std::integral I>
  friend Real operator-(Real a, I b) { return a -= static_cast<long>(b); }
  template <std::integral I>
  friend Real operator-(I b, const Real& a) { return -(a - b); }
  template <std::integral I>
  friend Real operator*(Real a, I b) { return a *= static_cast<long>(b); }
  template <std::integral I>
  friend Real operator*(I b, Real a) { return a *= static_cast<long>(b); }
  template <std::integral I>
  friend Real operator/(Real a, I b) { return a /= static_cast<long>(b); }
  template <std::integral I>
  friend Real operator/(I b, const Real& a) { return Real(static_cast<long>(b), a.precision()) / a; }

  friend Real operator+(Real a, double b);
  friend Real operator-(Real a, double b);
  friend Real operator*(Real a, double b);
  friend Real operator/(Real a, double b);
  friend Real operator+(double b, Real a) { return std::move(a) + b; }
  friend Real operator-(double b, const Real& a) { return -(a - b); }
  friend Real operator*(double b, Real a) { return std::move(a) * b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  template <std::integral I>
  friend bool operator==(const Real& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0; }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const Real& a, I b) {
    const int c = mpfr_cmp_si(a.v_, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

 private:
  void check_same(const Real& o) const;

  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& x, long k);
Real pow(const Real& x, const Real& y);
Real ldexp(const Real& x, long e);
Real gamma(const Real& x);
/// log2|x| as a double; -inf for 0.
double log2_abs(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi(precision_t bits = working_precision());
Real sqrt_pi(precision_t bits = working_precision());
/// 2^e at the given precision.
Real pow2(long e, precision_t bits = working_precision());

/// |a - b| / |b|, or |a| when b is zero.
Real relative_error(const Real& a, const Real& b);

}  // namespace hsob
