#include "hsob/real.hpp"

#include <atomic>
#include <climits>
#include <cmath>
#include <ostream>
#include <vector>

namespace hsob {

namespace {

std::atomic<precision_t> g_default_precision{kDefaultPrecisionBits};

// 0 means "follow the process default".
thread_local precision_t t_working_precision = 0;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

PrecisionMismatch::PrecisionMismatch(precision_t a, precision_t b)
    : std::logic_error("mixed precision arithmetic: " + std::to_string(a) + " vs " +
                       std::to_string(b) + " bits") {}

precision_t working_precision() {
  return t_working_precision != 0 ? t_working_precision : g_default_precision.load();
}

void set_default_precision(precision_t bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecisionBits) +
                                " bits");
  }
  g_default_precision.store(bits);
}

precision_t default_precision() { return g_default_precision.load(); }

int precision_decimal(precision_t bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
}

PrecisionScope::PrecisionScope(precision_t bits) : saved_(t_working_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("unsupported precision " + std::to_string(bits));
  }
  t_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_working_precision = saved_; }

Real::Real() {
  mpfr_init2(v_, working_precision());
  mpfr_set_zero(v_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v), working_precision()) {}
Real::Real(long v) : Real(v, working_precision()) {}
Real::Real(long long v) : Real(static_cast<long>(v), working_precision()) {}

Real::Real(unsigned long v) {
  mpfr_init2(v_, working_precision());
  mpfr_set_ui(v_, v, kRnd);
}

Real::Real(double v) {
  mpfr_init2(v_, working_precision());
  mpfr_set_d(v_, v, kRnd);
}

Real::Real(long v, precision_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(const Real& other, precision_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set(v_, other.v_, kRnd);
}

Real Real::with_bits(precision_t bits) { return Real(0L, bits); }

Real Real::parse(std::string_view text, precision_t bits) {
  Real r = with_bits(bits);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::from_mpz(const mpz_t z, precision_t bits) {
  Real r = with_bits(bits);
  mpfr_set_z(r.v_, z, kRnd);
  return r;
}

Real Real::from_mpq(const mpq_t q, precision_t bits) {
  Real r = with_bits(bits);
  mpfr_set_q(r.v_, q, kRnd);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

void Real::check_same(const Real& o) const {
  if (precision() != o.precision()) throw PrecisionMismatch(precision(), o.precision());
}

Real& Real::operator+=(const Real& o) {
  check_same(o);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  check_same(o);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  check_same(o);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  check_same(o);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, kRnd);
  return *this;
}
Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, kRnd);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::add_product(const Real& a, const Real& b) {
  check_same(a);
  check_same(b);
  mpfr_fma(v_, a.v_, b.v_, v_, kRnd);
  return *this;
}

Real& Real::sub_product(const Real& a, const Real& b) {
  check_same(a);
  check_same(b);
  mpfr_fms(v_, a.v_, b.v_, v_, kRnd);
  mpfr_neg(v_, v_, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, kRnd);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  a.check_same(b);
  Real r = Real::with_bits(a.precision());
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  a.check_same(b);
  Real r = Real::with_bits(a.precision());
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  a.check_same(b);
  Real r = Real::with_bits(a.precision());
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  a.check_same(b);
  Real r = Real::with_bits(a.precision());
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator+(Real a, double b) {
  mpfr_add_d(a.v_, a.v_, b, kRnd);
  return a;
}
Real operator-(Real a, double b) {
  mpfr_sub_d(a.v_, a.v_, b, kRnd);
  return a;
}
Real operator*(Real a, double b) {
  mpfr_mul_d(a.v_, a.v_, b, kRnd);
  return a;
}
Real operator/(Real a, double b) {
  mpfr_div_d(a.v_, a.v_, b, kRnd);
  return a;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 40);
}

namespace {

template <typename F>
Real unary(const Real& x, F f) {
  Real r = Real::with_bits(x.precision());
  f(r.get(), x.get(), kRnd);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real pow(const Real& x, long k) {
  Real r = Real::with_bits(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  if (x.precision() != y.precision()) throw PrecisionMismatch(x.precision(), y.precision());
  Real r = Real::with_bits(x.precision());
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::with_bits(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

double log2_abs(const Real& x) {
  if (x.is_zero()) return -INFINITY;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(precision_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real sqrt_pi(precision_t bits) {
  // Computed with a few guard bits so the single final rounding dominates.
  Real p = pi(bits + 16);
  return Real(sqrt(p), bits);
}

Real pow2(long e, precision_t bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, kRnd);
  return r;
}

Real relative_error(const Real& a, const Real& b) {
  if (b.is_zero()) return abs(a);
  return abs((a - b) / b);
}

}  // namespace hsob
