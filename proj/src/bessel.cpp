#include "hsob/bessel.hpp"

#include <cmath>
#include <sstream>

#include "hsob/hermite.hpp"
#include "hsob/kernels.hpp"
#include "hsob/roots.hpp"

namespace hsob {

namespace {

constexpr precision_t kGuardBits = 32;
constexpr int kScanBudget = 1000;

void check_order(BesselOrder alpha) {
  if (alpha.twice < -1) throw UnsupportedCase("Bessel order below -1/2: " + alpha.to_string());
}

void check_argument(const Real& x) {
  if (x.sign() < 0) throw DomainError("Bessel function requested at negative x");
}

// Gamma(alpha + 1) for alpha = twice/2 >= -1/2, exact up to the final
// rounding: k! for integer alpha, (2k)!/(4^k k!) sqrt(pi) with
// k = alpha + 1/2 otherwise.
Real gamma_alpha_plus_one(int twice, precision_t bits) {
  if (twice % 2 == 0) return Real::from_mpz(factorial(twice / 2).get_mpz_t(), bits);
  const int k = (twice + 1) / 2;
  mpq_class q{factorial(2 * k), factorial(k)};
  q /= mpq_class(mpz_class(1) << (2 * k));
  q.canonicalize();
  return Real::from_mpq(q.get_mpq_t(), bits) * sqrt_pi(bits);
}

// Cancellation in the alternating series costs about x log2(e) bits.
precision_t series_precision(const Real& x) {
  const double xd = x.to_double();
  return x.precision() + kGuardBits + static_cast<precision_t>(std::ceil(xd * 1.4426950408889634));
}

// g_alpha(x) = sum_m (-1)^m (x/2)^{2m} / (m! Gamma(m + alpha + 1)),
// so that J_alpha(x) = (x/2)^alpha g_alpha(x). Evaluated at `bits`.
Real normalized_series(int twice, const Real& x_in, precision_t bits) {
  const Real x(x_in, bits);
  const Real x2 = x * x;
  Real term = 1 / gamma_alpha_plus_one(twice, bits);
  Real sum = term;
  const double half_x = x.to_double() / 2;
  for (long m = 0;; ++m) {
    // t_{m+1} = -t_m x^2 / (2 (m+1) (2m + 2 + twice))
    term *= x2;
    term /= -2 * (m + 1) * (2 * m + 2 + twice);
    sum += term;
    if (static_cast<double>(m) > half_x && (term.is_zero() || term.exponent2() < sum.exponent2() - bits))
      break;
  }
  return sum;
}

// (x/2)^{e/2} for e >= 0.
Real half_power(const Real& x, int e) {
  if (e == 0) return Real(1L, x.precision());
  const Real h = ldexp(x, -1);
  if (e % 2 == 0) return pow(h, e / 2);
  return pow(h, e / 2) * sqrt(h);
}

Real series_g(BesselOrder alpha, const Real& x) {
  return Real(normalized_series(alpha.twice, x, series_precision(x)), x.precision());
}

// F_alpha(x) = (x/2)^{1/2} J_alpha(x) = (x/2)^{alpha + 1/2} g_alpha(x) and
// its derivative, using g_alpha' = -(x/2) g_{alpha+1}.
void sqrt_scaled_with_derivative(BesselOrder alpha, const Real& x, Real& value, Real& deriv) {
  const precision_t bits = x.precision();
  const int e = alpha.twice + 1;  // twice the exponent of (x/2)
  const Real g = series_g(alpha, x);
  const Real g1 = series_g(BesselOrder{alpha.twice + 2}, x);
  const Real p = half_power(x, e);
  value = p * g;
  const Real dg = -ldexp(x, -1) * g1;
  if (e == 0) {
    deriv = dg;
    return;
  }
  if (x.is_zero()) {
    if (e < 2) throw DomainError("derivative of (x/2)^{1/2} J_alpha unbounded at 0");
    deriv = e == 2 ? ldexp(g, -1) : Real(0L, bits);
    return;
  }
  // d/dx (x/2)^{e/2} = (e/2) (x/2)^{e/2} / x
  deriv = p * (g * e / (2 * x) + dg);
}

// First `count` positive zeros of f by a sign scan with the given step,
// each bracket refined by safeguarded Newton.
std::vector<Real> scan_and_refine(const ValueAndDerivative& f, int count, const Real& step, const std::string& what) {
  if (count < 1) throw std::invalid_argument("zero index must be >= 1");
  const precision_t bits = step.precision();
  std::vector<Real> zeros;
  Real left = step;
  Real fl, dl;
  f(left, fl, dl);
  for (int s = 0; s < kScanBudget; ++s) {
    Real right = left + step;
    Real fr, dr;
    f(right, fr, dr);
    if (fr.is_zero()) {
      zeros.push_back(right);
      // step past an exact hit so the next bracket starts with a sign
      right += step / 4;
      f(right, fr, dr);
    } else if (fl.sign() != fr.sign()) {
      zeros.push_back(refine_root(f, left, right, bits));
    }
    if (static_cast<int>(zeros.size()) == count) return zeros;
    left = right;
    fl = fr;
  }
  std::ostringstream msg;
  msg << "no bracket for zero " << count << " of " << what << " within " << kScanBudget << " scan steps of "
      << step.to_double() << " (found " << zeros.size() << ")";
  throw NumericalError(msg.str());
}

ValueAndDerivative normalized_bessel(BesselOrder alpha) {
  // g_alpha has the zeros of J_alpha on x > 0 and no singularity at 0.
  return [alpha](const Real& x, Real& v, Real& d) {
    v = series_g(alpha, x);
    d = -ldexp(x, -1) * series_g(BesselOrder{alpha.twice + 2}, x);
  };
}

}  // namespace

Real BesselOrder::value(precision_t bits) const { return Real(twice, bits) / 2; }

std::string BesselOrder::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Real bessel_j_normalized(BesselOrder alpha, const Real& x) {
  check_order(alpha);
  check_argument(x);
  // x^{-alpha} J_alpha = 2^{-alpha} g_alpha
  const Real g = series_g(alpha, x);
  if (alpha.twice % 2 == 0) return ldexp(g, -alpha.twice / 2);
  return g / pow(sqrt(Real(2L, x.precision())), alpha.twice);
}

Real bessel_j(BesselOrder alpha, const Real& x) {
  check_order(alpha);
  check_argument(x);
  if (x.is_zero() && alpha.twice < 0) throw DomainError("J_{-1/2} is unbounded at 0");
  if (alpha.twice >= 0) return half_power(x, alpha.twice) * series_g(alpha, x);
  return series_g(alpha, x) / half_power(x, -alpha.twice);
}

Real bessel_j_sqrt_scaled(BesselOrder alpha, const Real& x) {
  check_order(alpha);
  check_argument(x);
  return half_power(x, alpha.twice + 1) * series_g(alpha, x);
}

std::vector<Real> bessel_zeros(BesselOrder alpha, int count) {
  check_order(alpha);
  return scan_and_refine(normalized_bessel(alpha), count, Real(1L, working_precision()) / 2, "J_" + alpha.to_string());
}

Real bessel_zero(BesselOrder alpha, int k) { return bessel_zeros(alpha, k).back(); }

LimitFunctionId LimitFunctionId::conjecture(int r, Parity parity) {
  if (r < 1) throw std::invalid_argument("conjecture limit needs r >= 1");
  return LimitFunctionId{LimitTag::Conjecture, r, parity};
}

std::string LimitFunctionId::name() const {
  switch (tag) {
    case LimitTag::HermiteEven: return "HermiteEven";
    case LimitTag::HermiteOdd: return "HermiteOdd";
    case LimitTag::EvenMass: return "EvenMass";
    case LimitTag::OddMass: return "OddMass";
    case LimitTag::EvenBoth: return "EvenBoth";
    case LimitTag::OddBoth: return "OddBoth";
    case LimitTag::EvenGap: return "EvenGap";
    case LimitTag::OddGap: return "OddGap";
    case LimitTag::Conjecture:
      return "Conjecture(r=" + std::to_string(r) + "," + hsob::to_string(parity) + ")";
  }
  return "?";
}

std::vector<BesselTerm> limit_terms(const LimitFunctionId& id) {
  auto q = [](long p, long d = 1) {
    mpq_class v(p, d);
    v.canonicalize();
    return v;
  };
  switch (id.tag) {
    case LimitTag::HermiteEven: return {{q(1), BesselOrder{-1}}};
    case LimitTag::HermiteOdd: return {{q(1), BesselOrder{1}}};
    case LimitTag::EvenMass: return {{q(-1), BesselOrder{3}}};
    case LimitTag::OddMass: return {{q(-1), BesselOrder{5}}};
    case LimitTag::EvenBoth: return {{q(1), BesselOrder{7}}};
    case LimitTag::OddBoth: return {{q(1), BesselOrder{9}}};
    case LimitTag::EvenGap: return {{q(2, 3), BesselOrder{7}}, {q(-1), BesselOrder{3}}, {q(-2, 3), BesselOrder{-1}}};
    case LimitTag::OddGap: return {{q(2, 5), BesselOrder{9}}, {q(-1), BesselOrder{5}}, {q(-2, 5), BesselOrder{1}}};
    case LimitTag::Conjecture: {
      if (id.r < 1) throw std::invalid_argument("conjecture limit needs r >= 1");
      const int twice = 4 * id.r + (id.parity == Parity::Even ? -1 : 1);
      return {{q(id.r % 2 == 0 ? 1 : -1), BesselOrder{twice}}};
    }
  }
  throw std::invalid_argument("unknown limit function tag");
}

void limit_function_with_derivative(const LimitFunctionId& id, const Real& x, Real& value, Real& deriv) {
  check_argument(x);
  const precision_t bits = x.precision();
  value = Real(0L, bits);
  deriv = Real(0L, bits);
  for (const BesselTerm& t : limit_terms(id)) {
    Real v, d;
    sqrt_scaled_with_derivative(t.order, x, v, d);
    const Real c = Real::from_mpq(t.coeff.get_mpq_t(), bits);
    value.add_product(c, v);
    deriv.add_product(c, d);
  }
}

Real limit_function(const LimitFunctionId& id, const Real& x) {
  check_argument(x);
  const precision_t bits = x.precision();
  Real value(0L, bits);
  for (const BesselTerm& t : limit_terms(id))
    value.add_product(Real::from_mpq(t.coeff.get_mpq_t(), bits), bessel_j_sqrt_scaled(t.order, x));
  return value;
}

std::vector<Real> limit_function_zeros(const LimitFunctionId& id, int count) {
  const auto terms = limit_terms(id);
  if (terms.size() == 1) return bessel_zeros(terms.front().order, count);
  const ValueAndDerivative f = [&id](const Real& x, Real& v, Real& d) { limit_function_with_derivative(id, x, v, d); };
  return scan_and_refine(f, count, Real(1L, working_precision()) / 4, id.name());
}

Real limit_function_zero(const LimitFunctionId& id, int k) { return limit_function_zeros(id, k).back(); }

}  // namespace hsob
