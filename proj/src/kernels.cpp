#include "hsob/kernels.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "hsob/hermite.hpp"

namespace hsob {

namespace {

long falling(long k, int i) {
  long f = 1;
  for (int t = 0; t < i; ++t) f *= (k - t);
  return f;
}

// q / sqrt(pi), correctly rounded to the working precision.
Real over_sqrt_pi(const mpq_class& q) {
  const precision_t bits = working_precision();
  const precision_t guard = bits + 32;
  Real v = Real::from_mpq(q.get_mpq_t(), guard) / sqrt_pi(guard);
  return v.rounded(bits);
}

mpq_class pow2q(long e) {
  mpq_class r(1);
  if (e >= 0) {
    r = mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(e));
  } else {
    r = mpq_class(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

// 1/k! with 1/(-m)! = 0 for m >= 1.
mpq_class inv_factorial(long k) {
  if (k < 0) return mpq_class(0);
  return mpq_class(mpz_class(1), factorial(k));
}

std::string describe(int n, int i, int j) {
  return "K_" + std::to_string(n) + "^(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Real kernel_sum(const KernelQuery& q, const Real& x, const Real& y) {
  if (q.n < 0 || q.i < 0 || q.j < 0) throw std::invalid_argument("kernel indices must be nonnegative");
  if (x.precision() != y.precision()) throw PrecisionMismatch(x.precision(), y.precision());
  const precision_t bits = x.precision();
  const std::vector<Real> hx = hermite_values(q.n, x);
  const std::vector<Real> hy = hermite_values(q.n, y);
  Real sum = Real::with_bits(bits);
  Real inv_norm(1L, bits);  // 2^k / k!
  for (int k = 0; k <= q.n; ++k) {
    if (k > 0) {
      inv_norm *= 2L;
      inv_norm /= static_cast<long>(k);
    }
    if (k < q.i || k < q.j) continue;
    Real term = hx[static_cast<size_t>(k - q.i)] * hy[static_cast<size_t>(k - q.j)];
    // Product formed exactly so the sum is symmetric under (i,x) <-> (j,y).
    term *= Real(falling(k, q.i), bits) * falling(k, q.j);
    term *= inv_norm;
    sum += term;
  }
  return sum / sqrt_pi(bits);
}

Real kernel_cd(int n, const Real& x, const Real& y, std::optional<Real> proximity) {
  const precision_t bits = x.precision();
  const Real threshold = proximity ? proximity->rounded(bits) : pow2(-bits / 2, bits);
  const Real gap = x - y;
  if (abs(gap) < threshold) return kernel_sum({n, 0, 0}, x, y);
  const std::vector<Real> hx = hermite_values(n + 1, x);
  const std::vector<Real> hy = hermite_values(n + 1, y);
  const auto m = static_cast<size_t>(n);
  Real num = hx[m + 1] * hy[m];
  num.sub_product(hy[m + 1], hx[m]);
  PrecisionScope scope(bits);
  return num / (hermite_norm_sq(n) * gap);
}

Real kernel_closed_at0(int m, int j, const Real& x) {
  if (x.is_zero()) throw DomainError("closed-form kernel at x = 0; use kernel_const");
  if (m < 0) throw std::invalid_argument("kernel index must be nonnegative");
  const precision_t bits = x.precision();
  PrecisionScope scope(bits);
  const Real spi = sqrt_pi(bits);
  switch (j) {
    case 0: {
      // K_{2n+1}(x,0) = K_{2n}(x,0) = (-1)^n/(n! sqrt(pi)) H_{2n+1}(x)/x
      const int n = m / 2;
      const std::vector<Real> h = hermite_values(2 * n + 1, x);
      Real v = h.back() / x;
      v /= Real::from_mpz(factorial(n).get_mpz_t(), bits) * spi;
      return n % 2 == 0 ? v : -v;
    }
    case 1: {
      // K_{2n}^{(0,1)} = K_{2n-1}^{(0,1)} = (-1)^{n-1}/(sqrt(pi)(n-1)!) (2x H_{2n} + H_{2n-1})/x^2
      if (m < 1) throw UnsupportedCase(describe(m, 0, 1) + "(x,0) has no closed form here");
      const int n = (m + 1) / 2;
      const std::vector<Real> h = hermite_values(2 * n, x);
      Real num = ldexp(x * h[static_cast<size_t>(2 * n)], 1);
      num += h[static_cast<size_t>(2 * n - 1)];
      Real v = num / (x * x);
      v /= Real::from_mpz(factorial(n - 1).get_mpz_t(), bits) * spi;
      return (n - 1) % 2 == 0 ? v : -v;
    }
    case 2: {
      // K_{2n-1}^{(0,2)} = 2(-1)^{n-1}/(sqrt(pi)(n-1)!) (2x H_{2n} + (1 - 2n x^2) H_{2n-1})/x^3
      if (m % 2 == 0) throw UnsupportedCase(describe(m, 0, 2) + "(x,0) is only known for odd n");
      const int n = (m + 1) / 2;
      const std::vector<Real> h = hermite_values(2 * n, x);
      const Real x2 = x * x;
      Real num = ldexp(x * h[static_cast<size_t>(2 * n)], 1);
      Real factor = 1L - x2 * static_cast<long>(2 * n);
      num.add_product(factor, h[static_cast<size_t>(2 * n - 1)]);
      Real v = ldexp(num / (x2 * x), 1);
      v /= Real::from_mpz(factorial(n - 1).get_mpz_t(), bits) * spi;
      return (n - 1) % 2 == 0 ? v : -v;
    }
    case 3: {
      // K_{2n}^{(0,3)} = 2(-1)^n/(sqrt(pi) n!) ((3 - 6n x^2) H_{2n+1} - (2n+1)(3 - 2n x^2) x H_{2n})/x^4
      if (m % 2 != 0) throw UnsupportedCase(describe(m, 0, 3) + "(x,0) is only known for even n");
      const int n = m / 2;
      const std::vector<Real> h = hermite_values(2 * n + 1, x);
      const Real x2 = x * x;
      Real num = (3L - x2 * static_cast<long>(6 * n)) * h[static_cast<size_t>(2 * n + 1)];
      Real second = (3L - x2 * static_cast<long>(2 * n)) * x;
      second *= h[static_cast<size_t>(2 * n)];
      second *= static_cast<long>(2 * n + 1);
      num -= second;
      Real v = ldexp(num / (x2 * x2), 1);
      v /= Real::from_mpz(factorial(n).get_mpz_t(), bits) * spi;
      return n % 2 == 0 ? v : -v;
    }
    default:
      throw UnsupportedCase(describe(m, 0, j) + "(x,0): closed forms exist for j <= 3 only");
  }
}

Real kernel_taylor_general(int n, int j, const Real& x) {
  if (x.is_zero()) throw DomainError("Taylor-form kernel at x = 0; use kernel_const");
  if (n < 0 || j < 0) throw std::invalid_argument("kernel indices must be nonnegative");
  const precision_t bits = x.precision();
  PrecisionScope scope(bits);
  const std::vector<Real> h = hermite_values(n + 1, x);
  // Degree-j Taylor polynomials at 0 are the low coefficients.
  auto taylor = [&](int deg) {
    const std::vector<mpq_class> c = hermite_monic_exact(deg);
    Real acc = Real::with_bits(bits);
    for (int t = std::min(j, deg); t >= 0; --t) {
      acc *= x;
      acc += Real::from_mpq(c[static_cast<size_t>(t)].get_mpq_t(), bits);
    }
    return acc;
  };
  Real bracket = taylor(n) * h[static_cast<size_t>(n) + 1];
  bracket.sub_product(taylor(n + 1), h[static_cast<size_t>(n)]);
  Real v = bracket * Real::from_mpz(factorial(j).get_mpz_t(), bits);
  v /= hermite_norm_sq(n);
  v /= pow(x, static_cast<long>(j + 1));
  return v;
}

mpq_class kernel_const_scaled(int m, int i, int j) {
  if (m < 0 || i < 0 || j < 0) throw std::invalid_argument("kernel indices must be nonnegative");
  if ((i + j) % 2 != 0) return mpq_class(0);
  if (i > j) std::swap(i, j);
  mpq_class v;
  if (i == 0 && j == 0) {
    // K_{2n+1}(0,0) = K_{2n}(0,0) = (2n+1)!/(sqrt(pi) 2^{2n} n!^2)
    const long n = m / 2;
    v = mpq_class(factorial(2 * n + 1)) * inv_factorial(n) * inv_factorial(n) * pow2q(-2 * n);
  } else if (i == 1 && j == 1) {
    // K_{2n-1}^{(1,1)} = K_{2n}^{(1,1)} = (2n+1)!/(3 sqrt(pi) 2^{2n-2} n! (n-1)!)
    const long n = (m + 1) / 2;
    v = mpq_class(factorial(2 * n + 1)) * inv_factorial(n) * inv_factorial(n - 1) *
        pow2q(-(2 * n - 2)) / 3;
  } else if (i == 0 && j == 2) {
    if (m % 2 == 0) throw UnsupportedCase(describe(m, 0, 2) + "(0,0) is only known for odd n");
    // K_{2n-1}^{(0,2)} = -(2n-1)!/(3 sqrt(pi) 2^{2n-4} (n-1)! (n-2)!)
    const long n = (m + 1) / 2;
    v = -mpq_class(factorial(2 * n - 1)) * inv_factorial(n - 1) * inv_factorial(n - 2) *
        pow2q(-(2 * n - 4)) / 3;
  } else if (i == 2 && j == 2) {
    if (m % 2 == 0) throw UnsupportedCase(describe(m, 2, 2) + "(0,0) is only known for odd n");
    // K_{2n-1}^{(2,2)} = (2n-1)!(3n-1)/(15 sqrt(pi) 2^{2n-6} (n-1)! (n-2)!)
    const long n = (m + 1) / 2;
    v = mpq_class(factorial(2 * n - 1)) * (3 * n - 1) * inv_factorial(n - 1) *
        inv_factorial(n - 2) * pow2q(-(2 * n - 6)) / 15;
  } else if (i == 1 && j == 3) {
    if (m % 2 != 0) throw UnsupportedCase(describe(m, 1, 3) + "(0,0) is only known for even n");
    // K_{2n}^{(1,3)} = -(2n+1)!/(5 sqrt(pi) 2^{2n-4} n! (n-2)!)
    const long n = m / 2;
    v = -mpq_class(factorial(2 * n + 1)) * inv_factorial(n) * inv_factorial(n - 2) *
        pow2q(-(2 * n - 4)) / 5;
  } else if (i == 3 && j == 3) {
    if (m % 2 != 0) throw UnsupportedCase(describe(m, 3, 3) + "(0,0) is only known for even n");
    // K_{2n}^{(3,3)} = (2n+1)!(5n-3)/(35 sqrt(pi) 2^{2n-6} n! (n-2)!)
    const long n = m / 2;
    v = mpq_class(factorial(2 * n + 1)) * (5 * n - 3) * inv_factorial(n) * inv_factorial(n - 2) *
        pow2q(-(2 * n - 6)) / 35;
  } else {
    throw UnsupportedCase(describe(m, i, j) + "(0,0) has no closed form here");
  }
  v.canonicalize();
  return v;
}

Real kernel_const(int n, int i, int j) {
  const mpq_class q = kernel_const_scaled(n, i, j);
  if (q == 0) return Real::with_bits(working_precision());
  return over_sqrt_pi(q);
}

mpq_class kernel_origin_scaled_exact(int n, int i, int j) {
  if (n < 0 || i < 0 || j < 0) throw std::invalid_argument("kernel indices must be nonnegative");
  mpq_class sum(0);
  if ((i + j) % 2 != 0) return sum;
  for (int k = std::max(i, j); k <= n; ++k) {
    const mpq_class hi = hermite_at_zero_exact(k - i);
    if (hi == 0) continue;
    const mpq_class hj = hermite_at_zero_exact(k - j);
    // 1/||H_k||^2 = 2^k / (sqrt(pi) k!)
    sum += hi * hj * falling(k, i) * falling(k, j) * pow2q(k) * inv_factorial(k);
  }
  sum.canonicalize();
  return sum;
}

Real kernel_origin(int n, int i, int j) {
  const mpq_class q = kernel_origin_scaled_exact(n, i, j);
  if (q == 0) return Real::with_bits(working_precision());
  return over_sqrt_pi(q);
}

}  // namespace hsob
