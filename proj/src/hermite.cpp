#include "hsob/hermite.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hsob {

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::vector<mpq_class> hermite_monic_exact(int n) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be nonnegative");
  std::vector<mpq_class> c(static_cast<size_t>(n) + 1, mpq_class(0));
  // c_{n-2m} = (-1)^m n! / (m! (n-2m)! 4^m)
  mpq_class term(1);
  for (int m = 0; 2 * m <= n; ++m) {
    c[static_cast<size_t>(n - 2 * m)] = term;
    term *= -mpq_class(mpz_class(static_cast<long>(n - 2 * m) * (n - 2 * m - 1)), mpz_class(4L * (m + 1)));
    term.canonicalize();
  }
  return c;
}

const Poly& hermite_monic(int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, precision_t>, std::unique_ptr<Poly>> cache;
  const precision_t bits = working_precision();
  const auto key = std::make_pair(n, bits);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  std::vector<Real> coeffs;
  coeffs.reserve(static_cast<size_t>(n) + 1);
  for (const mpq_class& q : hermite_monic_exact(n)) coeffs.push_back(Real::from_mpq(q.get_mpq_t(), bits));
  auto poly = std::make_unique<Poly>(std::move(coeffs));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(poly));
  return *it->second;
}

Real hermite_norm_sq(int n) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be nonnegative");
  const precision_t bits = working_precision();
  return ldexp(Real::from_mpz(factorial(n).get_mpz_t(), bits) * sqrt_pi(bits), -n);
}

mpq_class hermite_at_zero_exact(int n) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be nonnegative");
  if (n % 2 != 0) return mpq_class(0);
  const int h = n / 2;
  mpq_class v(factorial(n), factorial(h));
  v /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(n));
  v.canonicalize();
  return (h % 2 == 0) ? v : mpq_class(-v);
}

Real hermite_at_zero(int n) { return Real::from_mpq(hermite_at_zero_exact(n).get_mpq_t()); }

Real eval_poly(const Poly& p, const Real& x) { return p(x); }

std::vector<Real> hermite_values(int n, const Real& x) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be nonnegative");
  const precision_t bits = x.precision();
  std::vector<Real> h;
  h.reserve(static_cast<size_t>(n) + 1);
  h.emplace_back(1L, bits);
  if (n >= 1) h.push_back(x);
  for (int k = 1; k < n; ++k) {
    Real next = x * h[static_cast<size_t>(k)];
    Real tail = ldexp(h[static_cast<size_t>(k) - 1], -1);
    tail *= static_cast<long>(k);
    next -= tail;
    h.push_back(std::move(next));
  }
  return h;
}

void hermite_value_and_derivative(int n, const Real& x, Real& value, Real& deriv) {
  const precision_t bits = x.precision();
  if (n == 0) {
    value = Real(1L, bits);
    deriv = Real::with_bits(bits);
    return;
  }
  Real prev(1L, bits);
  Real cur = x;
  Real tmp = Real::with_bits(bits);
  for (int k = 1; k < n; ++k) {
    tmp = ldexp(prev, -1);
    tmp *= static_cast<long>(k);
    prev = cur;
    cur *= x;
    cur -= tmp;
  }
  value = cur;
  deriv = prev * static_cast<long>(n);
}

}  // namespace hsob
