#include "hsob/mass_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "hsob/hermite.hpp"
#include "hsob/kernels.hpp"

namespace hsob {

namespace {

constexpr precision_t kGuard = 32;

// H_k^{(i)}(0) = k!/(k-i)! H_{k-i}(0)
mpq_class hermite_derivative_at_zero(int k, int i) {
  if (i > k) return 0;
  mpq_class v = hermite_at_zero_exact(k - i);
  v *= mpq_class(factorial(k) / factorial(k - i));
  v.canonicalize();
  return v;
}

// Gaussian elimination with partial pivoting; m is overwritten.
std::vector<Real> solve(std::vector<std::vector<Real>> m, std::vector<Real> rhs) {
  const size_t s = rhs.size();
  for (size_t k = 0; k < s; ++k) {
    size_t p = k;
    for (size_t i = k + 1; i < s; ++i)
      if (abs(m[i][k]) > abs(m[p][k])) p = i;
    if (m[p][k].is_zero()) throw InternalConsistencyError("singular system for the derivatives at 0");
    std::swap(m[p], m[k]);
    std::swap(rhs[p], rhs[k]);
    for (size_t i = k + 1; i < s; ++i) {
      const Real f = m[i][k] / m[k][k];
      for (size_t j = k; j < s; ++j) m[i][j].sub_product(f, m[k][j]);
      rhs[i].sub_product(f, rhs[k]);
    }
  }
  std::vector<Real> x(s);
  for (size_t k = s; k-- > 0;) {
    Real acc = rhs[k];
    for (size_t j = k + 1; j < s; ++j) acc.sub_product(m[k][j], x[j]);
    x[k] = acc / m[k][k];
  }
  return x;
}

}  // namespace

MassPerturbedHermite::MassPerturbedHermite(MassMatrix a) : a_(std::move(a)) {}

std::vector<Real> MassPerturbedHermite::correction_weights(int n, precision_t bits) const {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({n, bits});
    if (it != cache_.end()) return it->second;
  }
  const int s = a_.size();
  const Real spi = sqrt_pi(bits);
  std::vector<Real> w(static_cast<size_t>(s), Real(0L, bits));
  if (n > 0 && !a_.is_zero()) {
    std::vector<std::vector<Real>> m(static_cast<size_t>(s), std::vector<Real>(static_cast<size_t>(s)));
    std::vector<Real> h(static_cast<size_t>(s));
    std::vector<std::vector<Real>> k(static_cast<size_t>(s), std::vector<Real>(static_cast<size_t>(s)));
    for (int j = 0; j < s; ++j)
      for (int l = 0; l < s; ++l)
        k[j][l] = Real::from_mpq(kernel_origin_scaled_exact(n - 1, j, l).get_mpq_t(), bits) / spi;
    for (int j = 0; j < s; ++j) {
      h[j] = Real::from_mpq(hermite_derivative_at_zero(n, j).get_mpq_t(), bits);
      for (int l = 0; l < s; ++l) {
        // (K A)_{jl}
        Real v(j == l ? 1L : 0L, bits);
        for (int t = 0; t < s; ++t) {
          const mpq_class atl = a_(t, l);
          if (atl != 0) v += k[j][t] * Real::from_mpq(atl.get_mpq_t(), bits);
        }
        m[j][l] = v;
      }
    }
    const std::vector<Real> v = solve(std::move(m), std::move(h));
    for (int i = 0; i < s; ++i)
      for (int l = 0; l < s; ++l) {
        const mpq_class ali = a_(l, i);
        if (ali != 0) w[i] += v[l] * Real::from_mpq(ali.get_mpq_t(), bits);
      }
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::make_pair(n, bits), w);
  return w;
}

std::shared_ptr<const std::vector<Real>> MassPerturbedHermite::kernel_coeffs(int i, int count, precision_t bits) const {
  const auto key = std::make_pair(i, bits);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coeff_cache_.find(key);
    if (it != coeff_cache_.end() && static_cast<int>(it->second->size()) >= count) return it->second;
  }
  const int size = std::max(count, 64);
  auto c = std::make_shared<std::vector<Real>>();
  c->reserve(static_cast<size_t>(size));
  const Real spi = sqrt_pi(bits);
  for (int k = 0; k < size; ++k) {
    if (k < i || (k - i) % 2 != 0) {
      c->emplace_back(0L, bits);
      continue;
    }
    // 2^k H_{k-i}(0) / ((k-i)! sqrt(pi))
    mpq_class q = hermite_at_zero_exact(k - i) / mpq_class(factorial(k - i));
    q *= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(k));
    q.canonicalize();
    c->push_back(Real::from_mpq(q.get_mpq_t(), bits) / spi);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = coeff_cache_[key];
  if (!slot || slot->size() < c->size()) slot = std::move(c);
  return slot;
}

std::vector<Real> MassPerturbedHermite::derivatives_at_zero(int n) const {
  const precision_t bits = working_precision();
  const precision_t wide = bits + kGuard;
  // v_j = h_j - sum_i w_i K^{(j,i)}(0,0)
  const std::vector<Real> w = correction_weights(n, wide);
  const Real spi = sqrt_pi(wide);
  std::vector<Real> v;
  for (int j = 0; j < a_.size(); ++j) {
    Real x = Real::from_mpq(hermite_derivative_at_zero(n, j).get_mpq_t(), wide);
    if (n > 0)
      for (int i = 0; i < a_.size(); ++i)
        if (!w[i].is_zero()) x -= w[i] * Real::from_mpq(kernel_origin_scaled_exact(n - 1, j, i).get_mpq_t(), wide) / spi;
    v.emplace_back(x, bits);
  }
  return v;
}

void MassPerturbedHermite::value_and_derivative(int n, const Real& x, Real& value, Real& deriv) const {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  const precision_t bits = x.precision();
  const precision_t wide = bits + kGuard;
  const Real xw(x, wide);
  const std::vector<Real> w = correction_weights(n, wide);
  const std::vector<Real> h = hermite_values(n, xw);
  Real v = h[static_cast<size_t>(n)];
  Real d = n > 0 ? h[static_cast<size_t>(n - 1)] * n : Real(0L, wide);
  for (int i = 0; i < a_.size(); ++i) {
    if (w[i].is_zero()) continue;
    // K^{(0,i)}_{n-1}(x,0) = sum_k H_k(x) H_k^{(i)}(0) / ||H_k||^2 and its x-derivative
    const auto coeffs = kernel_coeffs(i, n, wide);
    Real kx(0L, wide), dkx(0L, wide);
    for (int k = i; k < n; k += 2) {
      const Real& c = (*coeffs)[static_cast<size_t>(k)];
      kx.add_product(c, h[static_cast<size_t>(k)]);
      if (k > 0) dkx.add_product(c * k, h[static_cast<size_t>(k - 1)]);
    }
    v.sub_product(w[i], kx);
    d.sub_product(w[i], dkx);
  }
  value = Real(v, bits);
  deriv = Real(d, bits);
}

void MassPerturbedHermite::imaginary_axis_value(int n, const Real& y, Real& value, Real& deriv) const {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  if (!a_.parity_decoupled()) throw std::invalid_argument("mass matrix couples derivatives of mixed parity");
  const precision_t bits = y.precision();
  const precision_t wide = bits + kGuard;
  const Real yw(y, wide);
  const std::vector<Real> w = correction_weights(n, wide);
  // H_k(iy) = i^k h_k(y) with h_{k+1} = y h_k + (k/2) h_{k-1}
  std::vector<Real> h;
  h.reserve(static_cast<size_t>(n) + 1);
  h.emplace_back(1L, wide);
  if (n >= 1) h.push_back(yw);
  for (int k = 1; k < n; ++k) {
    Real next = yw * h[static_cast<size_t>(k)];
    next.add_product(h[static_cast<size_t>(k) - 1], Real(static_cast<long>(k), wide) / 2);
    h.push_back(std::move(next));
  }
  Real v = h[static_cast<size_t>(n)];
  Real d = n > 0 ? h[static_cast<size_t>(n - 1)] * n : Real(0L, wide);
  for (int i = 0; i < a_.size(); ++i) {
    if (w[i].is_zero()) continue;
    if ((n - i) % 2 != 0) throw InternalConsistencyError("correction of the wrong parity");
    const auto coeffs = kernel_coeffs(i, n, wide);
    Real kx(0L, wide), dkx(0L, wide);
    // i^(k-n) = (-1)^((n-k)/2) for k of the parity of n
    for (int k = i; k < n; k += 2) {
      Real c = (*coeffs)[static_cast<size_t>(k)];
      if (((n - k) / 2) % 2 != 0) c = -c;
      kx.add_product(c, h[static_cast<size_t>(k)]);
      if (k > 0) dkx.add_product(c * k, h[static_cast<size_t>(k - 1)]);
    }
    v.sub_product(w[i], kx);
    d.sub_product(w[i], dkx);
  }
  value = Real(v, bits);
  deriv = Real(d, bits);
}

Real MassPerturbedHermite::value(int n, const Real& x) const {
  Real v, d;
  value_and_derivative(n, x, v, d);
  return v;
}

}  // namespace hsob
