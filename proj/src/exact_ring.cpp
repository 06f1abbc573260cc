#include "hsob/exact_ring.hpp"

#include <utility>

#include "hsob/hermite.hpp"

namespace hsob {

SqrtPiPoly::SqrtPiPoly(const mpq_class& r, const mpq_class& s) : c_{r, s} {
  for (auto& v : c_) v.canonicalize();
  trim();
}

SqrtPiPoly::SqrtPiPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void SqrtPiPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Real SqrtPiPoly::value(precision_t bits) const {
  const precision_t wide = bits + 32;
  const Real t = sqrt_pi(wide);
  Real v(0L, wide);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    v *= t;
    v += Real::from_mpq(it->get_mpq_t(), wide);
  }
  return Real(v, bits);
}

SqrtPiPoly operator+(const SqrtPiPoly& a, const SqrtPiPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return SqrtPiPoly(std::move(c));
}

SqrtPiPoly SqrtPiPoly::operator-() const {
  SqrtPiPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

SqrtPiPoly operator-(const SqrtPiPoly& a, const SqrtPiPoly& b) { return a + (-b); }

SqrtPiPoly operator*(const SqrtPiPoly& a, const SqrtPiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return SqrtPiPoly(std::move(c));
}

SqrtPiPoly SqrtPiPoly::exact_div(const SqrtPiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<mpq_class> rem = c_;
  if (rem.size() < d.c_.size()) {
    if (!is_zero()) throw InternalConsistencyError("inexact polynomial division in Q[sqrt(pi)]");
    return {};
  }
  std::vector<mpq_class> q(rem.size() - d.c_.size() + 1, mpq_class(0));
  const mpq_class& lead = d.c_.back();
  for (size_t k = q.size(); k-- > 0;) {
    const mpq_class f = rem[k + d.c_.size() - 1] / lead;
    q[k] = f;
    for (size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= f * d.c_[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalConsistencyError("inexact polynomial division in Q[sqrt(pi)]");
  return SqrtPiPoly(std::move(q));
}

Real SqrtPiFraction::value(precision_t bits) const { return num.value(bits + 16).rounded(bits) / den.value(bits + 16).rounded(bits); }

SqrtPiPoly exact_determinant(std::vector<std::vector<SqrtPiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return SqrtPiPoly(std::vector<mpq_class>{1});
  bool negate = false;
  SqrtPiPoly prev(std::vector<mpq_class>{1});
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    // Bareiss step: every division below is exact.
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<SqrtPiFraction> gram_orthogonalize_exact_hermite(const MassMatrix& a, int n) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  // G_ij = (x^i, x^j) as r + s t.
  auto entry = [&a](int i, int j) {
    std::vector<mpq_class> ei(static_cast<size_t>(i) + 1, mpq_class(0)), ej(static_cast<size_t>(j) + 1, mpq_class(0));
    ei.back() = 1;
    ej.back() = 1;
    const auto [r, s] = inner_exact_hermite(ei, ej, a);
    return SqrtPiPoly(r, s);
  };
  const size_t m = static_cast<size_t>(n);
  std::vector<std::vector<SqrtPiPoly>> g(m, std::vector<SqrtPiPoly>(m));
  std::vector<SqrtPiPoly> rhs(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) g[i][j] = entry(static_cast<int>(i), static_cast<int>(j));
    rhs[i] = -entry(static_cast<int>(i), n);
  }
  const SqrtPiPoly det = exact_determinant(g);
  std::vector<SqrtPiFraction> c;
  c.reserve(m + 1);
  for (size_t k = 0; k < m; ++k) {
    auto gk = g;
    for (size_t i = 0; i < m; ++i) gk[i][k] = rhs[i];
    c.push_back({exact_determinant(std::move(gk)), det});
  }
  c.push_back({SqrtPiPoly(std::vector<mpq_class>{1}), SqrtPiPoly(std::vector<mpq_class>{1})});
  return c;
}

}  // namespace hsob
