#include "hsob/poly.hpp"

#include <algorithm>

namespace hsob {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Poly::Poly(std::vector<Real> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  const precision_t p = c_.front().precision();
  for (const Real& c : c_) {
    if (c.precision() != p) throw PrecisionMismatch(p, c.precision());
  }
}

Poly Poly::constant(const Real& c) { return Poly(std::vector<Real>{c}); }

Poly Poly::monomial(int k, precision_t bits) {
  std::vector<Real> c(static_cast<size_t>(k) + 1, Real::with_bits(bits));
  c.back() = Real(1L, bits);
  return Poly(std::move(c));
}

precision_t Poly::precision() const {
  return c_.empty() ? working_precision() : c_.front().precision();
}

Real Poly::symmetry_defect() const {
  Real worst = Real::with_bits(precision());
  for (int k = degree() - 1; k >= 0; k -= 2) worst = max(worst, abs(c_[static_cast<size_t>(k)]));
  return worst;
}

Real Poly::max_abs_coeff() const {
  Real worst = Real::with_bits(precision());
  for (const Real& c : c_) worst = max(worst, abs(c));
  return worst;
}

Real Poly::operator()(const Real& x) const {
  Real acc = c_.back();
  for (int k = degree() - 1; k >= 0; --k) {
    acc *= x;
    acc += c_[static_cast<size_t>(k)];
  }
  return acc;
}

void Poly::eval_with_derivative(const Real& x, Real& value, Real& deriv) const {
  value = c_.back();
  deriv = Real::with_bits(precision());
  for (int k = degree() - 1; k >= 0; --k) {
    deriv *= x;
    deriv += value;
    value *= x;
    value += c_[static_cast<size_t>(k)];
  }
}

Poly Poly::derivative(int order) const {
  if (order <= 0) return *this;
  if (order > degree()) return constant(Real::with_bits(precision()));
  std::vector<Real> d;
  d.reserve(static_cast<size_t>(degree() - order + 1));
  for (int k = order; k <= degree(); ++k) {
    Real c = c_[static_cast<size_t>(k)];
    for (int t = 0; t < order; ++t) c *= static_cast<long>(k - t);
    d.push_back(std::move(c));
  }
  return Poly(std::move(d));
}

Poly Poly::truncated(int j) const {
  if (j >= degree()) return *this;
  return Poly(std::vector<Real>(c_.begin(), c_.begin() + j + 1));
}

Poly Poly::shifted_up(int k) const {
  std::vector<Real> out(static_cast<size_t>(k), Real::with_bits(precision()));
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(std::move(out));
}

Poly Poly::divided_by_x_power(int k, const Real& tolerance) const {
  if (k == 0) return *this;
  if (k > degree()) throw InternalConsistencyError("division by x^k with k above the degree");
  const Real bound = tolerance.rounded(precision()) * max_abs_coeff();
  for (int t = 0; t < k; ++t) {
    if (abs(c_[static_cast<size_t>(t)]) > bound) {
      throw InternalConsistencyError("nonzero remainder in division by x^" + std::to_string(k) +
                                     " at coefficient " + std::to_string(t) + ": " +
                                     c_[static_cast<size_t>(t)].to_string(12));
    }
  }
  return Poly(std::vector<Real>(c_.begin() + k, c_.end()));
}

Poly Poly::scaled_argument(const Real& c) const {
  Poly out = *this;
  Real power(1L, precision());
  for (Real& coeff : out.c_) {
    coeff *= power;
    power *= c;
  }
  return out;
}

Poly Poly::composed_with_square() const {
  std::vector<Real> out(static_cast<size_t>(2 * degree() + 1), Real::with_bits(precision()));
  for (int k = 0; k <= degree(); ++k) out[static_cast<size_t>(2 * k)] = c_[static_cast<size_t>(k)];
  return Poly(std::move(out));
}

Poly Poly::rounded(precision_t bits) const {
  std::vector<Real> out;
  out.reserve(c_.size());
  for (const Real& c : c_) out.push_back(c.rounded(bits));
  return Poly(std::move(out));
}

Poly Poly::trimmed() const {
  size_t n = c_.size();
  while (n > 1 && c_[n - 1].is_zero()) --n;
  return Poly(std::vector<Real>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Real::with_bits(precision()));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Real::with_bits(precision()));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Poly& Poly::operator*=(const Real& s) {
  for (Real& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Real> out(static_cast<size_t>(a.degree() + b.degree() + 1),
                        Real::with_bits(a.precision()));
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<size_t>(i + j)].add_product(a[i], b[j]);
  }
  return Poly(std::move(out));
}

Real max_coeff_difference(const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree());
  Real worst = Real::with_bits(a.precision());
  for (int k = 0; k <= n; ++k) {
    const Real ak = k <= a.degree() ? a[k] : Real::with_bits(a.precision());
    const Real bk = k <= b.degree() ? b[k] : Real::with_bits(a.precision());
    worst = max(worst, abs(ak - bk));
  }
  return worst;
}

Real max_relative_coeff_difference(const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree());
  const precision_t p = a.precision();
  const Real floor = ldexp(b.max_abs_coeff(), -p / 2);
  Real worst = Real::with_bits(p);
  for (int k = 0; k <= n; ++k) {
    const Real ak = k <= a.degree() ? a[k] : Real::with_bits(p);
    const Real bk = k <= b.degree() ? b[k] : Real::with_bits(p);
    const Real denom = max(abs(bk), floor);
    const Real diff = abs(ak - bk);
    if (denom.is_zero()) {
      worst = max(worst, diff);
    } else {
      worst = max(worst, diff / denom);
    }
  }
  return worst;
}

}  // namespace hsob
