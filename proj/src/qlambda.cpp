#include "hsob/qlambda.hpp"

#include <sstream>

#include "hsob/hermite.hpp"
#include "hsob/kernels.hpp"

namespace hsob {

namespace {

constexpr precision_t kGuard = 32;

Real q_real(const mpq_class& q, precision_t bits) { return Real::from_mpq(q.get_mpq_t(), bits); }

Poly exact_poly(const std::vector<mpq_class>& c, precision_t bits) {
  std::vector<Real> v;
  v.reserve(c.size());
  for (const mpq_class& q : c) v.push_back(q_real(q, bits));
  return Poly(std::move(v));
}

std::vector<mpq_class> drop_low(const std::vector<mpq_class>& c, size_t k, const char* what) {
  for (size_t i = 0; i < k && i < c.size(); ++i)
    if (c[i] != 0) throw InternalConsistencyError(std::string("nonzero remainder dividing ") + what);
  return {c.begin() + static_cast<long>(k), c.end()};
}

}  // namespace

TwoByTwoCase TwoByTwoCase::make(const mpq_class& m0, const mpq_class& m1, const mpq_class& lambda) {
  TwoByTwoCase c{m0, m1, lambda};
  c.M0.canonicalize();
  c.M1.canonicalize();
  c.lambda.canonicalize();
  if (c.M0 < 0 || c.M1 < 0 || c.det() < 0)
    throw NotPositiveSemidefinite("2x2 mass matrix is not positive semidefinite: " + c.to_string());
  return c;
}

int TwoByTwoCase::rank() const {
  if (det() > 0) return 2;
  return (M0 != 0 || M1 != 0) ? 1 : 0;
}

MassMatrix TwoByTwoCase::mass_matrix() const { return MassMatrix({{M0, lambda}, {lambda, M1}}); }

SobolevProduct TwoByTwoCase::product() const { return SobolevProduct{WeightSpec::hermite(), mass_matrix(), 1}; }

std::string TwoByTwoCase::to_string() const {
  return "(M0=" + M0.get_str() + ",M1=" + M1.get_str() + ",lambda=" + lambda.get_str() + ")";
}

Real delta(int n, const TwoByTwoCase& c) {
  if (n < 1) throw std::invalid_argument("delta needs n >= 1");
  const precision_t bits = working_precision();
  const precision_t wide = bits + kGuard;
  // sqrt(pi) K = k exactly; K = k / sqrt(pi)
  const mpq_class k0 = kernel_const_scaled(n - 1, 0, 0);
  const mpq_class k11 = kernel_const_scaled(n - 1, 1, 1);
  const Real spi = sqrt_pi(wide);
  Real v(1L, wide);
  v += q_real(c.M0 * k0 + c.M1 * k11, wide) / spi;
  v += q_real(c.det() * k0 * k11, wide) / (spi * spi);
  return Real(v, bits);
}

ConnectionCoeffs::ConnectionCoeffs(Parity parity, Real first, Real second)
    : parity_(parity), first_(std::move(first)), second_(std::move(second)) {}

const Real& ConnectionCoeffs::a() const {
  if (parity_ != Parity::Even) throw std::logic_error("a_n belongs to even degrees");
  return first_;
}
const Real& ConnectionCoeffs::b() const {
  if (parity_ != Parity::Even) throw std::logic_error("b_n belongs to even degrees");
  return second_;
}
const Real& ConnectionCoeffs::c() const {
  if (parity_ != Parity::Odd) throw std::logic_error("c_n belongs to odd degrees");
  return first_;
}
const Real& ConnectionCoeffs::d() const {
  if (parity_ != Parity::Odd) throw std::logic_error("d_n belongs to odd degrees");
  return second_;
}

ConnectionCoeffs connection_coeffs(int n, Parity parity, const TwoByTwoCase& c) {
  if (n < 1) throw std::invalid_argument("connection coefficients need n >= 1");
  const precision_t bits = working_precision();
  const precision_t wide = bits + kGuard;
  PrecisionScope scope(wide);
  const Real spi = sqrt_pi(wide);
  const mpq_class h2n = hermite_at_zero_exact(2 * n);
  // (-1)^{n-1} H_{2n}(0) / (n-1)!
  mpq_class base = h2n / mpq_class(factorial(n - 1));
  base.canonicalize();
  if ((n - 1) % 2 != 0) base = -base;

  if (parity == Parity::Even) {
    const Real pre = q_real(base, wide) / (spi * delta(2 * n, c));
    const Real k11 = q_real(kernel_const_scaled(2 * n - 1, 1, 1), wide) / spi;
    const Real a = pre * (q_real(c.M0, wide) + q_real(c.det(), wide) * k11);
    const Real b = pre * q_real(c.lambda, wide);
    return ConnectionCoeffs(Parity::Even, Real(a, bits), Real(b, bits));
  }
  const Real d2 = delta(2 * n + 1, c);
  // (-1)^n (2n+1) H_{2n}(0) / n! = -(2n+1) base / n
  mpq_class cbase = -base * (2 * n + 1) / n;
  cbase.canonicalize();
  const Real cc = q_real(cbase, wide) / (spi * d2) * q_real(c.lambda, wide);
  const Real k0 = q_real(kernel_const_scaled(2 * n, 0, 0), wide) / spi;
  const Real dd = q_real(base * (2 * n + 1), wide) / (spi * d2) * (q_real(c.M1, wide) + q_real(c.det(), wide) * k0);
  return ConnectionCoeffs(Parity::Odd, Real(cc, bits), Real(dd, bits));
}

std::vector<mpq_class> hermite_quotient_odd_over_x(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("H_m / x needs odd m >= 1");
  return drop_low(hermite_monic_exact(m), 1, "H_m by x");
}

std::vector<mpq_class> hermite_quotient_pair_over_x2(int n) {
  if (n < 1) throw std::invalid_argument("(2x H_2n + H_2n-1)/x^2 needs n >= 1");
  const std::vector<mpq_class> h2n = hermite_monic_exact(2 * n);
  const std::vector<mpq_class> h2n1 = hermite_monic_exact(2 * n - 1);
  std::vector<mpq_class> num(h2n.size() + 1, mpq_class(0));
  for (size_t k = 0; k < h2n.size(); ++k) num[k + 1] += 2 * h2n[k];
  for (size_t k = 0; k < h2n1.size(); ++k) num[k] += h2n1[k];
  for (auto& q : num) q.canonicalize();
  return drop_low(num, 2, "2x H_2n + H_2n-1 by x^2");
}

Poly q_poly(int n, const TwoByTwoCase& c) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  if (n < 2) return gram_orthogonalize(c.product(), n);
  const precision_t bits = working_precision();
  const precision_t wide = bits + kGuard;
  const int m = n / 2;
  const ConnectionCoeffs cc = connection_coeffs(m, parity_of(n), c);
  const Poly pair = exact_poly(hermite_quotient_pair_over_x2(m), wide);
  Poly q = exact_poly(hermite_monic_exact(n), wide);
  if (n % 2 == 0) {
    q -= exact_poly(hermite_quotient_odd_over_x(2 * m - 1), wide) * Real(cc.a(), wide);
    q -= pair * Real(cc.b(), wide);
  } else {
    q -= exact_poly(hermite_quotient_odd_over_x(2 * m + 1), wide) * Real(cc.c(), wide);
    q -= pair * Real(cc.d(), wide);
  }
  return q.rounded(bits);
}

bool decreasing_with_slack(const std::vector<Real>& e, double slack) {
  for (size_t i = 1; i < e.size(); ++i)
    if (!(e[i] < e[i - 1] * slack)) return false;
  return true;
}

CoeffLimitReport coeff_limit_report(const TwoByTwoCase& c, const std::vector<int>& n_list) {
  for (size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("n list must be ascending");
  const precision_t bits = working_precision();
  const Real zero(0L, bits);
  const Real pi_r = pi(bits);
  auto q = [bits](const mpq_class& v) { return q_real(v, bits); };

  CoeffLimitReport rep{c, {}, {}};
  for (int n : n_list) {
    const ConnectionCoeffs even = connection_coeffs(n, Parity::Even, c);
    const ConnectionCoeffs odd = connection_coeffs(n, Parity::Odd, c);
    CoeffLimitRow row{n, even.a(), even.b(), odd.c(), odd.d(), {}};
    const Real rn(static_cast<long>(n), bits);
    const Real rn15 = rn * sqrt(rn);
    auto add = [&row](std::string name, const Real& value, std::optional<Real> predicted) {
      std::optional<Real> dist;
      if (predicted) dist = predicted->is_zero() ? abs(value) : abs(value - *predicted) / abs(*predicted);
      row.quantities.push_back({std::move(name), value, std::move(predicted), std::move(dist)});
    };
    if (c.diagonal()) {
      add("a", row.a, c.M0 > 0 ? Real(-1L, bits) / 2 : zero);
      add("b", row.b, zero);
      add("c", row.c, zero);
      add("d", row.d, c.M1 > 0 ? Real(-3L, bits) / 4 : zero);
    } else if (c.rank() == 1) {
      add("a", row.a, zero);
      add("n*a", rn * row.a, q(-3 * c.M0 / (8 * c.M1)));
      add("n*b", rn * row.b, q(-3 * c.lambda / (8 * c.M1)));
      add("n*c", rn * row.c, q(3 * c.lambda / (4 * c.M1)));
      add("d", row.d, Real(-3L, bits) / 4);
    } else {
      add("a", row.a, Real(-1L, bits) / 2);
      add("n^1.5*b", rn15 * row.b, pi_r * q(-3 * c.lambda / (16 * c.det())));
      add("n^1.5*c", rn15 * row.c, pi_r * q(3 * c.lambda / (8 * c.det())));
      add("d", row.d, Real(-3L, bits) / 4);
    }
    rep.rows.push_back(std::move(row));
  }
  if (!rep.rows.empty()) {
    const auto& first = rep.rows.front().quantities;
    for (size_t k = 0; k < first.size(); ++k) {
      if (!first[k].predicted || first[k].predicted->is_zero()) continue;
      std::vector<Real> e;
      for (const auto& r : rep.rows) e.push_back(*r.quantities[k].distance);
      rep.trends.emplace_back(first[k].name, decreasing_with_slack(e));
    }
  }
  return rep;
}

}  // namespace hsob
