#include "hsob/zeros.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "hsob/hermite.hpp"
#include "hsob/roots.hpp"

namespace hsob {

namespace {

constexpr int kSubdivisions = 16;

// Whether the masses touch polynomials of this parity. A diagonal mass M_i
// only sees P^{(i)}(0), which vanishes when i and the degree differ in parity.
bool masses_active(const ScaledFamily& fam, int degree) {
  const MassMatrix a = fam.mass_matrix();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a(i, j) != 0 && i % 2 == degree % 2 && j % 2 == degree % 2) return true;
  return false;
}

// f, or f(x)/x for odd degree so that 0 is no longer a zero.
ValueAndDerivative deflated(ValueAndDerivative f, bool odd) {
  if (!odd) return f;
  return [f](const Real& x, Real& v, Real& d) {
    Real fv, fd;
    f(x, fv, fd);
    if (x.is_zero()) {
      v = fd;
      d = Real::with_bits(x.precision());
      return;
    }
    v = fv / x;
    d = (fd - v) / x;
  };
}

int sign_at(const ValueAndDerivative& f, const Real& x) {
  Real v, d;
  f(x, v, d);
  return v.sign();
}

std::vector<Real> jacobi_seeds(int n) {
  if (n < 2) return {};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  std::vector<Real> out;
  for (int k = n - n / 2; k < n; ++k) out.emplace_back(ev(k));
  return out;
}

std::vector<Real> rolle_roots(const Poly& p, const Real& lo, const Real& hi) {
  const int m = p.degree();
  if (m < 1) return {};
  std::vector<Poly> derivs{p};
  for (int k = 1; k < m; ++k) derivs.push_back(derivs.back().derivative());
  const Poly& lin = derivs.back();
  std::vector<Real> roots{-lin[0] / lin[1]};
  const precision_t bits = p.precision();
  for (int k = m - 2; k >= 0; --k) {
    const Poly& q = derivs[static_cast<size_t>(k)];
    ValueAndDerivative f = [&q](const Real& x, Real& v, Real& d) { q.eval_with_derivative(x, v, d); };
    std::vector<Real> pts{lo};
    pts.insert(pts.end(), roots.begin(), roots.end());
    pts.push_back(hi);
    std::vector<Real> next;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const int sa = sign_at(f, pts[i]);
      const int sb = sign_at(f, pts[i + 1]);
      if (sa == 0 || sb == 0 || sa == sb)
        throw CertificationViolation("polynomial is not real-rooted with simple zeros (derivative order " +
                                     std::to_string(k) + ")");
      next.push_back(refine_root(f, pts[i], pts[i + 1], bits));
    }
    roots = std::move(next);
  }
  return roots;
}

Real cauchy_bound(const Poly& p) {
  Real b = Real::with_bits(p.precision());
  for (int k = 0; k < p.degree(); ++k) b = max(b, abs(p[k] / p.leading()));
  return b + 1;
}

}  // namespace

ZeroTable make_zero_table(int degree, std::vector<Real> zeros) {
  ZeroTable t;
  t.degree = degree;
  t.zeros = std::move(zeros);
  const int n = degree / 2;
  if (n > 0) {
    for (const auto& z : t.zeros) {
      const Real s = sqrt(Real(static_cast<long>(n), z.precision()));
      t.scaled_sqrt.push_back(s * z);
      t.scaled_2sqrt.push_back(2 * s * z);
    }
  }
  return t;
}

ZeroTable hermite_zeros(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const precision_t bits = working_precision();
  ValueAndDerivative f = [n](const Real& x, Real& v, Real& d) { hermite_value_and_derivative(n, x, v, d); };
  std::vector<Real> zeros;
  for (const Real& seed : jacobi_seeds(n)) {
    const Real z0(seed, bits);
    Real delta = ldexp(max(Real(1L, bits), z0), -30);
    for (int tries = 0;; ++tries) {
      const Real a = z0 - delta, b = z0 + delta;
      if (sign_at(f, a) * sign_at(f, b) < 0) {
        zeros.push_back(refine_root(f, a, b, bits));
        break;
      }
      if (tries == 20) throw CertificationViolation("no sign change around a Hermite zero seed");
      delta *= 4;
    }
  }
  for (size_t k = 1; k < zeros.size(); ++k)
    if (!(zeros[k - 1] < zeros[k])) throw CertificationViolation("Hermite zero brackets overlap");
  return make_zero_table(n, std::move(zeros));
}

ZeroTable real_zeros(const Poly& p0, bool symmetric) {
  const Poly p = p0.trimmed();
  const int deg = p.degree();
  const precision_t bits = p.precision();
  if (deg < 1) return make_zero_table(std::max(deg, 0), {});
  if (!symmetric) {
    const Real b = cauchy_bound(p);
    std::vector<Real> out;
    for (auto& z : rolle_roots(p, -b, b))
      if (z.sign() > 0) out.push_back(std::move(z));
    return make_zero_table(deg, std::move(out));
  }
  // p(x) = x^(deg mod 2) s(x^2)
  std::vector<Real> sc;
  for (int k = deg % 2; k <= deg; k += 2) sc.push_back(p[k]);
  const Poly s(std::move(sc));
  if (s[0].is_zero()) throw CertificationViolation("multiple zero at the origin");
  const Real b = cauchy_bound(s);
  std::vector<Real> out;
  for (const auto& t : rolle_roots(s, Real::with_bits(bits), b)) {
    if (t.sign() <= 0) throw CertificationViolation("symmetric polynomial has a non-real zero pair");
    out.push_back(sqrt(t));
  }
  if (static_cast<int>(out.size()) != deg / 2) throw CertificationViolation("positive zero count mismatch");
  return make_zero_table(deg, std::move(out));
}

ZeroTable family_zeros(const ScaledFamily& fam, int degree) {
  if (!fam.symmetric()) throw std::invalid_argument("zeros are tabulated for symmetric families only");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const ZeroTable h = hermite_zeros(degree);
  if (!masses_active(fam, degree)) return h;

  const precision_t bits = working_precision();
  const int m = degree / 2;
  const bool odd = degree % 2 == 1;
  const ValueAndDerivative real_f = deflated(
      [&fam, degree](const Real& x, Real& v, Real& d) { fam.poly_value(degree, x, v, d); }, odd);
  const ValueAndDerivative imag_f = deflated(
      [&fam, degree](const Real& y, Real& v, Real& d) { fam.imaginary_axis_value(degree, y, v, d); }, odd);

  std::vector<Real> pts{Real::with_bits(bits)};
  for (const auto& z : h.zeros) pts.push_back(z);

  auto refine_all = [&](const ValueAndDerivative& f, const std::vector<Real>& grid) {
    std::vector<Real> out;
    int prev = sign_at(f, grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
      const int cur = sign_at(f, grid[i]);
      if (cur == 0) throw CertificationViolation("family polynomial vanishes at a bracket endpoint");
      if (cur != prev) out.push_back(refine_root(f, grid[i - 1], grid[i], bits));
      prev = cur;
    }
    return out;
  };

  // Hermite brackets, then a finer scan: geometric towards 0, subdivided
  // Hermite intervals, extended past the last Hermite zero.
  std::vector<Real> fine{pts[0]};
  if (m > 0) {
    for (int e = 60; e >= 5; --e) fine.push_back(ldexp(pts[1], -e));
    pts.push_back(2 * pts.back() + 1);
    for (size_t i = 1; i < pts.size(); ++i)
      for (int j = 1; j <= kSubdivisions; ++j)
        fine.push_back(pts[i - 1] + (pts[i] - pts[i - 1]) * j / kSubdivisions);
    pts.pop_back();
  }

  std::vector<Real> zeros = refine_all(real_f, pts);
  if (static_cast<int>(zeros.size()) != m) zeros = refine_all(real_f, fine);
  std::vector<Real> imag;
  if (static_cast<int>(zeros.size()) < m) imag = refine_all(imag_f, fine);
  if (static_cast<int>(zeros.size() + imag.size()) != m)
    throw CertificationViolation("degree " + std::to_string(degree) + ": found " + std::to_string(zeros.size()) +
                                 " positive and " + std::to_string(imag.size()) + " imaginary zeros, expected " +
                                 std::to_string(m) + " in total");
  ZeroTable t = make_zero_table(degree, std::move(zeros));
  t.imaginary = std::move(imag);
  return t;
}

bool interlace_check(const ZeroTable& inner, const ZeroTable& outer) {
  const auto& a = inner.zeros;
  const auto& b = outer.zeros;
  const long diff = static_cast<long>(a.size()) - static_cast<long>(b.size());
  if (diff > 1 || diff < -1) return false;
  std::vector<std::pair<const Real*, int>> merged;
  for (const auto& z : a) merged.emplace_back(&z, 0);
  for (const auto& z : b) merged.emplace_back(&z, 1);
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });
  for (size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].second == merged[i - 1].second) return false;
    if (!(*merged[i - 1].first < *merged[i].first)) return false;
  }
  return true;
}

int accelerated_zero_count(const LimitFunctionId& limit) {
  switch (limit.tag) {
    case LimitTag::HermiteEven:
    case LimitTag::HermiteOdd:
    case LimitTag::EvenGap:
    case LimitTag::OddGap: return 0;
    case LimitTag::EvenMass:
    case LimitTag::OddMass: return 1;
    case LimitTag::EvenBoth:
    case LimitTag::OddBoth: return 2;
    case LimitTag::Conjecture: return limit.r;
  }
  return 0;
}

bool interlaces_with_hermite(const ScaledFamily& fam, int degree) {
  if (!masses_active(fam, degree)) return true;
  // Alternating signs at 0 < x_1 < ... < x_m put exactly one of the at most
  // m positive zeros in each gap, which is strict interlacing.
  const ZeroTable h = hermite_zeros(degree);
  const ValueAndDerivative f = deflated(
      [&fam, degree](const Real& x, Real& v, Real& d) { fam.poly_value(degree, x, v, d); }, degree % 2 == 1);
  int prev = sign_at(f, Real::with_bits(working_precision()));
  bool alternates = prev != 0;
  for (size_t k = 0; alternates && k < h.zeros.size(); ++k) {
    const int cur = sign_at(f, h.zeros[k]);
    alternates = cur != 0 && cur != prev;
    prev = cur;
  }
  if (alternates) return true;
  const ZeroTable t = family_zeros(fam, degree);
  return t.imaginary.empty() && interlace_check(t, hermite_zeros(degree));
}

bool ZeroAsymptoticsReport::passed() const {
  if (interlacing_asserted && !interlacing) return false;
  return std::all_of(trends.begin(), trends.end(), [](const ZeroTrend& t) { return t.ok(); });
}

ZeroAsymptoticsReport zero_asymptotics_report(const ScaledFamily& fam, const std::vector<int>& n_list, int k_max,
                                              const ZeroThresholds& th) {
  if (n_list.empty()) throw std::invalid_argument("empty n list");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  for (size_t i = 0; i < n_list.size(); ++i)
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1]))
      throw std::invalid_argument("n list must be positive and strictly increasing");
  if (n_list.front() < k_max) throw std::invalid_argument("k_max exceeds the number of positive zeros");

  ZeroAsymptoticsReport rep;
  rep.family = fam.describe();
  rep.limit = select_limit(fam);
  rep.n_list = n_list;
  rep.k_max = k_max;
  rep.interlacing_asserted = fam.source() != ScaledFamily::Source::DiagonalS;
  const int acc = accelerated_zero_count(rep.limit);
  const std::vector<Real> targets = k_max > acc ? limit_function_zeros(rep.limit, k_max - acc) : std::vector<Real>{};

  for (int n : n_list) {
    const int degree = fam.degree(n);
    const ZeroTable t = family_zeros(fam, degree);
    rep.imaginary_pairs.push_back(static_cast<int>(t.imaginary.size()));
    if (masses_active(fam, degree) && (!t.imaginary.empty() || !interlace_check(t, hermite_zeros(degree))))
      rep.interlacing = false;

    // upper half plane zeros by modulus
    std::vector<std::pair<Real, bool>> all;
    for (const auto& z : t.zeros) all.emplace_back(z, false);
    for (const auto& y : t.imaginary) all.emplace_back(y, true);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    const Real sq = sqrt(Real(static_cast<long>(n), working_precision()));
    int real_tail = 0;  // real zeros seen past the accelerated ones
    for (int k = 1; k <= k_max; ++k) {
      ZeroAsymptoticsEntry e;
      e.n = n;
      e.k = k;
      e.zero = all[static_cast<size_t>(k - 1)].first;
      e.imaginary = all[static_cast<size_t>(k - 1)].second;
      e.scaled_sqrt = sq * e.zero;
      e.scaled_2sqrt = 2 * e.scaled_sqrt;
      e.accelerated = k <= acc;
      if (!e.accelerated && !e.imaginary) {
        e.target = targets[static_cast<size_t>(real_tail)];
        e.relative_error = relative_error(e.scaled_2sqrt, *e.target);
      }
      if (!e.accelerated && !e.imaginary) ++real_tail;
      rep.entries.push_back(std::move(e));
    }
  }

  const size_t kcount = static_cast<size_t>(k_max);
  auto at = [&](size_t row, int k) -> const ZeroAsymptoticsEntry& {
    return rep.entries[row * kcount + static_cast<size_t>(k - 1)];
  };
  for (int k = 1; k <= k_max; ++k) {
    ZeroTrend tr;
    tr.k = k;
    tr.accelerated = k <= acc;
    for (size_t i = 0; i < n_list.size(); ++i)
      if (!tr.accelerated && !at(i, k).target) tr.tracked = false;
    tr.decreasing = tr.tracked;
    for (size_t i = 1; tr.tracked && i < n_list.size(); ++i) {
      const auto& prev = at(i - 1, k);
      const auto& cur = at(i, k);
      if (tr.accelerated) {
        if (!(cur.scaled_sqrt < prev.scaled_sqrt)) tr.decreasing = false;
      } else if (!(*cur.relative_error < max(*prev.relative_error, Real(th.settled_relative)) * th.slack)) {
        tr.decreasing = false;
      }
    }
    if (!tr.accelerated && tr.tracked) tr.final_within = *at(n_list.size() - 1, k).relative_error < th.final_relative;
    rep.trends.push_back(tr);
  }
  return rep;
}

}  // namespace hsob
