#include "hsob/mehler_heine.hpp"

#include <sstream>

#include "hsob/hermite.hpp"

namespace hsob {

namespace {

constexpr precision_t kGuard = 32;

std::string join(const std::vector<mpq_class>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

LimitFunctionId by_masses(bool first, bool second, Parity parity) {
  const bool even = parity == Parity::Even;
  if (!first && !second) return {even ? LimitTag::HermiteEven : LimitTag::HermiteOdd};
  if (first && !second) return {even ? LimitTag::EvenMass : LimitTag::OddMass};
  if (!first && second) return {even ? LimitTag::EvenGap : LimitTag::OddGap};
  return {even ? LimitTag::EvenBoth : LimitTag::OddBoth};
}

}  // namespace

ScaledFamily ScaledFamily::hermite(Parity parity) {
  ScaledFamily f;
  f.parity_ = parity;
  return f;
}

ScaledFamily ScaledFamily::qlambda(const TwoByTwoCase& c, Parity parity) {
  ScaledFamily f;
  f.source_ = Source::QLambda;
  f.parity_ = parity;
  f.qcase_ = c;
  // zero mass: the family is H_n and takes the plain recurrence path
  if (c.rank() > 0) f.eval_ = std::make_shared<const MassPerturbedHermite>(c.mass_matrix());
  return f;
}

ScaledFamily ScaledFamily::diagonal_s(const std::vector<mpq_class>& masses, Parity parity) {
  if (masses.empty() || masses.size() % 2 != 0)
    throw std::invalid_argument("diagonal masses must come in pairs (length 2r, r >= 1)");
  for (const auto& m : masses)
    if (m < 0) throw NotPositiveSemidefinite("masses must be nonnegative");
  ScaledFamily f;
  f.source_ = Source::DiagonalS;
  f.parity_ = parity;
  f.masses_ = masses;
  for (auto& m : f.masses_) m.canonicalize();
  const MassMatrix a = MassMatrix::diagonal(f.masses_);
  if (!a.is_zero()) f.eval_ = std::make_shared<const MassPerturbedHermite>(a);
  return f;
}

ScaledFamily ScaledFamily::with_parity(Parity parity) const {
  ScaledFamily f = *this;
  f.parity_ = parity;
  return f;
}

MassMatrix ScaledFamily::mass_matrix() const {
  switch (source_) {
    case Source::Hermite: return MassMatrix();
    case Source::QLambda: return qcase_.mass_matrix();
    case Source::DiagonalS: return MassMatrix::diagonal(masses_);
  }
  return MassMatrix();
}

void ScaledFamily::poly_value(int degree, const Real& x, Real& value, Real& deriv) const {
  if (!eval_) {
    hermite_value_and_derivative(degree, x, value, deriv);
    return;
  }
  eval_->value_and_derivative(degree, x, value, deriv);
}

void ScaledFamily::imaginary_axis_value(int degree, const Real& y, Real& value, Real& deriv) const {
  if (!symmetric()) throw std::invalid_argument("imaginary-axis values need a symmetric family");
  if (!eval_) {
    MassPerturbedHermite(MassMatrix()).imaginary_axis_value(degree, y, value, deriv);
    return;
  }
  eval_->imaginary_axis_value(degree, y, value, deriv);
}

Real ScaledFamily::poly_value(int degree, const Real& x) const {
  Real v, d;
  poly_value(degree, x, v, d);
  return v;
}

std::string ScaledFamily::describe() const {
  std::string s;
  switch (source_) {
    case Source::Hermite: s = "hermite"; break;
    case Source::QLambda: s = "q" + qcase_.to_string(); break;
    case Source::DiagonalS: s = "s(" + join(masses_) + ")"; break;
  }
  return s + "," + to_string(parity_);
}

Real scaled_eval(const ScaledFamily& fam, int n, const Real& x) {
  if (n < 1) throw std::invalid_argument("scaled evaluation needs n >= 1");
  const precision_t bits = x.precision();
  const precision_t wide = bits + kGuard;
  const Real rn(static_cast<long>(n), wide);
  const Real sq = sqrt(rn);
  const Real y = Real(x, wide) / (2 * sq);
  Real v = fam.poly_value(fam.degree(n), y);
  v /= Real::from_mpz(factorial(n).get_mpz_t(), wide);
  if (fam.parity() == Parity::Even) v *= sq;
  if (n % 2 != 0) v = -v;
  return Real(v, bits);
}

LimitFunctionId select_limit(const ScaledFamily& fam) {
  const Parity p = fam.parity();
  const bool even = p == Parity::Even;
  switch (fam.source()) {
    case ScaledFamily::Source::Hermite:
      return {even ? LimitTag::HermiteEven : LimitTag::HermiteOdd};
    case ScaledFamily::Source::QLambda: {
      const TwoByTwoCase& c = fam.qcase();
      if (c.diagonal()) return by_masses(even ? c.M0 > 0 : c.M1 > 0, false, p);
      // lambda != 0: rank 1 keeps the Hermite limit for even degree
      if (even) return {c.rank() == 2 ? LimitTag::EvenMass : LimitTag::HermiteEven};
      return {LimitTag::OddMass};
    }
    case ScaledFamily::Source::DiagonalS: {
      const auto& m = fam.masses();
      const int r = fam.r();
      const size_t off = even ? 0 : 1;
      if (r == 1) return by_masses(m[off] > 0, false, p);
      if (r == 2) return by_masses(m[off] > 0, m[off + 2] > 0, p);
      for (const auto& v : m)
        if (v == 0)
          throw UncoveredCase("no Mehler-Heine limit is known for r = " + std::to_string(r) +
                              " with a zero mass: " + fam.describe());
      return LimitFunctionId::conjecture(r, p);
    }
  }
  throw std::logic_error("unknown family source");
}

std::vector<Real> default_grid(const Real& grid_max, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (grid_max.sign() <= 0) throw std::invalid_argument("grid maximum must be positive");
  std::vector<Real> g;
  g.reserve(static_cast<size_t>(points));
  for (int k = 1; k <= points; ++k) g.push_back(grid_max * k / points);
  return g;
}

std::vector<Real> default_grid() { return default_grid(Real::parse("12.1"), 121); }

namespace {

MHReport report_against(const ScaledFamily& fam, const LimitFunctionId& limit, const std::vector<int>& n_list,
                        const std::vector<Real>& grid, const MHThresholds& th) {
  if (n_list.empty()) throw std::invalid_argument("empty n list");
  for (size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw std::invalid_argument("n must be >= 1");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw std::invalid_argument("n list must be ascending");
  }
  for (const Real& x : grid)
    if (x.sign() <= 0) throw std::invalid_argument("grid points must be positive");

  MHReport rep;
  rep.family = fam.describe();
  rep.limit = limit;
  rep.grid = grid;
  rep.n_list = n_list;
  std::vector<Real> lim;
  lim.reserve(grid.size());
  for (const Real& x : grid) lim.push_back(limit_function(limit, x));
  for (int n : n_list) {
    Real sup(0L, working_precision());
    Real at = grid.empty() ? Real(0L, working_precision()) : grid.front();
    for (size_t k = 0; k < grid.size(); ++k) {
      const Real e = abs(scaled_eval(fam, n, grid[k]) - lim[k]);
      if (e > sup) {
        sup = e;
        at = grid[k];
      }
    }
    rep.sup_errors.push_back(sup);
    rep.sup_points.push_back(at);
  }
  rep.decreasing = decreasing_with_slack(rep.sup_errors, th.slack);
  rep.final_below = rep.sup_errors.back() < th.final_sup;
  rep.sign_x = Real(th.sign_x);
  rep.scaled_at_sign_x = scaled_eval(fam, n_list.back(), rep.sign_x);
  rep.limit_at_sign_x = limit_function(limit, rep.sign_x);
  rep.sign_ok = rep.scaled_at_sign_x.sign() == rep.limit_at_sign_x.sign();
  return rep;
}

}  // namespace

MHReport mh_report(const ScaledFamily& fam, const std::vector<int>& n_list, const std::vector<Real>& grid,
                   const MHThresholds& th) {
  return report_against(fam, select_limit(fam), n_list, grid, th);
}

ConjectureProbe conjecture_probe(int r, const std::vector<mpq_class>& masses, const std::vector<int>& n_list,
                                 const std::vector<Real>& grid, const MHThresholds& th) {
  if (r < 1) throw std::invalid_argument("conjecture probe needs r >= 1");
  if (masses.size() != static_cast<size_t>(2 * r))
    throw std::invalid_argument("conjecture probe needs 2r masses");
  for (const auto& m : masses)
    if (m <= 0) throw std::invalid_argument("conjecture probe needs all masses positive");
  ConjectureProbe probe;
  probe.r = r;
  bool consistent = true;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const ScaledFamily fam = ScaledFamily::diagonal_s(masses, p);
    const LimitFunctionId conj = LimitFunctionId::conjecture(r, p);
    if (r <= 2) {
      const auto a = limit_terms(conj), b = limit_terms(select_limit(fam));
      consistent = consistent && a.size() == b.size() && a.front().coeff == b.front().coeff &&
                   a.front().order == b.front().order;
    }
    probe.reports.push_back(report_against(fam, conj, n_list, grid, th));
  }
  if (r <= 2) probe.consistent_with_theorems = consistent;
  return probe;
}

}  // namespace hsob
