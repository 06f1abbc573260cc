#include "hsob/suites.hpp"

#include <sstream>
#include <stdexcept>

#include "hsob/bessel.hpp"
#include "hsob/exact_ring.hpp"
#include "hsob/kernels.hpp"
#include "hsob/mehler_heine.hpp"
#include "hsob/sobolev_gram.hpp"
#include "hsob/symmetrize.hpp"
#include "hsob/zeros.hpp"

namespace hsob::suites {

namespace {

std::string fmt(const Real& x) { return x.to_string(4); }

Check bound_check(std::string name, const Real& worst, double bound) {
  return {std::move(name), worst <= Real(bound), "worst " + fmt(worst) + " (bound " + fmt(Real(bound)) + ")"};
}

std::string join_reals(const std::vector<Real>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt(v[i]);
  return s;
}

std::vector<Real> kernel_grid() {
  std::vector<Real> g;
  for (int k = 0; k < 20; ++k) g.push_back(Real(-3) + Real(6) * (2 * k + 1) / 40);
  return g;
}

// First positive root of tan x = x by bisection of sin x - x cos x on
// (pi, 3pi/2), independent of the series code.
Real tan_root_bisection() {
  Real a = pi(), b = pi() * 3 / 2;
  auto f = [](const Real& x) { return sin(x) - x * cos(x); };
  const int sa = f(a).sign();
  for (int i = 0; i < working_precision() + 8; ++i) {
    const Real m = ldexp(a + b, -1);
    (f(m).sign() == sa ? a : b) = m;
  }
  return ldexp(a + b, -1);
}

struct MhRow {
  std::string label;
  ScaledFamily fam;
};

std::vector<MhRow> mh_rows() {
  using F = ScaledFamily;
  const auto q = [](int m0, int m1, int l) { return TwoByTwoCase::make(m0, m1, l); };
  return {
      {"hermite even", F::hermite(Parity::Even)},
      {"hermite odd", F::hermite(Parity::Odd)},
      {"M0>0 even", F::qlambda(q(1, 0, 0), Parity::Even)},
      {"M0=0 even", F::qlambda(q(0, 1, 0), Parity::Even)},
      {"M1>0 odd", F::qlambda(q(0, 1, 0), Parity::Odd)},
      {"M1=0 odd", F::qlambda(q(1, 0, 0), Parity::Odd)},
      {"rank 2 even", F::qlambda(q(2, 1, 1), Parity::Even)},
      {"rank 2 odd", F::qlambda(q(2, 1, 1), Parity::Odd)},
      {"rank 1 even", F::qlambda(q(1, 1, 1), Parity::Even)},
      {"rank 1 odd", F::qlambda(q(1, 1, 1), Parity::Odd)},
      {"M0>0 M2=0 even", F::diagonal_s({1, 0, 0, 0}, Parity::Even)},
      {"M0=0 M2>0 even", F::diagonal_s({0, 0, 1, 0}, Parity::Even)},
      {"M0>0 M2>0 even", F::diagonal_s({1, 0, 1, 0}, Parity::Even)},
      {"M1>0 M3=0 odd", F::diagonal_s({0, 1, 0, 0}, Parity::Odd)},
      {"M1=0 M3>0 odd", F::diagonal_s({0, 0, 0, 1}, Parity::Odd)},
      {"M1>0 M3>0 odd", F::diagonal_s({0, 1, 0, 1}, Parity::Odd)},
  };
}

}  // namespace

int SuiteResult::failures() const {
  int f = 0;
  for (const auto& c : checks) f += c.passed ? 0 : 1;
  return f;
}

std::vector<TwoByTwoCase> standard_cases() {
  return {TwoByTwoCase::make(1, 0, 0), TwoByTwoCase::make(0, 1, 0), TwoByTwoCase::make(1, 1, 0),
          TwoByTwoCase::make(1, 1, 1), TwoByTwoCase::make(2, 1, 1), TwoByTwoCase::make(0, 0, 0)};
}

std::vector<int> standard_n_list() { return {25, 50, 100, 200}; }

SuiteResult kernels_oracle() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"kernels-oracle", {}};
  const Real zero(0);
  const auto grid = kernel_grid();
  Real closed(0), cd(0), taylor(0), consts(0);
  for (int n = 0; n <= kKernelMaxN; ++n) {
    for (const Real& x : grid) {
      cd = max(cd, relative_error(kernel_cd(n, x, zero), kernel_sum({n, 0, 0}, x, zero)));
      cd = max(cd, relative_error(kernel_cd(n, x, grid[3]), kernel_sum({n, 0, 0}, x, grid[3])));
      for (int j = 0; j <= 3; ++j) {
        const bool known = j <= 1 ? (j == 0 || n >= 1) : (j == 2 ? n % 2 == 1 : n % 2 == 0);
        if (known) closed = max(closed, relative_error(kernel_closed_at0(n, j, x), kernel_sum({n, 0, j}, x, zero)));
        if (n >= j) taylor = max(taylor, relative_error(kernel_taylor_general(n, j, x), kernel_sum({n, 0, j}, x, zero)));
      }
    }
    for (auto [i, j] : {std::pair{0, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 3}, {3, 3}, {0, 1}, {2, 3}}) {
      const bool known = (i + j) % 2 == 1 || (i <= 1 && j <= 1) || ((i == 0 || i == 2) && n % 2 == 1) ||
                         ((i == 1 || i == 3) && n % 2 == 0);
      if (!known) continue;
      const Real ref = kernel_sum({n, i, j}, zero, zero);
      consts = max(consts, ref.is_zero() ? abs(kernel_const(n, i, j)) : relative_error(kernel_const(n, i, j), ref));
    }
  }
  r.checks.push_back(bound_check("closed forms K^(0,j)(x,0), j<=3", closed, kKernelTol));
  r.checks.push_back(bound_check("general Taylor form K^(0,j)(x,0), j<=3", taylor, kKernelTol));
  r.checks.push_back(bound_check("Christoffel-Darboux quotient", cd, kKernelTol));
  r.checks.push_back(bound_check("constants K^(i,j)(0,0)", consts, kKernelTol));
  return r;
}

SuiteResult qlambda_oracle() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"qlambda-oracle", {}};
  for (const auto& c : standard_cases()) {
    Real worst(0);
    for (int n = 0; n <= kConstructionMaxN; ++n)
      worst = max(worst, max_relative_coeff_difference(q_poly(n, c), gram_orthogonalize(c.product(), n)));
    r.checks.push_back(bound_check("connection formulas vs Gram " + c.to_string(), worst, kConstructionTol));
  }
  return r;
}

SuiteResult exact_ring() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"exact-ring", {}};
  const std::vector<std::pair<std::string, MassMatrix>> cases = {
      {"(1,0,0)", TwoByTwoCase::make(1, 0, 0).mass_matrix()},
      {"(0,1,0)", TwoByTwoCase::make(0, 1, 0).mass_matrix()},
      {"(2,1,1)", TwoByTwoCase::make(2, 1, 1).mass_matrix()},
      {"(3/2,5/7,1/3)", TwoByTwoCase::make(mpq_class(3, 2), mpq_class(5, 7), mpq_class(1, 3)).mass_matrix()},
      {"diag(1,1,1,1)", MassMatrix::diagonal({1, 1, 1, 1})},
      {"diag(0,2,1/2,0)", MassMatrix::diagonal({0, 2, mpq_class(1, 2), 0})},
  };
  for (const auto& [label, a] : cases) {
    Real worst(0);
    for (int n = 0; n <= kExactRingMaxN; ++n) {
      const Poly q = gram_orthogonalize(SobolevProduct{WeightSpec::hermite(), a}, n);
      std::vector<Real> c;
      for (const auto& f : gram_orthogonalize_exact_hermite(a, n)) c.push_back(f.value());
      worst = max(worst, max_relative_coeff_difference(q, Poly(c)));
    }
    r.checks.push_back(bound_check("Real vs exact pipeline " + label, worst, kExactRingTol));
  }
  return r;
}

SuiteResult mehler_heine_trends() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"mh-trends", {}};
  const auto grid = default_grid();
  for (const auto& row : mh_rows()) {
    const MHReport rep = mh_report(row.fam, standard_n_list(), grid);
    std::ostringstream d;
    d << rep.limit.name() << "; sup " << join_reals(rep.sup_errors) << "; decreasing " << rep.decreasing
      << ", final<0.05 " << rep.final_below << ", sign at 0.1 " << rep.sign_ok << " (" << fmt(rep.scaled_at_sign_x)
      << " vs " << fmt(rep.limit_at_sign_x) << ")";
    r.checks.push_back({row.label + " " + row.fam.describe(), rep.passed(), d.str()});
  }
  return r;
}

SuiteResult coeff_limits() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"coeff-limits", {}};
  // quantity names per case: a -> -1/2 (M0 > 0 diagonal), n*a (rank 1), d -> -3/4 (M1 > 0)
  const std::vector<std::pair<TwoByTwoCase, std::vector<std::string>>> plan = {
      {TwoByTwoCase::make(1, 0, 0), {"a"}},
      {TwoByTwoCase::make(1, 1, 0), {"a", "d"}},
      {TwoByTwoCase::make(0, 1, 0), {"d"}},
      {TwoByTwoCase::make(1, 1, 1), {"n*a", "d"}},
      {TwoByTwoCase::make(2, 1, 1), {"d"}},
  };
  for (const auto& [c, names] : plan) {
    const auto rep = coeff_limit_report(c, standard_n_list());
    for (const auto& name : names) {
      std::vector<Real> dist;
      std::optional<Real> predicted;
      for (const auto& row : rep.rows)
        for (const auto& q : row.quantities)
          if (q.name == name && q.distance) {
            dist.push_back(*q.distance);
            predicted = q.predicted;
          }
      const bool found = dist.size() == rep.rows.size() && predicted;
      const bool ok = found && dist.back() < Real(kCoeffLimitTol) && decreasing_with_slack(dist);
      r.checks.push_back({name + " " + c.to_string(), ok,
                          found ? "limit " + fmt(*predicted) + "; relative distances " + join_reals(dist)
                                : "quantity not reported"});
    }
  }
  return r;
}

SuiteResult zero_asymptotics() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"zero-asymptotics", {}};
  const auto nl = standard_n_list();

  int pairs = 0, failures = 0, skipped = 0;
  std::string first_failure;
  for (const auto& c : standard_cases()) {
    if (!c.diagonal()) {
      ++skipped;
      continue;
    }
    for (int degree = 1; degree <= kInterlaceMaxDegree; ++degree) {
      ++pairs;
      if (!interlaces_with_hermite(ScaledFamily::qlambda(c, parity_of(degree)), degree)) {
        if (failures++ == 0) first_failure = c.to_string() + " degree " + std::to_string(degree);
      }
    }
  }
  r.checks.push_back({"interlacing Q_n / H_n, n <= 200", failures == 0,
                      std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures" +
                          (failures ? " (first " + first_failure + ")" : "") + "; " + std::to_string(skipped) +
                          " non-symmetric cases excluded"});

  const auto one = zero_asymptotics_report(ScaledFamily::qlambda(TwoByTwoCase::make(1, 0, 0), Parity::Even), nl, 2);
  std::vector<Real> second, first;
  for (const auto& e : one.entries) (e.k == 1 ? first : second).push_back(e.k == 1 ? e.scaled_sqrt : e.scaled_2sqrt);
  const auto& last2 = one.entries.back();
  r.checks.push_back({"2 sqrt(n) xi_{2n,2} -> j_{3/2,1} (M0=1)", one.trends[1].ok(),
                      "values " + join_reals(second) + "; target " + fmt(*last2.target) + "; final relative error " +
                          fmt(*last2.relative_error)});
  r.checks.push_back({"sqrt(n) xi_{2n,1} strictly decreasing (M0=1)", one.trends[0].decreasing,
                      "values " + join_reals(first)});

  const auto both = zero_asymptotics_report(ScaledFamily::diagonal_s({1, 1, 1, 1}, Parity::Even), nl, 2);
  std::vector<Real> m1, m2;
  std::string kinds;
  for (const auto& e : both.entries) {
    (e.k == 1 ? m1 : m2).push_back(e.scaled_sqrt);
    if (e.n == nl.back()) kinds += std::string(kinds.empty() ? "" : ",") + (e.imaginary ? "imaginary" : "real");
  }
  const bool two_acc = both.trends[0].accelerated && both.trends[1].accelerated && both.trends[0].decreasing &&
                       both.trends[1].decreasing;
  r.checks.push_back({"four masses: two accelerated zeros", two_acc,
                      "sqrt(n)|xi_1| " + join_reals(m1) + "; sqrt(n)|xi_2| " + join_reals(m2) + "; kinds at n=" +
                          std::to_string(nl.back()) + ": " + kinds});

  // gap case: the smallest positive zero does not decay like o(1/sqrt(n))
  const auto gap = zero_asymptotics_report(ScaledFamily::diagonal_s({0, 0, 1, 0}, Parity::Even), nl, 2);
  std::vector<Real> real_first;
  std::optional<Real> rel;
  for (size_t row = 0; row < nl.size(); ++row)
    for (int k = 1; k <= 2; ++k) {
      const auto& e = gap.entries[row * 2 + static_cast<size_t>(k - 1)];
      if (e.imaginary) continue;
      real_first.push_back(e.scaled_sqrt);
      if (row + 1 == nl.size()) rel = e.relative_error;
      break;
    }
  const bool none = accelerated_zero_count(gap.limit) == 0 && real_first.size() == nl.size() &&
                    !(real_first.back() < real_first.front()) && rel && *rel < Real(kZeroTargetTol);
  r.checks.push_back({"gap case: no accelerated zero", none,
                      "sqrt(n) xi_1 (smallest positive) " + join_reals(real_first) +
                          (rel ? "; 2 sqrt(n) xi_1 vs first zero of the limit: relative error " + fmt(*rel) : "")});
  return r;
}

SuiteResult symmetrize() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"symmetrize", {}};
  const std::vector<std::vector<mpq_class>> patterns = {
      {0, 0}, {1, 0}, {0, 5}, {5, 1},
      {1, 1, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 5}, {5, 5, 1, 1}, {1, 0, 5, 0},
      {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 5, 1}, {1, 0, 0, 0, 1, 1}, {0, 1, 5, 0, 0, 1},
  };
  for (const auto& m : patterns) {
    Real worst(0);
    for (int n = 0; n <= kSymmetrizeMaxN; ++n) {
      const auto res = symmetrization_residual(n, m);
      worst = max(worst, max(res.even, res.odd));
    }
    std::string label = "masses (";
    for (size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + m[i].get_str();
    r.checks.push_back(bound_check(label + ")", worst, kSymmetrizeTol));
  }
  return r;
}

SuiteResult conjecture_probe_r3() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"conjecture-probe", {}};
  const auto probe = conjecture_probe(3, {1, 1, 1, 1, 1, 1}, standard_n_list(), default_grid());
  for (const auto& rep : probe.reports) {
    std::ostringstream d;
    d << "sup " << join_reals(rep.sup_errors) << "; decreasing " << rep.decreasing << " (finding, not asserted)";
    r.checks.push_back({"report generated vs " + rep.limit.name(), !rep.sup_errors.empty(), d.str()});
  }
  return r;
}

SuiteResult bessel() {
  PrecisionScope scope(kSuiteBits);
  SuiteResult r{"bessel", {}};
  Real rec(0);
  for (int twice : {1, 3, 5, 7}) {
    for (int i = 1; i <= 50; ++i) {
      const Real x = Real(i) * 2 / 5;
      const Real ja = bessel_j(BesselOrder{twice}, x);
      const Real res = bessel_j(BesselOrder{twice - 2}, x) + bessel_j(BesselOrder{twice + 2}, x) - Real(twice) / x * ja;
      rec = max(rec, abs(res));
    }
  }
  r.checks.push_back(bound_check("recurrence J_{a-1} + J_{a+1} = (2a/x) J_a on (0, 20]", rec, kBesselTol));
  Real zs(0);
  for (int k = 1; k <= 5; ++k) {
    zs = max(zs, abs(bessel_zero(BesselOrder{1}, k) - pi() * k));
    zs = max(zs, abs(bessel_zero(BesselOrder{-1}, k) - pi() * (2 * k - 1) / 2));
  }
  r.checks.push_back(bound_check("j_{1/2,k} = k pi, j_{-1/2,k} = (k-1/2) pi, k <= 5", zs, kBesselTol));
  r.checks.push_back(
      bound_check("j_{3/2,1} vs tan x = x bisection", abs(bessel_zero(BesselOrder{3}, 1) - tan_root_bisection()),
                  kBesselTol));
  return r;
}

std::vector<std::string> suite_names() {
  return {"kernels-oracle", "qlambda-oracle", "exact-ring",  "mh-trends", "coeff-limits",
          "zero-asymptotics", "symmetrize",   "conjecture-probe", "bessel"};
}

SuiteResult run_named(const std::string& name) {
  if (name == "kernels-oracle") return kernels_oracle();
  if (name == "qlambda-oracle") return qlambda_oracle();
  if (name == "exact-ring") return exact_ring();
  if (name == "mh-trends") return mehler_heine_trends();
  if (name == "coeff-limits") return coeff_limits();
  if (name == "zero-asymptotics") return zero_asymptotics();
  if (name == "symmetrize") return symmetrize();
  if (name == "conjecture-probe") return conjecture_probe_r3();
  if (name == "bessel") return bessel();
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hsob::suites
