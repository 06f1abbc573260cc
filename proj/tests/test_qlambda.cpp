#include "doctest.h"
#include "hsob/hermite.hpp"
#include "hsob/kernels.hpp"
#include "hsob/qlambda.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

namespace {

std::vector<TwoByTwoCase> case_set() {
  return {TwoByTwoCase::make(1, 0, 0), TwoByTwoCase::make(0, 1, 0), TwoByTwoCase::make(1, 1, 0),
          TwoByTwoCase::make(1, 1, 1), TwoByTwoCase::make(2, 1, 1), TwoByTwoCase::make(0, 0, 0)};
}

const ScaledQuantity& quantity(const CoeffLimitRow& row, const std::string& name) {
  for (const auto& q : row.quantities)
    if (q.name == name) return q;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("case validation and rank") {
  CHECK(TwoByTwoCase::make(1, 1, 1).rank() == 1);
  CHECK(TwoByTwoCase::make(2, 1, 1).rank() == 2);
  CHECK(TwoByTwoCase::make(1, 0, 0).rank() == 1);
  CHECK(TwoByTwoCase::make(0, 0, 0).rank() == 0);
  CHECK_THROWS_AS(TwoByTwoCase::make(1, 1, 2), NotPositiveSemidefinite);
  CHECK_THROWS_AS(TwoByTwoCase::make(-1, 1, 0), NotPositiveSemidefinite);
}

TEST_CASE("delta examples") {
  const Real spi = sqrt_pi();
  CHECK(abs(delta(2, TwoByTwoCase::make(1, 0, 0)) - (1 + 1 / spi)) <= tol(2));
  CHECK(abs(delta(2, TwoByTwoCase::make(0, 1, 0)) - (1 + 2 / spi)) <= tol(2));
  for (int n : {1, 5, 40}) CHECK(delta(n, TwoByTwoCase::make(0, 0, 0)) == 1);
  // determinant form against the brute-force kernel sums
  const TwoByTwoCase c = TwoByTwoCase::make(3, 2, 1);
  const Real k0 = kernel_sum({6, 0, 0}, Real(0), Real(0)), k11 = kernel_sum({6, 1, 1}, Real(0), Real(0));
  CHECK(abs(delta(7, c) - ((1 + 3 * k0) * (1 + 2 * k11) - k0 * k11)) <= tol(4));
}

TEST_CASE("connection_coeffs examples") {
  const Real spi = sqrt_pi();
  const auto e = connection_coeffs(1, Parity::Even, TwoByTwoCase::make(1, 0, 0));
  CHECK(abs(e.a() + 1 / (2 * (spi + 1))) <= tol(4));
  CHECK(e.b() == 0);
  for (int n : {1, 7, 30}) {
    const auto z = connection_coeffs(n, Parity::Even, TwoByTwoCase::make(0, 0, 0));
    CHECK(z.a() == 0);
    CHECK(z.b() == 0);
  }
  const auto o = connection_coeffs(1, Parity::Odd, TwoByTwoCase::make(0, 1, 0));
  CHECK(o.c() == 0);
  CHECK(abs(o.d() + 3 / (2 * (spi + 2))) <= tol(4));
  CHECK_THROWS_AS(o.a(), std::logic_error);
}

TEST_CASE("q_poly examples") {
  const Real spi = sqrt_pi();
  const Poly q2 = q_poly(2, TwoByTwoCase::make(1, 0, 0));
  CHECK(max_coeff_difference(q2, Poly({-spi / (2 * (spi + 1)), Real(0), Real(1)})) <= tol(4));
  CHECK(max_coeff_difference(q_poly(4, TwoByTwoCase::make(0, 0, 0)), hermite_monic(4)) == 0);
  // Q_3 = H_3 - d (2x H_2 + H_1)/x^2 = x^3 - 3x/2 - 2 d x
  const Real d = -3 / (2 * (spi + 2));
  const Poly q3 = q_poly(3, TwoByTwoCase::make(0, 1, 0));
  CHECK(max_coeff_difference(q3, Poly({Real(0), Real(-3) / 2 - 2 * d, Real(0), Real(1)})) <= tol(4));
  CHECK(max_relative_coeff_difference(q3, gram_orthogonalize(TwoByTwoCase::make(0, 1, 0).product(), 3)) <= tol(15));
}

TEST_CASE("connection formulas agree with the Gram construction") {
  for (const auto& c : case_set()) {
    for (int n = 0; n <= 60; ++n) {
      const Poly q = q_poly(n, c);
      CHECK(q.degree() == n);
      CHECK(q.is_monic());
      CHECK(max_relative_coeff_difference(q, gram_orthogonalize(c.product(), n)) <= tol(20));
    }
  }
}

TEST_CASE("lambda breaks the symmetry, lambda = 0 keeps it exactly") {
  for (const auto& c : case_set()) {
    for (int n = 2; n <= 20; ++n) {
      const Poly q = q_poly(n, c);
      if (c.diagonal())
        CHECK(q.symmetry_defect() == 0);
      else
        CHECK(q.symmetry_defect() > tol(0));
    }
  }
}

TEST_CASE("quotients by x and x^2 are exact") {
  for (int n = 1; n <= 30; ++n) {
    const auto q = hermite_quotient_pair_over_x2(n);
    CHECK(q.size() == static_cast<size_t>(2 * n));  // degree 2n - 1
    const auto h = hermite_quotient_odd_over_x(2 * n - 1);
    CHECK(h.size() == static_cast<size_t>(2 * n - 1));
  }
  CHECK_THROWS(hermite_quotient_odd_over_x(4));
}

TEST_CASE("coeff_limit_report examples") {
  const auto rep = coeff_limit_report(TwoByTwoCase::make(1, 0, 0), {50, 100, 200});
  std::vector<Real> dist;
  for (const auto& row : rep.rows) dist.push_back(abs(row.a + Real(1) / 2));
  CHECK(decreasing_with_slack(dist));
  CHECK(rep.rows.back().a < 0);
  CHECK(rep.rows.back().a > Real(-1) / 2);

  const auto r1 = coeff_limit_report(TwoByTwoCase::make(1, 1, 1), {50, 100, 200});
  std::vector<Real> na;
  for (const auto& row : r1.rows) {
    const auto& q = quantity(row, "n*a");
    CHECK(abs(*q.predicted + Real(3) / 8) <= tol(2));
    na.push_back(*q.distance);
  }
  CHECK(decreasing_with_slack(na));

  for (const auto& row : coeff_limit_report(TwoByTwoCase::make(0, 0, 0), {50, 100, 200}).rows) {
    CHECK(row.a == 0);
    CHECK(row.b == 0);
    CHECK(row.c == 0);
    CHECK(row.d == 0);
  }
  CHECK_THROWS(coeff_limit_report(TwoByTwoCase::make(1, 0, 0), {100, 50}));
}

TEST_CASE("every stated limit is approached along doubling n from 50") {
  for (const auto& c : case_set()) {
    const auto rep = coeff_limit_report(c, {50, 100, 200, 400});
    for (const auto& [name, ok] : rep.trends) {
      INFO(c.to_string(), " ", name);
      CHECK(ok);
    }
  }
}

TEST_CASE("diagonal closed form a_n = -(1/2) M0 K / (1 + M0 K)") {
  // With lambda = 0 the even coefficient reduces to this, K = K_{2n-1}(0,0).
  for (int n : {3, 25, 200}) {
    const Real k = kernel_const(2 * n - 1, 0, 0);
    const Real a = connection_coeffs(n, Parity::Even, TwoByTwoCase::make(1, 0, 0)).a();
    CHECK(abs(a + k / (2 * (1 + k))) <= tol(6));
  }
}

TEST_CASE("decreasing_with_slack") {
  CHECK(decreasing_with_slack({Real(1), Real(0.5), Real(0.505)}));
  CHECK(!decreasing_with_slack({Real(1), Real(0.5), Real(0.6)}));
  CHECK(decreasing_with_slack({}));
}
