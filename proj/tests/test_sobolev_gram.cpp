#include "doctest.h"
#include "hsob/exact_ring.hpp"
#include "hsob/hermite.hpp"
#include "hsob/sobolev_gram.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

namespace {

SobolevProduct hermite_with(const MassMatrix& a) { return SobolevProduct{WeightSpec::hermite(), a, 1}; }

MassMatrix two_by_two(long m0, long m1, long lambda) {
  return MassMatrix({{mpq_class(m0), mpq_class(lambda)}, {mpq_class(lambda), mpq_class(m1)}});
}

Poly from_strings(std::initializer_list<const char*> c) {
  std::vector<Real> v;
  for (const char* s : c) v.push_back(Real::parse(s));
  return Poly(std::move(v));
}

}  // namespace

TEST_CASE("weight_moment examples") {
  CHECK(abs(weight_moment(WeightSpec::hermite(), 0) - sqrt_pi()) <= tol(2));
  CHECK(weight_moment(WeightSpec::hermite(), 3) == 0);
  CHECK(abs(weight_moment(WeightSpec::laguerre(mpq_class(-1, 2)), 1) - sqrt_pi() / 2) <= tol(2));
  // mu_6 = 15/8 sqrt(pi); Laguerre(0) gives k!
  CHECK(abs(weight_moment(WeightSpec::hermite(), 6) - sqrt_pi() * 15 / 8) <= tol(2));
  CHECK(weight_moment(WeightSpec::laguerre(0), 5) == 120);
  CHECK_THROWS(WeightSpec::laguerre(-1));
}

TEST_CASE("sobolev_inner examples") {
  const SobolevProduct plain = hermite_with(MassMatrix());
  const SobolevProduct m0 = hermite_with(MassMatrix::diagonal({1, 0}));
  const Poly one = Poly::constant(Real(1));
  CHECK(abs(sobolev_inner(plain, hermite_monic(3), hermite_monic(3)) - sqrt_pi() * 3 / 4) <= tol(2));
  CHECK(abs(sobolev_inner(m0, one, one) - (sqrt_pi() + 1)) <= tol(2));
  CHECK(abs(sobolev_inner(m0, Poly::monomial(2), one) - sqrt_pi() / 2) <= tol(2));
  // derivative masses: (x, x) with M1 = 1 adds 1
  const SobolevProduct m1 = hermite_with(MassMatrix::diagonal({0, 1}));
  CHECK(abs(sobolev_inner(m1, Poly::monomial(1), Poly::monomial(1)) - (sqrt_pi() / 2 + 1)) <= tol(2));
}

TEST_CASE("inner_exact_hermite examples") {
  using Q = mpq_class;
  CHECK(inner_exact_hermite({1}, {1}, MassMatrix::diagonal({1, 0})) == std::make_pair(Q(1), Q(1)));
  CHECK(inner_exact_hermite({0, 1}, {0, 1}, MassMatrix::diagonal({1, 1})) == std::make_pair(Q(1), Q(1, 2)));
  CHECK(inner_exact_hermite({0, 0, 1}, {1}, MassMatrix()) == std::make_pair(Q(0), Q(1, 2)));
}

TEST_CASE("gram_orthogonalize examples") {
  CHECK(max_coeff_difference(gram_orthogonalize(hermite_with(MassMatrix()), 4), from_strings({"0.75", "0", "-3", "0", "1"})) <=
        tol(4));
  const Poly q2 = gram_orthogonalize(hermite_with(MassMatrix::diagonal({1, 0})), 2);
  const Real c = -sqrt_pi() / (2 * (sqrt_pi() + 1));
  CHECK(max_coeff_difference(q2, Poly({c, Real(0), Real(1)})) <= tol(4));
  for (auto masses : {std::vector<mpq_class>{0, 0}, {1, 0}, {0, 1}, {3, 7}}) {
    const Poly q1 = gram_orthogonalize(hermite_with(MassMatrix::diagonal(masses)), 1);
    CHECK(max_coeff_difference(q1, Poly::monomial(1)) <= tol(4));
  }
}

TEST_CASE("zero mass reproduces the Hermite polynomials") {
  const SobolevProduct plain = hermite_with(MassMatrix());
  for (int n = 0; n <= 40; ++n)
    CHECK(max_relative_coeff_difference(gram_orthogonalize(plain, n), hermite_monic(n)) <= tol(15));
}

TEST_CASE("orthogonality residuals, monicity and symmetry") {
  const std::vector<MassMatrix> cases = {two_by_two(1, 0, 0), two_by_two(1, 1, 1), two_by_two(2, 1, 1),
                                         MassMatrix::diagonal({1, 1, 1, 1}), MassMatrix::diagonal({0, 1, 5, 0})};
  for (const MassMatrix& a : cases) {
    const SobolevProduct p = hermite_with(a);
    for (int n = 0; n <= 30; ++n) {
      // residuals evaluated at a higher precision so that the check sees the
      // polynomial's own error, not the inner product's rounding
      const Poly q = gram_orthogonalize(p, n);
      CHECK(q.degree() == n);
      CHECK(q.is_monic());
      if (a.is_diagonal()) CHECK(q.symmetry_defect() == 0);
      const precision_t wide = 2 * working_precision();
      const Real bound(tol(15), wide);
      const Poly qw = q.rounded(wide);
      PrecisionScope scope(wide);
      const Real qn = sqrt(sobolev_inner(p, qw, qw));
      for (int k = 0; k < n; ++k) {
        const Poly xk = Poly::monomial(k, wide);
        const Real r = sobolev_inner(p, qw, xk);
        CHECK(abs(r) <= bound * qn * sqrt(sobolev_inner(p, xk, xk)));
      }
    }
  }
}

TEST_CASE("lambda breaks the symmetry") {
  const Poly q = gram_orthogonalize(hermite_with(two_by_two(1, 1, 1)), 6);
  CHECK(q.symmetry_defect() > tol(0));
}

TEST_CASE("Gram pipeline matches the exact Q(sqrt(pi)) pipeline for n <= 12") {
  const std::vector<MassMatrix> cases = {
      two_by_two(1, 0, 0), two_by_two(0, 1, 0), two_by_two(1, 1, 1), two_by_two(2, 1, 1),
      MassMatrix({{mpq_class(3, 2), mpq_class(1, 3)}, {mpq_class(1, 3), mpq_class(5, 7)}}),
      MassMatrix::diagonal({1, 1, 1, 1}), MassMatrix::diagonal({0, 2, mpq_class(1, 2), 0})};
  for (const MassMatrix& a : cases) {
    for (int n = 0; n <= 12; ++n) {
      const Poly q = gram_orthogonalize(hermite_with(a), n);
      const auto exact = gram_orthogonalize_exact_hermite(a, n);
      std::vector<Real> c;
      for (const auto& f : exact) c.push_back(f.value());
      CHECK(max_relative_coeff_difference(q, Poly(c)) <= hsob::test::tenth_power(-65));
    }
  }
}

TEST_CASE("exact determinant") {
  // [[t, 1], [1, t]] -> t^2 - 1
  const SqrtPiPoly t(0, 1), one(1, 0);
  CHECK(exact_determinant({{t, one}, {one, t}}) == SqrtPiPoly(std::vector<mpq_class>{-1, 0, 1}));
  // a zero leading entry forces a row swap
  CHECK(exact_determinant({{SqrtPiPoly(), one}, {one, t}}) == SqrtPiPoly(-1, 0));
  CHECK_THROWS_AS((t * t + one).exact_div(t), InternalConsistencyError);
}

TEST_CASE("mass matrix validation") {
  CHECK_THROWS_AS(MassMatrix({{0, 1}, {1, 0}}), NotPositiveSemidefinite);
  CHECK_THROWS_AS(MassMatrix({{1, 2}, {2, 1}}), NotPositiveSemidefinite);
  CHECK_THROWS_AS(MassMatrix({{1, 1}, {0, 1}}), NotPositiveSemidefinite);
  CHECK_NOTHROW(MassMatrix({{1, 1}, {1, 1}}));
  CHECK(two_by_two(1, 1, 0).parity_decoupled());
  CHECK(!two_by_two(1, 1, 1).parity_decoupled());
  CHECK(MassMatrix::diagonal({0, 0}).is_zero());
}

TEST_CASE("scaling the product leaves the monic polynomials unchanged") {
  SobolevProduct p = hermite_with(MassMatrix::diagonal({1, 2, 3, 4}));
  SobolevProduct scaled = p;
  scaled.scale = mpq_class(7, 3);
  for (int n : {3, 8, 17}) {
    CHECK(max_relative_coeff_difference(gram_orthogonalize(scaled, n), gram_orthogonalize(p, n)) <= tol(2));
  }
}

TEST_CASE("Laguerre weight") {
  const SobolevProduct lag{WeightSpec::laguerre(mpq_class(-1, 2)), MassMatrix(), 1};
  CHECK(max_coeff_difference(gram_orthogonalize(lag, 1), from_strings({"-0.5", "1"})) <= tol(4));
  const SobolevProduct lag_half{WeightSpec::laguerre(mpq_class(1, 2)), MassMatrix(), 1};
  CHECK(max_coeff_difference(gram_orthogonalize(lag_half, 1), from_strings({"-1.5", "1"})) <= tol(4));
  const SobolevProduct lag_mass{WeightSpec::laguerre(mpq_class(-1, 2)), MassMatrix::diagonal({1}), 1};
  const Real c = (sqrt_pi() / 2) / (sqrt_pi() + 1);
  CHECK(max_coeff_difference(gram_orthogonalize(lag_mass, 1), Poly({-c, Real(1)})) <= tol(4));
}

TEST_CASE("precision escalation") {
  GramSystem sys(hermite_with(MassMatrix::diagonal({1, 1, 1, 1})), 400);
  MESSAGE("degree 400: internal bits ", sys.internal_bits(), ", loss ", sys.loss_bits());
  CHECK(sys.internal_bits() > 2 * working_precision());
  CHECK(sys.loss_bits() + 32 <= static_cast<double>(sys.internal_bits() - sys.target_bits()));
  CHECK(sys.split_by_parity());
  const Poly h = gram_orthogonalize(hermite_with(MassMatrix()), 400);
  CHECK(max_relative_coeff_difference(h, hermite_monic(400)) <= tol(15));

  GramSystem::Options tight;
  tight.ceiling_bits = 600;
  CHECK_THROWS_WITH_AS(GramSystem(hermite_with(MassMatrix()), 300, tight), doctest::Contains("bits"),
                       PrecisionInsufficient);
}
