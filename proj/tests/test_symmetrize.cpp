#include "doctest.h"
#include "hsob/hermite.hpp"
#include "hsob/sobolev_gram.hpp"
#include "hsob/symmetrize.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Real(5), 0) == 1);
  CHECK(pochhammer(Real(2), 1) == 2);
  CHECK(pochhammer(Real(2), 2) == 6);
  CHECK(pochhammer(3, 2) == 12);
  CHECK(pochhammer(3, 3) == 60);
  CHECK(abs(pochhammer(Real(1) / 2, 3) - Real(15) / 8) <= tol(2));
  CHECK_THROWS_AS(pochhammer(Real(1), -1), std::invalid_argument);
}

TEST_CASE("mass_map examples") {
  const mpq_class m0(3, 7), m1(2), m2(5), m3(1, 3);
  const MassMap two = mass_map(2, {m0, m1, m2, m3});
  CHECK(two.n == std::vector<mpq_class>{m0, m1, 4 * m2, 36 * m3});
  CHECK(two.even_side() == std::vector<mpq_class>{m0, 4 * m2});
  CHECK(two.odd_side() == std::vector<mpq_class>{m1, 36 * m3});
  CHECK(mass_map(1, {m0, m1}).n == std::vector<mpq_class>{m0, m1});
  CHECK(mass_map(3, {1, 1, 1, 1, 1, 1}).n == std::vector<mpq_class>{1, 1, 4, 36, 144, 3600});
  CHECK_THROWS_AS(mass_map(2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mass_map(1, {1, -1}), std::invalid_argument);
}

TEST_CASE("laguerre_sobolev_poly examples") {
  const Poly a = laguerre_sobolev_poly(mpq_class(-1, 2), {}, 1);
  CHECK(a.degree() == 1);
  CHECK(abs(a[0] + Real(1) / 2) <= tol(2));
  const Poly b = laguerre_sobolev_poly(mpq_class(1, 2), {}, 1);
  CHECK(abs(b[0] + Real(3) / 2) <= tol(2));
  const Poly c = laguerre_sobolev_poly(mpq_class(-1, 2), {1}, 1);
  const Real spi = sqrt_pi();
  CHECK(abs(c[0] + (spi / 2) / (spi + 1)) <= tol(2));
}

TEST_CASE("classical reduction: Hermite from Laguerre") {
  for (int n = 0; n <= 20; ++n) {
    const Poly le = laguerre_sobolev_poly(mpq_class(-1, 2), {}, n).composed_with_square();
    const Poly lo = laguerre_sobolev_poly(mpq_class(1, 2), {}, n).composed_with_square().shifted_up(1);
    const Poly& h2 = hermite_monic(2 * n);
    const Poly& h1 = hermite_monic(2 * n + 1);
    CHECK(max_coeff_difference(le, h2) <= tol(12) * max(Real(1), h2.max_abs_coeff()));
    CHECK(max_coeff_difference(lo, h1) <= tol(12) * max(Real(1), h1.max_abs_coeff()));
  }
}

TEST_CASE("symmetrization residual examples") {
  const auto z = symmetrization_residual(1, {0, 0});
  CHECK(z.even <= tol(2));
  CHECK(z.odd <= tol(2));
  CHECK(symmetrization_residual(1, {1, 0}).even <= tol(15));
  for (int n = 0; n <= 12; ++n) {
    const auto r = symmetrization_residual(n, {1, 1, 1, 1});
    CHECK(r.even <= tol(15));
    CHECK(r.odd <= tol(15));
  }
}

TEST_CASE("symmetrization across r and gap patterns") {
  const std::vector<std::vector<mpq_class>> patterns = {
      {1, 0},       {0, 5},          {5, 1},          {0, 0, 1, 0},       {0, 1, 0, 5},
      {5, 5, 1, 1}, {1, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 5, 1}, {1, 1, 1, 1, 1, 1}, {0, 1, 5, 0, 0, 1},
  };
  for (const auto& m : patterns)
    for (int n : {0, 1, 2, 5, 11, 20}) {
      const auto r = symmetrization_residual(n, m);
      CHECK_MESSAGE(r.even <= tol(15), "n=" << n << " r=" << m.size() / 2);
      CHECK_MESSAGE(r.odd <= tol(15), "n=" << n << " r=" << m.size() / 2);
    }
}

TEST_CASE("a wrong mass map breaks the identity") {
  // N_2 = M_2 instead of 4 M_2: the residual must be visible
  const std::vector<mpq_class> m = {1, 0, 1, 0};
  const Poly s = [&] {
    return gram_orthogonalize(SobolevProduct{WeightSpec::hermite(), MassMatrix::diagonal(m)}, 6);
  }();
  const Poly wrong = laguerre_sobolev_poly(mpq_class(-1, 2), {1, 1}, 3).composed_with_square();
  CHECK(max_coeff_difference(s, wrong) > Real(1e-6));
}
