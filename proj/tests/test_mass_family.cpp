#include "doctest.h"
#include "hsob/hermite.hpp"
#include "hsob/mass_family.hpp"
#include "hsob/qlambda.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

TEST_CASE("kernel identity matches the connection formulas") {
  for (const auto& c : {TwoByTwoCase::make(1, 0, 0), TwoByTwoCase::make(0, 1, 0), TwoByTwoCase::make(1, 1, 1),
                        TwoByTwoCase::make(2, 1, 1), TwoByTwoCase::make(0, 0, 0)}) {
    const MassPerturbedHermite fam(c.mass_matrix());
    for (int n = 0; n <= 40; ++n) {
      const Poly q = q_poly(n, c);
      for (int i = -5; i <= 5; ++i) {
        const Real x = Real(i) * 7 / 10;
        Real v, d;
        fam.value_and_derivative(n, x, v, d);
        Real pv, pd;
        q.eval_with_derivative(x, pv, pd);
        const Real scale = max(Real(1), q.max_abs_coeff());
        CHECK(abs(v - pv) <= tol(20) * scale);
        CHECK(abs(d - pd) <= tol(20) * scale * n);
      }
      const auto v0 = fam.derivatives_at_zero(n);
      CHECK(abs(v0[0] - q[0]) <= tol(10) * max(Real(1), abs(q[0])));
      if (n >= 1) CHECK(abs(v0[1] - q[1]) <= tol(10) * max(Real(1), abs(q[1])));
    }
  }
}

TEST_CASE("kernel identity matches the Gram construction for four masses") {
  const MassMatrix a = MassMatrix::diagonal({1, 2, 0, mpq_class(1, 2)});
  const MassPerturbedHermite fam(a);
  const SobolevProduct p{WeightSpec::hermite(), a, 1};
  for (int n = 0; n <= 30; ++n) {
    const Poly q = gram_orthogonalize(p, n);
    for (int i = 1; i <= 6; ++i) {
      const Real x = Real(i) / 3;
      CHECK(abs(fam.value(n, x) - q(x)) <= tol(20) * max(Real(1), q.max_abs_coeff()));
    }
  }
}

TEST_CASE("high degree: kernel identity against the Gram polynomial at wide precision") {
  const MassMatrix a = MassMatrix::diagonal({1, 1, 1, 1});
  const auto sys = GramSystem(SobolevProduct{WeightSpec::hermite(), a, 1}, 400);
  const Poly q = sys.monic_internal(400);
  const MassPerturbedHermite fam(a);
  for (const char* xs : {"0.01", "0.3", "1.7"}) {
    const Real x = Real::parse(xs, sys.internal_bits());
    const Real ref(q(x), working_precision());
    const Real v = fam.value(400, Real::parse(xs));
    // Horner at the internal precision has ample headroom for x <= 1.7
    CHECK(relative_error(v, ref) <= tol(20));
  }
}

TEST_CASE("zero mass reduces to H_n") {
  const MassPerturbedHermite fam{MassMatrix()};
  for (int n : {0, 1, 7, 50}) {
    const Real x = Real(13) / 10;
    CHECK(relative_error(fam.value(n, x), hermite_values(n, x).back()) <= tol(2));
  }
}
