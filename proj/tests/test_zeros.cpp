#include "doctest.h"
#include "hsob/hermite.hpp"
#include "hsob/qlambda.hpp"
#include "hsob/roots.hpp"
#include "hsob/sobolev_gram.hpp"
#include "hsob/zeros.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

namespace {

const std::vector<int> kNList = {25, 50, 100, 200};

Poly from_ints(std::vector<Real> c) { return Poly(std::move(c)); }

// |p(z)| small against |p'(z)| max(1, z), and a sign change across z
void check_certified(const ValueAndDerivative& f, const Real& z) {
  Real v, d;
  f(z, v, d);
  CHECK(abs(v) <= tol(12) * abs(d) * max(Real(1), z));
  const Real w = ldexp(max(Real(1), z), -static_cast<long>(working_precision() / 2) - 1);
  Real va, vb, dd;
  f(z - w, va, dd);
  f(z + w, vb, dd);
  CHECK(va.sign() * vb.sign() < 0);
}

}  // namespace

TEST_CASE("hermite_zeros closed forms") {
  const ZeroTable t2 = hermite_zeros(2);
  REQUIRE(t2.zeros.size() == 1);
  CHECK(abs(t2.zeros[0] - sqrt(Real(1) / 2)) <= tol(2));
  const ZeroTable t3 = hermite_zeros(3);
  REQUIRE(t3.zeros.size() == 1);
  CHECK(abs(t3.zeros[0] - sqrt(Real(3) / 2)) <= tol(2));
  CHECK(hermite_zeros(1).zeros.empty());
  const ZeroTable t4 = hermite_zeros(4);
  REQUIRE(t4.zeros.size() == 2);
  CHECK(abs(t4.zeros[0] - sqrt((3 - sqrt(Real(6))) / 2)) <= tol(2));
  CHECK(abs(t4.zeros[1] - sqrt((3 + sqrt(Real(6))) / 2)) <= tol(2));
}

TEST_CASE("scaled Hermite zero near pi/2") {
  const ZeroTable t = hermite_zeros(50);
  CHECK(t.zeros.size() == 25);
  CHECK(relative_error(t.scaled_2sqrt[0], pi() / 2) < Real(0.05));
  CHECK(t.scaled_2sqrt[0] == 2 * t.scaled_sqrt[0]);
}

TEST_CASE("Hermite zeros are certified and consecutive degrees interlace") {
  for (int n : {7, 40, 121, 400}) {
    const ZeroTable t = hermite_zeros(n);
    REQUIRE(static_cast<int>(t.zeros.size()) == n / 2);
    const ValueAndDerivative f = [n](const Real& x, Real& v, Real& d) { hermite_value_and_derivative(n, x, v, d); };
    for (const auto& z : t.zeros) check_certified(f, z);
    for (size_t k = 1; k < t.zeros.size(); ++k) CHECK(t.zeros[k - 1] < t.zeros[k]);
  }
  for (int n = 2; n <= 60; ++n) CHECK(interlace_check(hermite_zeros(n - 1), hermite_zeros(n)));
}

TEST_CASE("real_zeros examples") {
  const ZeroTable a = real_zeros(from_ints({Real(-1) / 2, Real(0), Real(1)}), true);
  REQUIRE(a.zeros.size() == 1);
  CHECK(abs(a.zeros[0] - sqrt(Real(1) / 2)) <= tol(2));

  const Real spi = sqrt_pi();
  const ZeroTable q = real_zeros(q_poly(2, TwoByTwoCase::make(1, 0, 0)), true);
  REQUIRE(q.zeros.size() == 1);
  CHECK(abs(q.zeros[0] - sqrt(spi / (2 * (spi + 1)))) <= tol(3));

  const ZeroTable h4 = real_zeros(hermite_monic(4), true);
  REQUIRE(h4.zeros.size() == 2);
  CHECK(abs(h4.zeros[0] - Real(0.524648)) < Real(1e-6));
  CHECK(abs(h4.zeros[1] - Real(1.650680)) < Real(1e-6));
  CHECK(abs(h4.zeros[0] - sqrt((3 - sqrt(Real(6))) / 2)) <= tol(3));
}

TEST_CASE("real_zeros agrees with hermite_zeros and handles odd and general input") {
  for (int n : {5, 12, 25}) {
    const ZeroTable a = real_zeros(hermite_monic(n), true);
    const ZeroTable b = hermite_zeros(n);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (size_t k = 0; k < a.zeros.size(); ++k) CHECK(abs(a.zeros[k] - b.zeros[k]) <= tol(8));
  }
  // (x - 1)(x - 2)(x + 3), not symmetric
  const ZeroTable g = real_zeros(from_ints({Real(6), Real(-7), Real(0), Real(1)}), false);
  REQUIRE(g.zeros.size() == 2);
  CHECK(abs(g.zeros[0] - 1) <= tol(2));
  CHECK(abs(g.zeros[1] - 2) <= tol(2));
}

TEST_CASE("real_zeros rejects polynomials without real simple zeros") {
  CHECK_THROWS_AS(real_zeros(from_ints({Real(1), Real(0), Real(1)}), true), CertificationViolation);
  CHECK_THROWS_AS(real_zeros(from_ints({Real(1), Real(0), Real(1), Real(0), Real(1)}), true),
                  CertificationViolation);
}

TEST_CASE("interlace_check examples") {
  CHECK(interlace_check(hermite_zeros(3), hermite_zeros(4)));
  CHECK_FALSE(interlace_check(hermite_zeros(2), hermite_zeros(2)));
  const ScaledFamily q = ScaledFamily::qlambda(TwoByTwoCase::make(1, 0, 0), Parity::Even);
  CHECK(interlace_check(family_zeros(q, 50), hermite_zeros(50)));
  CHECK_FALSE(interlace_check(hermite_zeros(3), hermite_zeros(8)));
}

TEST_CASE("family zeros agree with Horner roots and are certified") {
  const TwoByTwoCase c = TwoByTwoCase::make(2, 1, 0);
  for (int n : {6, 9, 20, 31}) {
    const ScaledFamily fam = ScaledFamily::qlambda(c, parity_of(n));
    const ZeroTable a = family_zeros(fam, n);
    const ZeroTable b = real_zeros(q_poly(n, c), true);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (size_t k = 0; k < a.zeros.size(); ++k) CHECK(abs(a.zeros[k] - b.zeros[k]) <= tol(10));
  }
  const ScaledFamily s = ScaledFamily::diagonal_s({1, 1, 1, 1}, Parity::Even);
  const ValueAndDerivative f = [&s](const Real& x, Real& v, Real& d) { s.poly_value(200, x, v, d); };
  const ZeroTable t = family_zeros(s, 200);
  CHECK(t.zeros.size() == 99);
  CHECK(t.imaginary.size() == 1);
  for (size_t k = 0; k < 5; ++k) check_certified(f, t.zeros[k]);
}

TEST_CASE("inactive masses leave the Hermite zeros") {
  const ScaledFamily fam = ScaledFamily::qlambda(TwoByTwoCase::make(0, 1, 0), Parity::Even);
  const ZeroTable a = family_zeros(fam, 40);
  const ZeroTable b = hermite_zeros(40);
  CHECK(a.zeros == b.zeros);
  CHECK(interlaces_with_hermite(fam, 40));
}

TEST_CASE("family zeros interlace with Hermite zeros") {
  const std::vector<ScaledFamily> fams = {
      ScaledFamily::qlambda(TwoByTwoCase::make(1, 0, 0), Parity::Even),
      ScaledFamily::qlambda(TwoByTwoCase::make(0, 1, 0), Parity::Odd),
      ScaledFamily::qlambda(TwoByTwoCase::make(1, 1, 0), Parity::Even),
      ScaledFamily::qlambda(TwoByTwoCase::make(2, 1, 0), Parity::Odd),
      ScaledFamily::diagonal_s({1, 1, 0, 0}, Parity::Odd),
      ScaledFamily::diagonal_s({0, 0, 1, 0}, Parity::Odd),
  };
  for (const auto& fam : fams)
    for (int n : {2, 17, 50, 100})
      CHECK_MESSAGE(interlaces_with_hermite(fam, fam.degree(n)), fam.describe() << " n=" << n);
}

TEST_CASE("a second-derivative mass moves one zero pair onto the imaginary axis") {
  // S_4 = x^4 + b x^2 + c; the quadratic in t = x^2 has one root of each sign
  const MassMatrix a = MassMatrix::diagonal({1, 1, 1, 1});
  const Poly p = gram_orthogonalize(SobolevProduct{WeightSpec::hermite(), a}, 4);
  const Real b = p[2], c = p[0];
  const Real disc = sqrt(b * b - 4 * c);
  const ZeroTable t = family_zeros(ScaledFamily::diagonal_s({1, 1, 1, 1}, Parity::Even), 4);
  REQUIRE(t.zeros.size() == 1);
  REQUIRE(t.imaginary.size() == 1);
  CHECK(abs(t.zeros[0] - sqrt((-b + disc) / 2)) <= tol(6));
  CHECK(abs(t.imaginary[0] - sqrt((b + disc) / 2)) <= tol(6));

  for (const std::vector<mpq_class>& m : {std::vector<mpq_class>{1, 1, 1, 1}, std::vector<mpq_class>{0, 0, 1, 0},
                                          std::vector<mpq_class>{5, 5, 1, 1}}) {
    for (int n : {6, 24, 120}) {
      const ScaledFamily fam = ScaledFamily::diagonal_s(m, Parity::Even);
      const ZeroTable z = family_zeros(fam, n);
      REQUIRE(z.imaginary.size() == 1);
      CHECK(static_cast<int>(z.zeros.size()) == n / 2 - 1);
      CHECK_FALSE(interlaces_with_hermite(fam, n));
      Real v, d;
      fam.imaginary_axis_value(n, z.imaginary[0], v, d);
      CHECK(abs(v) <= tol(12) * abs(d) * max(Real(1), z.imaginary[0]));
    }
  }
  // M3 plays the same part for odd degree
  const ZeroTable o = family_zeros(ScaledFamily::diagonal_s({0, 1, 0, 1}, Parity::Odd), 31);
  CHECK(o.imaginary.size() == 1);
  CHECK(o.zeros.size() == 14);
}

TEST_CASE("imaginary-axis values match the Horner polynomial") {
  const std::vector<mpq_class> m = {2, 1, 3, 1};
  const Poly p = gram_orthogonalize(SobolevProduct{WeightSpec::hermite(), MassMatrix::diagonal(m)}, 9);
  const ScaledFamily fam = ScaledFamily::diagonal_s(m, Parity::Odd);
  for (double y : {0.1, 0.7, 2.5}) {
    // i^-9 p(iy) = sum_k p_k i^(k-9) y^k, k odd
    Real expect(0), dexpect(0);
    const Real yy(y);
    for (int k = 1; k <= 9; k += 2) {
      const Real term = ((9 - k) / 2 % 2 ? -p[k] : p[k]);
      expect += term * pow(yy, k);
      dexpect += term * k * pow(yy, k - 1);
    }
    Real v, d;
    fam.imaginary_axis_value(9, yy, v, d);
    CHECK(abs(v - expect) <= tol(10) * max(Real(1), abs(expect)));
    CHECK(abs(d - dexpect) <= tol(10) * max(Real(1), abs(dexpect)));
  }
}

TEST_CASE("zero_asymptotics_report examples") {
  SUBCASE("single mass at the origin") {
    const auto rep =
        zero_asymptotics_report(ScaledFamily::qlambda(TwoByTwoCase::make(1, 0, 0), Parity::Even), kNList, 3);
    CHECK(rep.limit.tag == LimitTag::EvenMass);
    REQUIRE(rep.trends.size() == 3);
    CHECK(rep.trends[0].accelerated);
    CHECK(rep.trends[0].decreasing);
    CHECK_FALSE(rep.trends[1].accelerated);
    CHECK(rep.trends[1].ok());
    CHECK(relative_error(*rep.entries[1].target, bessel_zero(BesselOrder{3}, 1)) < tol(10));
    CHECK(abs(*rep.entries[1].target - Real(4.49341)) < Real(1e-5));
    CHECK(rep.interlacing);
  }
  SUBCASE("four unit masses") {
    const auto rep = zero_asymptotics_report(ScaledFamily::diagonal_s({1, 1, 1, 1}, Parity::Even), kNList, 3);
    CHECK(rep.limit.tag == LimitTag::EvenBoth);
    CHECK(rep.trends[0].accelerated);
    CHECK(rep.trends[1].accelerated);
    CHECK(rep.trends[0].decreasing);
    CHECK(rep.trends[1].decreasing);
    CHECK(rep.trends[2].ok());
    // of the two accelerated pairs, one sits on the imaginary axis
    CHECK(rep.imaginary_pairs == std::vector<int>{1, 1, 1, 1});
    CHECK(rep.entries[rep.entries.size() - 3].imaginary);
    CHECK_FALSE(rep.interlacing);
    CHECK_FALSE(rep.interlacing_asserted);
    CHECK(rep.passed());
    CHECK(relative_error(*rep.entries[2].target, bessel_zero(BesselOrder{7}, 1)) < tol(10));
  }
  SUBCASE("Hermite") {
    const auto rep = zero_asymptotics_report(ScaledFamily::hermite(Parity::Even), kNList, 2);
    for (const auto& tr : rep.trends) CHECK(tr.ok());
    CHECK(relative_error(*rep.entries[0].target, pi() / 2) < tol(10));
    CHECK(relative_error(*rep.entries[1].target, 3 * pi() / 2) < tol(10));
    CHECK(rep.passed());
  }
  SUBCASE("gap case has no accelerated zero") {
    const auto rep = zero_asymptotics_report(ScaledFamily::diagonal_s({0, 0, 1, 0}, Parity::Even), kNList, 2);
    CHECK(accelerated_zero_count(rep.limit) == 0);
    CHECK_FALSE(rep.trends[0].accelerated);
    // the smallest zero is an imaginary pair with no stated limit
    CHECK(rep.entries[0].imaginary);
    CHECK_FALSE(rep.trends[0].tracked);
    CHECK(rep.trends[1].ok());
    const auto& last = rep.entries.back();
    CHECK(relative_error(last.scaled_2sqrt, limit_function_zero(rep.limit, 1)) < Real(0.05));
  }
  CHECK_THROWS(zero_asymptotics_report(ScaledFamily::hermite(Parity::Even), {50, 25}, 2));
  CHECK_THROWS(zero_asymptotics_report(ScaledFamily::hermite(Parity::Even), {2, 4}, 3));
  CHECK_THROWS(family_zeros(ScaledFamily::qlambda(TwoByTwoCase::make(1, 1, 1), Parity::Even), 10));
}
