#include "doctest.h"
#include "hsob/bessel.hpp"
#include "hsob/kernels.hpp"
#include "test_util.hpp"

using namespace hsob;
using hsob::test::tol;

namespace {

const BesselOrder kMinusHalf{-1}, kHalf{1}, kThreeHalves{3};

// First positive root of tan x = x by plain bisection of sin x - x cos x on
// (pi, 3pi/2), independent of the series code.
Real tan_root_oracle() {
  Real a = pi(), b = pi() * 3 / 2;
  auto f = [](const Real& x) { return sin(x) - x * cos(x); };
  const int sa = f(a).sign();
  for (int i = 0; i < working_precision() + 8; ++i) {
    const Real m = ldexp(a + b, -1);
    (f(m).sign() == sa ? a : b) = m;
  }
  return ldexp(a + b, -1);
}

}  // namespace

TEST_CASE("bessel_j examples") {
  CHECK(bessel_j(BesselOrder::integer(0), Real(0)) == 1);
  const Real x = pi() / 2;
  CHECK(abs(bessel_j(kHalf, x) - 2 / pi()) <= tol(4));
  CHECK(abs(bessel_j(kMinusHalf, x)) <= tol(4));
}

TEST_CASE("half-integer orders match the elementary closed forms") {
  for (int i = 1; i <= 40; ++i) {
    const Real x = Real(i) / 2;
    const Real c = sqrt(2 / (pi() * x));
    CHECK(abs(bessel_j(kHalf, x) - c * sin(x)) <= tol(8));
    CHECK(abs(bessel_j(kMinusHalf, x) - c * cos(x)) <= tol(8));
    CHECK(abs(bessel_j(kThreeHalves, x) - c * (sin(x) / x - cos(x))) <= tol(8));
  }
}

TEST_CASE("bessel_zero examples") {
  CHECK(abs(bessel_zero(kHalf, 1) - pi()) <= tol(8));
  CHECK(abs(bessel_zero(kMinusHalf, 2) - pi() * 3 / 2) <= tol(8));
  const Real j = bessel_zero(kThreeHalves, 1);
  CHECK(abs(j - tan_root_oracle()) <= tol(8));
  CHECK(j.to_string(16).rfind("4.493409457909064", 0) == 0);
}

TEST_CASE("sine and cosine zeros for k <= 5") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(abs(bessel_zero(kHalf, k) - pi() * k) <= tol(8));
    CHECK(abs(bessel_zero(kMinusHalf, k) - pi() * (2 * k - 1) / 2) <= tol(8));
  }
}

TEST_CASE("three-term recurrence on (0, 20]") {
  for (int twice : {1, 3, 5, 7}) {
    for (int i = 1; i <= 50; ++i) {
      const Real x = Real(i) * 2 / 5;
      const Real ja = bessel_j(BesselOrder{twice}, x);
      const Real r = bessel_j(BesselOrder{twice - 2}, x) + bessel_j(BesselOrder{twice + 2}, x) - Real(twice) / x * ja;
      CHECK(abs(r) <= tol(12) * max(Real(1), abs(ja)));
    }
  }
}

TEST_CASE("x^-alpha J_alpha is finite and nonzero near 0") {
  const Real z = hsob::test::tenth_power(-10);
  for (int twice : {-1, 0, 1, 3, 5, 7, 9}) {
    const BesselOrder a{twice};
    const Real expected = 1 / (gamma(a.value() + 1) * pow(Real(2), a.value()));
    CHECK(relative_error(bessel_j_normalized(a, z), expected) <= hsob::test::tenth_power(-10));
  }
}

TEST_CASE("zeros are sign changes with tiny residual") {
  for (int twice : {-1, 1, 3, 5, 7, 9}) {
    const BesselOrder a{twice};
    for (int k = 1; k <= 4; ++k) {
      const Real j = bessel_zero(a, k);
      CHECK(abs(bessel_j(a, j)) <= tol(12));
      const Real d = hsob::test::tenth_power(-20);
      CHECK(bessel_j(a, j - d).sign() == -bessel_j(a, j + d).sign());
    }
  }
}

TEST_CASE("zeros of consecutive orders interlace") {
  for (int twice : {-1, 1, 3, 5, 7}) {
    const BesselOrder a{twice}, a1{twice + 2};
    const auto z = bessel_zeros(a, 11);
    const auto z1 = bessel_zeros(a1, 10);
    for (int k = 0; k < 10; ++k) {
      CHECK(z[k] < z1[k]);
      CHECK(z1[k] < z[k + 1]);
      CHECK(abs(z[k] - bessel_zero(a, k + 1)) == 0);
    }
  }
}

TEST_CASE("zero search reports an exhausted budget") {
  CHECK_THROWS_AS(bessel_zero(kHalf, 2000), NumericalError);
}

TEST_CASE("limit function examples") {
  const LimitFunctionId he{LimitTag::HermiteEven}, ho{LimitTag::HermiteOdd};
  CHECK(abs(limit_function(he, Real(0)) - 1 / sqrt_pi()) <= tol(4));
  const Real tiny = hsob::test::tenth_power(-30);
  CHECK(abs(limit_function(he, tiny) - cos(tiny) / sqrt_pi()) <= tol(4));
  for (int i = 1; i <= 20; ++i) {
    const Real x = Real(i) * 3 / 5;
    CHECK(abs(limit_function(he, x) - cos(x) / sqrt_pi()) <= tol(8));
    CHECK(abs(limit_function(ho, x) - sin(x) / sqrt_pi()) <= tol(8));
  }
  const LimitFunctionId em{LimitTag::EvenMass};
  CHECK(abs(limit_function(em, bessel_zero(kThreeHalves, 1))) <= tol(12));

  const Real one(1);
  const Real expected = sqrt(Real(1) / 2) * (Real(2) / 3 * bessel_j(BesselOrder{7}, one) - bessel_j(kThreeHalves, one) -
                                             Real(2) / 3 * bessel_j(kMinusHalf, one));
  CHECK(abs(limit_function(LimitFunctionId{LimitTag::EvenGap}, one) - expected) <= tol(8));
}

TEST_CASE("limit function table") {
  CHECK(limit_terms({LimitTag::EvenMass}).front().order == BesselOrder{3});
  CHECK(limit_terms({LimitTag::EvenMass}).front().coeff == -1);
  CHECK(limit_terms({LimitTag::OddBoth}).front().order == BesselOrder{9});
  CHECK(limit_terms(LimitFunctionId::conjecture(1, Parity::Even)).front().order == BesselOrder{3});
  CHECK(limit_terms(LimitFunctionId::conjecture(2, Parity::Odd)).front().order == BesselOrder{9});
  CHECK(limit_terms(LimitFunctionId::conjecture(3, Parity::Even)).front().coeff == -1);
  CHECK(limit_terms(LimitFunctionId::conjecture(3, Parity::Even)).front().order == BesselOrder{11});
  CHECK(limit_terms({LimitTag::OddGap}).size() == 3);
  CHECK(LimitFunctionId::conjecture(3, Parity::Odd).name() == "Conjecture(r=3,odd)");
  CHECK_THROWS(LimitFunctionId::conjecture(0, Parity::Odd));
}

TEST_CASE("limit function derivative against a difference quotient") {
  for (auto tag : {LimitTag::HermiteEven, LimitTag::EvenMass, LimitTag::OddGap}) {
    const Real x = Real(27) / 10, h = hsob::test::tenth_power(-30);
    Real v, d;
    limit_function_with_derivative({tag}, x, v, d);
    const Real fd = (limit_function({tag}, x + h) - limit_function({tag}, x - h)) / (2 * h);
    CHECK(abs(d - fd) <= hsob::test::tenth_power(-40));
  }
}

TEST_CASE("limit function zeros") {
  const LimitFunctionId em{LimitTag::EvenMass};
  CHECK(abs(limit_function_zero(em, 2) - bessel_zero(kThreeHalves, 2)) <= tol(8));
  for (auto tag : {LimitTag::EvenGap, LimitTag::OddGap}) {
    for (const Real& z : limit_function_zeros({tag}, 3)) CHECK(abs(limit_function({tag}, z)) <= tol(12));
  }
}

TEST_CASE("negative argument is rejected") { CHECK_THROWS_AS(bessel_j(kHalf, Real(-1)), DomainError); }
