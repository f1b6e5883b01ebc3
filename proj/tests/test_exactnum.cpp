#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "mtk/cyclo.hpp"
#include "mtk/error.hpp"

using namespace mtk;

namespace {

CycloNum random_cyclo(std::mt19937& rng, std::int64_t order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  for (std::int64_t k = 0; k < order; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return CycloNum::from_coeffs(order, c);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) { return std::abs(a - b) < tol; }

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("field operations on roots of unity") {
    CHECK(CycloNum::zeta(4) * CycloNum::zeta(4) == CycloNum(-1));
    CHECK((CycloNum(1) + CycloNum::zeta(3) + CycloNum::zeta(3, 2)).is_zero());
    const CycloNum a = CycloNum(1) + CycloNum::zeta(5);
    CHECK(a.inverse() * a == CycloNum(1));
    CHECK(a / a == CycloNum(1));
    CHECK(CycloNum::zeta(8).conj() == CycloNum::zeta(8, 7));
    CHECK_THROWS_AS(CycloNum(0).inverse(), ArithmeticError);
    CHECK_THROWS_AS(CycloNum(1) / (CycloNum::zeta(3) + CycloNum::zeta(3, 2) + CycloNum(1)), ArithmeticError);
  }

  TEST_CASE("inverse agrees with the complex reciprocal") {
    std::mt19937 rng(7);
    for (std::int64_t order : {5, 7, 8, 12, 15}) {
      const CycloNum x = random_cyclo(rng, order);
      if (x.is_zero()) continue;
      CHECK(close(x.inverse().to_complex(), 1.0 / x.to_complex(), 1e-8));
    }
  }

  TEST_CASE("to_complex") {
    const auto z = CycloNum::zeta(8).to_complex();
    CHECK(z.real() == doctest::Approx(0.70710678118654752));
    CHECK(z.imag() == doctest::Approx(0.70710678118654752));
    CHECK(CycloNum(0).to_complex() == std::complex<double>(0, 0));
    CHECK(close((CycloNum::zeta(3) + CycloNum::zeta(3, 2)).to_complex(), {-1.0, 0.0}, 1e-14));
  }

  TEST_CASE("embedding") {
    CHECK(CycloNum(-1).embed(4) == CycloNum::zeta(4, 2));
    CHECK(CycloNum(-1).embed(4).order() == 4);
    CHECK(CycloNum(0).embed(9).is_zero());
    const CycloNum e = CycloNum::zeta(3).embed(12);
    CHECK(e == CycloNum::zeta(12, 4));
    CHECK(close(e.to_complex(), CycloNum::zeta(3).to_complex(), 1e-12));
    CHECK_THROWS(CycloNum::zeta(3).embed(10));
  }

  TEST_CASE("mixed orders meet in the lcm field") {
    const CycloNum s = CycloNum::zeta(4) + CycloNum::zeta(6);
    CHECK(s.order() % 12 == 0);
    CHECK(close(s.to_complex(), CycloNum::zeta(4).to_complex() + CycloNum::zeta(6).to_complex()));
  }

  TEST_CASE("order cap") {
    setenv("MTK_MAX_CYCLO_ORDER", "100", 1);
    CHECK_THROWS_AS(CycloNum::zeta(16) * CycloNum::zeta(9), ArithmeticError);
    unsetenv("MTK_MAX_CYCLO_ORDER");
    CHECK(max_cyclotomic_order() == 1000000);
    CHECK_NOTHROW(CycloNum::zeta(16) * CycloNum::zeta(9));
  }

  TEST_CASE("roots of unity") {
    const RootOfUnity r(-3, 12);
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    for (std::int64_t d : {1, 2, 3, 5, 8, 16, 24}) {
      for (std::int64_t k = 0; k < d; ++k) CHECK(RootOfUnity(k, d).to_cyclo().pow(d) == CycloNum(1));
    }
    CHECK(CycloNum::zeta(16, 3).as_root_of_unity() == RootOfUnity(3, 16));
    CHECK((-CycloNum::zeta(5)).as_root_of_unity() == RootOfUnity(7, 10));
    CHECK_FALSE((CycloNum(1) + CycloNum::zeta(5)).as_root_of_unity().has_value());
  }

  TEST_CASE("square roots of rationals") {
    for (long q : {2, 3, 5, 6, 7, 12, 13}) {
      const CycloNum s = sqrt_rational(Rational(q));
      CHECK(s * s == CycloNum(q));
      CHECK(s.to_complex().real() == doctest::Approx(std::sqrt(double(q))));
    }
    const CycloNum h = sqrt_rational(Rational(1, 2));
    CHECK(h * h == CycloNum(Rational(1, 2)));
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(2024);
    const std::int64_t orders[] = {1, 3, 4, 5, 8, 12};
    for (int trial = 0; trial < 30; ++trial) {
      const CycloNum a = random_cyclo(rng, orders[trial % 6]);
      const CycloNum b = random_cyclo(rng, orders[(trial + 1) % 6]);
      const CycloNum c = random_cyclo(rng, orders[(trial + 3) % 6]);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a.conj().conj() == a);
      CHECK(std::abs((a * a.conj()).to_complex().imag()) < 1e-10);
      CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-9));
      CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-10));
    }
  }

  TEST_CASE("minimal order and Galois action") {
    const CycloNum x = CycloNum::zeta(12, 4).minimize_order();
    CHECK(x.order() == 3);
    CHECK(CycloNum::zeta(5).galois(2) == CycloNum::zeta(5, 2));
    CHECK(sqrt_rational(Rational(5)).galois(3) == -sqrt_rational(Rational(5)));
  }
}
