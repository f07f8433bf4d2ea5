#include "doctest.h"

#include <random>

#include "satake/laurent.hpp"

using namespace satake;

TEST_SUITE("scalar") {

TEST_CASE("cyclotomic reduction") {
  CHECK(Cyclo::zeta(4, 1) * Cyclo::zeta(4, 1) == Cyclo(-1));
  CHECK(Cyclo::zeta(2, 1) == Cyclo(-1));
  CHECK(Cyclo::zeta(3, 1) + Cyclo::zeta(3, 2) == Cyclo(-1));
  CHECK(Cyclo::zeta(6, 2) == Cyclo::zeta(3, 1));
  CHECK(Cyclo::zeta(4, 1).conj() == Cyclo::zeta(4, 3));
  CHECK((Cyclo::zeta(4, 1) * Cyclo::zeta(3, 1)).modulus() == 12);
}

TEST_CASE("cyclotomic inverse") {
  Cyclo a = Cyclo(2) + Cyclo::zeta(5, 1) - Cyclo::zeta(5, 3);
  CHECK(a * a.inverse() == Cyclo(1));
  CHECK_THROWS(Cyclo(0).inverse());
}

TEST_CASE("laurent arithmetic") {
  Laurent q = Laurent::q_pow(1);
  CHECK((Laurent(1) - q) * (Laurent(1) + q) == Laurent(1) - Laurent::q_pow(2));
  Laurent h = Laurent::monomial(1);
  CHECK(h * h == q);
  CHECK(((Laurent(1) - q) * (Laurent(1) + q)).divided_by(Laurent(1) + q) == Laurent(1) - q);
  CHECK_THROWS_AS((Laurent(1) + q * q).divided_by(Laurent(1) + q), std::domain_error);
  CHECK((Laurent(1) + Laurent::q_pow(-3)).divided_by(Laurent(1) + Laurent::q_pow(-1)) ==
        Laurent(1) - Laurent::q_pow(-1) + Laurent::q_pow(-2));
}

TEST_CASE("laurent evaluation") {
  CHECK((Laurent::q_pow(1) + Laurent(1)).evaluate(9.0).real() == doctest::Approx(10));
  CHECK(Laurent::monomial(1).evaluate(9.0).real() == doctest::Approx(3));
  CHECK(*(Laurent(1) - Laurent::q_pow(-1)).evaluate_exact(4) == mpq_class(3, 4));
  CHECK(*Laurent::monomial(1).evaluate_exact(9) == 3);
  CHECK(!Laurent::monomial(1).evaluate_exact(2));
  CHECK(!Laurent(Cyclo::zeta(3, 1)).evaluate_exact(2));
}

TEST_CASE("text form") {
  Laurent x = Laurent::monomial(-1, Cyclo(3)) + Laurent::monomial(2, Cyclo::zeta(4, 1));
  CHECK(x.str() == "1*z^1*q^(2/2) + 3*q^(-1/2)");
}

namespace {
Laurent random_laurent(std::mt19937& g) {
  std::uniform_int_distribution<int> e(-4, 4), c(-3, 3), z(0, 5);
  Laurent r;
  for (int k = 0; k < 3; ++k) r += Laurent::monomial(e(g), Cyclo(c(g)) * Cyclo::zeta(6, z(g)));
  return r;
}
}  // namespace

TEST_CASE("ring axioms and evaluation homomorphism") {
  std::mt19937 g(7);
  for (int t = 0; t < 50; ++t) {
    Laurent a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto lhs = (a * b).evaluate(2.5), rhs = a.evaluate(2.5) * b.evaluate(2.5);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
    auto l2 = (a + b).evaluate(2.5), r2 = a.evaluate(2.5) + b.evaluate(2.5);
    CHECK(std::abs(l2 - r2) <= 1e-12 * (1 + std::abs(r2)));
  }
}
}
