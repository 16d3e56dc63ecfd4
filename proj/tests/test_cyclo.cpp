#include <doctest.h>

#include <cmath>

#include "qmt/cyclo.hpp"

using qmt::Cyclo;

TEST_SUITE("cyclo") {

TEST_CASE("roots of unity and powers") {
  CHECK(Cyclo::zeta(4, 1) * Cyclo::zeta(4, 1) == Cyclo::rational(-1));
  CHECK(Cyclo::zeta(3, 1).pow(3) == Cyclo::one());
  CHECK(Cyclo::zeta(8, 1).pow(8) == Cyclo::one());
  CHECK(Cyclo::zeta(8, 1).pow(4) == Cyclo::rational(-1));
  CHECK(Cyclo::zeta(2, 1) == Cyclo::rational(-1));
}

TEST_CASE("phase maps rationals to the right root") {
  CHECK(Cyclo::phase(mpq_class(1, 4)) == Cyclo::zeta(4, 1));
  CHECK(Cyclo::phase(mpq_class(7, 12)) == Cyclo::zeta(3, 1) * Cyclo::zeta(4, 1));
  CHECK(Cyclo::phase(mpq_class(0)) == Cyclo::one());
  CHECK(Cyclo::phase(mpq_class(-1, 3)) * Cyclo::phase(mpq_class(1, 3)) == Cyclo::one());
}

TEST_CASE("conjugation and inverse") {
  Cyclo z = Cyclo::zeta(3, 1);
  CHECK(z.conj() * z == Cyclo::one());
  Cyclo w = Cyclo::zeta(8, 3);
  CHECK(w.inv() * w == Cyclo::one());
  CHECK(w.pow(-1) == w.inv());
  CHECK_THROWS_AS(Cyclo::zero().inv(), qmt::CycloError);
}

TEST_CASE("mixed modulus arithmetic promotes to the lcm") {
  Cyclo s = Cyclo::zeta(3, 1) + Cyclo::zeta(4, 1);
  Cyclo t = s - Cyclo::zeta(4, 1);
  CHECK(t == Cyclo::zeta(3, 1));
  CHECK((Cyclo::zeta(6, 1) * Cyclo::zeta(6, 5)) == Cyclo::one());
}

TEST_CASE("modulus cap is enforced") {
  CHECK_THROWS_AS(Cyclo::zeta(13, 1) * Cyclo::zeta(101, 1), qmt::CycloError);
  CHECK_THROWS_AS(Cyclo::zeta(300, 1), qmt::CycloError);
}

TEST_CASE("rational detection after cancellation") {
  Cyclo z = Cyclo::zeta(5, 1);
  Cyclo s = z + z.pow(2) + z.pow(3) + z.pow(4);  // sum of nontrivial 5th roots
  CHECK(s.is_rational());
  CHECK(s.rational_value() == mpq_class(-1));
  CHECK_FALSE(z.is_rational());
}

TEST_CASE("numeric embedding") {
  auto v = Cyclo::zeta(8, 1).embed();
  const double r = std::sqrt(0.5);
  CHECK(std::abs(v.real() - r) < 1e-12);
  CHECK(std::abs(v.imag() - r) < 1e-12);
  auto u = Cyclo::rational(mpq_class(-3, 2)).embed();
  CHECK(std::abs(u.real() + 1.5) < 1e-15);
  CHECK(std::abs(u.imag()) < 1e-15);
}

TEST_CASE("division") {
  Cyclo a = Cyclo::zeta(12, 5) + Cyclo::rational(2);
  CHECK(a / a == Cyclo::one());
  CHECK((a * Cyclo::zeta(12, 7)) / Cyclo::zeta(12, 7) == a);
}

}  // TEST_SUITE
