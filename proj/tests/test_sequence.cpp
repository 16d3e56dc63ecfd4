#include <doctest.h>

#include "qmt/sequence.hpp"

TEST_SUITE("sequence") {

TEST_CASE("double torus sequence at N=2") {
  qmt::AxiomReport r = qmt::dt_sequence_report(2);
  CHECK(r.all_pass());
  CHECK(r.max_residual() == 0.0);
}

TEST_CASE("double torus sequence at N=3") {
  qmt::AxiomReport r = qmt::dt_sequence_report(3);
  CHECK(r.all_pass());
}

TEST_CASE("Z3 lattice sequence at N=2") {
  qmt::AxiomReport r = qmt::z3_sequence_report(2);
  CHECK(r.all_pass());
  bool saw_leak_check = false;
  for (const auto& c : r.checks)
    if (c.axiom == "sub_coalgebra_leak") saw_leak_check = true;
  CHECK(saw_leak_check);
}

TEST_CASE("window inclusion is a Hopf morphism") {
  CHECK(qmt::named_morphism("i-dt", 2).all_pass());
  CHECK(qmt::named_morphism("i-dt", 3).all_pass());
}

TEST_CASE("window reduction is a Hopf morphism") {
  CHECK(qmt::named_morphism("j-dt", 2).all_pass());
  CHECK(qmt::named_morphism("j-z3", 2).all_pass());
}

TEST_CASE("flip fibration at scale 3 matches kp(3)") {
  qmt::AxiomReport r = qmt::named_morphism("fib-kp3", 3);
  CHECK(r.all_pass());
}

TEST_CASE("w subalgebra at scale 3 matches the dual") {
  qmt::AxiomReport r = qmt::named_morphism("wsub-w3", 3);
  CHECK(r.all_pass());
}

TEST_CASE("unknown morphism name is rejected") {
  CHECK_THROWS_AS(qmt::named_morphism("bogus", 2), std::invalid_argument);
}

}  // TEST_SUITE
