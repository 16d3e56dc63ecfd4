#include <doctest.h>

#include "qmt/action.hpp"

TEST_SUITE("action") {

TEST_CASE("dual action is a module algebra") {
  CHECK(qmt::action_report(2).all_pass());
  CHECK(qmt::action_report(3).all_pass());
}

TEST_CASE("lie layer holds fully at N=3") {
  qmt::AxiomReport r = qmt::lie_report(3);
  CHECK(r.all_pass());
  CHECK(r.max_residual() == 0.0);
}

TEST_CASE("lie layer at N=2 fails only the coproduct twist, on four slots") {
  qmt::AxiomReport r = qmt::lie_report(2);
  CHECK_FALSE(r.all_pass());
  int failing = 0;
  for (const auto& c : r.checks) {
    if (c.axiom == "coproduct_twist") {
      ++failing;
      CHECK_FALSE(c.pass);
      CHECK(c.fail_count == 4);
      CHECK_FALSE(c.witness.is_null());
    } else {
      CHECK(c.pass);
    }
  }
  CHECK(failing == 1);
}

TEST_CASE("commutator phase tables") {
  CHECK(qmt::commutator_report("z3", 2).all_pass());
  CHECK(qmt::commutator_report("z3", 3).all_pass());
  CHECK(qmt::commutator_report("flip", 3).all_pass());
  CHECK(qmt::commutator_report("trivial", 2).all_pass());
  CHECK_THROWS_AS(qmt::commutator_report("nope", 2), std::invalid_argument);
}

}  // TEST_SUITE
