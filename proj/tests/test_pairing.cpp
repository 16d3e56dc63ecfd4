#include <doctest.h>

#include <vector>

#include "qmt/builders.hpp"
#include "qmt/pairing.hpp"

using qmt::Cyclo;

TEST_SUITE("pairing") {

TEST_CASE("canonical pairing identities") {
  for (int N : {2, 3}) {
    qmt::AxiomReport r = qmt::verify_pairing(qmt::build_dual_w(N), qmt::build_kp(N),
                                             qmt::canonical_kpw_pairing(N));
    CHECK(r.all_pass());
    CHECK(r.max_residual() == 0.0);
  }
}

TEST_CASE("named pairing rules") {
  CHECK(qmt::named_pairing_report("canonical-kpw", 3).all_pass());
  CHECK(qmt::named_pairing_report("kronecker", 2).all_pass());
  CHECK(qmt::named_pairing_report("group-function", 3).all_pass());
  CHECK_THROWS_AS(qmt::named_pairing_report("nope", 2), std::invalid_argument);
}

TEST_CASE("character counts") {
  auto kp3 = qmt::kp_characters(3);
  CHECK(kp3.size() == 9);
  auto w3 = qmt::w_characters(3);
  CHECK(w3.size() == 6);
  auto kp2 = qmt::kp_characters(2);
  CHECK(kp2.size() == 4);
  auto w2 = qmt::w_characters(2);
  CHECK(w2.size() == 4);
}

TEST_CASE("grouplike structure on both sides") {
  CHECK(qmt::grouplike_report(2).all_pass());
  CHECK(qmt::grouplike_report(3).all_pass());
  CHECK(qmt::grouplike_report(4).all_pass());
}

TEST_CASE("self duality is found at N=2 and verified") {
  qmt::SelfDuality sd = qmt::self_duality_search(2);
  REQUIRE(sd.found);
  CHECK(sd.checks.all_pass());
  CHECK(sd.perm == std::vector<int>{0, 3, 1, 2});
  CHECK(sd.shape == "diagonal");
  CHECK(sd.c == Cyclo::zeta(8, 1));
  auto j = sd.to_json();
  CHECK(j.contains("matrix"));
}

TEST_CASE("self duality is obstructed for larger N") {
  for (int N : {3, 4}) {
    qmt::SelfDuality sd = qmt::self_duality_search(N);
    CHECK_FALSE(sd.found);
    CHECK_FALSE(sd.reason.empty());
  }
}

}  // TEST_SUITE
