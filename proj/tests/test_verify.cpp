#include <doctest.h>

#include "qmt/builders.hpp"
#include "qmt/linalg.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/verify.hpp"

using qmt::AxiomReport;
using qmt::Cyclo;
using qmt::Mat;
using qmt::Presentation;

TEST_SUITE("verify") {

TEST_CASE("group algebra passes the full suite") {
  Presentation P = qmt::build_group_algebra(qmt::named_group("Z3", 3));
  AxiomReport r = qmt::verify_hopf(P);
  CHECK(r.all_pass());
  CHECK(r.max_residual() == 0.0);
  CHECK(r.s_squared_order == 1);  // S^2 = id
  for (const auto& c : r.checks) CHECK(c.witness.is_null());
}

TEST_CASE("report serializes with subject and checks") {
  AxiomReport r = qmt::verify_hopf(qmt::build_kp(2));
  CHECK(r.s_squared_order == 1);
  auto j = r.to_json();
  CHECK(j.contains("subject"));
  CHECK(j.contains("checks"));
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == r.checks.size());
}

TEST_CASE("a flipped structure constant is caught with a witness") {
  Presentation P = qmt::build_kp(2);
  REQUIRE_FALSE(P.mult[9].empty());
  P.mult[9][0].c = -P.mult[9][0].c;
  AxiomReport r = qmt::verify_hopf(P);
  CHECK_FALSE(r.all_pass());
  bool witnessed = false;
  for (const auto& c : r.checks)
    if (!c.pass) {
      CHECK(c.fail_count > 0);
      if (!c.witness.is_null()) witnessed = true;
    }
  CHECK(witnessed);
}

TEST_CASE("identity is a Hopf isomorphism") {
  Presentation P = qmt::build_kp(2);
  Mat<Cyclo> f = Mat<Cyclo>::identity(P.dim);
  qmt::MorphismOptions opt;
  opt.invertible = true;
  AxiomReport r = qmt::verify_morphism("identity", P, P, f, opt);
  CHECK(r.all_pass());
}

TEST_CASE("a basis swap is not a Hopf morphism") {
  Presentation P = qmt::build_kp(2);
  Mat<Cyclo> f = Mat<Cyclo>::identity(P.dim);
  // Swap the images of two basis elements from different sectors.
  std::swap(f.at(0, 0), f.at(5, 0));
  std::swap(f.at(5, 5), f.at(0, 5));
  qmt::MorphismOptions opt;
  AxiomReport r = qmt::verify_morphism("swap", P, P, f, opt);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("mutation scan detects every flip on kp(2)") {
  qmt::MutationReport m = qmt::mutation_scan(qmt::build_kp(2), 20, 1);
  CHECK(m.outcomes.size() == 20);
  CHECK(m.all_detected());
  for (const auto& o : m.outcomes) {
    CHECK(o.detected);
    CHECK_FALSE(o.first_failed_axiom.empty());
  }
  auto j = m.to_json();
  CHECK(j.contains("mutations"));
}

TEST_CASE("mutation scan is seed deterministic") {
  Presentation P = qmt::build_dual_w(2);
  qmt::MutationReport a = qmt::mutation_scan(P, 10, 42);
  qmt::MutationReport b = qmt::mutation_scan(P, 10, 42);
  REQUIRE(a.outcomes.size() == b.outcomes.size());
  for (size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].mult_i == b.outcomes[i].mult_i);
    CHECK(a.outcomes[i].mult_j == b.outcomes[i].mult_j);
    CHECK(a.outcomes[i].term == b.outcomes[i].term);
  }
}

}  // TEST_SUITE
