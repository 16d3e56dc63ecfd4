#include <doctest.h>

#include <cstdlib>
#include <string>

#include "qmt/acceptance.hpp"
#include "qmt/builders.hpp"
#include "qmt/decompose.hpp"
#include "qmt/verify.hpp"
#include "qmt/window.hpp"

using qmt::Presentation;

namespace {

std::string hopf_dump(const Presentation& P, const char* threads) {
  setenv("QMT_THREADS", threads, 1);
  std::string out = qmt::verify_hopf(P).to_json().dump(2);
  unsetenv("QMT_THREADS");
  return out;
}

}  // namespace

TEST_SUITE("determinism") {

TEST_CASE("reports are identical across thread counts") {
  Presentation P = qmt::build_kp(3);
  std::string one = hopf_dump(P, "1");
  std::string four = hopf_dump(P, "4");
  CHECK(one == four);
}

TEST_CASE("failure witnesses are identical across thread counts") {
  Presentation P = qmt::build_dual_w(3);
  size_t target = 0;
  for (size_t k = 1; k < P.mult.size(); ++k)
    if (!P.mult[k].empty()) { target = k; break; }
  REQUIRE(target > 0);
  P.mult[target][0].c = -P.mult[target][0].c;
  std::string one = hopf_dump(P, "1");
  std::string three = hopf_dump(P, "3");
  CHECK(one == three);
  CHECK(one.find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
  Presentation P = qmt::build_kp(2);
  CHECK(qmt::verify_hopf(P).to_json().dump() == qmt::verify_hopf(P).to_json().dump());
  auto d1 = qmt::decompose(P, 3).to_json().dump();
  auto d2 = qmt::decompose(P, 3).to_json().dump();
  CHECK(d1 == d2);
}

TEST_CASE("mutation scans with one seed agree") {
  Presentation P = qmt::build_kp(2);
  auto a = qmt::mutation_scan(P, 8, 99).to_json().dump();
  auto b = qmt::mutation_scan(P, 8, 99).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("multiplier suite is seed deterministic") {
  auto a = qmt::multiplier_report("dual-c", 2, 6, 12, 5).to_json().dump();
  auto b = qmt::multiplier_report("dual-c", 2, 6, 12, 5).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("criterion reports are reproducible") {
  qmt::CriterionResult a = qmt::run_criterion(1);
  qmt::CriterionResult b = qmt::run_criterion(1);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.pass);
}

}  // TEST_SUITE
