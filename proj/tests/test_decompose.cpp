#include <doctest.h>

#include <vector>

#include "qmt/builders.hpp"
#include "qmt/decompose.hpp"
#include "qmt/lattice.hpp"
#include "qmt/permgroup.hpp"

using qmt::Presentation;

TEST_SUITE("decompose") {

TEST_CASE("kp(2) blocks and center") {
  Presentation P = qmt::build_kp(2);
  CHECK(qmt::center_basis(P).cols == 5);
  qmt::DecompositionReport d = qmt::decompose(P, 1);
  CHECK(d.blocks == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(d.residual <= 1e-8);
  CHECK(d.seeds_agree);
  CHECK(d.consistent);
}

TEST_CASE("dual algebra blocks") {
  Presentation P = qmt::build_dual_w(3);
  CHECK(qmt::center_basis(P).cols == 9);
  qmt::DecompositionReport d = qmt::decompose(P, 1);
  CHECK(d.blocks == std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2, 2});
  CHECK(d.consistent);
}

TEST_CASE("kp center dimension grows as N^2 + 1") {
  CHECK(qmt::center_basis(qmt::build_kp(3)).cols == 10);
  CHECK(qmt::center_basis(qmt::build_kp(4)).cols == 17);
}

TEST_CASE("block identification is stable across extra seeds") {
  Presentation P = qmt::build_kp(3);
  qmt::DecompositionReport a = qmt::decompose(P, 1);
  qmt::DecompositionReport b = qmt::decompose(P, 9);
  CHECK(a.blocks == b.blocks);
}

TEST_CASE("fibration sector split and its center") {
  qmt::PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::Lattice L = qmt::Lattice::scaled(3, 2);
  Presentation P = qmt::build_fibration(Z3, qmt::t1_family(Z3, 1, 2, 2), L);
  long box = L.quotient_order().get_si();
  std::vector<int> subset;
  for (long v = 0; v < box; ++v) subset.push_back(int(box + v));
  Presentation Q = qmt::sector_split(P, subset);
  CHECK(Q.dim == int(box));
  for (const auto& col : Q.comult) CHECK(col.empty());
  CHECK(qmt::center_basis(Q).cols == 2);
}

TEST_CASE("sector split rejects a non ideal") {
  Presentation P = qmt::build_kp(2);
  CHECK_THROWS_AS(qmt::sector_split(P, {0}), std::invalid_argument);
}

TEST_CASE("report serialization") {
  qmt::DecompositionReport d = qmt::decompose(qmt::build_kp(2), 1);
  auto j = d.to_json();
  CHECK(j.contains("center_dim"));
  CHECK(j.contains("blocks"));
  CHECK(j.contains("residual"));
  CHECK(j.contains("seed"));
}

}  // TEST_SUITE
