#include <doctest.h>

#include "qmt/lattice.hpp"
#include "qmt/permgroup.hpp"

using qmt::Lattice;
using qmt::Perm;
using qmt::PermGroup;
using qmt::ZMat;
using qmt::ZVec;

TEST_SUITE("symmetry") {

TEST_CASE("named cyclic groups") {
  PermGroup G = qmt::named_group("Z3", 3);
  REQUIRE(G.elems.size() == 3);
  CHECK(G.n == 3);
  for (int k = 0; k < 3; ++k) CHECK(G.elems[0][size_t(k)] == k);  // identity first
  for (size_t g = 0; g < 3; ++g) {
    CHECK(G.mult[g][size_t(G.inv[g])] == 0);
    CHECK(G.mult[0][g] == int(g));
  }
  CHECK_THROWS(qmt::named_group("Z3", 4));
}

TEST_CASE("perm string round trip") {
  Perm p = qmt::perm_parse("1,2,0", 3);
  CHECK(qmt::perm_str(p) == "1,2,0");
  CHECK_THROWS(qmt::perm_parse("1,1,0", 3));
  CHECK_THROWS(qmt::perm_parse("1,2", 3));
}

TEST_CASE("closure from generators") {
  Perm a = qmt::perm_parse("1,0,2,3", 4);
  Perm b = qmt::perm_parse("0,1,3,2", 4);
  PermGroup G = PermGroup::close(4, {a, b});
  CHECK(G.elems.size() == 4);  // Z2 x Z2
  for (size_t g = 0; g < G.elems.size(); ++g)
    for (size_t h = 0; h < G.elems.size(); ++h) {
      int gh = G.mult[g][h];
      for (int k = 0; k < 4; ++k)
        CHECK(G.elems[size_t(gh)][size_t(k)] == G.elems[g][size_t(G.elems[h][size_t(k)])]);
    }
}

TEST_CASE("scaled lattice quotient") {
  Lattice L = Lattice::scaled(2, 3);
  CHECK(L.quotient_order() == 9);
  CHECK(L.contains({3, 0}));
  CHECK(L.contains({-3, 6}));
  CHECK_FALSE(L.contains({1, 0}));
  for (long i = 0; i < 9; ++i) {
    ZVec r = L.rep_of_flat(i);
    CHECK(L.flat_index(r) == i);
  }
}

TEST_CASE("general lattice representative") {
  ZMat A = {{2, 1}, {0, 2}};  // columns (2,0) and (1,2)
  Lattice L = Lattice::from_columns(A);
  CHECK(L.quotient_order() == 4);
  ZVec x = {5, -3};
  ZVec r = L.representative(x);
  ZVec diff = {x[0] - r[0], x[1] - r[1]};
  CHECK(L.contains(diff));
  CHECK(L.flat_index(x) == L.flat_index(r));
}

TEST_CASE("smith normal form diagonalizes") {
  ZMat A = {{4, 2, 0}, {2, 4, 2}, {0, 2, 4}};
  qmt::SmithResult s = qmt::smith_normal_form(A);
  REQUIRE(s.s.size() == 3);
  for (size_t i = 0; i + 1 < s.s.size(); ++i) {
    CHECK(s.s[i] > 0);
    CHECK(s.s[i + 1] % s.s[i] == 0);
  }
}

TEST_CASE("invariance under the cyclic action") {
  Lattice L = Lattice::scaled(3, 2);
  Perm cycle = qmt::perm_parse("1,2,0", 3);
  CHECK(L.invariant_under(cycle));
  ZMat skew = {{2, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_FALSE(Lattice::from_columns(skew).invariant_under(cycle));
}

TEST_CASE("basis coefficients reproduce lattice points") {
  Lattice L = Lattice::scaled(2, 4);
  ZVec x = {8, -4};
  REQUIRE(L.contains(x));
  ZVec c = L.basis_coefficients(x);
  ZVec acc = {0, 0};
  for (int k = 0; k < 2; ++k) {
    ZVec bk = L.basis_vector(k);
    for (int i = 0; i < 2; ++i) acc[size_t(i)] += c[size_t(k)] * bk[size_t(i)];
  }
  CHECK(acc[0] == x[0]);
  CHECK(acc[1] == x[1]);
  CHECK(qmt::zvec_str(x) == "[8,-4]");
}

}  // TEST_SUITE
