#include <doctest.h>

#include "qmt/builders.hpp"
#include "qmt/cocycle.hpp"
#include "qmt/lattice.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/verify.hpp"

using qmt::Cyclo;
using qmt::Lattice;
using qmt::PermGroup;
using qmt::Presentation;

TEST_SUITE("builders") {

TEST_CASE("half power squares to the deformation root") {
  CHECK(qmt::half_power(2) == Cyclo::zeta(4, 1));
  CHECK(qmt::half_power(2) * qmt::half_power(2) == Cyclo::zeta(2, 1));
  CHECK(qmt::half_power(3) == Cyclo::zeta(3, 2));
  CHECK(qmt::half_power(3) * qmt::half_power(3) == Cyclo::zeta(3, 1));
  CHECK(qmt::half_power(4) * qmt::half_power(4) == Cyclo::zeta(4, 1));
}

TEST_CASE("kp dimensions and sector product phase") {
  for (int N : {2, 3, 4}) CHECK(qmt::build_kp(N).dim == 2 * N * N);
  Presentation P = qmt::build_kp(3);
  // minus-sector product picks up the q^{bc} phase
  int x = qmt::kp_index(3, 1, 0, 1);
  int y = qmt::kp_index(3, 1, 1, 0);
  const auto& col = P.product(x, y);
  REQUIRE(col.size() == 1);
  CHECK(col[0].k == qmt::kp_index(3, 1, 1, 1));
  CHECK(col[0].c == Cyclo::zeta(3, 1));
  const auto& col2 = P.product(y, x);
  REQUIRE(col2.size() == 1);
  CHECK(col2[0].c == Cyclo::one());
}

TEST_CASE("kp axioms for moderate sizes") {
  for (int N : {2, 3}) {
    qmt::AxiomReport r = qmt::verify_hopf(qmt::build_kp(N));
    CHECK(r.all_pass());
  }
}

TEST_CASE("dual algebra dimensions and axioms") {
  CHECK(qmt::build_dual_w(3).dim == 18);
  qmt::AxiomReport r = qmt::verify_hopf(qmt::build_dual_w(3));
  CHECK(r.all_pass());
}

TEST_CASE("flip fibration at scale 2 is commutative") {
  PermGroup Z2 = qmt::named_group("Z2", 2);
  Presentation P = qmt::build_fibration(Z2, qmt::flip_family(Z2, mpq_class(1, 2)),
                                        Lattice::scaled(2, 2));
  CHECK(P.dim == 8);
  for (int i = 0; i < P.dim; ++i)
    for (int j = 0; j < P.dim; ++j) {
      const auto& ij = P.product(i, j);
      const auto& ji = P.product(j, i);
      REQUIRE(ij.size() == ji.size());
      for (size_t t = 0; t < ij.size(); ++t) {
        CHECK(ij[t].k == ji[t].k);
        CHECK(ij[t].c == ji[t].c);
      }
    }
}

TEST_CASE("fibration product is diagonal in the group component") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  Lattice L = Lattice::scaled(3, 2);
  Presentation P = qmt::build_fibration(Z3, qmt::t1_family(Z3, 1, 2, 2), L);
  long box = L.quotient_order().get_si();
  CHECK(P.dim == 3 * box);
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h) {
      const auto& col = P.product(int(g * box), int(h * box + 1));
      if (g == h)
        CHECK_FALSE(col.empty());
      else
        CHECK(col.empty());
    }
}

TEST_CASE("w subalgebra passes the suite") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  Presentation P = qmt::build_w_subalgebra(Z3, qmt::t1_family(Z3, 1, 2, 2),
                                           Lattice::scaled(3, 2));
  qmt::AxiomReport r = qmt::verify_hopf(P);
  CHECK(r.all_pass());
}

TEST_CASE("function algebra is a commutative diagonal") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  Presentation P = qmt::build_function_algebra(Z3);
  CHECK(P.dim == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& col = P.product(i, j);
      if (i == j) {
        REQUIRE(col.size() == 1);
        CHECK(col[0].k == i);
        CHECK(col[0].c == Cyclo::one());
      } else {
        CHECK(col.empty());
      }
    }
  CHECK(qmt::verify_hopf(P).all_pass());
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(qmt::build_kp(1), std::invalid_argument);
  CHECK_THROWS_AS(qmt::build_kp(0), std::invalid_argument);
  PermGroup Z3 = qmt::named_group("Z3", 3);
  CHECK_THROWS_AS(qmt::build_fibration(Z3, qmt::t1_family(Z3, 1, 2, 2),
                                       Lattice::scaled(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("lattice must be invariant under the group") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::ZMat skew = {{2, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(qmt::build_fibration(Z3, qmt::t1_family(Z3, 1, 2, 2),
                                       Lattice::from_columns(skew)),
                  std::invalid_argument);
}

}  // TEST_SUITE
