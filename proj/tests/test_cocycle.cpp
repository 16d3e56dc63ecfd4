#include <doctest.h>

#include "qmt/builders.hpp"
#include "qmt/cocycle.hpp"
#include "qmt/permgroup.hpp"

using qmt::CocycleFamily;
using qmt::PermGroup;
using qmt::QMat;

TEST_SUITE("cocycle") {

TEST_CASE("antisymmetric solution space dimensions") {
  PermGroup Z2 = qmt::named_group("Z2", 2);
  PermGroup Z3 = qmt::named_group("Z3", 3);
  CHECK(qmt::solve_cocycles(Z2, true).dim == 1);
  CHECK(qmt::solve_cocycles(Z3, true).dim == 2);
}

TEST_CASE("solver output satisfies the cocycle condition") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  for (bool antisym : {true, false}) {
    qmt::CocycleBasis basis = qmt::solve_cocycles(Z3, antisym);
    CHECK(basis.dim == int(basis.basis.size()));
    for (const CocycleFamily& f : basis.basis) {
      CHECK_FALSE(qmt::cocycle_defect(f).has_value());
      if (antisym) CHECK(f.antisymmetric());
    }
  }
}

TEST_CASE("named families are valid cocycles") {
  PermGroup Z2 = qmt::named_group("Z2", 2);
  PermGroup Z3 = qmt::named_group("Z3", 3);
  CocycleFamily flip = qmt::flip_family(Z2, mpq_class(1, 3));
  CocycleFamily t1 = qmt::t1_family(Z3, 1, 2, 3);
  CocycleFamily anti = qmt::antisym_z3_family(Z3, mpq_class(1, 4), mpq_class(1, 3));
  for (const CocycleFamily* f : {&flip, &t1, &anti})
    CHECK_FALSE(qmt::cocycle_defect(*f).has_value());
  CHECK(flip.antisymmetric());
  CHECK(anti.antisymmetric());
}

TEST_CASE("inconsistent generator form is rejected") {
  PermGroup Z2 = qmt::named_group("Z2", 2);
  QMat bad = qmt::qmat_zero(2);
  bad[0][0] = 1;  // survives the swap action, so theta_e could not vanish
  CHECK_THROWS_AS(qmt::family_from_generator_forms(Z2, {bad}),
                  std::invalid_argument);
}

TEST_CASE("redundant generators do not inflate the solution space") {
  PermGroup A = PermGroup::close(3, {{1, 2, 0}, {0, 1, 2}});
  PermGroup B = PermGroup::close(3, {{1, 2, 0}, {2, 0, 1}});
  CHECK(qmt::solve_cocycles(A, true).dim == 2);
  CHECK(qmt::solve_cocycles(B, true).dim == 2);
  CHECK(qmt::solve_cocycles(B, false).dim == 6);
  // a nonzero form on a redundant identity generator contradicts theta_e = 0
  QMat z = qmt::qmat_zero(3);
  QMat bad = qmt::qmat_zero(3);
  bad[0][1] = 1;
  CHECK_THROWS_AS(qmt::family_from_generator_forms(A, {z, bad}),
                  std::invalid_argument);
}

TEST_CASE("coboundaries are cocycles with vanishing antisymmetrization") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  QMat phi = qmt::qmat_zero(3);
  phi[0][1] = mpq_class(1, 2);
  phi[2][0] = mpq_class(-1, 5);
  phi[1][1] = 1;
  CocycleFamily df = qmt::coboundary_of(Z3, phi);
  CHECK_FALSE(qmt::cocycle_defect(df).has_value());
  auto pot = qmt::coboundary_potential(df);
  REQUIRE(pot.has_value());
  CocycleFamily back = qmt::coboundary_of(Z3, *pot);
  for (size_t g = 0; g < df.forms.size(); ++g)
    CHECK(qmt::qmat_is_zero(qmt::qmat_sub(df.forms[g], back.forms[g])));
}

TEST_CASE("averaging potential splits a coboundary") {
  PermGroup Z2 = qmt::named_group("Z2", 2);
  QMat phi = qmt::qmat_zero(2);
  phi[0][1] = mpq_class(3, 7);
  CocycleFamily df = qmt::coboundary_of(Z2, phi);
  QMat avg = qmt::averaging_potential(df);
  CocycleFamily again = qmt::coboundary_of(Z2, avg);
  for (size_t g = 0; g < df.forms.size(); ++g)
    CHECK(qmt::qmat_is_zero(qmt::qmat_sub(df.forms[g], again.forms[g])));
}

TEST_CASE("simplicial differential squares to zero") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::Cochain c0;
  c0.k = 0;
  c0.G = &Z3;
  c0.n = 3;
  QMat phi = qmt::qmat_zero(3);
  phi[1][2] = mpq_class(2, 3);
  phi[0][0] = mpq_class(-1, 4);
  c0.vals[{}] = phi;
  qmt::Cochain c1 = qmt::coboundary(c0);
  qmt::Cochain c2 = qmt::coboundary(c1);
  CHECK(c2.k == 2);
  for (const auto& [key, m] : c2.vals) CHECK(qmt::qmat_is_zero(m));
}

TEST_CASE("serialization round trip") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  CocycleFamily t1 = qmt::t1_family(Z3, 2, 1, 3);
  CocycleFamily back = qmt::cocycle_from_json(qmt::cocycle_to_json(t1));
  REQUIRE(back.forms.size() == t1.forms.size());
  for (size_t g = 0; g < t1.forms.size(); ++g)
    CHECK(qmt::qmat_is_zero(qmt::qmat_sub(back.forms[g], t1.forms[g])));
  PermGroup G2 = qmt::group_from_json(qmt::group_to_json(Z3));
  CHECK(G2.elems == Z3.elems);
  CHECK(G2.mult == Z3.mult);
}

}  // TEST_SUITE
