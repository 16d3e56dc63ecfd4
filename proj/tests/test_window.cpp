#include <doctest.h>

#include "qmt/builders.hpp"
#include "qmt/cocycle.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/window.hpp"

using qmt::CKey;
using qmt::Cyclo;
using qmt::DTWindow;
using qmt::PermGroup;

TEST_SUITE("window") {

TEST_CASE("sector products and the minus phase") {
  DTWindow W(3, 4);
  auto fp = [&](long a, long b) { return W.basis(0, a, b); };
  auto fm = [&](long a, long b) { return W.basis(1, a, b); };
  CHECK(qmt::dt_elem_eq(W.mul(fp(1, 0), fp(0, 1)), fp(1, 1)));
  CHECK(qmt::dt_elem_eq(W.mul(fp(1, 0), fm(0, 1)), qmt::dt_sub(fp(0, 0), fp(0, 0))));
  auto m = W.mul(fm(0, 1), fm(1, 0));
  REQUIRE(m.t.size() == 1);
  auto it = m.t.begin();
  CHECK(it->first == qmt::DTKey{1, 1, 1});
  CHECK(it->second == Cyclo::zeta(3, 1));
  auto m2 = W.mul(fm(1, 0), fm(0, 1));
  CHECK(m2.t.begin()->second == Cyclo::one());
}

TEST_CASE("window overflow is sticky") {
  DTWindow W(2, 2);
  auto x = W.monomial(2, 0);
  CHECK_FALSE(x.overflow);
  auto y = W.mul(x, W.monomial(1, 0));
  CHECK(y.overflow);
  CHECK(W.mul(y, W.unit()).overflow);
}

TEST_CASE("counit antipode and star tables") {
  DTWindow W(3, 3);
  auto fp = [&](long a, long b) { return W.basis(0, a, b); };
  auto fm = [&](long a, long b) { return W.basis(1, a, b); };
  CHECK(W.counit(fp(2, -1)) == Cyclo::one());
  CHECK(W.counit(fm(2, -1)) == Cyclo::zero());
  CHECK(qmt::dt_elem_eq(W.antipode(fp(1, 2)), fp(-1, -2)));
  CHECK(qmt::dt_elem_eq(W.antipode(fm(1, 2)), fm(-2, -1)));
  auto s = W.star(fm(1, 2));
  REQUIRE(s.t.size() == 1);
  CHECK(s.t.begin()->first == qmt::DTKey{1, -1, -2});
  CHECK(s.t.begin()->second == Cyclo::zeta(3, 2));  // q^{ab} with a=1, b=2
}

TEST_CASE("coproduct splits into two tensor terms") {
  DTWindow W(2, 3);
  auto d = W.comult(W.basis(0, 1, 0));
  CHECK(d.t.size() == 2);
  auto dm = W.comult(W.basis(1, 1, 0));
  CHECK(dm.t.size() == 2);
}

TEST_CASE("dual-c parameter by parity") {
  CHECK(qmt::dual_c_parameter(2) == mpq_class(1, 4));
  CHECK(qmt::dual_c_parameter(4) == mpq_class(1, 8));
  CHECK(qmt::dual_c_parameter(3) == mpq_class(2, 3));
  CHECK(qmt::dual_c_parameter(5) == mpq_class(3, 5));
}

TEST_CASE("delta product closed forms match the windowed sums") {
  qmt::CWindow W = qmt::dual_c_window(2, 6);
  for (int ga : {0, 1})
    for (int gc : {0, 1}) {
      CKey a{ga, {1, -1}};
      CKey c{gc, {0, 2}};
      auto r1 = W.delta_right(a, c);
      auto r2 = W.delta_right_brute(a, c);
      CHECK(r1.t == r2.t);
      auto l1 = W.delta_left(c, a);
      auto l2 = W.delta_left_brute(c, a);
      CHECK(l1.t == l2.t);
    }
}

TEST_CASE("multiplier coassociativity on fixed triples") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::CWindow W(Z3, qmt::antisym_z3_family(Z3, mpq_class(1, 4), mpq_class(1, 3)), 6);
  bool overflow = false;
  CHECK(W.coassoc_triple(CKey{1, {1, 0, -1}}, CKey{2, {0, 1, 1}}, CKey{0, {2, -1, 0}},
                         &overflow));
  CHECK_FALSE(overflow);
  CHECK(W.coassoc_triple(CKey{2, {2, 2, 2}}, CKey{1, {-2, 0, 2}}, CKey{1, {1, 1, -2}},
                         &overflow));
  CHECK_FALSE(overflow);
}

TEST_CASE("multiplier report runs clean") {
  qmt::AxiomReport r = qmt::multiplier_report("dual-c", 2, 6, 10, 7);
  CHECK(r.all_pass());
  qmt::AxiomReport z = qmt::multiplier_report("z3", 2, 6, 5, 7);
  CHECK(z.all_pass());
  CHECK_THROWS_AS(qmt::multiplier_report("nope", 2, 6, 5, 7), std::invalid_argument);
}

TEST_CASE("group window multiplication is compatible with the cocycle phases") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::CocycleFamily th = qmt::t1_family(Z3, 1, 2, 2);
  qmt::UWindow W(Z3, th, 4);
  auto x = W.basis(1, {1, 0, 0});
  auto y = W.basis(1, {0, 1, 0});
  auto p = W.mul(x, y);
  REQUIRE(p.t.size() == 1);
  CHECK(p.t.begin()->first == qmt::UKey{1, {1, 1, 0}});
  CHECK(p.t.begin()->second == Cyclo::phase(th.forms[1][0][1]));
  CHECK(W.mul(W.basis(1, {1, 0, 0}), W.basis(2, {0, 1, 0})).t.empty());
}

TEST_CASE("lattice monomials multiply like the commutative torus") {
  PermGroup Z3 = qmt::named_group("Z3", 3);
  qmt::UWindow W(Z3, qmt::t1_family(Z3, 1, 2, 2), 8);
  auto u = W.lattice_monomial({2, 0, 0});
  auto v = W.lattice_monomial({0, 2, 0});
  CHECK(qmt::u_elem_eq(W.mul(u, v), W.mul(v, u)));
  CHECK(qmt::u_elem_eq(W.mul(u, v), W.lattice_monomial({2, 2, 0})));
}

TEST_CASE("representation window relations") {
  qmt::AxiomReport r = qmt::verify_rep_window(2, 4);
  CHECK(r.all_pass());
}

TEST_CASE("q equal one degeneration") {
  qmt::AxiomReport r = qmt::verify_q1_degeneration(4);
  CHECK(r.all_pass());
}

TEST_CASE("window serialization shape") {
  auto j = qmt::dt_window_json(2, 2);
  CHECK(j.contains("labels"));
  CHECK(j.contains("mult"));
  CHECK(j.contains("comult"));
}

}  // TEST_SUITE
