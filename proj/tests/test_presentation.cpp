#include <doctest.h>

#include <cstdio>

#include "qmt/builders.hpp"
#include "qmt/presentation.hpp"

using qmt::Cyclo;
using qmt::Presentation;
using qmt::Vec;

TEST_SUITE("presentation") {

TEST_CASE("labels and indices are consistent") {
  Presentation P = qmt::build_kp(2);
  CHECK(P.dim == 8);
  for (int i = 0; i < P.dim; ++i) CHECK(P.label_index(P.labels[size_t(i)]) == i);
  CHECK_THROWS(P.label_index("no-such-label"));
}

TEST_CASE("vector helpers") {
  Vec a = qmt::basis_vec(4, 1);
  Vec b = qmt::basis_vec(4, 3);
  Vec s = qmt::vec_add(a, qmt::vec_scale(b, Cyclo::rational(2)));
  CHECK(s[1] == Cyclo::one());
  CHECK(s[3] == Cyclo::rational(2));
  CHECK_FALSE(qmt::vec_is_zero(s));
  CHECK(qmt::vec_is_zero(qmt::vec_sub(s, s)));
  CHECK(qmt::vec_eq(s, s));
  CHECK(qmt::vec_norm(qmt::vec_zero(4)) == 0.0);
}

TEST_CASE("multiplication is associative and unital on a sample") {
  Presentation P = qmt::build_kp(3);
  Vec x = qmt::basis_vec(P.dim, 2);
  Vec y = qmt::basis_vec(P.dim, 11);
  Vec z = qmt::vec_add(qmt::basis_vec(P.dim, 5), qmt::basis_vec(P.dim, 17));
  CHECK(qmt::vec_eq(qmt::mul_vec(P, qmt::mul_vec(P, x, y), z),
                    qmt::mul_vec(P, x, qmt::mul_vec(P, y, z))));
  CHECK(qmt::vec_eq(qmt::mul_vec(P, P.unit, x), x));
  CHECK(qmt::vec_eq(qmt::mul_vec(P, x, P.unit), x));
}

TEST_CASE("counit is an algebra map on a sample") {
  Presentation P = qmt::build_dual_w(2);
  Vec x = qmt::basis_vec(P.dim, 1);
  Vec y = qmt::basis_vec(P.dim, 6);
  Cyclo lhs = qmt::counit_of(P, qmt::mul_vec(P, x, y));
  Cyclo rhs = qmt::counit_of(P, x) * qmt::counit_of(P, y);
  CHECK(lhs == rhs);
}

TEST_CASE("antilinear application conjugates coefficients") {
  Presentation P = qmt::build_kp(2);
  Vec x = qmt::vec_scale(qmt::basis_vec(P.dim, 3), Cyclo::zeta(4, 1));
  Vec sx = qmt::apply_antilinear(P.star, x);
  Vec direct = qmt::apply_antilinear(P.star, qmt::basis_vec(P.dim, 3));
  CHECK(qmt::vec_eq(sx, qmt::vec_scale(direct, Cyclo::zeta(4, 3))));
}

TEST_CASE("scalar JSON round trip is exact") {
  for (const Cyclo& c : {Cyclo::zeta(8, 3), Cyclo::rational(mpq_class(-7, 3)),
                         Cyclo::zero(), Cyclo::zeta(3, 1) + Cyclo::rational(2)}) {
    Cyclo back = qmt::cyclo_from_json(qmt::cyclo_to_json(c));
    CHECK(back == c);
  }
}

TEST_CASE("presentation JSON round trip is byte identical") {
  Presentation P = qmt::build_dual_w(3);
  auto j1 = qmt::presentation_to_json(P);
  Presentation Q = qmt::presentation_from_json(j1);
  auto j2 = qmt::presentation_to_json(Q);
  CHECK(j1.dump() == j2.dump());
  CHECK(Q.dim == P.dim);
  CHECK(Q.labels == P.labels);
}

TEST_CASE("file save and load") {
  Presentation P = qmt::build_kp(2);
  const char* path = "tmp_presentation_roundtrip.json";
  qmt::save_presentation(path, P);
  Presentation Q = qmt::load_presentation(path);
  CHECK(qmt::presentation_to_json(Q).dump() == qmt::presentation_to_json(P).dump());
  std::remove(path);
}

TEST_CASE("normalize sorts and prunes") {
  Presentation P = qmt::build_kp(2);
  // Append a cancelling pair of terms; normalize must remove them.
  P.mult[3].push_back({5, Cyclo::one()});
  P.mult[3].push_back({5, Cyclo::rational(-1)});
  Presentation R = qmt::build_kp(2);
  P.normalize();
  CHECK(qmt::presentation_to_json(P).dump() == qmt::presentation_to_json(R).dump());
}

}  // TEST_SUITE
