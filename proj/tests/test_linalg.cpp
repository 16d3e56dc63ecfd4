#include <doctest.h>

#include "qmt/cyclo.hpp"
#include "qmt/linalg.hpp"

using qmt::Cyclo;
using qmt::Mat;

TEST_SUITE("linalg") {

TEST_CASE("rank and rref over the rationals") {
  Mat<mpq_class> A(3, 3);
  A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
  A.at(1, 0) = 2; A.at(1, 1) = 4; A.at(1, 2) = 6;
  A.at(2, 0) = 0; A.at(2, 1) = 1; A.at(2, 2) = 1;
  CHECK(qmt::rank_of(A) == 2);
}

TEST_CASE("nullspace vectors annihilate") {
  Mat<mpq_class> A(2, 3);
  A.at(0, 0) = 1; A.at(0, 1) = 1; A.at(0, 2) = 0;
  A.at(1, 0) = 0; A.at(1, 1) = 0; A.at(1, 2) = 1;
  auto ns = qmt::nullspace(A);
  REQUIRE(ns.size() == 1);
  for (int r = 0; r < A.rows; ++r) {
    mpq_class acc = 0;
    for (int c = 0; c < A.cols; ++c) acc += A.at(r, c) * ns[0][size_t(c)];
    CHECK(acc == 0);
  }
}

TEST_CASE("exact solve over a cyclotomic field") {
  Mat<Cyclo> A(2, 2);
  A.at(0, 0) = Cyclo::zeta(4, 1);
  A.at(0, 1) = Cyclo::one();
  A.at(1, 0) = Cyclo::one();
  A.at(1, 1) = Cyclo::zeta(4, 1);
  std::vector<Cyclo> b = {Cyclo::rational(2), Cyclo::zero()};
  auto x = qmt::solve(A, b);
  REQUIRE(x.has_value());
  for (int r = 0; r < 2; ++r) {
    Cyclo acc = Cyclo::zero();
    for (int c = 0; c < 2; ++c) acc = acc + A.at(r, c) * (*x)[size_t(c)];
    CHECK(acc == b[size_t(r)]);
  }
}

TEST_CASE("inverse multiplies to the identity") {
  Mat<Cyclo> A(2, 2);
  A.at(0, 0) = Cyclo::one();
  A.at(0, 1) = Cyclo::zeta(3, 1);
  A.at(1, 0) = Cyclo::zero();
  A.at(1, 1) = Cyclo::rational(mpq_class(1, 2));
  auto inv = qmt::inverse(A);
  REQUIRE(inv.has_value());
  Mat<Cyclo> P = qmt::mat_mul(A, *inv);
  Mat<Cyclo> I = Mat<Cyclo>::identity(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(P.at(r, c) == I.at(r, c));
}

TEST_CASE("singular matrix has no inverse") {
  Mat<Cyclo> A(2, 2);
  A.at(0, 0) = Cyclo::one();
  A.at(0, 1) = Cyclo::one();
  A.at(1, 0) = Cyclo::one();
  A.at(1, 1) = Cyclo::one();
  CHECK_FALSE(qmt::inverse(A).has_value());
}

TEST_CASE("overdetermined systems") {
  Mat<mpq_class> A(3, 1);
  A.at(0, 0) = 1;
  A.at(1, 0) = 2;
  A.at(2, 0) = 3;
  std::vector<mpq_class> consistent = {2, 4, 6};
  std::vector<mpq_class> inconsistent = {2, 4, 7};
  auto x = qmt::solve(A, consistent);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK_FALSE(qmt::solve(A, inconsistent).has_value());
}

TEST_CASE("span basis drops dependent vectors") {
  std::vector<std::vector<mpq_class>> vecs = {
      {1, 0, 1}, {2, 0, 2}, {0, 1, 0}, {1, 1, 1}};
  auto basis = qmt::span_basis(vecs, 3);
  CHECK(basis.size() == 2);
}

}  // TEST_SUITE
