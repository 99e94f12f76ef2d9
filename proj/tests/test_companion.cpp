#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

DenseMatrix qmatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  return DenseMatrix(Q(), rows, cols, qs(entries));
}

}  // namespace

TEST_CASE("companion_of") {
  CHECK(companion_of(monic(Q(), "x^2+1")).matrix() == qmatrix(2, 2, {0, -1, 1, 0}));
  CHECK(companion_of(monic(Q(), "x^3-1")).matrix() == qmatrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  CHECK(companion_of(monic(Q(), "x+5")).matrix() == qmatrix(1, 1, {-5}));

  auto c = companion_of(monic(Q(), "x^4 + 2*x^3 - 3*x + 7"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c.matrix().at(i, j) == q(i == j + 1 ? 1 : 0));
  CHECK(c.matrix().column(3) == qs({-7, 3, 0, -2}));
}

TEST_CASE("companion_matvec") {
  auto c = companion_of(monic(Q(), "x^2+1"));
  CHECK(companion_matvec(c, qs({1, 0})) == qs({0, 1}));
  CHECK(companion_matvec(c, qs({0, 1})) == qs({-1, 0}));

  auto c3 = companion_of(monic(Q(), "x^3-1"));
  CHECK(mat_vec(c3.matrix(), qs({1, 2, 3})) == qs({3, 1, 2}));
  CHECK(companion_matvec(c3, qs({1, 2, 3})) == qs({3, 1, 2}));
  CHECK_THROWS_AS(companion_matvec(c3, qs({1, 2})), UsageError);

  SUBCASE("agrees with dense mat_vec") {
    SeedStream seeds(17);
    for (auto sel : {"rational", "mod:256", "mat:2:mod:5"}) {
      auto r = parse_ring(sel);
      for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 9;
        Vector fc;
        for (std::size_t i = 0; i < n; ++i)
          fc.push_back(r.is_matrix() ? embed_scalar(r, random_value(r.scalar_ring(), seeds)) : random_value(r, seeds));
        fc.push_back(ring_one(r));
        auto cm = companion_of(MonicModulus(DensePolynomial(r, fc)));
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_value(r, seeds));
        CHECK(companion_matvec(cm, v) == mat_vec(cm.matrix(), v));
      }
    }
  }
}

TEST_CASE("structure_matrix goldens") {
  // (I C C^2) for X^3 - 1 and (I C) for X^2 + 1, entry for entry.
  CHECK(structure_matrix(monic(Q(), "x^3-1")).matrix() ==
        qmatrix(3, 9, {1, 0, 0, 0, 0, 1, 0, 1, 0,  //
                       0, 1, 0, 1, 0, 0, 0, 0, 1,  //
                       0, 0, 1, 0, 1, 0, 1, 0, 0}));
  CHECK(structure_matrix(monic(Q(), "x^2+1")).matrix() == qmatrix(2, 4, {1, 0, 0, -1, 0, 1, 1, 0}));
  CHECK(structure_matrix(monic(Q(), "x+5")).matrix() == qmatrix(1, 1, {1}));
}

TEST_CASE("structure blocks follow C times the previous block") {
  auto f = monic(Q(), "x^5 - 1/2*x^3 + 2*x - 3");
  auto c = companion_of(f);
  auto s = structure_matrix(c);
  CHECK(s.block(0) == DenseMatrix::identity(Q(), 5));
  for (std::size_t j = 1; j < 5; ++j) CHECK(s.block(j) == mat_mul(c.matrix(), s.block(j - 1)));
  CHECK_THROWS_AS(s.block(5), UsageError);
}

TEST_CASE("mat_mul and mat_vec") {
  auto c3 = companion_of(monic(Q(), "x^3-1")).matrix();
  CHECK(mat_mul(c3, c3) == qmatrix(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  CHECK(mat_mul(DenseMatrix::identity(Q(), 3), c3) == c3);
  CHECK(mat_vec(c3, qs({0, 0, 0})) == qs({0, 0, 0}));
  CHECK_THROWS_AS(mat_mul(c3, qmatrix(2, 2, {1, 0, 0, 1})), UsageError);

  auto r = parse_ring("mat:2:mod:5");
  auto a = parse_value(r, "[[0,1];[0,0]]");
  auto b = parse_value(r, "[[0,0];[1,0]]");
  DenseMatrix ma(r, 1, 1, {a}), mb(r, 1, 1, {b});
  CHECK(mat_mul(ma, mb).at(0, 0) == ring_mul(r, a, b));
}

TEST_CASE("kronecker_left") {
  auto r = Q();
  // Expanding the definition: block j is x scaled by y_j.
  CHECK(kronecker_left(r, qs({1, 2}), qs({3, 4})) == qs({1 * 3, 2 * 3, 1 * 4, 2 * 4}));
  CHECK(kronecker_left(r, qs({1, 0}), qs({1, 0})) == qs({1, 0, 0, 0}));
  CHECK_THROWS_AS(kronecker_left(r, qs({1, 0}), qs({1})), UsageError);

  SUBCASE("symbolic layout x1y1, x2y1, x1y2, x2y2") {
    auto m = parse_ring("mat:2:rational");
    auto x1 = parse_value(m, "[[1,2];[0,1]]"), x2 = parse_value(m, "[[0,1];[1,0]]");
    auto y1 = parse_value(m, "[[3,0];[1,1]]"), y2 = parse_value(m, "[[1,1];[0,2]]");
    auto k = kronecker_left(m, Vector{x1, x2}, Vector{y1, y2});
    CHECK(k == Vector{ring_mul(m, x1, y1), ring_mul(m, x2, y1), ring_mul(m, x1, y2), ring_mul(m, x2, y2)});
  }
}

TEST_CASE("circulant_of") {
  auto r = Q();
  CHECK(circulant_of(DensePolynomial(r, qs({1, 2, 3})), 3) == qmatrix(3, 3, {1, 3, 2, 2, 1, 3, 3, 2, 1}));
  CHECK(circulant_of(DensePolynomial(r, qs({1})), 4) == DenseMatrix::identity(r, 4));
  CHECK(circulant_of(DensePolynomial(r, qs({0, 1})), 3) == companion_of(monic(r, "x^3-1")).matrix());
  CHECK_THROWS_AS(circulant_of(DensePolynomial(r, qs({0, 0, 0, 1})), 3), UsageError);
}

TEST_CASE("f(C) = 0 for random monic f") {
  SeedStream seeds(23);
  for (auto sel : {"rational", "mod:7", "mod:256"}) {
    auto r = parse_ring(sel);
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 1 + t % 12;
      Vector fc;
      for (std::size_t i = 0; i < n; ++i) fc.push_back(random_value(r, seeds));
      fc.push_back(ring_one(r));
      MonicModulus f(DensePolynomial(r, fc));
      auto mr = RingDescriptor::matrix(n, r);
      CHECK(ring_is_zero(mr, poly_eval(f.polynomial(), as_matrix_value(companion_of(f).matrix(), mr), mr)));
    }
  }
}
