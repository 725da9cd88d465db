#include <gtest/gtest.h>

#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/matrix.hpp"
#include "homnambu/multi_index.hpp"
#include "homnambu/scalar.hpp"
#include "oracle.hpp"

using namespace homnambu;

TEST(Scalar, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_scalar("3"), Scalar(3));
  EXPECT_EQ(parse_scalar("-4/6"), Scalar(-2, 3));
  EXPECT_EQ(to_string(parse_scalar("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_scalar("0/7")), "0");
  EXPECT_EQ(to_string(parse_scalar("+8/2")), "4");
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "1//2", "3 ", "--1"}) {
    EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
  }
}

TEST(Matrix, BasicAlgebra) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Matrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), Matrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(commutator(a, b), a * b - b * a);
  EXPECT_EQ(power(b, 2), Matrix::identity(2));
  EXPECT_EQ(power(a, 0), Matrix::identity(2));
  EXPECT_EQ(a * Vector({1, 1}), (Vector{3, 7}));
  EXPECT_EQ(unflatten(flatten(a), 2, 2), a);
  EXPECT_EQ(flatten(a), (Vector{1, 2, 3, 4}));
}

TEST(Matrix, KroneckerMatchesIndexConvention) {
  oracle::Gen g(1);
  const Matrix a = g.matrix(2, 3), b = g.matrix(3, 2);
  const Matrix k = kronecker(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(k(p * 3 + i, q * 2 + j), a(p, q) * b(i, j));
  const Vector u = g.vector(2), v = g.vector(3);
  const Vector uv = kronecker(u, v);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(uv[p * 3 + i], u[p] * v[i]);
  EXPECT_EQ(kronecker_power(a.transpose() * a, 0), Matrix::identity(1));
}

TEST(Linalg, DeterminantAgreesWithPermutationExpansion) {
  oracle::Gen g(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + g.index(5);
    const Matrix m = g.matrix(n, n, trial % 3);
    EXPECT_EQ(det(m), oracle::det(m)) << "trial " << trial;
  }
  EXPECT_EQ(det(Matrix::from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_THROW(det(Matrix(2, 3)), Error);
}

TEST(Linalg, RankByTwoRoutes) {
  oracle::Gen g(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + g.index(5), c = 1 + g.index(5);
    Matrix m = g.matrix(r, c, 2);
    if (r > 1) {
      // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3;
    }
    EXPECT_EQ(rank(m), reduced_row_echelon(m).pivots.size());
  }
}

TEST(Linalg, NullspaceIsExactAndComplete) {
  oracle::Gen g(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + g.index(4), c = 1 + g.index(6);
    const Matrix m = g.matrix(r, c, 2);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), c);
    for (const auto& v : ns) EXPECT_TRUE((m * v).is_zero());
    EXPECT_EQ(canonical_basis(ns, c), ns);
  }
  EXPECT_EQ(nullspace(Matrix(0, 3)).size(), 3u);
}

TEST(Linalg, SolveAndInverse) {
  oracle::Gen g(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + g.index(4);
    const Matrix m = g.matrix(n, n);
    const Vector x = g.vector(n);
    const auto sol = solve(m, m * x);
    ASSERT_TRUE(sol);
    EXPECT_EQ(m * *sol, m * x);
    if (auto inv = inverse(m)) {
      EXPECT_NE(det(m), 0);
      EXPECT_EQ(m * *inv, Matrix::identity(n));
      EXPECT_EQ(*inv * m, Matrix::identity(n));
    } else {
      EXPECT_EQ(det(m), 0);
    }
  }
  EXPECT_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), Vector{1, 2}));
  EXPECT_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  EXPECT_THROW(solve(Matrix(2, 2), Vector{1}), Error);
}

TEST(Linalg, CoordinatesAgainstCanonicalBasis) {
  const auto basis = canonical_basis({Vector{1, 1, 0}, Vector{0, 1, 1}}, 3);
  const auto c = coordinates(basis, Vector{2, 5, 3});
  ASSERT_TRUE(c);
  Vector rebuilt(3);
  for (std::size_t i = 0; i < basis.size(); ++i) rebuilt += (*c)[i] * basis[i];
  EXPECT_EQ(rebuilt, (Vector{2, 5, 3}));
  EXPECT_FALSE(coordinates(basis, Vector{0, 0, 1}));
}

TEST(MultiIndex, FlatteningRoundTrips) {
  for (std::uint64_t k = 0; k < 27; ++k) EXPECT_EQ(flat_index(unflatten_index(k, 3, 3), 3), k);
  EXPECT_EQ(unflatten_index(5, 3, 2), (MultiIndex{1, 2}));
  EXPECT_EQ(checked_pow(3, 4), 81u);
  EXPECT_THROW(checked_pow(10, 30), Error);
}

TEST(MultiIndex, IncreasingTuplesAndSigns) {
  const auto t = increasing_tuples(4, 3);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.front(), (MultiIndex{0, 1, 2}));
  EXPECT_EQ(t.back(), (MultiIndex{1, 2, 3}));
  EXPECT_EQ(increasing_tuples(3, 0).size(), 1u);
  MultiIndex a{2, 0, 1};
  EXPECT_EQ(sort_with_sign(a), 1);
  EXPECT_EQ(a, (MultiIndex{0, 1, 2}));
  MultiIndex b{1, 0, 2};
  EXPECT_EQ(sort_with_sign(b), -1);
  MultiIndex c{1, 2, 1};
  EXPECT_EQ(sort_with_sign(c), 0);
  EXPECT_EQ(to_one_based({0, 3}), (MultiIndex{1, 4}));
}
