#include <gtest/gtest.h>

#include "homnambu/algebra.hpp"
#include "homnambu/corpus.hpp"
#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "oracle.hpp"

using namespace homnambu;

namespace {

Vector e(std::size_t d, std::size_t i) { return Vector::unit(d, i - 1); }

Vector eval3(const HomNambuAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  const Vector args[] = {x, y, z};
  return eval_bracket(a, args);
}

}  // namespace

TEST(BracketTensor, AntisymmetricStorageFoldsBySign) {
  const auto b = BracketTensor::from_entries(3, 3, {{{2, 0, 1}, Vector{1, 0, 0}}}, Storage::antisymmetric);
  EXPECT_EQ(b.value({0, 1, 2}), (Vector{1, 0, 0}));
  EXPECT_EQ(b.value({1, 0, 2}), (Vector{-1, 0, 0}));
  EXPECT_EQ(b.value({0, 0, 2}), (Vector{0, 0, 0}));
  ASSERT_EQ(b.entries().size(), 1u);
  EXPECT_EQ(b.entries().begin()->first, (MultiIndex{0, 1, 2}));
}

TEST(BracketTensor, RejectsInconsistentSkewData) {
  EXPECT_THROW(BracketTensor::from_entries(3, 3, {{{0, 0, 1}, Vector{1, 0, 0}}}, Storage::antisymmetric), Error);
  EXPECT_THROW(BracketTensor::from_entries(3, 3, {{{0, 1, 2}, Vector{1, 0, 0}}, {{1, 0, 2}, Vector{1, 0, 0}}},
                                           Storage::antisymmetric),
               Error);
  // consistent permuted entries are accepted
  EXPECT_NO_THROW(BracketTensor::from_entries(3, 3, {{{0, 1, 2}, Vector{1, 0, 0}}, {{1, 0, 2}, Vector{-1, 0, 0}}},
                                              Storage::antisymmetric));
  EXPECT_THROW(BracketTensor::from_entries(3, 3, {{{0, 1, 3}, Vector{1, 0, 0}}}), Error);
  EXPECT_THROW(BracketTensor::from_entries(3, 3, {{{0, 1, 2}, Vector{1, 0}}}), Error);
}

TEST(BracketTensor, StorageConversion) {
  oracle::Gen g(11);
  const auto skew = oracle::random_skew(g, 4, 3);
  const auto general = BracketTensor::from_dense(skew.dense());
  EXPECT_EQ(general.storage(), Storage::general);
  EXPECT_EQ(general.with_storage(Storage::antisymmetric), skew);
  const auto rough = oracle::random_general(g, 3, 3, 0);
  EXPECT_THROW(rough.with_storage(Storage::antisymmetric), Error);
}

TEST(BracketTensor, EvalMatchesExplicitExpansion) {
  oracle::Gen g(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = trial % 2 ? oracle::random_skew(g, 4, 3) : oracle::random_general(g, 3, 3);
    const oracle::Table table(b);
    for (int k = 0; k < 10; ++k) {
      std::vector<Vector> args;
      for (std::size_t s = 0; s < b.arity(); ++s) args.push_back(g.vector(b.dim()));
      EXPECT_EQ(b.eval(args), table.eval(args));
    }
  }
}

TEST(BracketTensor, EvalIsMultilinear) {
  oracle::Gen g(13);
  const auto b = oracle::random_general(g, 3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> args{g.vector(3), g.vector(3), g.vector(3)};
    const std::size_t slot = g.index(3);
    const Vector u = args[slot], v = g.vector(3);
    const Scalar c = g.rational();
    args[slot] = u + c * v;
    const Vector combined = b.eval(args);
    args[slot] = u;
    Vector expected = b.eval(args);
    args[slot] = v;
    expected += c * b.eval(args);
    EXPECT_EQ(combined, expected);
  }
}

TEST(BracketTensor, SkewEvalAlternates) {
  oracle::Gen g(14);
  const auto b = oracle::random_skew(g, 4, 3, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = g.vector(4), y = g.vector(4), z = g.vector(4);
    const Vector xyz[] = {x, y, z}, yxz[] = {y, x, z}, zyx[] = {z, y, x}, xxz[] = {x, x, z};
    EXPECT_EQ(b.eval(yxz), -b.eval(xyz));
    EXPECT_EQ(b.eval(zyx), -b.eval(xyz));
    EXPECT_TRUE(b.eval(xxz).is_zero());
  }
}

TEST(DenseTensor, PrecomposeAppliesMapsToSlots) {
  oracle::Gen g(15);
  const auto b = oracle::random_general(g, 3, 3);
  const Matrix m0 = g.matrix(3, 3), m2 = g.matrix(3, 3);
  const Matrix* maps[] = {&m0, nullptr, &m2};
  const DenseTensor p = b.dense().precompose(maps);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = g.vector(3), y = g.vector(3), z = g.vector(3);
    const Vector direct[] = {x, y, z};
    const Vector mapped[] = {m0 * x, y, m2 * z};
    EXPECT_EQ(p.eval(direct), b.eval(mapped));
  }
  const Matrix post = g.matrix(3, 3);
  const Vector args[] = {g.vector(3), g.vector(3), g.vector(3)};
  EXPECT_EQ(b.postcompose(post).eval(args), post * b.eval(args));
}

TEST(EvalBracket, CorpusValues) {
  const auto ex2 = corpus::example2();
  EXPECT_EQ(eval3(ex2.algebra, e(3, 1), e(3, 2), e(3, 3)), (Vector{1, 2, 1}));
  const auto ex1 = corpus::example1();
  EXPECT_EQ(eval3(ex1.algebra, e(3, 1), e(3, 2), e(3, 2)), e(3, 1));
  const auto zero = corpus::zero_algebra(3, 3);
  oracle::Gen g(16);
  EXPECT_TRUE(eval3(zero, g.vector(3), g.vector(3), g.vector(3)).is_zero());
  const Vector bad[] = {e(3, 1), e(3, 2)};
  EXPECT_THROW(eval_bracket(ex1.algebra, bad), Error);
}

TEST(AdjointOperator, CorpusValues) {
  const auto ex2 = corpus::example2();
  const Vector x[] = {e(3, 1), e(3, 2)};
  const Matrix l = adjoint_operator(ex2.algebra, x);
  EXPECT_EQ(l.column(2), (Vector{1, 2, 1}));
  EXPECT_TRUE(l.column(0).is_zero());
  EXPECT_TRUE(l.column(1).is_zero());

  const auto s = corpus::simple_3lie4();
  const Vector x12[] = {e(4, 1), e(4, 2)};
  const Matrix l12 = adjoint_operator(s, x12);
  EXPECT_EQ(l12.column(2), e(4, 4));
  EXPECT_EQ(l12.column(3), -e(4, 3));
  EXPECT_TRUE(l12.column(0).is_zero());
  EXPECT_TRUE(l12.column(1).is_zero());
  EXPECT_EQ(basis_adjoint(s.bracket(), {0, 1}), l12);
}

TEST(AdjointOperator, AgreesWithEvalOnRandomInputs) {
  oracle::Gen g(17);
  const auto b = oracle::random_general(g, 3, 4);
  const auto a = HomNambuAlgebra::untwisted(b);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Vector> x{g.vector(3), g.vector(3), g.vector(3)};
    const Matrix l = adjoint_operator(a, x);
    const Vector y = g.vector(3);
    std::vector<Vector> args = x;
    args.push_back(y);
    EXPECT_EQ(l * y, oracle::Table(b).eval(args));
  }
}

TEST(Algebra, ShapeValidation) {
  const BracketTensor b(3, 3);
  EXPECT_THROW(HomNambuAlgebra(b, {Matrix::identity(3)}), Error);
  EXPECT_THROW(HomNambuAlgebra(b, {Matrix::identity(3), Matrix::identity(2)}), Error);
  EXPECT_THROW(HomLeibnizAlgebra(b, Matrix::identity(3)), Error);
  EXPECT_THROW(BracketTensor(0, 3), Error);
  EXPECT_THROW(BracketTensor(3, 1), Error);
  const auto a = HomNambuAlgebra::untwisted(b);
  EXPECT_TRUE(a.twists_identity());
  EXPECT_TRUE(a.twists_equal());
  EXPECT_EQ(a.flags(), Flags{});
}

TEST(BilinearForm, Example2FormIsDegenerate) {
  const auto ex2 = corpus::example2();
  const Matrix& m = ex2.form.gram();
  EXPECT_EQ(m, Matrix::from_rows({{-2, 1, 0}, {1, Scalar(-1, 2), 0}, {0, 0, 0}}));
  EXPECT_EQ(det(m), 0);
  EXPECT_EQ(oracle::det(m), 0);
  EXPECT_EQ(ex2.form.rank(), 1u);
  EXPECT_EQ(nullspace(m).size(), 2u);
  EXPECT_TRUE(ex2.form.is_symmetric());
  EXPECT_FALSE(ex2.form.nondegenerate());
}

TEST(BilinearForm, Value) {
  const BilinearForm b(Matrix::from_rows({{2, 1}, {1, 0}}));
  EXPECT_EQ(b.value(Vector{1, 1}, Vector{1, 0}), 3);
  EXPECT_TRUE(b.nondegenerate());
  EXPECT_EQ(BilinearForm::identity(4).rank(), 4u);
}
