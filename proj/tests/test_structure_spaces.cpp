#include <gtest/gtest.h>

#include "homnambu/constructions.hpp"
#include "homnambu/corpus.hpp"
#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/structure_spaces.hpp"
#include "homnambu/verify.hpp"
#include "oracle.hpp"

using namespace homnambu;

namespace {

std::vector<HomNambuAlgebra> samples() {
  const auto s = corpus::simple_3lie4();
  const Matrix rho = corpus::sign_automorphism();
  return {corpus::zero_algebra(2, 3),
          corpus::example1().algebra,
          s,
          corpus::center_plus_simple(),
          twist_by_morphism(s, rho),
          HomNambuAlgebra::untwisted(corpus::sl2().algebra().bracket()),
          corpus::heisenberg3().as_nambu()};
}

}  // namespace

TEST(Centroid, CorpusDimensions) {
  EXPECT_EQ(compute_centroid(corpus::simple_3lie4(), 0).dimension(), 1u);
  for (std::size_t d : {1u, 2u, 3u})
    for (std::size_t n : {2u, 3u, 4u}) EXPECT_EQ(compute_centroid(corpus::zero_algebra(d, n), 0).dimension(), d * d);
}

TEST(Centroid, AgreesWithBruteForceOracle) {
  oracle::Gen g(61);
  for (const auto& a : samples()) {
    for (int k : {0, 1}) {
      const auto space = compute_centroid(a, k);
      EXPECT_EQ(space.dimension(), oracle::oracle_dimension(a.dim(), [&](const Matrix& t) {
                  return oracle::centroid_residual(a, t, k);
                }));
      for (const auto& theta : space.matrices()) EXPECT_TRUE(oracle::centroid_residual(a, theta, k).is_zero());
      if (k == 0) {
        EXPECT_TRUE(space.contains(Matrix::identity(a.dim())));
      }
      // random combinations stay inside, random matrices agree with the oracle
      Matrix combo(a.dim(), a.dim());
      for (const auto& theta : space.matrices()) combo += g.rational() * theta;
      EXPECT_TRUE(space.contains(combo));
      EXPECT_TRUE(centroid_membership(a, combo, k).member);
      const Matrix r = g.matrix(a.dim(), a.dim());
      EXPECT_EQ(space.contains(r), oracle::centroid_residual(a, r, k).is_zero());
      EXPECT_EQ(centroid_membership(a, r, k).member, oracle::centroid_residual(a, r, k).is_zero());
    }
  }
}

TEST(Centroid, MembershipReportNamesTheViolation) {
  const auto m = centroid_membership(corpus::simple_3lie4(), Matrix::diagonal({1, 2, 3, 4}), 0);
  EXPECT_FALSE(m.member);
  EXPECT_FALSE(m.violated.empty());
  EXPECT_NE(m.residual, 0);
}

TEST(Derivations, CorpusDimensions) {
  EXPECT_EQ(compute_derivations(corpus::simple_3lie4(), 0).dimension(), 6u);
  EXPECT_EQ(compute_derivations(corpus::zero_algebra(3, 3), 0).dimension(), 9u);
  const HomNambuAlgebra abelian(BracketTensor(2, 2), {Matrix::diagonal({1, 2})});
  const auto d = compute_derivations(abelian, 0);
  EXPECT_EQ(d.dimension(), 2u);
  EXPECT_TRUE(d.contains(Matrix::diagonal({1, 0})));
  EXPECT_TRUE(d.contains(Matrix::diagonal({0, 1})));
}

TEST(Derivations, AgreesWithBruteForceOracle) {
  oracle::Gen g(62);
  for (const auto& a : samples()) {
    for (int k : {-1, 0, 1, 2}) {
      const auto space = compute_derivations(a, k);
      EXPECT_EQ(space.dimension(),
                oracle::oracle_dimension(a.dim(), [&](const Matrix& t) { return oracle::derivation_residual(a, t, k); }))
          << k;
      for (const auto& dm : space.matrices()) EXPECT_TRUE(oracle::derivation_residual(a, dm, k).is_zero());
      Matrix combo(a.dim(), a.dim());
      for (const auto& dm : space.matrices()) combo += g.rational() * dm;
      EXPECT_TRUE(derivation_membership(a, combo, k).member);
      const Matrix r = g.matrix(a.dim(), a.dim(), 1);
      EXPECT_EQ(derivation_membership(a, r, k).member, oracle::derivation_residual(a, r, k).is_zero());
    }
  }
}

TEST(Derivations, LevelMinusOneKillsTheDerivedSpace) {
  // D[x..] = 0 and D alpha = alpha D
  const auto s = corpus::simple_3lie4();
  EXPECT_EQ(compute_derivations(s, -1).dimension(), 0u);
  const auto c5 = compute_derivations(corpus::center_plus_simple(), -1);
  for (const auto& dm : c5.matrices())
    for (std::size_t j = 1; j < 5; ++j) EXPECT_TRUE((dm * oracle::unit(5, j)).is_zero());
  EXPECT_EQ(c5.dimension(), 5u);
}

TEST(InnerDerivation, Examples) {
  const auto s = corpus::simple_3lie4();
  const auto e = [](std::size_t i) { return oracle::unit(4, i); };
  const Matrix ad = inner_derivation(s, {e(0), e(1)}, 0);
  Matrix expected(4, 4);
  expected(3, 2) = 1;
  expected(2, 3) = -1;
  EXPECT_EQ(ad, expected);
  EXPECT_TRUE(compute_derivations(s, 0).contains(ad));
  EXPECT_TRUE(inner_derivation(s, {Vector(4), e(2)}, 0).is_zero());
  EXPECT_TRUE(inner_derivation(corpus::zero_algebra(3, 3), {oracle::unit(3, 0), oracle::unit(3, 1)}, 1).is_zero());
}

TEST(InnerDerivation, LiesInNextLevel) {
  oracle::Gen g(63);
  const auto ex1 = corpus::example1().algebra;
  const auto ts = twist_by_morphism(corpus::simple_3lie4(), corpus::sign_automorphism());
  for (const auto* a : {&ex1, &ts}) {
    // fixed vectors of alpha: the +1 eigenspace
    std::vector<Vector> fixed = nullspace(a->twist(0) - Matrix::identity(a->dim()));
    ASSERT_FALSE(fixed.empty());
    for (int k = 0; k < 3; ++k) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Vector> x;
        for (int s = 0; s < 2; ++s) {
          Vector v(a->dim());
          for (const auto& f : fixed) v += g.rational() * f;
          x.push_back(v);
        }
        const Matrix ad = inner_derivation(*a, x, k);
        EXPECT_TRUE(oracle::derivation_residual(*a, ad, k + 1).is_zero());
        EXPECT_TRUE(compute_derivations(*a, k + 1).contains(ad));
      }
    }
  }
  EXPECT_THROW(inner_derivation(ex1, {oracle::unit(3, 2), oracle::unit(3, 0)}, 0), Error);
}

TEST(Center, Examples) {
  EXPECT_EQ(compute_center(corpus::zero_algebra(3, 3)).dimension(), 3u);
  EXPECT_EQ(compute_center(corpus::simple_3lie4()).dimension(), 0u);
  const auto c = compute_center(corpus::center_plus_simple());
  EXPECT_EQ(c.dimension(), 1u);
  EXPECT_TRUE(c.contains(oracle::unit(5, 0)));
  EXPECT_EQ(compute_center(corpus::heisenberg3().as_nambu()).dimension(), 1u);
}

TEST(CentralDerivations, Examples) {
  EXPECT_EQ(compute_central_derivations(corpus::zero_algebra(2, 3)).dimension(), 4u);
  EXPECT_EQ(compute_central_derivations(corpus::simple_3lie4()).dimension(), 0u);
  const auto c5 = compute_central_derivations(corpus::center_plus_simple());
  ASSERT_EQ(c5.dimension(), 1u);
  Matrix e11(5, 5);
  e11(0, 0) = 1;
  EXPECT_TRUE(c5.contains(e11));
  // Heisenberg: Z = span(e3), derived = span(e3); maps e1,e2 -> span(e3)
  EXPECT_EQ(compute_central_derivations(corpus::heisenberg3().as_nambu()).dimension(), 2u);
}

TEST(Commutator, Examples) {
  const auto s = corpus::simple_3lie4();
  const auto e = [](std::size_t i) { return oracle::unit(4, i); };
  const Matrix d1 = inner_derivation(s, {e(0), e(1)}, 0);
  const Matrix d2 = inner_derivation(s, {e(0), e(2)}, 0);
  const auto same = derivation_commutator(s, d1, 0, d1, 0);
  EXPECT_TRUE(same.commutator.is_zero());
  const auto r = derivation_commutator(s, d1, 0, d2, 0);
  EXPECT_EQ(r.commutator, d1 * d2 - d2 * d1);
  EXPECT_FALSE(r.commutator.is_zero());
  EXPECT_TRUE(r.membership.member);
  EXPECT_TRUE(oracle::derivation_residual(s, r.commutator, 0).is_zero());
  EXPECT_THROW(derivation_commutator(s, Matrix::diagonal({1, 2, 3, 4}), 0, d1, 0), Error);

  const HomNambuAlgebra abelian(BracketTensor(2, 2), {Matrix::diagonal({1, 2})});
  EXPECT_TRUE(derivation_commutator(abelian, Matrix::diagonal({1, 0}), 0, Matrix::diagonal({0, 1}), 0).commutator.is_zero());
}

TEST(Commutator, LevelsAdd) {
  const auto ts = twist_by_morphism(corpus::simple_3lie4(), corpus::sign_automorphism());
  for (int k : {0, 1})
    for (int kp : {0, 1}) {
      const auto dk = compute_derivations(ts, k).matrices();
      const auto dkp = compute_derivations(ts, kp).matrices();
      for (const auto& a : dk)
        for (const auto& b : dkp) {
          const auto r = derivation_commutator(ts, a, k, b, kp);
          EXPECT_TRUE(r.membership.member);
          EXPECT_TRUE(oracle::derivation_residual(ts, r.commutator, k + kp).is_zero());
        }
    }
}

TEST(Varsigma, IdentityTwistIsALieAlgebra) {
  const auto r = varsigma_hom_lie(corpus::simple_3lie4(), {0});
  EXPECT_EQ(r.space.dimension(), 6u);
  ASSERT_TRUE(r.algebra);
  EXPECT_TRUE(r.algebra->twist().is_identity());
  EXPECT_TRUE(r.hom_lie.passed);
  EXPECT_TRUE(r.skew.passed);
}

TEST(Varsigma, TwistedExamples) {
  const auto ts = twist_by_morphism(corpus::simple_3lie4(), corpus::sign_automorphism());
  const auto r = varsigma_hom_lie(ts, {0, 1});
  EXPECT_TRUE(r.hom_lie.passed);
  EXPECT_TRUE(r.skew.passed);
  const Matrix alpha = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  const auto z = varsigma_hom_lie(HomNambuAlgebra(BracketTensor(3, 3), {alpha, alpha}));
  EXPECT_TRUE(z.hom_lie.passed);
  EXPECT_TRUE(z.skew.passed);
  // derivations of the zero bracket commute with alpha
  for (const auto& m : z.space.matrices()) EXPECT_EQ(m * alpha, alpha * m);
  const auto def = varsigma_hom_lie(corpus::example1().algebra);
  EXPECT_TRUE(def.hom_lie.passed);
}

TEST(CentroidDerivation, Examples) {
  const auto s = corpus::simple_3lie4();
  const Matrix d = inner_derivation(s, {oracle::unit(4, 0), oracle::unit(4, 1)}, 0);
  const auto r = centroid_derivation_product(s, Matrix::scalar(4, 2), 0, d, 0);
  EXPECT_EQ(r.product, 2 * d);
  EXPECT_TRUE(r.product_membership.member);
  ASSERT_TRUE(r.commutator);
  EXPECT_TRUE(r.commutator->is_zero());
  EXPECT_TRUE(r.commutator_membership->member);
  const auto id = centroid_derivation_product(s, Matrix::identity(4), 0, d, 0);
  EXPECT_EQ(id.product, d);
  const auto zero = centroid_derivation_product(s, Matrix::identity(4), 0, Matrix(4, 4), 0);
  EXPECT_TRUE(zero.product.is_zero());
}

TEST(CentroidDerivation, CenterPlusSimple) {
  const auto a = corpus::center_plus_simple();
  const auto cent = compute_centroid(a, 0).matrices();
  const auto der = compute_derivations(a, 0).matrices();
  for (const auto& t : cent)
    for (const auto& d : der) {
      const auto r = centroid_derivation_product(a, t, 0, d, 0);
      EXPECT_TRUE(r.product_membership.member);
      EXPECT_TRUE(oracle::derivation_residual(a, r.product, 0).is_zero());
      if (r.commutator) {
        EXPECT_TRUE(r.commutator_membership->member);
        EXPECT_TRUE(oracle::centroid_residual(a, *r.commutator, 0).is_zero());
      }
    }
}

TEST(TensorMaps, TruncatedPolynomialTimesSimple) {
  const auto h = corpus::truncated_polynomial(3);
  const auto s = corpus::simple_3lie4();
  const Matrix t = corpus::multiplication_by_t();
  const auto r = tensor_centroid_derivation(h, s, t, Matrix::scalar(4, 2), TensorMapMode::centroid, 0);
  EXPECT_EQ(r.map, kronecker(t, Matrix::scalar(4, 2)));
  EXPECT_TRUE(r.membership.member);
  const auto prod = tensor_product(h, s);
  EXPECT_TRUE(oracle::centroid_residual(prod, r.map, 0).is_zero());

  const auto id = tensor_centroid_derivation(h, s, Matrix::identity(2), Matrix::identity(4), TensorMapMode::centroid, 0);
  EXPECT_TRUE(id.map.is_identity());
  const auto zero = tensor_centroid_derivation(h, s, t, Matrix(4, 4), TensorMapMode::derivation, 0);
  EXPECT_TRUE(zero.map.is_zero());
  EXPECT_TRUE(zero.membership.member);
  const Matrix d = inner_derivation(s, {oracle::unit(4, 0), oracle::unit(4, 1)}, 0);
  const auto der = tensor_centroid_derivation(h, s, Matrix::identity(2), d, TensorMapMode::derivation, 0);
  EXPECT_TRUE(der.membership.member);
  EXPECT_TRUE(oracle::derivation_residual(prod, der.map, 0).is_zero());
}

TEST(CentroidLaws, SlotIndependenceAndPowerLaw) {
  for (const auto& a : {corpus::simple_3lie4(), corpus::center_plus_simple()}) {
    for (const auto& theta : compute_centroid(a, 0).matrices()) {
      EXPECT_TRUE(check_slot_independence(a, theta, 0).passed);
      EXPECT_TRUE(check_centroid_power_law(a, theta, 2).passed);
    }
  }
  const auto ts = twist_by_morphism(corpus::simple_3lie4(), corpus::sign_automorphism());
  for (const auto& theta : compute_centroid(ts, 1).matrices()) EXPECT_TRUE(check_slot_independence(ts, theta, 1).passed);
  EXPECT_FALSE(check_slot_independence(corpus::simple_3lie4(), Matrix::diagonal({1, 2, 3, 4}), 0).passed);
}
