#include <gtest/gtest.h>

#include "grasshard/poly.hpp"
#include "oracles.hpp"

using namespace grasshard;
using Eigen::MatrixXd;

namespace {

SparsePoly var(VarShape s, int i, int j = 1) { return SparsePoly::variable(s, i, j); }

RationalMatrix rat(int rows, int cols, std::initializer_list<Rational> v) {
  RationalMatrix m(rows, cols);
  auto it = v.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST(PolyEval, SumOfSquares) {
  const auto s = VarShape::vector(2);
  const SparsePoly f = var(s, 1).pow(2) + var(s, 2).pow(2);
  MatrixXd x(2, 1);
  x << 3, 4;
  EXPECT_DOUBLE_EQ(eval_float(f, x), 25.0);
  EXPECT_EQ(eval_exact(f, rat(2, 1, {3, 4})), Rational(25));
}

TEST(PolyEval, Constant) {
  const SparsePoly f = SparsePoly::constant(VarShape::vector(3), Rational(7, 2));
  EXPECT_DOUBLE_EQ(eval_float(f, MatrixXd::Random(3, 1)), 3.5);
}

TEST(PolyEval, ProductOfDiagonalEntries) {
  const auto s = VarShape::matrix(2, 2);
  const SparsePoly f = var(s, 1, 1) * var(s, 2, 2);
  EXPECT_DOUBLE_EQ(eval_float(f, MatrixXd::Identity(2, 2)), 1.0);
}

TEST(PolyEval, ExactOnOnes) {
  const auto s = VarShape::matrix(2, 2);
  const SparsePoly f = var(s, 1, 1) * var(s, 2, 2) + var(s, 1, 2) * var(s, 2, 1);
  EXPECT_EQ(eval_exact(f, rat(2, 2, {1, 1, 1, 1})), Rational(2));
}

TEST(PolyEval, ExactCube) {
  const SparsePoly f = var(VarShape::vector(1), 1).pow(3);
  EXPECT_EQ(eval_exact(f, rat(1, 1, {Rational(2, 3)})), Rational(8, 27));
}

TEST(PolyEval, ShapeMismatchThrows) {
  const SparsePoly f = var(VarShape::vector(2), 1);
  EXPECT_THROW(eval_float(f, MatrixXd::Zero(3, 1)), std::exception);
}

TEST(PolyCanonical, AddThenSubtract) {
  const auto s = VarShape::vector(3);
  const SparsePoly f = var(s, 1) * var(s, 2) + var(s, 3) * Rational(5, 7);
  SparsePoly g = f;
  const SparsePoly extra = var(s, 2).pow(4) * Rational(-3);
  g += extra;
  g -= extra;
  EXPECT_EQ(g, f);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(PolyCanonical, SymmetricFolding) {
  const auto s = VarShape::symmetric_matrix(3);
  EXPECT_EQ(var(s, 2, 1), var(s, 1, 2));
  EXPECT_EQ((var(s, 1, 3) + var(s, 3, 1)).term_count(), 1u);
}

TEST(PolyDegree, HomogeneityAndDerivative) {
  const auto s = VarShape::vector(2);
  const SparsePoly f = var(s, 1).pow(2) * var(s, 2);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(f.is_homogeneous(3));
  EXPECT_FALSE((f + var(s, 1)).is_homogeneous(3));
  EXPECT_EQ(f.derivative({1, 1}), var(s, 1) * var(s, 2) * Rational(2));
  EXPECT_EQ(SparsePoly(s).degree(), -1);
}

TEST(PolySubstitute, GramOfDiagonalEntry) {
  // p11 with k = 2 becomes y11^2 + y12^2.
  const SparsePoly f = var(VarShape::symmetric_matrix(2), 1, 1);
  const auto ys = VarShape::matrix(2, 2);
  EXPECT_EQ(substitute_gram(f, 2), var(ys, 1, 1).pow(2) + var(ys, 1, 2).pow(2));
}

TEST(PolySubstitute, GramRankOne) {
  const SparsePoly f = var(VarShape::symmetric_matrix(2), 1, 2);
  const auto ys = VarShape::matrix(2, 1);
  EXPECT_EQ(substitute_gram(f, 1), var(ys, 1, 1) * var(ys, 2, 1));
}

TEST(PolySubstitute, CornerTrace) {
  const int n = 4, k = 2;
  const auto ps = VarShape::symmetric_matrix(n);
  SparsePoly tr(ps);
  for (int i = 1; i <= n; ++i) tr += var(ps, i, i);
  const SparsePoly g = substitute_corner(tr, k);
  oracle::Sampler s(3);
  const MatrixXd q = s.stiefel(n, n);
  EXPECT_NEAR(eval_float(g, q), k, 1e-12);
  EXPECT_EQ(substitute_corner(var(VarShape::symmetric_matrix(2), 1, 1), 1),
            var(VarShape::matrix(2, 2), 1, 1).pow(2));
}

TEST(PolySubstitute, AffineIdentityAndGrassmannCase) {
  const auto ps = VarShape::symmetric_matrix(3);
  const SparsePoly f = var(ps, 1, 2) * var(ps, 3, 3) + var(ps, 2, 2) * Rational(1, 3);
  EXPECT_EQ(compose_affine_matrix(f, 1, 0), f);
  // f(sW + tI) evaluated directly.
  oracle::Sampler s(8);
  const MatrixXd w = s.spd(3);
  const Rational sc(2, 3), tc(-5, 4);
  const MatrixXd moved = sc.get_d() * w + tc.get_d() * MatrixXd::Identity(3, 3);
  EXPECT_NEAR(eval_float(compose_affine_matrix(f, sc, tc), w), eval_float(f, moved), 1e-12);
}

TEST(PolySubstitute, FirstColumn) {
  const SparsePoly f = var(VarShape::vector(3), 1).pow(3);
  EXPECT_EQ(substitute_first_column(f, 2), var(VarShape::matrix(3, 2), 1, 1).pow(3));
}

TEST(PolyCompiled, MatchesEvalAndDerivative) {
  const auto s = VarShape::matrix(3, 2);
  const SparsePoly f = var(s, 1, 1).pow(3) * var(s, 2, 2) + var(s, 3, 1) * Rational(-2, 5) + var(s, 1, 2) * var(s, 3, 2);
  const CompiledPoly c(f);
  oracle::Sampler smp(4);
  const MatrixXd x = smp.gaussian(3, 2);
  MatrixXd g(3, 2);
  EXPECT_NEAR(c.value_and_gradient(x, g), eval_float(f, x), 1e-12);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_NEAR(g(i - 1, j - 1), eval_float(f.derivative({i, j}), x), 1e-12);
}

TEST(PolyRational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(PolyInvariance, GramIsOrthogonallyInvariant) {
  const SparsePoly f = substitute_gram(var(VarShape::symmetric_matrix(3), 1, 1), 2);
  const auto r = check_invariance(f, GroupAction::RightOrthogonal, 2, 20, 1, 1e-12);
  EXPECT_TRUE(r.invariant);
  EXPECT_LT(r.max_deviation, 1e-12);
}

TEST(PolyInvariance, SingleEntryIsNot) {
  const SparsePoly f = var(VarShape::matrix(3, 2), 1, 1);
  EXPECT_FALSE(check_invariance(f, GroupAction::RightOrthogonal, 2, 20, 1, 1e-12).invariant);
}

TEST(PolyInvariance, LeadingDeterminantUnderP1) {
  // det of the leading 2x2 block of a 3x3 variable.
  const auto s = VarShape::matrix(3, 3);
  const SparsePoly det = var(s, 1, 1) * var(s, 2, 2) - var(s, 1, 2) * var(s, 2, 1);
  EXPECT_TRUE(check_invariance(det, GroupAction::RightP1, 2, 20, 5, 1e-9).invariant);
}
