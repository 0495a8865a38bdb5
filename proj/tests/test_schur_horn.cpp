#include <gtest/gtest.h>

#include "grasshard/error.hpp"
#include "grasshard/schur_horn.hpp"
#include "oracles.hpp"

using namespace grasshard;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> v) {
  VectorXd d(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) d(i++) = x;
  return d;
}

void expect_projection_with_diagonal(const Point& p, const VectorXd& d, int k) {
  const int n = static_cast<int>(d.size());
  EXPECT_EQ(p.model, Model::Projection);
  EXPECT_LT((p.data.diagonal() - d).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((p.data * p.data - p.data).cwiseAbs().maxCoeff(), 1e-12);
  VectorXd spec = VectorXd::Zero(n);
  spec.head(k).setOnes();
  EXPECT_LT((oracle::jacobi_eigenvalues(p.data) - spec).cwiseAbs().maxCoeff(), 1e-10);
}

}  // namespace

TEST(SchurHorn, AlreadyAProjection) {
  const VectorXd d = vec({1, 1, 0, 0});
  const Point p = lift_diagonal(d, 2);
  EXPECT_LT((p.data - MatrixXd(d.asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SchurHorn, HalfHalf) {
  const Point p = lift_diagonal(vec({0.5, 0.5}), 1);
  EXPECT_NEAR(std::abs(p.data(0, 1)), 0.5, 1e-15);
  expect_projection_with_diagonal(p, vec({0.5, 0.5}), 1);
}

TEST(SchurHorn, TwoThirds) {
  const VectorXd d = VectorXd::Constant(3, 2.0 / 3.0);
  expect_projection_with_diagonal(lift_diagonal(d, 2), d, 2);
}

TEST(SchurHorn, UnsortedTargets) {
  const VectorXd d = vec({0.1, 0.9, 0.35, 0.65, 0.0, 1.0});
  expect_projection_with_diagonal(lift_diagonal(d, 3), d, 3);
}

TEST(SchurHorn, RejectsOutsideHypersimplex) {
  const auto v = validate_simplex(vec({1.2, -0.2}), 1);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().name, "bounds");
  EXPECT_EQ(validate_simplex(vec({0.5, 0.4}), 1).front().name, "sum");
  EXPECT_EQ(validate_simplex(vec({0.5, NAN}), 1).front().name, "finite");
  EXPECT_EQ(validate_simplex(vec({0.5}), 2).front().name, "dims");
  EXPECT_THROW(lift_diagonal(vec({0.7, 0.7}), 1), Error);
}

TEST(DiagOf, Examples) {
  Point p{Model::Projection, 2, 1, MatrixXd::Zero(2, 2), std::nullopt};
  p.data(0, 0) = 1;
  EXPECT_EQ(diag_of(p), vec({1, 0}));
  oracle::Sampler s(3);
  const MatrixXd y = s.stiefel(5, 2);
  const VectorXd d = diag_of({Model::Projection, 5, 2, y * y.transpose(), std::nullopt});
  EXPECT_TRUE(validate_simplex(d, 2, 1e-10).empty());
  expect_projection_with_diagonal(lift_diagonal(d, 2), d, 2);
}
