#include <gtest/gtest.h>

#include <cmath>

#include "grasshard/conversions.hpp"
#include "grasshard/error.hpp"
#include "oracles.hpp"

using namespace grasshard;
namespace cv = grasshard::conversions;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Point make(Model m, int n, int k, const MatrixXd& x) { return {m, n, k, x, std::nullopt}; }

MatrixXd top_identity(int n, int k) {
  MatrixXd y = MatrixXd::Zero(n, k);
  y.topRows(k).setIdentity();
  return y;
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

MatrixXd block_orthogonal(oracle::Sampler& s, int n, int k) {
  MatrixXd b = MatrixXd::Zero(n, n);
  b.topLeftCorner(k, k) = s.stiefel(k, k);
  b.bottomRightCorner(n - k, n - k) = s.stiefel(n - k, n - k);
  return b;
}

}  // namespace

TEST(Phi1, IdentityGivesLeadingColumns) {
  const Point y = cv::phi1(make(Model::GrassmannOrthogonalQuotient, 4, 2, MatrixXd::Identity(4, 4)));
  EXPECT_EQ(y.model, Model::GrassmannStiefelQuotient);
  EXPECT_LT(max_abs(y.data - top_identity(4, 2)), 1e-15);
  const Point q = cv::phi1_inv(make(Model::GrassmannStiefelQuotient, 4, 2, top_identity(4, 2)));
  EXPECT_TRUE(cv::same_coset(q, make(Model::GrassmannOrthogonalQuotient, 4, 2, MatrixXd::Identity(4, 4))));
}

TEST(Phi2, Examples) {
  EXPECT_LT(max_abs(cv::phi2(make(Model::GrassmannStiefelQuotient, 3, 2, top_identity(3, 2))).data -
                    MatrixXd(Eigen::Vector3d(1, 1, 0).asDiagonal())),
            1e-15);
  MatrixXd y(2, 1);
  y << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  EXPECT_LT(max_abs(cv::phi2(make(Model::GrassmannStiefelQuotient, 2, 1, y)).data - MatrixXd::Constant(2, 2, 0.5)),
            1e-15);
}

TEST(Phi2, InverseAndRankMismatch) {
  MatrixXd p = MatrixXd::Zero(2, 2);
  p(0, 0) = 1;
  const Point y = cv::phi2_inv(make(Model::Projection, 2, 1, p));
  EXPECT_NEAR(std::abs(y.data(0, 0)), 1.0, 1e-15);
  EXPECT_THROW(cv::phi2_inv(make(Model::Projection, 2, 2, p)), Error);
  oracle::Sampler s(1);
  const MatrixXd q = s.stiefel(5, 2);
  const MatrixXd pr = q * q.transpose();
  EXPECT_LT(max_abs(cv::phi2(cv::phi2_inv(make(Model::Projection, 5, 2, pr))).data - pr), 1e-10);
}

TEST(Phi3, InvolutionExample) {
  MatrixXd p = MatrixXd::Zero(2, 2);
  p(0, 0) = 1;
  const Point w = cv::phi3(make(Model::Projection, 2, 1, p), 1, -1);
  EXPECT_LT(max_abs(w.data - MatrixXd(Eigen::Vector2d(1, -1).asDiagonal())), 1e-15);
  Point as_inv = w;
  as_inv.model = Model::Involution;
  as_inv.ab.reset();
  EXPECT_TRUE(is_valid(as_inv));
}

TEST(Phi3, ExactRoundTrip) {
  RationalMatrix p(2, 2);
  p(0, 0) = Rational(1, 2);
  p(0, 1) = p(1, 0) = Rational(1, 2);
  p(1, 1) = Rational(1, 2);
  const Rational a(7, 3), b(-2);
  const RationalMatrix w = cv::phi3_exact(p, a, b);
  EXPECT_EQ(w(0, 1), Rational(13, 6));
  EXPECT_EQ(cv::phi3_inv_exact(w, a, b), p);
  EXPECT_THROW(cv::phi3_exact(p, a, a), Error);
}

TEST(Phi4, Examples) {
  MatrixXd s(2, 1);
  s << 2, 0;
  const Point y = cv::phi4_inv(make(Model::GrassmannFullRankQuotient, 2, 1, s));
  EXPECT_LT(max_abs(y.data - top_identity(2, 1)), 1e-15);
  oracle::Sampler smp(2);
  const MatrixXd g = smp.gaussian(5, 3);
  const Point ys = cv::phi4_inv(make(Model::GrassmannFullRankQuotient, 5, 3, g));
  EXPECT_LT(max_abs(ys.data.transpose() * ys.data - MatrixXd::Identity(3, 3)), 1e-12);
  EXPECT_LT(max_abs(oracle::span_projector(ys.data) - oracle::span_projector(g)), 1e-10);
}

TEST(Phi5, TriangularIsIdentityCoset) {
  MatrixXd x(3, 3);
  x << 2, 1, -1, 0, 3, 4, 0, 0, 1;
  const Point q = cv::phi5_inv(make(Model::GrassmannParabolicQuotient, 3, 1, x));
  EXPECT_LT(max_abs(q.data - MatrixXd::Identity(3, 3)), 1e-14);
  oracle::Sampler s(3);
  const Point r = make(Model::GrassmannParabolicQuotient, 4, 2, s.gaussian(4, 4));
  EXPECT_TRUE(cv::same_coset(cv::phi5(cv::phi5_inv(r)), r));
}

TEST(Psi1, RoundTripAndCosetInvariance) {
  const Point id = cv::psi1_inv(make(Model::Stiefel, 4, 2, top_identity(4, 2)));
  EXPECT_TRUE(cv::same_coset(id, make(Model::StiefelOrthogonalQuotient, 4, 2, MatrixXd::Identity(4, 4))));
  oracle::Sampler s(4);
  const MatrixXd y = s.stiefel(5, 2);
  EXPECT_LT(max_abs(cv::psi1(cv::psi1_inv(make(Model::Stiefel, 5, 2, y))).data - y), 1e-10);
  const MatrixXd q = s.stiefel(5, 5);
  MatrixXd emb = MatrixXd::Identity(5, 5);
  emb.bottomRightCorner(3, 3) = s.stiefel(3, 3);
  const Point a = make(Model::StiefelOrthogonalQuotient, 5, 2, q);
  const Point b = make(Model::StiefelOrthogonalQuotient, 5, 2, q * emb);
  EXPECT_TRUE(cv::same_coset(a, b));
  EXPECT_LT(max_abs(cv::psi1(a).data - cv::psi1(b).data), 1e-12);
}

TEST(Psi2, Examples) {
  const Point l = cv::psi2_inv(make(Model::FullRank, 3, 2, top_identity(3, 2)));
  EXPECT_LT(max_abs(l.data - MatrixXd::Identity(3, 3)), 1e-15);
  MatrixXd s(2, 1);
  s << 3, 0;
  const Point ls = cv::psi2_inv(make(Model::FullRank, 2, 1, s));
  EXPECT_LT(max_abs(ls.data.leftCols(1) - s), 1e-15);
  oracle::Sampler smp(5);
  const MatrixXd g = smp.gaussian(5, 2);
  const Point back = cv::psi2(cv::psi2_inv(make(Model::FullRank, 5, 2, g)));
  EXPECT_LT(max_abs(back.data - g), 1e-10);
}

TEST(Psi2, ZeroPivotIsReported) {
  MatrixXd s(2, 1);
  s << 0, 1;
  try {
    cv::psi2_inv(make(Model::FullRank, 2, 1, s));
    FAIL() << "zero pivot accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Numerical);
  }
}

TEST(Rho, Examples) {
  EXPECT_LT(max_abs(cv::rho(make(Model::CartanQuotient, 3, 3, MatrixXd::Identity(3, 3))).data -
                    MatrixXd::Identity(3, 3)),
            1e-15);
  const Point x = cv::rho_inv(make(Model::Spd, 2, 2, MatrixXd(Eigen::Vector2d(4, 9).asDiagonal())));
  EXPECT_LT(max_abs(x.data - MatrixXd(Eigen::Vector2d(2, 3).asDiagonal())), 1e-15);
  oracle::Sampler s(6);
  const MatrixXd g = s.gaussian(3, 3);
  const Point sp = cv::rho(make(Model::CartanQuotient, 3, 3, g));
  EXPECT_GT(oracle::jacobi_eigenvalues(sp.data)(2), 0.0);
  EXPECT_TRUE(cv::same_coset(cv::rho_inv(sp), make(Model::CartanQuotient, 3, 3, g)));
  // Left action: QX is the same point.
  EXPECT_TRUE(cv::same_coset(make(Model::CartanQuotient, 3, 3, s.stiefel(3, 3) * g),
                             make(Model::CartanQuotient, 3, 3, g)));
}

TEST(SameCoset, PrintedPair) {
  const double c = 0.6, sn = 0.8;
  MatrixXd left(3, 3), right(3, 3);
  left << c, 0, -sn, 0, 1, 0, sn, 0, c;
  right << c * c * c - c * sn * sn, -2 * c * c * sn, -sn, 2 * c * sn, c * c - sn * sn, 0,
      c * c * sn - sn * sn * sn, -2 * c * sn * sn, c;
  EXPECT_TRUE(cv::same_coset(make(Model::GrassmannOrthogonalQuotient, 3, 2, left),
                             make(Model::GrassmannOrthogonalQuotient, 3, 2, right)));
}

TEST(SameCoset, BlockActionAndDistinctPoints) {
  oracle::Sampler s(7);
  for (int t = 0; t < 10; ++t) {
    const MatrixXd q = s.stiefel(5, 5);
    const Point a = make(Model::GrassmannOrthogonalQuotient, 5, 2, q);
    EXPECT_TRUE(cv::same_coset(a, make(Model::GrassmannOrthogonalQuotient, 5, 2, q * block_orthogonal(s, 5, 2))));
    EXPECT_FALSE(cv::same_coset(a, make(Model::GrassmannOrthogonalQuotient, 5, 2, s.stiefel(5, 5))));
  }
}

TEST(Convert, ProjectionToInvolution) {
  oracle::Sampler s(8);
  const MatrixXd y = s.stiefel(4, 2);
  const auto route = cv::convert(make(Model::Projection, 4, 2, y * y.transpose()), Model::Involution);
  ASSERT_EQ(route.steps.size(), 1u);
  EXPECT_EQ(route.steps[0], "phi3[a=1,b=-1]");
  EXPECT_EQ(route.result.model, Model::Involution);
  EXPECT_LT(max_abs(route.result.data - (2 * y * y.transpose() - MatrixXd::Identity(4, 4))), 1e-14);
}

TEST(Convert, StiefelQuotientToProjection) {
  oracle::Sampler s(9);
  const MatrixXd y = s.stiefel(4, 3);
  const auto route = cv::convert(make(Model::GrassmannStiefelQuotient, 4, 3, y), Model::Projection);
  EXPECT_EQ(route.steps, std::vector<std::string>{"phi2"});
  EXPECT_LT(max_abs(route.result.data - y * y.transpose()), 1e-14);
}

TEST(Convert, LongPathAndQuadraticReparameterization) {
  oracle::Sampler s(10);
  const Point q = make(Model::GrassmannOrthogonalQuotient, 4, 2, s.stiefel(4, 4));
  const auto route = cv::convert(q, Model::Quadratic, std::make_pair(Rational(3), Rational(1)));
  EXPECT_EQ(route.steps, (std::vector<std::string>{"phi1", "phi2", "phi3"}));
  const MatrixXd p = oracle::span_projector(q.data.leftCols(2));
  EXPECT_LT(max_abs(route.result.data - (2 * p + MatrixXd::Identity(4, 4))), 1e-12);
  const auto again = cv::convert(route.result, Model::Quadratic, std::make_pair(Rational(0), Rational(1)));
  EXPECT_LT(max_abs(again.result.data - (MatrixXd::Identity(4, 4) - p)), 1e-12);
}

TEST(Convert, Disconnected) {
  oracle::Sampler s(11);
  try {
    cv::convert(make(Model::Stiefel, 3, 1, s.stiefel(3, 1)), Model::Projection);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPath);
  }
  EXPECT_THROW(cv::convert(make(Model::Projection, 2, 1, MatrixXd::Identity(2, 2)), Model::Involution), Error);
}
