#include <gtest/gtest.h>

#include <cmath>

#include "grasshard/error.hpp"
#include "grasshard/solvers.hpp"
#include "oracles.hpp"

using namespace grasshard;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Graph complete(int n) { return generate(GraphFamily::Complete, {n}); }

RationalMatrix int_matrix(int n, std::initializer_list<int> v) {
  RationalMatrix m(n, n);
  auto it = v.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

ReductionInstance sphere_instance(const SparsePoly& f, int n) {
  ReductionInstance inst;
  inst.domain = Domain::Sphere;
  inst.n = n;
  inst.objective = f;
  return inst;
}

}  // namespace

TEST(LpStiefel, Examples) {
  MatrixXd a = MatrixXd::Zero(4, 2);
  a.topRows(2).setIdentity();
  const auto r = lp_stiefel(a);
  EXPECT_NEAR(r.value, 2.0, 1e-14);
  EXPECT_LT((r.point - a).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(lp_stiefel(MatrixXd::Zero(3, 2)).value, 0.0, 1e-15);
}

TEST(LpStiefel, ValueIsNuclearNorm) {
  oracle::Sampler s(1);
  const MatrixXd a = s.gaussian(6, 3);
  // Nuclear norm from the eigenvalues of A^T A.
  const VectorXd ev = oracle::jacobi_eigenvalues(a.transpose() * a);
  EXPECT_NEAR(lp_stiefel(a).value, ev.cwiseMax(0.0).cwiseSqrt().sum(), 1e-10);
}

TEST(LpGrassmann, Examples) {
  const auto r = lp_grassmann(MatrixXd(Eigen::Vector3d(3, 2, 1).asDiagonal()), 2);
  EXPECT_NEAR(r.value, 5.0, 1e-14);
  EXPECT_LT((r.point - MatrixXd(Eigen::Vector3d(1, 1, 0).asDiagonal())).cwiseAbs().maxCoeff(), 1e-14);
  MatrixXd skew(2, 2);
  skew << 0, 1, -1, 0;
  EXPECT_NEAR(lp_grassmann(skew, 1).value, 0.0, 1e-15);
}

TEST(LpSpd, Examples) {
  EXPECT_FALSE(lp_spd_sup(-MatrixXd::Identity(3, 3)).infinite);
  EXPECT_TRUE(lp_spd_sup(MatrixXd::Identity(3, 3)).infinite);
  MatrixXd skew(2, 2);
  skew << 0, 2, -2, 0;
  EXPECT_FALSE(lp_spd_sup(skew).infinite);
}

TEST(QpSphere, Examples) {
  const auto r = qp_sphere_homogeneous(MatrixXd(Eigen::Vector2d(2, 1).asDiagonal()));
  EXPECT_NEAR(r.value, 2.0, 1e-15);
  EXPECT_NEAR(r.point(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(qp_sphere_homogeneous(MatrixXd::Identity(3, 3)).value, 1.0, 1e-15);
  oracle::Sampler s(2);
  const MatrixXd g = s.gaussian(4, 4);
  const MatrixXd a = g + g.transpose();
  const double v = qp_sphere_homogeneous(a).value;
  for (int i = 0; i < 1000; ++i) {
    const VectorXd x = s.stiefel(4, 1);
    EXPECT_LE(x.dot(a * x), v + 1e-12);
  }
  EXPECT_THROW(qp_sphere_homogeneous(g), Error);
}

TEST(ExactMs, Values) {
  EXPECT_EQ(exact_ms_value(complete(4), 2), Rational(3));
  EXPECT_EQ(exact_ms_value(complete(2), 1), Rational(1, 2));
  EXPECT_EQ(exact_ms_value(generate(GraphFamily::Cycle, {5}), 2), Rational(2));
  try {
    exact_ms_value(generate(GraphFamily::Cycle, {5}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("omega < k"), std::string::npos);
  }
}

TEST(Multistart, TriangleReachesEightThirds) {
  const auto rep = multistart_rgd(clique_number_form(complete(3), 2), RgdConfig{});
  EXPECT_NEAR(rep.best_value, 8.0 / 3.0, 1e-6);
  ASSERT_TRUE(rep.gap);
  EXPECT_LE(std::abs(*rep.gap), 1e-6);
  EXPECT_EQ(rep.per_start.size(), 20u);
  ASSERT_TRUE(rep.best_projection);
  const MatrixXd& p = *rep.best_projection;
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(p.trace(), 2.0, 1e-10);
}

TEST(Multistart, DeterministicPerSeedAndStartSeeds) {
  RgdConfig cfg;
  cfg.starts = 5;
  cfg.iters = 50;
  cfg.seed = 9;
  const auto inst = clique_decision_form(generate(GraphFamily::Cycle, {5}), 3);
  const auto a = multistart_rgd(inst, cfg), b = multistart_rgd(inst, cfg);
  EXPECT_EQ(a.best_point, b.best_point);
  for (int s = 0; s < 5; ++s) {
    EXPECT_EQ(a.per_start[s].seed, 9u ^ static_cast<std::uint64_t>(s));
    EXPECT_EQ(a.per_start[s].final_value, b.per_start[s].final_value);
  }
}

TEST(Multistart, MonotoneAscent) {
  RgdConfig cfg;
  cfg.starts = 3;
  cfg.record_trace = true;
  const auto rep = multistart_rgd(clique_number_form(generate(GraphFamily::Gnp, {6}, 3), 1), cfg);
  for (const auto& s : rep.per_start)
    for (std::size_t i = 1; i < s.trace.size(); ++i) EXPECT_GE(s.trace[i], s.trace[i - 1] - 1e-12);
}

TEST(Multistart, ConstantObjectiveStopsAtStart) {
  const int n = 4, k = 2;
  const auto ps = VarShape::symmetric_matrix(n);
  ReductionInstance inst;
  inst.n = n;
  inst.k = k;
  inst.objective = SparsePoly(ps);
  for (int i = 1; i <= n; ++i) inst.objective += SparsePoly::variable(ps, i, i);
  const auto rep = multistart_rgd(inst, RgdConfig{});
  EXPECT_NEAR(rep.best_value, k, 1e-12);
  for (const auto& s : rep.per_start) {
    EXPECT_EQ(s.iterations, 0);
    EXPECT_LT(s.grad_norm, 1e-9);
  }
}

TEST(Multistart, SphereSquare) {
  const SparsePoly f = SparsePoly::variable(VarShape::vector(3), 1).pow(2);
  const auto rep = multistart_rgd(sphere_instance(f, 3), RgdConfig{});
  EXPECT_NEAR(rep.best_value, 1.0, 1e-9);
  EXPECT_NEAR(std::abs(rep.best_point(0, 0)), 1.0, 1e-6);
}

TEST(Multistart, SpdDomainIsUnsupported) {
  RationalMatrix a = RationalMatrix::identity(2);
  a(0, 0) = -1;
  a(1, 1) = -1;
  EXPECT_THROW(multistart_rgd(copositivity_form(a), RgdConfig{}), Error);
}

TEST(Multistart, FirstColumnAgreesWithSphere) {
  oracle::Sampler s(3);
  const auto vs = VarShape::vector(4);
  SparsePoly f(vs);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int l = j; l <= 4; ++l)
        f.add_term(Monomial({{{i, 1}, 1}}) * Monomial({{{j, 1}, 1}}) * Monomial({{{l, 1}, 1}}),
                   Rational(s.integer(-3, 3)));
  const auto sphere = sphere_instance(f, 4);
  const auto st = first_column_pullback(sphere, 2, Domain::Stiefel);
  const double a = multistart_rgd(sphere, RgdConfig{}).best_value;
  const double b = multistart_rgd(st, RgdConfig{}).best_value;
  EXPECT_NEAR(a, b, 1e-3);
}

TEST(ClosedForm, ThroughInstances) {
  const auto r = solve_closed_form(lp_grassmann_form(int_matrix(3, {3, 0, 0, 0, 2, 0, 0, 0, 1}), 2));
  EXPECT_NEAR(r.best_value, 5.0, 1e-14);
  EXPECT_EQ(r.method, "closed-form");
  EXPECT_TRUE(solve_closed_form(lp_spd_form(RationalMatrix::identity(2))).infinite);
  const auto neg = solve_closed_form(lp_spd_form(int_matrix(2, {-1, 0, 0, -1})));
  EXPECT_FALSE(neg.infinite);
  EXPECT_EQ(neg.best_value, 0.0);
  EXPECT_THROW(solve_closed_form(clique_number_form(complete(3), 2)), Error);
}

TEST(CopositiveBrute, Identity) {
  const auto v = copositive_brute(RationalMatrix::identity(4), 8);
  EXPECT_FALSE(v.negative_found);
  EXPECT_EQ(v.min_value, Rational(1, 4));
  EXPECT_EQ(v.points, 165u);  // C(8 + 3, 3)
}

TEST(CopositiveBrute, OffDiagonalCounterexample) {
  const auto v = copositive_brute(int_matrix(2, {0, -1, -1, 0}), 10);
  EXPECT_TRUE(v.negative_found);
  EXPECT_EQ(v.min_value, Rational(-1, 2));
  EXPECT_EQ(v.argmin, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(CopositiveBrute, HornGridClean) {
  const auto horn = int_matrix(5, {1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, -1, 1,
                                   1, 1, -1, 1, -1, -1, 1, 1, -1, 1});
  const auto v = copositive_brute(horn, 20);
  EXPECT_FALSE(v.negative_found);
  EXPECT_EQ(v.min_value, Rational(0));
}

TEST(CopositiveBrute, Limits) {
  EXPECT_THROW(copositive_brute(RationalMatrix::identity(9), 4), Error);
  EXPECT_THROW(copositive_brute(RationalMatrix::identity(2), 41), Error);
  EXPECT_THROW(copositive_brute(int_matrix(2, {0, 1, 0, 0}), 4), Error);
}
