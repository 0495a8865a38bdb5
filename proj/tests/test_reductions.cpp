#include <gtest/gtest.h>

#include <cmath>

#include "grasshard/error.hpp"
#include "grasshard/reductions.hpp"
#include "oracles.hpp"

using namespace grasshard;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Graph complete(int n) { return generate(GraphFamily::Complete, {n}); }
Graph cycle(int n) { return generate(GraphFamily::Cycle, {n}); }

RationalMatrix diag_matrix(const std::vector<Rational>& d) {
  RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

// 2 * sum over edges d_i d_j (+ sum d_i^2), computed from the edge list.
double edge_form_on_diagonal(const Graph& g, const VectorXd& d, bool with_squares) {
  double v = with_squares ? d.squaredNorm() : 0.0;
  for (auto [i, j] : g.edges()) v += 2.0 * d(i - 1) * d(j - 1);
  return v;
}

SparsePoly zvar(int n, int i) { return SparsePoly::variable(VarShape::vector(n), i); }

}  // namespace

TEST(CliqueNumberForm, TheoreticalValues) {
  EXPECT_EQ(clique_number_form(complete(3), 2).theoretical_value, TheoreticalValue::rational(Rational(8, 3)));
  EXPECT_EQ(clique_number_form(cycle(5), 2).theoretical_value, TheoreticalValue::rational(2));
  EXPECT_EQ(clique_number_form(complete(2), 1).theoretical_value, TheoreticalValue::rational(Rational(1, 2)));
  EXPECT_FALSE(clique_number_form(cycle(5), 3).theoretical_value);
  const auto inst = clique_number_form(complete(3), 2);
  EXPECT_EQ(inst.provenance.anchor, "Prop 5.3");
  EXPECT_EQ(inst.context.at("omega"), "3");
  EXPECT_EQ(inst.theoretical_value->expression(), "8/3");
}

TEST(CliqueNumberForm, WitnessAttainsValueExactly) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(GraphFamily::Gnp, {6, 1, 2}, seed);
    const int w = oracle::omega(oracle::Adjacency(6, g.edges()));
    for (int k = 1; k <= w; ++k) {
      const auto inst = clique_number_form(g, k);
      ASSERT_TRUE(inst.witness);
      EXPECT_EQ(eval_exact(inst.objective, diag_matrix(*inst.witness)), Rational(k * k) * Rational(w - 1, w));
    }
  }
}

TEST(CliqueDecisionForm, MatchesEdgeFormAndOracle) {
  oracle::Sampler s(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(GraphFamily::Gnp, {5, 1, 2}, seed);
    const int w = oracle::omega(oracle::Adjacency(5, g.edges()));
    for (int k = 1; k <= 5; ++k) {
      const auto inst = clique_decision_form(g, k);
      EXPECT_EQ(inst.theoretical_value.has_value(), k <= w);
      EXPECT_EQ(inst.context.at("has_k_clique"), k <= w ? "true" : "false");
      VectorXd d(5);
      for (int i = 0; i < 5; ++i) d(i) = s.uniform();
      EXPECT_NEAR(eval_float(inst.objective, MatrixXd(d.asDiagonal())), edge_form_on_diagonal(g, d, true), 1e-12);
    }
  }
  const auto c5 = clique_decision_form(cycle(5), 3);
  EXPECT_FALSE(c5.theoretical_value);
  EXPECT_EQ(c5.context.at("gap_bound"), "323/36");
  EXPECT_EQ(c5.provenance.anchor, "Prop 4.1");
}

TEST(SimplexForm, WitnessValue) {
  const auto inst = simplex_ms_form(complete(4), 2);
  ASSERT_TRUE(inst.witness);
  RationalMatrix x(4, 1);
  for (int i = 0; i < 4; ++i) x(i, 0) = (*inst.witness)[i];
  EXPECT_EQ(eval_exact(inst.objective, x), Rational(3));
  EXPECT_EQ(inst.domain, Domain::Simplex);
}

TEST(DensityForm, Values) {
  EXPECT_EQ(density_qp_form(complete(3)).theoretical_value->radicand, Rational(2, 3));
  EXPECT_EQ(density_qp_form(generate(GraphFamily::Empty, {4})).theoretical_value->radicand, Rational(0));
  EXPECT_EQ(density_qp_form(cycle(5)).theoretical_value->radicand, Rational(1, 2));
  EXPECT_EQ(density_qp_form(cycle(5)).provenance.anchor, "Cor 5.5");
}

TEST(QuarticLift, Examples) {
  const SparsePoly g = quartic_sphere_lift(zvar(1, 1).pow(3));
  EXPECT_EQ(g, zvar(2, 1).pow(3) * zvar(2, 2));
  const SparsePoly f = zvar(3, 1) * zvar(3, 2) * zvar(3, 3);
  EXPECT_EQ(quartic_sphere_lift(f), zvar(4, 1) * zvar(4, 2) * zvar(4, 3) * zvar(4, 4));
  oracle::Sampler s(2);
  const SparsePoly cubic = zvar(3, 1).pow(3) * Rational(2) - zvar(3, 2) * zvar(3, 3).pow(2);
  const SparsePoly lifted = quartic_sphere_lift(cubic);
  for (int i = 0; i < 100; ++i) {
    const MatrixXd x = s.gaussian(4, 1);
    EXPECT_NEAR(eval_float(lifted, x), eval_float(cubic, x.topRows(3)) * x(3, 0), 1e-12);
  }
  EXPECT_THROW(quartic_sphere_lift(zvar(2, 1)), Error);
}

TEST(GrassmannH, Examples) {
  const auto ps = VarShape::symmetric_matrix(2);
  EXPECT_EQ(grassmann_h_from_quartic(zvar(2, 1).pow(4)).objective, SparsePoly::variable(ps, 1, 1).pow(2));
  EXPECT_EQ(grassmann_h_from_quartic(zvar(2, 1).pow(3) * zvar(2, 2)).objective,
            SparsePoly::variable(ps, 1, 1) * SparsePoly::variable(ps, 1, 2));
  const auto inst = grassmann_h_from_quartic(zvar(2, 1).pow(4));
  EXPECT_EQ(inst.provenance.anchor, "Cor 7.3");
  // h(z z^T) = g(z).
  oracle::Sampler s(3);
  const SparsePoly g = quartic_sphere_lift(zvar(3, 1) * zvar(3, 2) * zvar(3, 3) - zvar(3, 2).pow(3) * Rational(1, 2));
  const auto h = grassmann_h_from_quartic(g);
  for (int i = 0; i < 50; ++i) {
    const MatrixXd z = s.gaussian(4, 1);
    EXPECT_NEAR(eval_float(h.objective, z * z.transpose()), eval_float(g, z), 1e-10);
  }
  EXPECT_NEAR(lift_constant(), 3.0 * std::sqrt(3.0) / 16.0, 1e-16);
}

TEST(Nesterov, FeatureGate) {
  try {
    nesterov_cubic(complete(2), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotImplemented);
  }
}

TEST(Nesterov, Values) {
  const auto k2 = nesterov_cubic(complete(2), true);
  EXPECT_TRUE(k2.objective.is_zero());
  EXPECT_EQ(k2.theoretical_value->to_double(), 0.0);
  const auto e3 = nesterov_cubic(generate(GraphFamily::Empty, {3}), true);
  EXPECT_NEAR(std::sqrt(27.0 / 2.0) * e3.theoretical_value->to_double(), std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_TRUE(e3.objective.is_homogeneous(3));
  EXPECT_EQ(e3.domain, Domain::Sphere);
  EXPECT_EQ(e3.theoretical_value->expression(), "sqrt(4/81)");
}

TEST(Pullbacks, TraceIsConstantK) {
  const int n = 5, k = 3;
  const auto ps = VarShape::symmetric_matrix(n);
  ReductionInstance inst;
  inst.n = n;
  inst.k = k;
  inst.objective = SparsePoly(ps);
  for (int i = 1; i <= n; ++i) inst.objective += SparsePoly::variable(ps, i, i);
  const auto st = stiefel_pullback(inst);
  const auto orth = orthogonal_pullback(inst);
  oracle::Sampler s(4);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(eval_float(st.objective, s.stiefel(n, k)), k, 1e-12);
    EXPECT_NEAR(eval_float(orth.objective, s.stiefel(n, n)), k, 1e-12);
  }
}

TEST(Pullbacks, CarryTheoreticalValueAndAgree) {
  const auto inst = clique_number_form(complete(3), 2);
  const auto st = stiefel_pullback(inst);
  const auto orth = orthogonal_pullback(inst);
  EXPECT_EQ(st.theoretical_value, inst.theoretical_value);
  EXPECT_EQ(orth.theoretical_value, inst.theoretical_value);
  EXPECT_EQ(st.domain, Domain::Stiefel);
  oracle::Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    const MatrixXd y = s.stiefel(3, 2);
    EXPECT_NEAR(eval_float(st.objective, y), eval_float(inst.objective, y * y.transpose()), 1e-12);
    const MatrixXd q = s.stiefel(3, 3);
    EXPECT_NEAR(eval_float(orth.objective, q), eval_float(inst.objective, q.leftCols(2) * q.leftCols(2).transpose()),
                1e-12);
  }
  EXPECT_THROW(stiefel_pullback(simplex_ms_form(complete(3), 2)), Error);
}

TEST(Pullbacks, FirstColumn) {
  ReductionInstance sphere;
  sphere.domain = Domain::Sphere;
  sphere.n = 3;
  sphere.objective = zvar(3, 1).pow(3);
  const auto st = first_column_pullback(sphere, 2, Domain::Stiefel);
  EXPECT_EQ(st.objective, SparsePoly::variable(VarShape::matrix(3, 2), 1, 1).pow(3));
  const auto orth = first_column_pullback(sphere, 3, Domain::Orthogonal);
  EXPECT_EQ(orth.objective.shape(), VarShape::matrix(3, 3));
}

TEST(QuadraticTransfer, AgreesOnImage) {
  const auto inst = clique_number_form(cycle(5), 2);
  const Rational a(3), b(-1, 2);
  const auto q = quadratic_model_transfer(inst, a, b);
  EXPECT_EQ(q.domain, Domain::Quadratic);
  oracle::Sampler s(6);
  for (int i = 0; i < 20; ++i) {
    const MatrixXd y = s.stiefel(5, 2);
    const MatrixXd p = y * y.transpose();
    const MatrixXd w = Rational(a - b).get_d() * p + b.get_d() * MatrixXd::Identity(5, 5);
    EXPECT_NEAR(eval_float(q.objective, w), eval_float(inst.objective, p), 1e-10);
  }
}

TEST(Copositivity, MinusIdentity) {
  RationalMatrix a = RationalMatrix::identity(3);
  for (int i = 0; i < 3; ++i) a(i, i) = -1;
  const auto inst = copositivity_form(a);
  EXPECT_EQ(inst.sense, Sense::Minimize);
  EXPECT_DOUBLE_EQ(eval_float(inst.objective, MatrixXd::Identity(3, 3)), -3.0);
  EXPECT_EQ(inst.provenance.anchor, "Lemma 8.1");
}

TEST(Copositivity, FoldsAsymmetricEntries) {
  RationalMatrix a(2, 2);
  a(0, 1) = 3;
  a(1, 0) = -1;
  const auto inst = copositivity_form(a);
  MatrixXd x(2, 2);
  x << 2, 0.3, 0.3, 5;
  EXPECT_NEAR(eval_float(inst.objective, x), 2.0 * 5.0 * 2.0, 1e-12);
}

TEST(LinearForms, CoefficientsRoundTrip) {
  RationalMatrix a(3, 2);
  int v = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = Rational(v++, 3);
  EXPECT_LT((linear_coefficients(lp_stiefel_form(a).objective) - a.to_double()).cwiseAbs().maxCoeff(), 1e-15);
  RationalMatrix sq(2, 2);
  sq(0, 1) = 2;
  const MatrixXd sym = linear_coefficients(lp_grassmann_form(sq, 1).objective);
  EXPECT_DOUBLE_EQ(sym(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(sym(1, 0), 1.0);
  EXPECT_EQ(lp_spd_form(sq).provenance.anchor, "Lemma 9.1");
}

TEST(CheckInstance, RejectsShapeMismatch) {
  auto inst = clique_number_form(complete(3), 2);
  inst.n = 4;
  EXPECT_THROW(check_instance(inst), Error);
  inst = clique_number_form(complete(3), 2);
  inst.k = 0;
  EXPECT_THROW(check_instance(inst), Error);
  EXPECT_THROW(clique_number_form(complete(3), 4), Error);
}

TEST(Enums, RoundTrip) {
  for (Domain d : {Domain::Grassmann, Domain::Quadratic, Domain::Simplex, Domain::Density, Domain::Stiefel,
                   Domain::Orthogonal, Domain::Sphere, Domain::Spd})
    EXPECT_EQ(parse_domain(to_string(d)), d);
  EXPECT_EQ(parse_sense("minimize"), Sense::Minimize);
}
