#include "grasshard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "grasshard/conversions.hpp"
#include "grasshard/error.hpp"
#include "grasshard/linalg.hpp"
#include "grasshard/manifolds.hpp"
#include "grasshard/reductions.hpp"
#include "grasshard/schur_horn.hpp"
#include "grasshard/serialize.hpp"
#include "grasshard/solvers.hpp"

namespace grasshard::verify {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int Result::cases() const {
  int c = 0;
  for (const auto& ch : checks) c += ch.cases;
  return c;
}

int Result::failure_count() const {
  int f = 0;
  for (const auto& ch : checks) f += ch.failures;
  return f;
}

namespace {

constexpr std::size_t kMaxFailureNotes = 20;

// Accumulates residual checks; a check fails when residual > tolerance or the
// residual is not finite.
class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void residual(const std::string& name, double value, double tol, const std::string& label) {
    Check& c = check(name, tol);
    ++c.cases;
    if (std::isfinite(value)) c.max_residual = std::max(c.max_residual, value);
    if (!(value <= tol)) fail(c, label + ": residual " + fmt(value) + " > " + fmt(tol));
  }

  void truth(const std::string& name, bool ok, const std::string& label) {
    Check& c = check(name, 0.0);
    ++c.cases;
    if (!ok) fail(c, label);
  }

  Result finish() {
    result_.passed = result_.failure_count() == 0;
    return std::move(result_);
  }

 private:
  Check& check(const std::string& name, double tol) {
    for (auto& c : result_.checks)
      if (c.name == name) return c;
    result_.checks.push_back({name, 0, 0, 0.0, tol});
    return result_.checks.back();
  }

  void fail(Check& c, const std::string& what) {
    ++c.failures;
    if (result_.failures.size() < kMaxFailureNotes) result_.failures.push_back(c.name + ": " + what);
  }

  static std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
  }

  Result result_;
};

std::string graph_label(const Graph& g) {
  std::string s = "G(n=" + std::to_string(g.n()) + ",m=" + std::to_string(g.edge_count()) + ")";
  return s;
}

// Uniform-ish point of the hypersimplex: shift and clip a uniform sample so
// that the sum is exactly k (to rounding), then repair the last ulp.
VectorXd random_simplex_point(Rng& rng, int n, int k) {
  VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.uniform();
  auto clipped = [&](double t) { return (x.array() + t).max(0.0).min(1.0).matrix().eval(); };
  double lo = -1.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (clipped(mid).sum() < k ? lo : hi) = mid;
  }
  VectorXd d = clipped(0.5 * (lo + hi));
  for (int i = 0; i < n; ++i) {
    const double fix = k - d.sum();
    if (d(i) + fix >= 0.0 && d(i) + fix <= 1.0) {
      d(i) += fix;
      break;
    }
  }
  return d;
}

VectorXd to_vector(const std::vector<Rational>& w) {
  VectorXd v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v(i) = w[i].get_d();
  return v;
}

MatrixXd random_spd(Rng& rng, int n) {
  const MatrixXd g = rng.gaussian(n, n);
  return g * g.transpose() + 0.1 * MatrixXd::Identity(n, n);
}

RationalMatrix random_int_matrix(Rng& rng, int rows, int cols, int bound) {
  RationalMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a(i, j) = static_cast<long>(rng.below(2 * bound + 1)) - bound;
  return a;
}

// ---------------------------------------------------------------------------

Result roundtrips(const Options& opts) {
  Recorder rec("roundtrips");
  using conversions::coset_distance;
  struct Map {
    std::string name;
    Model src;
    Model dst;
    std::function<Point(const Point&)> f;
    std::function<Point(const Point&)> finv;
    std::optional<std::pair<Rational, Rational>> ab;
  };
  namespace cv = conversions;
  const std::pair<Rational, Rational> ab{Rational(3), Rational(-1, 2)};
  const std::vector<Map> maps{
      {"phi1", Model::GrassmannOrthogonalQuotient, Model::GrassmannStiefelQuotient, cv::phi1,
       cv::phi1_inv, {}},
      {"phi2", Model::GrassmannStiefelQuotient, Model::Projection, cv::phi2, cv::phi2_inv, {}},
      {"phi3", Model::Projection, Model::Quadratic,
       [&](const Point& p) { return cv::phi3(p, ab.first, ab.second); }, cv::phi3_inv, ab},
      {"phi3[1,-1]", Model::Projection, Model::Quadratic,
       [](const Point& p) { return cv::phi3(p, 1, -1); }, cv::phi3_inv,
       std::make_pair(Rational(1), Rational(-1))},
      {"phi4", Model::GrassmannStiefelQuotient, Model::GrassmannFullRankQuotient, cv::phi4,
       cv::phi4_inv, {}},
      {"phi5", Model::GrassmannOrthogonalQuotient, Model::GrassmannParabolicQuotient, cv::phi5,
       cv::phi5_inv, {}},
      {"psi1", Model::StiefelOrthogonalQuotient, Model::Stiefel, cv::psi1, cv::psi1_inv, {}},
      {"psi2", Model::StiefelParabolicQuotient, Model::FullRank, cv::psi2, cv::psi2_inv, {}},
      {"rho", Model::CartanQuotient, Model::Spd, cv::rho, cv::rho_inv, {}},
  };
  constexpr double tol = 1e-8;
  Rng seeds(opts.seed);
  for (const auto& m : maps) {
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + i % 4;
      const int k = 1 + (i / 4) % n;
      const std::string label = m.name + " n=" + std::to_string(n) + " k=" + std::to_string(k);
      try {
        const Point x = random_point(m.src, n, k, seeds.next_u64(), m.ab);
        const Point y = m.f(x);
        rec.truth(m.name + " image valid", is_valid(y, {1e-9, 1e-8}), label);
        rec.residual(m.name + " inverse o map", coset_distance(x, m.finv(y)), tol, label);
        const Point y2 = random_point(m.dst, n, k, seeds.next_u64(), m.ab);
        const Point x2 = m.finv(y2);
        rec.truth(m.name + " preimage valid", is_valid(x2, {1e-9, 1e-8}), label);
        rec.residual(m.name + " map o inverse", coset_distance(y2, m.f(x2)), tol, label);
      } catch (const Error& e) {
        rec.truth(m.name + " no exception", false, label + ": " + e.what());
      }
    }
  }
  // Two representatives of one O(2) x O(1) coset in O(3).
  const auto [left, right] = cs_pair(0.6, 0.8);
  const Point a{Model::GrassmannOrthogonalQuotient, 3, 2, left, std::nullopt};
  const Point b{Model::GrassmannOrthogonalQuotient, 3, 2, right, std::nullopt};
  rec.truth("cs pair orthogonal", is_valid(a) && is_valid(b), "(c,s)=(0.6,0.8)");
  rec.residual("cs pair same coset", coset_distance(a, b), tol, "(c,s)=(0.6,0.8)");
  rec.residual("cs pair phi2 o phi1", coset_distance(cv::phi2(cv::phi1(a)), cv::phi2(cv::phi1(b))),
               tol, "(c,s)=(0.6,0.8)");
  return rec.finish();
}

Result motzkin_straus(const Options& opts) {
  Recorder rec("motzkin-straus");
  RgdConfig cfg;
  cfg.starts = opts.starts;
  cfg.iters = opts.iters;
  cfg.seed = opts.seed;
  for (const Graph& g : standard_graphs(opts.nmax)) {
    const int omega = clique_number(g);
    for (int k = 1; k <= omega; ++k) {
      const std::string label = graph_label(g) + " k=" + std::to_string(k);
      const auto inst = clique_number_form(g, k);
      const double target = inst.theoretical_value->to_double();
      const Point p = lift_diagonal(to_vector(*inst.witness), k);
      rec.residual("lifted witness value", std::abs(eval_float(inst.objective, p.data) - target),
                   1e-9, label);
      const auto simplex = simplex_ms_form(g, k);
      rec.residual("simplex witness value",
                   std::abs(eval_float(simplex.objective, to_vector(*simplex.witness)) - target),
                   1e-9, label);
      const auto report = multistart_rgd(inst, cfg);
      rec.residual("multistart below optimum", std::max(0.0, report.best_value - target), 1e-6,
                   label);
      if (g.n() <= 5) rec.residual("multistart reaches optimum", std::max(0.0, *report.gap), 1e-4, label);
    }
  }
  return rec.finish();
}

Result clique_decision(const Options& opts) {
  Recorder rec("clique-decision");
  RgdConfig cfg;
  cfg.starts = opts.starts;
  cfg.iters = opts.iters;
  cfg.seed = opts.seed;
  for (const Graph& g : standard_graphs(opts.nmax)) {
    const int n = g.n();
    for (int k = 1; k <= n; ++k) {
      const std::string label = graph_label(g) + " k=" + std::to_string(k);
      const auto inst = clique_decision_form(g, k);
      if (inst.theoretical_value) {
        RationalMatrix d(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = (*inst.witness)[i];
        rec.truth("exact value k^2 at clique indicator",
                  eval_exact(inst.objective, d) == Rational(k * k), label);
      } else {
        const auto report = multistart_rgd(inst, cfg);
        const double bound = k * k - 1.0 / ((n + 1.0) * (n + 1.0));
        rec.residual("gap without clique", std::max(0.0, report.best_value - bound), 1e-6, label);
      }
    }
  }
  return rec.finish();
}

Result density(const Options& opts) {
  Recorder rec("density");
  for (const Graph& g : standard_graphs(opts.nmax)) {
    const auto inst = density_qp_form(g);
    const Point p = lift_diagonal(to_vector(*inst.witness), 1);
    const double target = inst.theoretical_value->to_double();
    rec.residual("lifted witness value", std::abs(eval_float(inst.objective, p.data) - target),
                 1e-9, graph_label(g));
    const double tr = p.data.trace();
    const double lmin = linalg::sym_eig(p.data).values(g.n() - 1);
    rec.residual("witness is a density matrix", std::max(std::abs(tr - 1.0), -lmin), 1e-10,
                 graph_label(g));
  }
  return rec.finish();
}

Result schur_horn(const Options& opts) {
  Recorder rec("schur-horn");
  Rng rng(opts.seed);
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      for (int t = 0; t < 200; ++t) {
        const std::string label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        const VectorXd d = random_simplex_point(rng, n, k);
        const Point p = lift_diagonal(d, k);
        rec.residual("diagonal", (p.data.diagonal() - d).cwiseAbs().maxCoeff(), 1e-10, label);
        VectorXd expect = VectorXd::Zero(n);
        expect.head(k).setOnes();
        rec.residual("spectrum", (linalg::sym_eig(p.data).values - expect).cwiseAbs().maxCoeff(),
                     1e-9, label);
      }
  return rec.finish();
}

Result lp_closed_form(const Options& opts) {
  Recorder rec("lp-closed-form");
  Rng rng(opts.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const int k = 1 + static_cast<int>(rng.below(n));
    const std::string label = "n=" + std::to_string(n) + " k=" + std::to_string(k);

    const MatrixXd a = rng.gaussian(n, k);
    const auto st = lp_stiefel(a);
    const double scale = 1.0 + a.norm();
    rec.residual("stiefel feasible", linalg::max_abs(st.point.transpose() * st.point -
                                                     MatrixXd::Identity(k, k)),
                 1e-10, label);
    rec.residual("stiefel attains", std::abs((a.transpose() * st.point).trace() - st.value),
                 1e-9 * scale, label);
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const MatrixXd x = linalg::qr_condensed(rng.gaussian(n, k)).q;
      worst = std::max(worst, (a.transpose() * x).trace() - st.value);
    }
    rec.residual("stiefel dominates samples", std::max(0.0, worst), 1e-9, label);

    const MatrixXd b = rng.gaussian(n, n);
    const auto gr = lp_grassmann(b, k);
    rec.residual("grassmann feasible",
                 std::max({linalg::max_abs(gr.point * gr.point - gr.point),
                           linalg::max_abs(gr.point - gr.point.transpose()),
                           std::abs(gr.point.trace() - k)}),
                 1e-10, label);
    rec.residual("grassmann attains", std::abs((b.transpose() * gr.point).trace() - gr.value),
                 1e-9 * (1.0 + b.norm()), label);
    worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const MatrixXd y = linalg::qr_condensed(rng.gaussian(n, k)).q;
      worst = std::max(worst, (b.transpose() * (y * y.transpose())).trace() - gr.value);
    }
    rec.residual("grassmann dominates samples", std::max(0.0, worst), 1e-9, label);
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const MatrixXd g = rng.gaussian(n, n);
    const MatrixXd skew = rng.gaussian(n, n);
    // Negative semidefinite symmetrization, or one with a positive eigenvalue.
    MatrixXd a = -g * g.transpose() + (skew - skew.transpose());
    const bool positive = trial % 2 == 1;
    if (positive) a += (std::abs(linalg::sym_eig(a + a.transpose()).values(0)) + 1.0) *
                       MatrixXd::Identity(n, n);
    rec.truth(positive ? "spd sup is +inf" : "spd sup is 0", lp_spd_sup(a).infinite == positive,
              "n=" + std::to_string(n));
  }
  return rec.finish();
}

Result copositivity(const Options& opts) {
  Recorder rec("copositivity");
  Rng rng(opts.seed);
  RationalMatrix horn(5, 5);
  const int h[5][5] = {{1, -1, 1, 1, -1},
                       {-1, 1, -1, 1, 1},
                       {1, -1, 1, -1, 1},
                       {1, 1, -1, 1, -1},
                       {-1, 1, 1, -1, 1}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) horn(i, j) = h[i][j];
  std::vector<std::pair<std::string, RationalMatrix>> mats{{"identity", RationalMatrix::identity(4)},
                                                           {"horn", horn}};
  RationalMatrix neg = RationalMatrix::identity(4);
  for (int i = 0; i < 4; ++i) neg(i, i) = -1;
  mats.emplace_back("minus identity", neg);
  for (int t = 0; t < 3; ++t) mats.emplace_back("random " + std::to_string(t), random_int_matrix(rng, 4, 4, 3));

  for (const auto& [name, a] : mats) {
    const auto inst = copositivity_form(a);
    const MatrixXd ad = a.to_double();
    const int n = a.rows();
    double worst = 0.0;
    for (int s = 0; s < 10000; ++s) {
      const MatrixXd x = random_spd(rng, n);
      const VectorXd d = x.diagonal();
      const double direct = d.dot(ad * d);
      worst = std::max(worst, std::abs(eval_float(inst.objective, x) - direct) / std::max(1.0, std::abs(direct)));
    }
    rec.residual("diag form identity", worst, 1e-10, name);
  }
  {
    const auto inst = copositivity_form(neg);
    const double at_identity = eval_float(inst.objective, MatrixXd::Identity(4, 4));
    rec.truth("minus identity negative at X = I", at_identity < 0, "f(I) = " + std::to_string(at_identity));
    rec.truth("minus identity grid counterexample", copositive_brute(neg, 20).negative_found, "m=20");
  }
  const auto verdict = copositive_brute(horn, 20);
  rec.truth("horn matrix grid clean", !verdict.negative_found, "m=20 min " + to_string(verdict.min_value));
  return rec.finish();
}

SparsePoly random_quadratic(Rng& rng, VarShape shape) {
  SparsePoly f(shape);
  std::vector<VarIndex> vars;
  for (int i = 1; i <= shape.rows; ++i)
    for (int j = shape.symmetric ? i : 1; j <= shape.cols; ++j) vars.push_back({i, j});
  auto coef = [&] {
    Rational c(static_cast<long>(rng.below(11)) - 5, 1 + static_cast<long>(rng.below(4)));
    c.canonicalize();
    return c;
  };
  f.add_term(Monomial(), coef());
  for (std::size_t a = 0; a < vars.size(); ++a) {
    if (rng.below(2)) f.add_term(Monomial::of(vars[a]), coef());
    for (std::size_t b = a; b < vars.size(); ++b)
      if (rng.below(2)) f.add_term(Monomial({{vars[a], 1}, {vars[b], 1}}), coef());
  }
  return f;
}

Result pullbacks(const Options& opts) {
  Recorder rec("pullbacks");
  Rng rng(opts.seed);
  for (int q = 0; q < 20; ++q) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const int k = 1 + static_cast<int>(rng.below(std::min(n, 3)));
    const std::string label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    const SparsePoly f = random_quadratic(rng, VarShape::symmetric_matrix(n));
    const SparsePoly gram = substitute_gram(f, k);
    const SparsePoly corner = substitute_corner(f, k);
    MatrixXd ibar = MatrixXd::Zero(n, n);
    ibar.topLeftCorner(k, k).setIdentity();
    double wg = 0.0, wc = 0.0;
    for (int s = 0; s < 100; ++s) {
      const MatrixXd y = linalg::qr_condensed(rng.gaussian(n, k)).q;
      wg = std::max(wg, std::abs(eval_float(f, y * y.transpose()) - eval_float(gram, y)));
      const MatrixXd qm = linalg::random_orthogonal(rng, n);
      wc = std::max(wc, std::abs(eval_float(f, qm * ibar * qm.transpose()) - eval_float(corner, qm)));
    }
    rec.residual("gram substitution", wg, 1e-10, label);
    rec.residual("corner substitution", wc, 1e-10, label);
  }
  return rec.finish();
}

Result cor73_constant(const Options&) {
  Recorder rec("cor73-constant");
  constexpr int kPoints = 100000;
  double best = -1.0, arg = 0.0;
  for (int i = 0; i <= kPoints; ++i) {
    const double t = static_cast<double>(i) / kPoints;
    const double v = t * t * t * std::sqrt(std::max(0.0, 1.0 - t * t));
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  rec.residual("argmax at sqrt(3)/2", std::abs(arg - std::sqrt(3.0) / 2.0), 1e-4, "grid 1e5");
  rec.residual("max is 3 sqrt(3)/16", std::abs(best - lift_constant()), 1e-8, "grid 1e5");
  return rec.finish();
}

Result gradients(const Options& opts) {
  Recorder rec("gradients");
  Rng rng(opts.seed);
  constexpr double h = 1e-6;
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const int k = 1 + static_cast<int>(rng.below(n));
    Graph g = generate(GraphFamily::Gnp, {n}, rng.next_u64());
    SparsePoly obj;
    switch (t % 3) {
      case 0:
        obj = stiefel_pullback(clique_decision_form(g, k)).objective;
        break;
      case 1:
        obj = orthogonal_pullback(clique_number_form(g, k)).objective;
        break;
      default:
        obj = substitute_gram(random_quadratic(rng, VarShape::symmetric_matrix(n)), k);
        break;
    }
    const CompiledPoly f(obj);
    const int cols = obj.shape().cols;
    const MatrixXd y = linalg::qr_condensed(rng.gaussian(n, cols)).q;
    MatrixXd grad(n, cols);
    f.value_and_gradient(y, grad);
    const MatrixXd xi = stiefel_tangent_project(y, grad);
    const MatrixXd dir = stiefel_tangent_project(y, rng.gaussian(n, cols));
    const double fd = (f.value(stiefel_retract(y, h * dir)) - f.value(stiefel_retract(y, -h * dir))) / (2 * h);
    const double an = (xi.array() * dir.array()).sum();
    const std::string label = "pair " + std::to_string(t);
    rec.residual("tangent directional derivative", std::abs(fd - an) / std::max(1.0, std::abs(an)), 1e-5, label);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < cols; ++j) {
        MatrixXd yp = y, ym = y;
        yp(i, j) += h;
        ym(i, j) -= h;
        const double fdij = (f.value(yp) - f.value(ym)) / (2 * h);
        worst = std::max(worst, std::abs(fdij - grad(i, j)) / std::max(1.0, std::abs(grad(i, j))));
      }
    rec.residual("euclidean partials", worst, 1e-5, label);
  }
  return rec.finish();
}

Result nesterov(const Options& opts) {
  if (!opts.nesterov)
    fail(ErrorCode::NotImplemented, "the nesterov suite is not implemented unless the feature flag is enabled");
  Recorder rec("nesterov");
  RgdConfig cfg;
  cfg.starts = opts.starts;
  cfg.iters = opts.iters;
  cfg.seed = opts.seed;
  const double scale = std::sqrt(27.0 / 2.0);
  for (int n = 1; n <= std::min(opts.nmax, 6); ++n)
    for (auto fam : {GraphFamily::Complete, GraphFamily::Cycle, GraphFamily::Path, GraphFamily::Empty}) {
      if (fam == GraphFamily::Cycle && n < 3) continue;
      const Graph g = generate(fam, {n});
      const auto inst = nesterov_cubic(g, true);
      const double target = std::sqrt(1.0 - 1.0 / stability_number(g));
      const std::string label = to_string(fam) + " n=" + std::to_string(n);
      rec.residual("theoretical value", std::abs(scale * inst.theoretical_value->to_double() - target), 1e-12, label);
      if (inst.objective.is_zero()) {
        rec.residual("sphere maximum", target, 5e-3, label);
        continue;
      }
      const auto report = multistart_rgd(inst, cfg);
      rec.residual("sphere maximum", std::abs(scale * report.best_value - target), 5e-3, label);
    }
  return rec.finish();
}

using SuiteFn = Result (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"roundtrips", roundtrips},
      {"motzkin-straus", motzkin_straus},
      {"clique-decision", clique_decision},
      {"density", density},
      {"schur-horn", schur_horn},
      {"lp-closed-form", lp_closed_form},
      {"copositivity", copositivity},
      {"pullbacks", pullbacks},
      {"cor73-constant", cor73_constant},
      {"gradients", gradients},
      {"nesterov", nesterov},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

Result run(const std::string& suite, const Options& opts) {
  require(opts.nmax >= 1 && opts.nmax <= 8, "verify needs 1 <= nmax <= 8");
  for (const auto& [name, fn] : suites())
    if (name == suite) return fn(opts);
  fail(ErrorCode::InvalidArgument, "unknown suite \"" + suite + "\"");
}

std::string to_json(const Result& r) {
  json::Json checks = json::Json::array();
  for (const auto& c : r.checks)
    checks.push_back(json::Json{{"name", c.name},
                                {"cases", c.cases},
                                {"failures", c.failures},
                                {"max_residual", c.max_residual},
                                {"tolerance", c.tolerance}});
  json::Json j{{"suite", r.suite},
               {"status", r.passed ? "pass" : "fail"},
               {"cases", r.cases()},
               {"failures", r.failure_count()},
               {"checks", checks},
               {"failure_notes", r.failures}};
  return json::dump(j);
}

std::vector<Graph> standard_graphs(int nmax) {
  std::vector<Graph> out;
  for (int n = 1; n <= nmax; ++n) {
    out.push_back(generate(GraphFamily::Complete, {n}));
    if (n >= 3) out.push_back(generate(GraphFamily::Cycle, {n}));
    out.push_back(generate(GraphFamily::Path, {n}));
    out.push_back(generate(GraphFamily::Empty, {n}));
  }
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 2 + seed % 5;
    if (n <= nmax) out.push_back(generate(GraphFamily::Gnp, {n, 1, 2}, seed));
  }
  return out;
}

std::pair<MatrixXd, MatrixXd> cs_pair(double c, double s) {
  MatrixXd left(3, 3), right(3, 3);
  left << c, 0, -s, 0, 1, 0, s, 0, c;
  right << c * c * c - c * s * s, -2 * c * c * s, -s,  //
      2 * c * s, c * c - s * s, 0,                      //
      c * c * s - s * s * s, -2 * c * s * s, c;
  return {left, right};
}

}  // namespace grasshard::verify
