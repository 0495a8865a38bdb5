#include "grasshard/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "grasshard/error.hpp"
#include "grasshard/linalg.hpp"
#include "grasshard/manifolds.hpp"

namespace grasshard {

using Eigen::MatrixXd;

LpResult lp_stiefel(const MatrixXd& a) {
  require(a.rows() >= a.cols() && a.cols() >= 1, "stiefel LP needs an n x k matrix with n >= k");
  const auto svd = linalg::svd_condensed(a);
  return {svd.s.sum(), svd.u * svd.v.transpose()};
}

LpResult lp_grassmann(const MatrixXd& a, int k) {
  require(a.rows() == a.cols() && a.rows() >= 1, "grassmann LP needs a square matrix");
  require(k >= 1 && k <= a.rows(), "grassmann LP needs 1 <= k <= n");
  const auto eig = linalg::sym_eig(0.5 * (a + a.transpose()));
  const MatrixXd qk = eig.vectors.leftCols(k);
  return {eig.values.head(k).sum(), qk * qk.transpose()};
}

SpdSup lp_spd_sup(const MatrixXd& a) {
  require(a.rows() == a.cols() && a.rows() >= 1, "SPD LP needs a square matrix");
  const MatrixXd s = a + a.transpose();
  const double lmax = linalg::sym_eig(s).values(0);
  const double tau = 1e-10 * std::max(1.0, linalg::max_abs(s));
  return {lmax > tau, lmax};
}

LpResult qp_sphere_homogeneous(const MatrixXd& a) {
  require(a.rows() == a.cols() && a.rows() >= 1, "sphere QP needs a square matrix");
  require(linalg::max_abs(a - a.transpose()) <= 1e-12 * std::max(1.0, linalg::max_abs(a)),
          "sphere QP needs a symmetric matrix");
  const auto eig = linalg::sym_eig(a);
  return {eig.values(0), eig.vectors.col(0)};
}

Rational exact_ms_value(const Graph& g, int k) {
  require(k >= 1 && k <= g.n(), "exact_ms_value needs 1 <= k <= n");
  const int omega = clique_number(g);
  if (omega < k)
    fail(ErrorCode::InvalidArgument, "omega < k (omega = " + std::to_string(omega) +
                                         ", k = " + std::to_string(k) + ")");
  return Rational(k * k) * Rational(omega - 1, omega);
}

namespace {

struct Problem {
  SparsePoly objective;  // over the n x k iterate
  int rows = 1;
  int cols = 1;
  Model start_model = Model::Stiefel;
  std::string point_model;
  bool grassmann = false;
};

Problem prepare(const ReductionInstance& inst) {
  check_instance(inst);
  Problem p;
  switch (inst.domain) {
    case Domain::Grassmann:
      p.objective = stiefel_pullback(inst).objective;
      p.rows = inst.n;
      p.cols = inst.k;
      p.point_model = "stiefel";
      p.grassmann = true;
      break;
    case Domain::Quadratic: {
      // f(W) with W = (a - b) P + b I, then P = Y Y^T.
      ReductionInstance g = inst;
      g.domain = Domain::Grassmann;
      g.objective = compose_affine_matrix(inst.objective, inst.ab->first - inst.ab->second,
                                          inst.ab->second);
      p.objective = stiefel_pullback(g).objective;
      p.rows = inst.n;
      p.cols = inst.k;
      p.point_model = "stiefel";
      p.grassmann = true;
      break;
    }
    case Domain::Stiefel:
      p.objective = inst.objective;
      p.rows = inst.n;
      p.cols = inst.k;
      p.point_model = "stiefel";
      break;
    case Domain::Orthogonal:
      p.objective = inst.objective;
      p.rows = p.cols = inst.n;
      p.start_model = Model::Orthogonal;
      p.point_model = "orthogonal";
      break;
    case Domain::Sphere:
      p.objective = inst.objective;
      p.rows = inst.n;
      p.cols = 1;
      p.point_model = "sphere";
      break;
    default:
      fail(ErrorCode::InvalidArgument,
           "multistart solver does not support the " + to_string(inst.domain) + " model");
  }
  return p;
}

void attach_theory(SolveReport& r, const ReductionInstance& inst) {
  r.theoretical_value = inst.theoretical_value;
  r.provenance = inst.provenance;
  r.context = inst.context;
  if (inst.theoretical_value && !r.infinite) {
    const double t = inst.theoretical_value->to_double();
    r.gap = inst.sense == Sense::Maximize ? t - r.best_value : r.best_value - t;
  }
}

}  // namespace

SolveReport multistart_rgd(const ReductionInstance& inst, const RgdConfig& cfg) {
  require(cfg.starts >= 1, "multistart needs at least one start");
  require(cfg.iters >= 0, "multistart needs iters >= 0");
  const Problem prob = prepare(inst);
  const CompiledPoly f(prob.objective);
  const double sign = inst.sense == Sense::Maximize ? 1.0 : -1.0;

  SolveReport report;
  report.method = "multistart-rgd";
  report.domain = inst.domain;
  report.n = inst.n;
  report.k = inst.k;
  report.sense = inst.sense;
  report.point_model = prob.point_model;
  report.config = cfg;

  MatrixXd grad(prob.rows, prob.cols);
  for (int s = 0; s < cfg.starts; ++s) {
    StartRecord rec;
    rec.seed = cfg.seed ^ static_cast<std::uint64_t>(s);
    MatrixXd y = random_point(prob.start_model, prob.rows, prob.cols, rec.seed).data;
    double value = sign * f.value_and_gradient(y, grad);
    if (cfg.record_trace) rec.trace.push_back(sign * value);
    MatrixXd xi = stiefel_tangent_project(y, sign * grad);
    rec.grad_norm = xi.norm();
    while (rec.iterations < cfg.iters && rec.grad_norm > cfg.grad_tol) {
      const double slope = rec.grad_norm * rec.grad_norm;
      double step = cfg.initial_step;
      bool accepted = false;
      MatrixXd trial;
      double trial_value = 0.0;
      int bt = 0;
      for (; bt <= cfg.max_backtracks; ++bt, step *= cfg.shrink) {
        try {
          trial = stiefel_retract(y, step * xi);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Numerical) throw;
          continue;
        }
        trial_value = sign * f.value(trial);
        if (trial_value >= value + cfg.armijo_c * step * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;  // no sufficient increase at any step size
      // Look-ahead: keep shrinking while the value strictly improves. Without
      // it, steps that overshoot to the mirror point of the optimum pass the
      // Armijo test and the iterates zig-zag. Smaller steps with a higher value
      // still satisfy the Armijo condition.
      for (++bt, step *= cfg.shrink; bt <= cfg.max_backtracks; ++bt, step *= cfg.shrink) {
        MatrixXd smaller;
        try {
          smaller = stiefel_retract(y, step * xi);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Numerical) throw;
          break;
        }
        const double smaller_value = sign * f.value(smaller);
        if (!(smaller_value > trial_value)) break;
        trial = std::move(smaller);
        trial_value = smaller_value;
      }
      y = std::move(trial);
      value = sign * f.value_and_gradient(y, grad);
      xi = stiefel_tangent_project(y, sign * grad);
      rec.grad_norm = xi.norm();
      ++rec.iterations;
      if (cfg.record_trace) rec.trace.push_back(sign * value);
    }
    rec.final_value = sign * value;
    const bool better = report.best_start < 0 || sign * rec.final_value > sign * report.best_value;
    if (better) {
      report.best_start = s;
      report.best_value = rec.final_value;
      report.best_point = y;
    }
    report.per_start.push_back(std::move(rec));
  }
  if (prob.grassmann) {
    MatrixXd p = report.best_point * report.best_point.transpose();
    report.best_projection = 0.5 * (p + p.transpose());
  }
  attach_theory(report, inst);
  return report;
}

namespace {

MatrixXd quadratic_coefficients(const SparsePoly& f) {
  require(f.is_zero() || f.is_homogeneous(2), "expected a homogeneous quadratic objective");
  const VarShape& s = f.shape();
  require(s.cols == 1 && !s.symmetric, "expected a vector variable");
  MatrixXd a = MatrixXd::Zero(s.rows, s.rows);
  for (const auto& [m, c] : f.terms()) {
    const auto& fac = m.factors();
    const double x = c.get_d();
    if (fac.size() == 1) {
      a(fac[0].first.row - 1, fac[0].first.row - 1) = x;
    } else {
      const int i = fac[0].first.row - 1, j = fac[1].first.row - 1;
      a(i, j) = a(j, i) = 0.5 * x;
    }
  }
  return a;
}

}  // namespace

SolveReport solve_closed_form(const ReductionInstance& inst) {
  check_instance(inst);
  require(inst.sense == Sense::Maximize, "closed-form solves are maximizations");
  SolveReport r;
  r.method = "closed-form";
  r.domain = inst.domain;
  r.n = inst.n;
  r.k = inst.k;
  r.sense = inst.sense;
  r.best_start = 0;
  switch (inst.domain) {
    case Domain::Stiefel: {
      auto lp = lp_stiefel(linear_coefficients(inst.objective));
      r.best_value = lp.value;
      r.best_point = std::move(lp.point);
      r.point_model = "stiefel";
      break;
    }
    case Domain::Grassmann: {
      auto lp = lp_grassmann(linear_coefficients(inst.objective), inst.k);
      r.best_value = lp.value;
      r.best_projection = lp.point;
      r.best_point = std::move(lp.point);
      r.point_model = "projection";
      break;
    }
    case Domain::Spd: {
      // linear_coefficients already symmetrizes, so A + A^T = 2 S.
      const auto sup = lp_spd_sup(linear_coefficients(inst.objective));
      r.infinite = sup.infinite;
      r.best_value = 0.0;
      r.point_model = "spd";
      r.context["lambda_max"] = std::to_string(sup.lambda_max);
      break;
    }
    case Domain::Sphere: {
      auto qp = qp_sphere_homogeneous(quadratic_coefficients(inst.objective));
      r.best_value = qp.value;
      r.best_point = std::move(qp.point);
      r.point_model = "sphere";
      break;
    }
    default:
      fail(ErrorCode::InvalidArgument,
           "no closed form for the " + to_string(inst.domain) + " model");
  }
  auto extra = r.context;
  attach_theory(r, inst);
  r.context.insert(extra.begin(), extra.end());
  return r;
}

namespace {

template <typename Int>
struct GridSearch {
  const std::vector<std::vector<Int>>& b;
  int n;
  int m;
  std::vector<int> c;
  std::vector<int> best;
  Int best_value{};
  bool have_best = false;
  std::uint64_t points = 0;

  void run(int i, int remaining, const Int& partial) {
    if (i == n - 1) {
      c[i] = remaining;
      finish(partial);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[i] = v;
      run(i + 1, remaining - v, partial + contribution(i));
    }
  }

  // B_ii c_i^2 + 2 c_i sum_{j < i} B_ij c_j
  Int contribution(int i) const {
    if (c[i] == 0) return Int(0);
    Int cross(0);
    for (int j = 0; j < i; ++j)
      if (c[j]) cross += b[i][j] * Int(c[j]);
    return Int(c[i]) * (b[i][i] * Int(c[i]) + Int(2) * cross);
  }

  void finish(const Int& partial) {
    ++points;
    const Int value = partial + contribution(n - 1);
    if (!have_best || value < best_value) {
      have_best = true;
      best_value = value;
      best = c;
    }
  }
};

mpz_class to_mpz(const __int128& x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class r = static_cast<unsigned long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(u & ~0UL);
  return neg ? mpz_class(-r) : r;
}
mpz_class to_mpz(const mpz_class& x) { return x; }

template <typename Int>
CopositiveVerdict grid_search(const std::vector<std::vector<Int>>& b, int n, int m,
                              const mpz_class& denom) {
  GridSearch<Int> g{b, n, m, std::vector<int>(n, 0), {}, Int(0), false, 0};
  g.run(0, m, Int(0));
  CopositiveVerdict v;
  v.points = g.points;
  v.min_value = Rational(to_mpz(g.best_value), denom * m * m);
  v.min_value.canonicalize();
  v.negative_found = v.min_value < 0;
  for (int ci : g.best) {
    Rational q(ci, m);
    q.canonicalize();
    v.argmin.push_back(q);
  }
  return v;
}

}  // namespace

CopositiveVerdict copositive_brute(const RationalMatrix& a, int m) {
  const int n = a.rows();
  require(a.cols() == n && n >= 1, "copositivity oracle needs a square matrix");
  require(n <= 8, "copositivity oracle supports n <= 8");
  require(m >= 1 && m <= 40, "copositivity oracle supports 1 <= m <= 40");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) require(a(i, j) == a(j, i), "copositivity oracle needs symmetric A");

  mpz_class denom = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), a(i, j).get_den_mpz_t());
  std::vector<std::vector<mpz_class>> big(n, std::vector<mpz_class>(n));
  bool small = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      big[i][j] = a(i, j).get_num() * (denom / a(i, j).get_den());
      small = small && big[i][j].fits_slong_p();
    }
  // |value| <= max|B| * m^2 <= 2^63 * 1600 < 2^127 on the fast path.
  if (small) {
    std::vector<std::vector<__int128>> b(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i][j] = big[i][j].get_si();
    return grid_search<__int128>(b, n, m, denom);
  }
  return grid_search<mpz_class>(big, n, m, denom);
}

}  // namespace grasshard
