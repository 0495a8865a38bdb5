#include "grasshard/manifolds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "grasshard/error.hpp"
#include "grasshard/linalg.hpp"
#include "grasshard/random.hpp"

namespace grasshard {

namespace {

struct ModelName {
  Model model;
  const char* tag;
};

constexpr std::array<ModelName, 14> kModelNames{{
    {Model::Projection, "projection"},
    {Model::Involution, "involution"},
    {Model::Quadratic, "quadratic"},
    {Model::Stiefel, "stiefel"},
    {Model::Orthogonal, "orthogonal"},
    {Model::FullRank, "fullrank"},
    {Model::Spd, "spd"},
    {Model::GrassmannOrthogonalQuotient, "O(n)/(O(k)xO(n-k))"},
    {Model::GrassmannStiefelQuotient, "V(k,n)/O(k)"},
    {Model::GrassmannParabolicQuotient, "GL(n)/P(k,n)"},
    {Model::GrassmannFullRankQuotient, "St(k,n)/GL(k)"},
    {Model::StiefelOrthogonalQuotient, "O(n)/O(n-k)"},
    {Model::StiefelParabolicQuotient, "GL(n)/P1(k,n)"},
    {Model::CartanQuotient, "GL(n)/O(n)"},
}};

}  // namespace

Model parse_model(const std::string& tag) {
  for (const auto& m : kModelNames)
    if (tag == m.tag) return m.model;
  if (tag == "plucker" || tag == "plücker")
    fail(ErrorCode::NoPath, "the Plucker model is out of scope");
  fail(ErrorCode::InvalidArgument, "unknown model tag \"" + tag + "\"");
}

std::string to_string(Model model) {
  for (const auto& m : kModelNames)
    if (m.model == model) return m.tag;
  return "unknown";
}

bool is_quotient(Model model) {
  return static_cast<int>(model) >= static_cast<int>(Model::GrassmannOrthogonalQuotient);
}

std::pair<int, int> representative_shape(Model model, int n, int k) {
  switch (model) {
    case Model::Stiefel:
    case Model::FullRank:
    case Model::GrassmannStiefelQuotient:
    case Model::GrassmannFullRankQuotient:
      return {n, k};
    default:
      return {n, n};
  }
}

namespace {

using Eigen::MatrixXd;

double symmetry_residual(const MatrixXd& m) { return linalg::max_abs(m - m.transpose()); }

double orthonormal_residual(const MatrixXd& m) {
  return linalg::max_abs(m.transpose() * m - MatrixXd::Identity(m.cols(), m.cols()));
}

double smallest_singular_value(const MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

struct Checker {
  const Tolerances& tol;
  std::vector<Violation>& out;

  void bound(const char* name, double residual, double limit) {
    if (!(residual <= limit)) out.push_back({name, residual});
  }
  void above(const char* name, double value, double limit) {
    if (!(value > limit)) out.push_back({name, value});
  }
};

// Membership residuals of the ambient (submanifold) model.
void check_ambient(Model model, const Point& pt, Checker& c) {
  const MatrixXd& x = pt.data;
  const double tm = c.tol.membership;
  switch (model) {
    case Model::Projection:
      c.bound("symmetry", symmetry_residual(x), tm);
      c.bound("idempotency", linalg::max_abs(x * x - x), tm);
      c.bound("trace", std::abs(x.trace() - pt.k), tm);
      break;
    case Model::Involution:
      c.bound("orthogonality", orthonormal_residual(x), tm);
      c.bound("symmetry", symmetry_residual(x), tm);
      c.bound("trace", std::abs(x.trace() - (2.0 * pt.k - pt.n)), tm);
      break;
    case Model::Quadratic: {
      if (!pt.ab || pt.ab->first == pt.ab->second) {
        c.out.push_back({"ab", 0.0});
        break;
      }
      const double a = pt.ab->first.get_d(), b = pt.ab->second.get_d();
      const MatrixXd id = MatrixXd::Identity(pt.n, pt.n);
      c.bound("symmetry", symmetry_residual(x), tm);
      c.bound("quadratic", linalg::max_abs((x - a * id) * (x - b * id)),
              tm * std::max({1.0, a * a, b * b}));
      c.bound("trace", std::abs(x.trace() - (pt.k * a + (pt.n - pt.k) * b)), tm);
      break;
    }
    case Model::Stiefel:
    case Model::Orthogonal:
      c.bound("orthogonality", orthonormal_residual(x), tm);
      break;
    case Model::FullRank:
      c.above("rank", smallest_singular_value(x), c.tol.rank);
      break;
    case Model::Spd: {
      c.bound("symmetry", symmetry_residual(x), tm);
      const double lmin = x.size() ? linalg::sym_eig(x).values(x.rows() - 1) : 0.0;
      c.above("definiteness", lmin, c.tol.rank);
      break;
    }
    default:
      break;
  }
}

Model ambient_model(Model m) {
  switch (m) {
    case Model::GrassmannOrthogonalQuotient:
    case Model::StiefelOrthogonalQuotient:
      return Model::Orthogonal;
    case Model::GrassmannStiefelQuotient:
      return Model::Stiefel;
    case Model::GrassmannParabolicQuotient:
    case Model::StiefelParabolicQuotient:
    case Model::CartanQuotient:
    case Model::GrassmannFullRankQuotient:
      return Model::FullRank;
    default:
      return m;
  }
}

}  // namespace

std::vector<Violation> validate(const Point& pt, const Tolerances& tol) {
  std::vector<Violation> out;
  const bool square_only = pt.model == Model::Orthogonal || pt.model == Model::Spd ||
                           pt.model == Model::CartanQuotient;
  if (pt.n < 1 || (!square_only && (pt.k < 1 || pt.k > pt.n))) {
    out.push_back({"dims", 0.0});
    return out;
  }
  const auto [r, c] = representative_shape(pt.model, pt.n, pt.k);
  if (pt.data.rows() != r || pt.data.cols() != c) {
    out.push_back({"shape", 0.0});
    return out;
  }
  if (!pt.data.allFinite()) {
    out.push_back({"finite", 0.0});
    return out;
  }
  Checker checker{tol, out};
  check_ambient(ambient_model(pt.model), pt, checker);
  return out;
}

bool is_valid(const Point& pt, const Tolerances& tol) { return validate(pt, tol).empty(); }

void require_valid(const Point& pt, const Tolerances& tol) {
  const auto v = validate(pt, tol);
  if (!v.empty())
    fail(ErrorCode::InvalidArgument, "invalid " + to_string(pt.model) + " point: " + v.front().name +
                                         " violation (residual " + std::to_string(v.front().residual) +
                                         ")");
}

namespace {

MatrixXd full_rank_gaussian(Rng& rng, int rows, int cols, double tol) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MatrixXd g = rng.gaussian(rows, cols);
    if (smallest_singular_value(g) > tol) return g;
  }
  fail(ErrorCode::Numerical, "could not sample a full-rank matrix");
}

}  // namespace

Point random_point(Model model, int n, int k, std::uint64_t seed,
                   std::optional<std::pair<Rational, Rational>> ab) {
  require(n >= 1, "random_point needs n >= 1");
  if (model == Model::Orthogonal || model == Model::Spd || model == Model::CartanQuotient) k = n;
  require(k >= 1 && k <= n, "random_point needs 1 <= k <= n");
  Rng rng(seed);
  Point pt{model, n, k, {}, std::nullopt};
  const double tol = Tolerances{}.rank;
  switch (model) {
    case Model::Stiefel:
    case Model::GrassmannStiefelQuotient:
      pt.data = linalg::qr_condensed(rng.gaussian(n, k)).q;
      break;
    case Model::Orthogonal:
    case Model::GrassmannOrthogonalQuotient:
    case Model::StiefelOrthogonalQuotient:
      pt.data = linalg::random_orthogonal(rng, n);
      break;
    case Model::Projection:
    case Model::Involution:
    case Model::Quadratic: {
      const MatrixXd y = linalg::qr_condensed(rng.gaussian(n, k)).q;
      const MatrixXd p = y * y.transpose();
      if (model == Model::Projection) {
        pt.data = p;
      } else if (model == Model::Involution) {
        pt.data = 2.0 * p - MatrixXd::Identity(n, n);
      } else {
        require(ab.has_value() && ab->first != ab->second, "quadratic model needs distinct (a, b)");
        const double a = ab->first.get_d(), b = ab->second.get_d();
        pt.data = (a - b) * p + b * MatrixXd::Identity(n, n);
        pt.ab = ab;
      }
      break;
    }
    case Model::FullRank:
    case Model::GrassmannFullRankQuotient:
      pt.data = full_rank_gaussian(rng, n, k, tol);
      break;
    case Model::GrassmannParabolicQuotient:
    case Model::StiefelParabolicQuotient:
    case Model::CartanQuotient:
      pt.data = full_rank_gaussian(rng, n, n, tol);
      break;
    case Model::Spd: {
      const MatrixXd g = rng.gaussian(n, n);
      pt.data = g.transpose() * g + 0.1 * MatrixXd::Identity(n, n);
      break;
    }
  }
  return pt;
}

Eigen::MatrixXd stiefel_tangent_project(const Eigen::MatrixXd& y, const Eigen::MatrixXd& g) {
  require(y.rows() == g.rows() && y.cols() == g.cols(), "tangent projection shape mismatch");
  const MatrixXd ytg = y.transpose() * g;
  return g - y * (0.5 * (ytg + ytg.transpose()));
}

Eigen::MatrixXd stiefel_retract(const Eigen::MatrixXd& y, const Eigen::MatrixXd& delta) {
  require(y.rows() == delta.rows() && y.cols() == delta.cols(), "retraction shape mismatch");
  return linalg::qr_condensed(y + delta).q;
}

}  // namespace grasshard
