#include "grasshard/schur_horn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grasshard/error.hpp"

namespace grasshard {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<Violation> validate_simplex(const VectorXd& d, int k, double tol) {
  std::vector<Violation> out;
  const auto n = d.size();
  if (n < 1 || k < 1 || k > n) {
    out.push_back({"dims", 0.0});
    return out;
  }
  if (!d.allFinite()) {
    out.push_back({"finite", 0.0});
    return out;
  }
  const double excess = std::max(-d.minCoeff(), d.maxCoeff() - 1.0);
  if (excess > tol) out.push_back({"bounds", excess});
  const double sum_err = std::abs(d.sum() - k);
  if (sum_err > tol) out.push_back({"sum", sum_err});
  return out;
}

namespace {

// Orthogonal U with diag(U^T diag(lambda) U) = e, for e sorted descending and
// majorized by lambda (any order).
MatrixXd lift_spectrum(const VectorXd& lambda, const VectorXd& e) {
  const int m = static_cast<int>(lambda.size());
  if (m == 1) return MatrixXd::Identity(1, 1);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambda(a) > lambda(b); });
  VectorXd l(m);
  MatrixXd sort_perm = MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    l(i) = lambda(order[i]);
    sort_perm(order[i], i) = 1.0;
  }

  const double target = e(m - 1);
  int j = 0;
  while (j + 1 < m - 1 && l(j + 1) >= target) ++j;
  const double gap = l(j) - l(j + 1);
  const double s2 = gap > 0 ? std::clamp((target - l(j + 1)) / gap, 0.0, 1.0) : 0.0;
  const double s = std::sqrt(s2), c = std::sqrt(1.0 - s2);

  MatrixXd rot = MatrixXd::Identity(m, m);
  rot(j, j) = c;
  rot(j, j + 1) = -s;
  rot(j + 1, j) = s;
  rot(j + 1, j + 1) = c;

  // Move index j+1 to the end; the leading block stays diagonal.
  MatrixXd move = MatrixXd::Zero(m, m);
  VectorXd mu(m - 1);
  for (int old = 0, pos = 0; old < m; ++old) {
    if (old == j + 1) continue;
    move(old, pos) = 1.0;
    mu(pos) = old == j ? c * c * l(j) + s2 * l(j + 1) : l(old);
    ++pos;
  }
  move(j + 1, m - 1) = 1.0;

  MatrixXd inner = MatrixXd::Identity(m, m);
  inner.topLeftCorner(m - 1, m - 1) = lift_spectrum(mu, e.head(m - 1));
  return sort_perm * rot * move * inner;
}

}  // namespace

Point lift_diagonal(const VectorXd& d, int k) {
  const auto violations = validate_simplex(d, k);
  if (!violations.empty())
    fail(ErrorCode::InvalidArgument, "target diagonal is not in the hypersimplex: " +
                                         violations.front().name + " violation (residual " +
                                         std::to_string(violations.front().residual) + ")");
  const int n = static_cast<int>(d.size());
  const VectorXd clamped = d.cwiseMax(0.0).cwiseMin(1.0);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return clamped(a) > clamped(b); });
  VectorXd e(n);
  for (int i = 0; i < n; ++i) e(i) = clamped(order[i]);

  VectorXd lambda = VectorXd::Zero(n);
  lambda.head(k).setOnes();
  const MatrixXd u = lift_spectrum(lambda, e);

  // P_sorted = U^T diag(1^k, 0) U = Y^T Y with Y the first k rows of U.
  MatrixXd y(n, k);
  for (int i = 0; i < n; ++i) y.row(order[i]) = u.col(i).head(k).transpose();
  Point p{Model::Projection, n, k, y * y.transpose(), std::nullopt};
  return p;
}

VectorXd diag_of(const Point& p) {
  require(p.model == Model::Projection, "diag_of needs a projection point");
  require_valid(p);
  return p.data.diagonal();
}

}  // namespace grasshard
