#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grasshard/graph.hpp"
#include "grasshard/poly.hpp"
#include "grasshard/reductions.hpp"

namespace grasshard {

struct LpResult {
  double value = 0.0;
  Eigen::MatrixXd point;
};

// max tr(A^T X) over V(k,n): sum of singular values, at X = U V^T.
LpResult lp_stiefel(const Eigen::MatrixXd& a);
// max tr(A^T P) over Gr(k,n): sum of the k largest eigenvalues of (A + A^T)/2,
// at P = Q_k Q_k^T.
LpResult lp_grassmann(const Eigen::MatrixXd& a, int k);

// sup tr(A^T X) over S^n_{++}: 0 when lambda_max(A + A^T) <= tau, else +inf,
// with tau = 1e-10 * max(1, max|A + A^T|).
struct SpdSup {
  bool infinite = false;
  double lambda_max = 0.0;  // of A + A^T
};
SpdSup lp_spd_sup(const Eigen::MatrixXd& a);

// max x^T A x on the unit sphere: top eigenpair, largest-magnitude entry positive.
LpResult qp_sphere_homogeneous(const Eigen::MatrixXd& a);

// k^2 (omega - 1) / omega; throws InvalidArgument when omega < k.
Rational exact_ms_value(const Graph& g, int k);

struct RgdConfig {
  int starts = 20;
  int iters = 500;
  std::uint64_t seed = 42;
  double grad_tol = 1e-9;
  double initial_step = 1.0;
  double shrink = 0.5;
  double armijo_c = 1e-4;
  int max_backtracks = 30;
  // Keep the objective after every accepted step (for monotonicity checks).
  bool record_trace = false;
};

struct StartRecord {
  std::uint64_t seed = 0;
  int iterations = 0;
  double final_value = 0.0;
  double grad_norm = 0.0;
  std::vector<double> trace;
};

struct SolveReport {
  std::string method;  // "multistart-rgd" or "closed-form"
  Domain domain = Domain::Grassmann;
  int n = 1;
  int k = 1;
  Sense sense = Sense::Maximize;
  // Closed-form SPD suprema can be +inf; best_value is then meaningless.
  bool infinite = false;
  double best_value = 0.0;
  int best_start = -1;
  // Iterate on the optimization manifold ("stiefel", "orthogonal", "sphere")
  // and, for Grassmann instances, its image in the projection model.
  std::string point_model;
  Eigen::MatrixXd best_point;
  std::optional<Eigen::MatrixXd> best_projection;
  std::vector<StartRecord> per_start;
  std::optional<RgdConfig> config;
  std::optional<TheoreticalValue> theoretical_value;
  std::optional<double> gap;  // distance to the theoretical value, signed by sense
  Provenance provenance;
  std::map<std::string, std::string> context;
};

// Multistart Riemannian gradient ascent (descent for minimize) with Armijo
// backtracking and QR retraction. Grassmann and quadratic-model instances are
// pulled back to V(k,n); stiefel, orthogonal and sphere instances run as is.
// Start s uses seed ^ s. Ties in the best value go to the lowest start.
SolveReport multistart_rgd(const ReductionInstance& inst, const RgdConfig& config);

// Closed-form solve for linear objectives (stiefel, grassmann, spd) and
// homogeneous quadratics on the sphere.
SolveReport solve_closed_form(const ReductionInstance& inst);

// Exhaustive x^T A x over the grid {x >= 0, sum x = 1, m x integral}, in exact
// arithmetic. The witness is the grid minimizer (first in enumeration order
// among ties); negative_found says whether its value is < 0.
struct CopositiveVerdict {
  bool negative_found = false;
  Rational min_value;
  std::vector<Rational> argmin;
  std::uint64_t points = 0;
};
CopositiveVerdict copositive_brute(const RationalMatrix& a, int m);

}  // namespace grasshard
