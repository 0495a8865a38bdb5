#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasshard/graph.hpp"
#include "grasshard/poly.hpp"

namespace grasshard {

enum class Sense { Maximize, Minimize };
std::string to_string(Sense sense);
Sense parse_sense(const std::string& tag);

// Feasible set an instance is posed over. Matrix variables of grassmann,
// quadratic, density and spd instances are symmetric.
enum class Domain { Grassmann, Quadratic, Simplex, Density, Stiefel, Orthogonal, Sphere, Spd };
std::string to_string(Domain domain);
Domain parse_domain(const std::string& tag);

// Exact optimum: either a rational, or the square root of a rational.
struct TheoreticalValue {
  Rational radicand;  // the value itself when !is_sqrt
  bool is_sqrt = false;

  static TheoreticalValue rational(const Rational& q) { return {q, false}; }
  static TheoreticalValue sqrt_of(const Rational& q) { return {q, true}; }
  double to_double() const;
  std::string expression() const;  // "8/3" or "sqrt(2/3)"
  friend bool operator==(const TheoreticalValue&, const TheoreticalValue&) = default;
};

struct Provenance {
  std::string reduction;
  std::string source;  // graph edge list or matrix, compact text
  std::string anchor;  // e.g. "Prop 5.3"
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReductionInstance {
  Domain domain = Domain::Grassmann;
  int n = 1;
  int k = 1;
  std::optional<std::pair<Rational, Rational>> ab;
  Sense sense = Sense::Maximize;
  SparsePoly objective;
  Provenance provenance;
  std::optional<TheoreticalValue> theoretical_value;
  // Exact feasible point attaining the theoretical value, when the source
  // supplies one: the full vector for simplex/sphere, the diagonal otherwise.
  std::optional<std::vector<Rational>> witness;
  // Extra facts carried for reports (gap bounds, approximation parameters).
  std::map<std::string, std::string> context;
};

// Throws InvalidArgument if the objective's variable shape does not match the
// domain's dimensions.
void check_instance(const ReductionInstance& inst);

// 2 * sum_{stored edges} p_ii p_jj + sum_i p_ii^2; value k^2 iff a k-clique exists.
ReductionInstance clique_decision_form(const Graph& g, int k);
// 2 * sum_{stored edges} p_ii p_jj; value k^2 (1 - 1/omega) when omega >= k.
ReductionInstance clique_number_form(const Graph& g, int k);
// Same edge form on a vector variable over the hypersimplex.
ReductionInstance simplex_ms_form(const Graph& g, int k);
// Edge form over density matrices; value 1 - 1/omega.
ReductionInstance density_qp_form(const Graph& g);

// g(x, y) = f(x) y for a homogeneous cubic f on R^{n-1}.
SparsePoly quartic_sphere_lift(const SparsePoly& f);
// h(P) with h(z z^T) = g(z): sorted z_a z_b z_c z_d -> P_ab P_cd.
ReductionInstance grassmann_h_from_quartic(const SparsePoly& g);
// c = max_{0 <= t <= 1} t^3 sqrt(1 - t^2) = 3 sqrt(3) / 16, at t = sqrt(3)/2.
double lift_constant();

// Homogeneous cubic on a sphere with maximum sqrt(1 - 1/alpha(g)). The
// construction is a Motzkin-Straus cubic over the complement graph, see the
// implementation. Throws NotImplemented unless enabled.
ReductionInstance nesterov_cubic(const Graph& g, bool enabled);

ReductionInstance stiefel_pullback(const ReductionInstance& inst);
ReductionInstance orthogonal_pullback(const ReductionInstance& inst);
// x_i -> y_{i1}; target is Domain::Stiefel (n x k) or Domain::Orthogonal (k = n).
ReductionInstance first_column_pullback(const ReductionInstance& inst, int k, Domain target);
// Grassmann instance -> quadratic model: g(W) = f((W - bI) / (a - b)).
ReductionInstance quadratic_model_transfer(const ReductionInstance& inst, const Rational& a,
                                           const Rational& b);

// sum_{i,k} a_ik x_ii x_kk over S^n_{++}, minimized.
ReductionInstance copositivity_form(const RationalMatrix& a);

// Linear objectives tr(A^T X) for the closed-form solvers.
ReductionInstance lp_stiefel_form(const RationalMatrix& a);
ReductionInstance lp_grassmann_form(const RationalMatrix& a, int k);
ReductionInstance lp_spd_form(const RationalMatrix& a);

// Reads A back from a homogeneous linear objective. Symmetric variables
// yield the symmetrization (A + A^T) / 2.
Eigen::MatrixXd linear_coefficients(const SparsePoly& f);

}  // namespace grasshard
