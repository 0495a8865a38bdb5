#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "grasshard/poly.hpp"

namespace grasshard {

// Every matrix model of the Grassmann, Stiefel and Cartan manifolds handled
// by the library. The first group are submanifold models (a point is the
// matrix itself); the second group are quotient models M/G, where a point is
// a coset and the stored matrix is just one representative.
enum class Model {
  Projection,  // Gr_pi(k,n): P^2 = P = P^T, tr P = k
  Involution,  // Gr_iota(k,n): Q^T Q = I, Q = Q^T, tr Q = 2k - n
  Quadratic,   // Gr_{a,b}(k,n): W = W^T, (W - aI)(W - bI) = 0, tr W = ka + (n-k)b
  Stiefel,     // V(k,n): Y^T Y = I_k
  Orthogonal,  // O(n)
  FullRank,    // St(k,n): rank k, n x k
  Spd,         // S^n_{++}

  GrassmannOrthogonalQuotient,  // O(n)/(O(k) x O(n-k)), right action
  GrassmannStiefelQuotient,     // V(k,n)/O(k), right action
  GrassmannParabolicQuotient,   // GL(n)/P(k,n), right action
  GrassmannFullRankQuotient,    // St(k,n)/GL(k), right action
  StiefelOrthogonalQuotient,    // O(n)/O(n-k), O(n-k) embedded as diag(I_k, Q2)
  StiefelParabolicQuotient,     // GL(n)/P1(k,n), right action
  CartanQuotient,               // GL(n)/O(n), left action X -> QX
};

Model parse_model(const std::string& tag);
std::string to_string(Model model);
bool is_quotient(Model model);
// Shape of the stored matrix for (model, n, k).
std::pair<int, int> representative_shape(Model model, int n, int k);

struct Point {
  Model model = Model::Projection;
  int n = 1;
  int k = 1;
  Eigen::MatrixXd data;
  // Quadratic model parameters (a, b), a != b.
  std::optional<std::pair<Rational, Rational>> ab;
};

struct Tolerances {
  double membership = 1e-10;
  double rank = 1e-8;
};

struct Violation {
  std::string name;
  double residual = 0.0;
};

// Checks the defining equations of the point's model (the ambient model for
// quotient representatives). Violations are data; nothing is thrown.
std::vector<Violation> validate(const Point& pt, const Tolerances& tol = {});
bool is_valid(const Point& pt, const Tolerances& tol = {});
// Throws InvalidArgument naming the first violation.
void require_valid(const Point& pt, const Tolerances& tol = {});

// Deterministic sampler. Gaussian -> QR for Stiefel/orthogonal, Y Y^T for
// projections, the affine image of a projection for involution/quadratic,
// G^T G + 0.1 I for SPD, Gaussian resampled until sigma_min > tol.rank for
// full-rank and GL(n) representatives.
Point random_point(Model model, int n, int k, std::uint64_t seed,
                   std::optional<std::pair<Rational, Rational>> ab = std::nullopt);

// Delta = G - Y sym(Y^T G).
Eigen::MatrixXd stiefel_tangent_project(const Eigen::MatrixXd& y, const Eigen::MatrixXd& g);

// Q factor (positive-diagonal R) of Y + Delta. Throws Numerical when Y + Delta
// is rank deficient; callers shrink the step.
Eigen::MatrixXd stiefel_retract(const Eigen::MatrixXd& y, const Eigen::MatrixXd& delta);

}  // namespace grasshard
