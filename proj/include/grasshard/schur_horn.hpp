#pragma once

#include <vector>

#include <Eigen/Dense>

#include "grasshard/manifolds.hpp"

namespace grasshard {

// Membership in the hypersimplex {0 <= d_i <= 1, sum d_i = k}. Violation names:
// "dims", "finite", "bounds", "sum".
std::vector<Violation> validate_simplex(const Eigen::VectorXd& d, int k, double tol = 1e-12);

// Rank-k orthogonal projection P with diag(P) = d.
//
// Sorts d descending and peels off the smallest target: one Givens rotation
// in the plane (j, j+1) of the current diagonal spectrum, where
// lambda_j >= d_min >= lambda_{j+1}, fixes that entry and leaves a diagonal
// leading block whose spectrum still majorizes the remaining targets. At most
// n - 1 rotations. P is returned as Y Y^T with Y having orthonormal columns.
Point lift_diagonal(const Eigen::VectorXd& d, int k);

Eigen::VectorXd diag_of(const Point& p);

}  // namespace grasshard
