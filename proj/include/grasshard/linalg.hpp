#pragma once

#include <Eigen/Dense>

#include "grasshard/random.hpp"

// Decomposition conventions shared by manifolds, conversions and solvers.
// Every factorization here is made unique so that conversions are
// reproducible bit for bit on a given platform.
namespace grasshard::linalg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Eigenvalues descending. Each eigenvector is signed so that its
// largest-magnitude entry is positive; ties in magnitude go to the lowest
// index. The input is symmetrized first.
struct SymEig {
  VectorXd values;
  MatrixXd vectors;
};
SymEig sym_eig(const MatrixXd& a);

// Flips column signs in place under the eigenvector convention above.
void normalize_column_signs(MatrixXd& v);

// QR with R's diagonal forced positive (column sign flips on Q).
// Condensed: Q is n x k, R is k x k. Full: Q is n x n (requires square input).
// Throws Numerical when some |R_ii| <= rel_tol * max(1, ||X||_F).
struct QR {
  MatrixXd q;
  MatrixXd r;
};
QR qr_condensed(const MatrixXd& x, double rel_tol = 1e-12);
QR qr_full(const MatrixXd& x, double rel_tol = 1e-12);

// A = L diag(d) L^T without pivoting, L unit lower triangular. Pivots with
// |d_j| <= zero_tol are accepted as zero only at positions j >= rank; a zero
// pivot earlier throws Numerical. Columns of L below an accepted zero pivot
// are set to zero.
struct LDL {
  MatrixXd l;
  VectorXd d;
};
LDL ldlt_nopivot(const MatrixXd& a, int rank, double zero_tol);

// S = R^T R with R upper triangular, positive diagonal. Throws Numerical if
// S is not (numerically) positive definite.
MatrixXd cholesky_upper(const MatrixXd& s);

// Condensed SVD, singular values descending.
struct SVD {
  MatrixXd u;
  VectorXd s;
  MatrixXd v;
};
SVD svd_condensed(const MatrixXd& a);

// Haar-like orthogonal sample: Q factor of a Gaussian matrix under the
// positive-R convention.
MatrixXd random_orthogonal(Rng& rng, int n);

double max_abs(const MatrixXd& m);

}  // namespace grasshard::linalg
