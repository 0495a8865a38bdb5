#include "grasshard/linalg.hpp"

#include <cmath>
#include <string>

#include "grasshard/error.hpp"

namespace grasshard::linalg {

void normalize_column_signs(MatrixXd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const double a = std::abs(v(i, j));
      if (a > best) {  // strict: ties keep the lowest index
        best = a;
        arg = i;
      }
    }
    if (v.rows() > 0 && v(arg, j) < 0) v.col(j) = -v.col(j);
  }
}

SymEig sym_eig(const MatrixXd& a) {
  require(a.rows() == a.cols(), "sym_eig needs a square matrix");
  const MatrixXd s = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(s);
  if (es.info() != Eigen::Success) fail(ErrorCode::Numerical, "symmetric eigensolver failed");
  const Eigen::Index n = s.rows();
  SymEig out{VectorXd(n), MatrixXd(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = es.eigenvalues()(n - 1 - j);
    out.vectors.col(j) = es.eigenvectors().col(n - 1 - j);
  }
  normalize_column_signs(out.vectors);
  return out;
}

namespace {

QR positive_diagonal(MatrixXd q, MatrixXd r, double scale, double rel_tol) {
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    if (std::abs(r(i, i)) <= rel_tol * scale)
      fail(ErrorCode::Numerical,
           "rank-deficient input to QR (|R_" + std::to_string(i + 1) + std::to_string(i + 1) +
               "| = " + std::to_string(std::abs(r(i, i))) + ")");
    if (r(i, i) < 0) {
      r.row(i) = -r.row(i);
      q.col(i) = -q.col(i);
    }
  }
  return {std::move(q), std::move(r)};
}

}  // namespace

QR qr_condensed(const MatrixXd& x, double rel_tol) {
  require(x.rows() >= x.cols(), "condensed QR needs rows >= cols");
  const Eigen::Index n = x.rows(), k = x.cols();
  Eigen::HouseholderQR<MatrixXd> qr(x);
  MatrixXd q = qr.householderQ() * MatrixXd::Identity(n, k);
  MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  return positive_diagonal(std::move(q), std::move(r), std::max(1.0, x.norm()), rel_tol);
}

QR qr_full(const MatrixXd& x, double rel_tol) {
  require(x.rows() == x.cols(), "full QR here is for square matrices");
  return qr_condensed(x, rel_tol);
}

LDL ldlt_nopivot(const MatrixXd& a, int rank, double zero_tol) {
  require(a.rows() == a.cols(), "LDL^T needs a square matrix");
  const Eigen::Index n = a.rows();
  LDL out{MatrixXd::Identity(n, n), VectorXd::Zero(n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    double dj = a(j, j);
    for (Eigen::Index m = 0; m < j; ++m) dj -= out.l(j, m) * out.l(j, m) * out.d(m);
    if (std::abs(dj) <= zero_tol) {
      if (j < rank)
        fail(ErrorCode::Numerical, "zero pivot at position " + std::to_string(j + 1) +
                                       " in LDL^T without pivoting; perturb the input");
      out.d(j) = 0.0;
      continue;
    }
    if (j >= rank)
      fail(ErrorCode::Numerical, "nonzero pivot beyond the expected rank in LDL^T");
    out.d(j) = dj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double v = a(i, j);
      for (Eigen::Index m = 0; m < j; ++m) v -= out.l(i, m) * out.l(j, m) * out.d(m);
      out.l(i, j) = v / dj;
    }
  }
  return out;
}

MatrixXd cholesky_upper(const MatrixXd& s) {
  require(s.rows() == s.cols(), "Cholesky needs a square matrix");
  Eigen::LLT<MatrixXd> llt(0.5 * (s + s.transpose()));
  if (llt.info() != Eigen::Success) fail(ErrorCode::Numerical, "matrix is not positive definite");
  MatrixXd r = llt.matrixU();
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    if (!(r(i, i) > 0)) fail(ErrorCode::Numerical, "matrix is not positive definite");
  return r;
}

SVD svd_condensed(const MatrixXd& a) {
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

MatrixXd random_orthogonal(Rng& rng, int n) { return qr_full(rng.gaussian(n, n)).q; }

double max_abs(const MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace grasshard::linalg
