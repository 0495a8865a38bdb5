#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace grasshard {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // 0-based access.
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Eigen::MatrixXd to_double() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// 1-based (row, col) into the polynomial's matrix variable; col = 1 for
// vector variables.
struct VarIndex {
  int row = 1;
  int col = 1;
  auto operator<=>(const VarIndex&) const = default;
};

// Variable shape. For symmetric matrix variables only the entries with
// row <= col exist; (j,i) is folded onto (i,j) on construction.
struct VarShape {
  int rows = 1;
  int cols = 1;
  bool symmetric = false;

  static VarShape vector(int n) { return {n, 1, false}; }
  static VarShape matrix(int rows, int cols) { return {rows, cols, false}; }
  static VarShape symmetric_matrix(int n) { return {n, n, true}; }

  bool contains(VarIndex v) const;
  VarIndex canonical(VarIndex v) const;
  friend bool operator==(const VarShape&, const VarShape&) = default;
};

// Product of variable powers, kept sorted by variable with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<VarIndex, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarIndex v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const;
  int exponent(VarIndex v) const;
  bool is_constant() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(VarShape shape) : shape_(shape) {}

  static SparsePoly constant(VarShape shape, const Rational& c);
  static SparsePoly variable(VarShape shape, int row, int col = 1);

  const VarShape& shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m; indices are canonicalized and zero results are erased.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  // Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(int e) const;
  SparsePoly derivative(VarIndex v) const;

 private:
  Monomial canonical(const Monomial& m) const;

  VarShape shape_;
  TermMap terms_;
};

double eval_float(const SparsePoly& f, const Eigen::MatrixXd& x);
Rational eval_exact(const SparsePoly& f, const RationalMatrix& x);

// Replaces every variable v of f by sub(v), a polynomial over target.
SparsePoly substitute(const SparsePoly& f, VarShape target,
                      const std::function<SparsePoly(VarIndex)>& sub);

// g(Y) = f(Y Y^T) for f over an n x n variable; g is over n x k.
SparsePoly substitute_gram(const SparsePoly& f, int k);
// g(Q) = f(Q diag(I_k, 0) Q^T) for f over n x n; g is over n x n.
SparsePoly substitute_corner(const SparsePoly& f, int k);
// g(W) = f(s W + t I) for f over n x n; same variable shape.
SparsePoly compose_affine_matrix(const SparsePoly& f, const Rational& s, const Rational& t);
// g(Y) = f(Y e_1) for f over a length-n vector; g is over n x k.
SparsePoly substitute_first_column(const SparsePoly& f, int k);

// Floating-point image of a SparsePoly for repeated evaluation with
// term-wise analytic gradients.
class CompiledPoly {
 public:
  explicit CompiledPoly(const SparsePoly& f);

  const VarShape& shape() const { return shape_; }
  double value(const Eigen::MatrixXd& x) const;
  // Returns f(x) and writes df/dx_{ij} into grad (same shape as x). For
  // symmetric variables the partials are with respect to the canonical
  // (i <= j) entries and the lower triangle stays zero.
  double value_and_gradient(const Eigen::MatrixXd& x, Eigen::MatrixXd& grad) const;

 private:
  struct Term {
    double coef;
    std::vector<std::pair<Eigen::Index, int>> factors;  // column-major flat index, exponent
  };
  void check_shape(const Eigen::MatrixXd& x) const;

  VarShape shape_;
  std::vector<Term> terms_;
};

enum class GroupAction { RightOrthogonal, RightP1, RightParabolic, BlockOrthogonal };

GroupAction parse_group_action(const std::string& tag);
std::string to_string(GroupAction action);

struct InvarianceReport {
  bool invariant = false;
  double max_deviation = 0.0;
  int samples = 0;
};

// Samples X and a group element g and compares f(X g) with f(X).
//   RightOrthogonal: X Gaussian n x k, g in O(k), k = number of columns.
//   RightP1 / RightParabolic: X Gaussian n x n, g = [[A, B], [0, C]] with
//     A = I_k (P1) or A Gaussian (P), C Gaussian.
//   BlockOrthogonal: X in O(n), g = blockdiag(O(k), O(n - k)).
InvarianceReport check_invariance(const SparsePoly& f, GroupAction action, int k, int n_samples,
                                  std::uint64_t seed, double tol);

}  // namespace grasshard
