#include "grasshard/poly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "grasshard/error.hpp"
#include "grasshard/linalg.hpp"
#include "grasshard/random.hpp"

namespace grasshard {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    fail(ErrorCode::Parse, "not a rational number: \"" + text + "\"");
  if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
  return m;
}

bool VarShape::contains(VarIndex v) const {
  return v.row >= 1 && v.row <= rows && v.col >= 1 && v.col <= cols;
}

VarIndex VarShape::canonical(VarIndex v) const {
  if (!contains(v))
    fail(ErrorCode::InvalidArgument, "variable index (" + std::to_string(v.row) + "," +
                                         std::to_string(v.col) + ") outside " +
                                         std::to_string(rows) + "x" + std::to_string(cols));
  if (symmetric && v.row > v.col) std::swap(v.row, v.col);
  return v;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    require(e >= 0, "negative exponent in monomial");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

Monomial Monomial::of(VarIndex v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(VarIndex v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Monomial(std::move(f));
}

SparsePoly SparsePoly::constant(VarShape shape, const Rational& c) {
  SparsePoly p(shape);
  p.add_term(Monomial(), c);
  return p;
}

SparsePoly SparsePoly::variable(VarShape shape, int row, int col) {
  SparsePoly p(shape);
  p.add_term(Monomial::of({row, col}), 1);
  return p;
}

Monomial SparsePoly::canonical(const Monomial& m) const {
  std::vector<Monomial::Factor> f;
  f.reserve(m.factors().size());
  bool changed = false;
  for (const auto& [v, e] : m.factors()) {
    const VarIndex c = shape_.canonical(v);
    changed = changed || !(c == v);
    f.emplace_back(c, e);
  }
  return changed ? Monomial(std::move(f)) : m;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const Monomial key = canonical(m);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(canonical(m));
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool SparsePoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require(shape_ == o.shape_, "polynomial variable shapes differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require(shape_ == o.shape_, "polynomial variable shapes differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require(a.shape_ == b.shape_, "polynomial variable shapes differ");
  SparsePoly out(a.shape_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePoly SparsePoly::pow(int e) const {
  require(e >= 0, "negative power");
  SparsePoly result = constant(shape_, 1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::derivative(VarIndex v) const {
  v = shape_.canonical(v);
  SparsePoly out(shape_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> f = m.factors();
    for (auto& fac : f)
      if (fac.first == v) fac.second -= 1;
    out.add_term(Monomial(std::move(f)), c * e);
  }
  return out;
}

namespace {

void check_eval_shape(const VarShape& s, Eigen::Index rows, Eigen::Index cols) {
  if (rows != s.rows || cols != s.cols)
    fail(ErrorCode::InvalidArgument, "point shape " + std::to_string(rows) + "x" +
                                         std::to_string(cols) + " does not match variable shape " +
                                         std::to_string(s.rows) + "x" + std::to_string(s.cols));
}

}  // namespace

double eval_float(const SparsePoly& f, const Eigen::MatrixXd& x) {
  check_eval_shape(f.shape(), x.rows(), x.cols());
  double sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double t = c.get_d();
    for (const auto& [v, e] : m.factors()) {
      const double xv = x(v.row - 1, v.col - 1);
      for (int i = 0; i < e; ++i) t *= xv;
    }
    sum += t;
  }
  return sum;
}

Rational eval_exact(const SparsePoly& f, const RationalMatrix& x) {
  check_eval_shape(f.shape(), x.rows(), x.cols());
  Rational sum = 0;
  Rational t;
  for (const auto& [m, c] : f.terms()) {
    t = c;
    for (const auto& [v, e] : m.factors()) {
      const Rational& xv = x(v.row - 1, v.col - 1);
      for (int i = 0; i < e; ++i) t *= xv;
    }
    sum += t;
  }
  return sum;
}

SparsePoly substitute(const SparsePoly& f, VarShape target,
                      const std::function<SparsePoly(VarIndex)>& sub) {
  // Powers of each substituted variable are cached; monomials of bounded
  // degree reuse them heavily.
  std::map<std::pair<VarIndex, int>, SparsePoly> powers;
  auto power = [&](VarIndex v, int e) -> const SparsePoly& {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    auto base = powers.find({v, 1});
    if (base == powers.end()) {
      SparsePoly p = sub(v);
      require(p.shape() == target, "substitution produced a polynomial over the wrong shape");
      base = powers.emplace(std::make_pair(v, 1), std::move(p)).first;
    }
    int have = 1;
    while (powers.count({v, have + 1})) ++have;
    for (; have < e; ++have)
      powers.emplace(std::make_pair(v, have + 1), powers.at({v, have}) * base->second);
    return powers.at({v, e});
  };

  SparsePoly out(target);
  for (const auto& [m, c] : f.terms()) {
    SparsePoly term = SparsePoly::constant(target, c);
    for (const auto& [v, e] : m.factors()) term = term * power(v, e);
    out += term;
  }
  return out;
}

SparsePoly substitute_gram(const SparsePoly& f, int k) {
  const VarShape& s = f.shape();
  require(s.rows == s.cols, "substitute_gram needs a square matrix variable");
  require(k >= 1 && k <= s.rows, "substitute_gram needs 1 <= k <= n");
  const VarShape target = VarShape::matrix(s.rows, k);
  return substitute(f, target, [&](VarIndex v) {
    SparsePoly p(target);
    for (int l = 1; l <= k; ++l)
      p.add_term(Monomial({{{v.row, l}, 1}, {{v.col, l}, 1}}), 1);
    return p;
  });
}

SparsePoly substitute_corner(const SparsePoly& f, int k) {
  const VarShape& s = f.shape();
  require(s.rows == s.cols, "substitute_corner needs a square matrix variable");
  require(k >= 0 && k <= s.rows, "substitute_corner needs 0 <= k <= n");
  const VarShape target = VarShape::matrix(s.rows, s.rows);
  return substitute(f, target, [&](VarIndex v) {
    SparsePoly p(target);
    for (int l = 1; l <= k; ++l)
      p.add_term(Monomial({{{v.row, l}, 1}, {{v.col, l}, 1}}), 1);
    return p;
  });
}

SparsePoly compose_affine_matrix(const SparsePoly& f, const Rational& s, const Rational& t) {
  const VarShape& shape = f.shape();
  require(shape.rows == shape.cols, "compose_affine_matrix needs a square matrix variable");
  require(s != 0, "compose_affine_matrix needs a nonzero scale");
  return substitute(f, shape, [&](VarIndex v) {
    SparsePoly p(shape);
    p.add_term(Monomial::of(v), s);
    if (v.row == v.col) p.add_term(Monomial(), t);
    return p;
  });
}

SparsePoly substitute_first_column(const SparsePoly& f, int k) {
  const VarShape& s = f.shape();
  require(s.cols == 1 && !s.symmetric, "first-column substitution needs a vector variable");
  require(k >= 1 && k <= s.rows, "first-column substitution needs 1 <= k <= n");
  const VarShape target = VarShape::matrix(s.rows, k);
  return substitute(f, target, [&](VarIndex v) {
    return SparsePoly::variable(target, v.row, 1);
  });
}

CompiledPoly::CompiledPoly(const SparsePoly& f) : shape_(f.shape()) {
  terms_.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    Term t{c.get_d(), {}};
    for (const auto& [v, e] : m.factors())
      t.factors.emplace_back(static_cast<Eigen::Index>(v.col - 1) * shape_.rows + (v.row - 1), e);
    terms_.push_back(std::move(t));
  }
}

void CompiledPoly::check_shape(const Eigen::MatrixXd& x) const {
  check_eval_shape(shape_, x.rows(), x.cols());
}

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double CompiledPoly::value(const Eigen::MatrixXd& x) const {
  check_shape(x);
  const double* data = x.data();
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef;
    for (const auto& [idx, e] : t.factors) v *= ipow(data[idx], e);
    sum += v;
  }
  return sum;
}

double CompiledPoly::value_and_gradient(const Eigen::MatrixXd& x, Eigen::MatrixXd& grad) const {
  check_shape(x);
  grad.setZero(x.rows(), x.cols());
  const double* data = x.data();
  double* g = grad.data();
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef;
    for (const auto& [idx, e] : t.factors) v *= ipow(data[idx], e);
    sum += v;
    // d/dx_a of c * prod x_b^{e_b} = c * e_a x_a^{e_a - 1} prod_{b != a} x_b^{e_b};
    // computed without dividing by x_a so zeros are handled exactly.
    for (std::size_t a = 0; a < t.factors.size(); ++a) {
      double d = t.coef * t.factors[a].second * ipow(data[t.factors[a].first], t.factors[a].second - 1);
      for (std::size_t b = 0; b < t.factors.size(); ++b)
        if (b != a) d *= ipow(data[t.factors[b].first], t.factors[b].second);
      g[t.factors[a].first] += d;
    }
  }
  return sum;
}

GroupAction parse_group_action(const std::string& tag) {
  if (tag == "right-O(k)") return GroupAction::RightOrthogonal;
  if (tag == "right-P1(k,n)") return GroupAction::RightP1;
  if (tag == "right-P(k,n)") return GroupAction::RightParabolic;
  if (tag == "block-O(k)xO(n-k)") return GroupAction::BlockOrthogonal;
  fail(ErrorCode::InvalidArgument, "unknown group action \"" + tag + "\"");
}

std::string to_string(GroupAction action) {
  switch (action) {
    case GroupAction::RightOrthogonal: return "right-O(k)";
    case GroupAction::RightP1: return "right-P1(k,n)";
    case GroupAction::RightParabolic: return "right-P(k,n)";
    case GroupAction::BlockOrthogonal: return "block-O(k)xO(n-k)";
  }
  return "unknown";
}

InvarianceReport check_invariance(const SparsePoly& f, GroupAction action, int k, int n_samples,
                                  std::uint64_t seed, double tol) {
  const VarShape& s = f.shape();
  require(!s.symmetric, "group actions act on general matrix variables");
  require(n_samples >= 1, "need at least one sample");
  const int n = s.rows;
  if (action == GroupAction::RightOrthogonal) {
    k = s.cols;
  } else {
    require(s.rows == s.cols, "this action needs a square matrix variable");
    require(k >= 1 && k <= n, "need 1 <= k <= n");
  }

  Rng rng(seed);
  const CompiledPoly cf(f);
  InvarianceReport rep;
  rep.samples = n_samples;
  for (int i = 0; i < n_samples; ++i) {
    Eigen::MatrixXd x, g;
    switch (action) {
      case GroupAction::RightOrthogonal:
        x = rng.gaussian(n, k);
        g = linalg::random_orthogonal(rng, k);
        break;
      case GroupAction::RightP1:
      case GroupAction::RightParabolic:
        x = rng.gaussian(n, n);
        g = Eigen::MatrixXd::Zero(n, n);
        g.topLeftCorner(k, k) = action == GroupAction::RightP1
                                    ? Eigen::MatrixXd(Eigen::MatrixXd::Identity(k, k))
                                    : rng.gaussian(k, k);
        g.topRightCorner(k, n - k) = rng.gaussian(k, n - k);
        g.bottomRightCorner(n - k, n - k) = rng.gaussian(n - k, n - k);
        break;
      case GroupAction::BlockOrthogonal:
        x = linalg::random_orthogonal(rng, n);
        g = Eigen::MatrixXd::Zero(n, n);
        g.topLeftCorner(k, k) = linalg::random_orthogonal(rng, k);
        if (n > k) g.bottomRightCorner(n - k, n - k) = linalg::random_orthogonal(rng, n - k);
        break;
    }
    const double dev = std::abs(cf.value(x * g) - cf.value(x));
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.invariant = rep.max_deviation <= tol;
  return rep;
}

}  // namespace grasshard
