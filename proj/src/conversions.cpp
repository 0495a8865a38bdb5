#include "grasshard/conversions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>

#include "grasshard/error.hpp"
#include "grasshard/linalg.hpp"

namespace grasshard::conversions {

using Eigen::MatrixXd;

namespace {

void expect_model(const Point& p, std::initializer_list<Model> allowed, const char* op) {
  if (std::find(allowed.begin(), allowed.end(), p.model) == allowed.end())
    fail(ErrorCode::InvalidArgument,
         std::string(op) + " does not accept a " + to_string(p.model) + " point");
  require_valid(p);
}

Point make(Model model, int n, int k, MatrixXd data) {
  return Point{model, n, k, std::move(data), std::nullopt};
}

std::pair<Rational, Rational> involution_ab() { return {Rational(1), Rational(-1)}; }

}  // namespace

Point phi1(const Point& q) {
  expect_model(q, {Model::GrassmannOrthogonalQuotient}, "phi1");
  return make(Model::GrassmannStiefelQuotient, q.n, q.k, q.data.leftCols(q.k));
}

Point phi1_inv(const Point& y) {
  expect_model(y, {Model::GrassmannStiefelQuotient}, "phi1_inv");
  const auto eig = linalg::sym_eig(y.data * y.data.transpose());
  return make(Model::GrassmannOrthogonalQuotient, y.n, y.k, eig.vectors);
}

Point phi2(const Point& y) {
  expect_model(y, {Model::GrassmannStiefelQuotient}, "phi2");
  return make(Model::Projection, y.n, y.k, y.data * y.data.transpose());
}

Point phi2_inv(const Point& p) {
  expect_model(p, {Model::Projection}, "phi2_inv");
  const auto eig = linalg::sym_eig(p.data);
  return make(Model::GrassmannStiefelQuotient, p.n, p.k, eig.vectors.leftCols(p.k));
}

Point phi3(const Point& p, const Rational& a, const Rational& b) {
  expect_model(p, {Model::Projection}, "phi3");
  require(a != b, "phi3 needs a != b");
  const double ad = a.get_d(), bd = b.get_d();
  Point w = make(Model::Quadratic, p.n, p.k,
                 (ad - bd) * p.data + bd * MatrixXd::Identity(p.n, p.n));
  w.ab = std::make_pair(a, b);
  return w;
}

Point phi3_inv(const Point& w) {
  expect_model(w, {Model::Quadratic, Model::Involution}, "phi3_inv");
  const auto [a, b] = w.model == Model::Involution ? involution_ab() : *w.ab;
  const double ad = a.get_d(), bd = b.get_d();
  return make(Model::Projection, w.n, w.k,
              (w.data - bd * MatrixXd::Identity(w.n, w.n)) / (ad - bd));
}

RationalMatrix phi3_exact(const RationalMatrix& p, const Rational& a, const Rational& b) {
  require(a != b, "phi3 needs a != b");
  require(p.rows() == p.cols(), "phi3 needs a square matrix");
  RationalMatrix w(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) w(i, j) = (a - b) * p(i, j) + (i == j ? b : Rational(0));
  return w;
}

RationalMatrix phi3_inv_exact(const RationalMatrix& w, const Rational& a, const Rational& b) {
  require(a != b, "phi3_inv needs a != b");
  require(w.rows() == w.cols(), "phi3_inv needs a square matrix");
  RationalMatrix p(w.rows(), w.cols());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) p(i, j) = (w(i, j) - (i == j ? b : Rational(0))) / (a - b);
  return p;
}

Point phi4(const Point& y) {
  expect_model(y, {Model::GrassmannStiefelQuotient}, "phi4");
  return make(Model::GrassmannFullRankQuotient, y.n, y.k, y.data);
}

Point phi4_inv(const Point& s) {
  expect_model(s, {Model::GrassmannFullRankQuotient}, "phi4_inv");
  return make(Model::GrassmannStiefelQuotient, s.n, s.k, linalg::qr_condensed(s.data).q);
}

Point phi5(const Point& q) {
  expect_model(q, {Model::GrassmannOrthogonalQuotient}, "phi5");
  return make(Model::GrassmannParabolicQuotient, q.n, q.k, q.data);
}

Point phi5_inv(const Point& x) {
  expect_model(x, {Model::GrassmannParabolicQuotient}, "phi5_inv");
  return make(Model::GrassmannOrthogonalQuotient, x.n, x.k, linalg::qr_full(x.data).q);
}

Point psi1(const Point& q) {
  expect_model(q, {Model::StiefelOrthogonalQuotient}, "psi1");
  return make(Model::Stiefel, q.n, q.k, q.data.leftCols(q.k));
}

Point psi1_inv(const Point& y) {
  expect_model(y, {Model::Stiefel}, "psi1_inv");
  const auto eig = linalg::sym_eig(y.data * y.data.transpose());
  MatrixXd q = eig.vectors;
  q.leftCols(y.k) = y.data;
  return make(Model::StiefelOrthogonalQuotient, y.n, y.k, std::move(q));
}

Point psi2(const Point& x) {
  expect_model(x, {Model::StiefelParabolicQuotient}, "psi2");
  return make(Model::FullRank, x.n, x.k, x.data.leftCols(x.k));
}

Point psi2_inv(const Point& s) {
  expect_model(s, {Model::FullRank}, "psi2_inv");
  const int n = s.n, k = s.k;
  const double scale = s.data.squaredNorm();
  const auto ldl = linalg::ldlt_nopivot(s.data * s.data.transpose(), k,
                                        Tolerances{}.rank * std::max(1.0, scale));
  const MatrixXd l11 = ldl.l.topLeftCorner(k, k);
  const MatrixXd m = l11.triangularView<Eigen::UnitLower>().solve(s.data.topRows(k));
  MatrixXd x = ldl.l;
  x.leftCols(k) = ldl.l.leftCols(k) * m;
  return make(Model::StiefelParabolicQuotient, n, k, std::move(x));
}

Point rho(const Point& x) {
  expect_model(x, {Model::CartanQuotient}, "rho");
  MatrixXd s = x.data.transpose() * x.data;
  s = 0.5 * (s + s.transpose());
  return make(Model::Spd, x.n, x.n, std::move(s));
}

Point rho_inv(const Point& s) {
  expect_model(s, {Model::Spd}, "rho_inv");
  return make(Model::CartanQuotient, s.n, s.n, linalg::cholesky_upper(s.data));
}

namespace {

MatrixXd span_projector(const MatrixXd& cols) {
  const MatrixXd y = linalg::qr_condensed(cols).q;
  return y * y.transpose();
}

// Complete invariant of the coset (or the point itself) plus the scale used
// for relative comparison.
std::pair<MatrixXd, double> invariant(const Point& p) {
  switch (p.model) {
    case Model::GrassmannOrthogonalQuotient:
    case Model::GrassmannStiefelQuotient: {
      const MatrixXd y = p.data.leftCols(p.k);
      return {y * y.transpose(), 1.0};
    }
    case Model::GrassmannParabolicQuotient:
    case Model::GrassmannFullRankQuotient:
      return {span_projector(p.data.leftCols(p.k)), 1.0};
    case Model::StiefelOrthogonalQuotient:
      return {p.data.leftCols(p.k), 1.0};
    case Model::StiefelParabolicQuotient: {
      MatrixXd first = p.data.leftCols(p.k);
      const double scale = std::max(1.0, linalg::max_abs(first));
      return {std::move(first), scale};
    }
    case Model::CartanQuotient: {
      MatrixXd g = p.data.transpose() * p.data;
      const double scale = std::max(1.0, linalg::max_abs(g));
      return {std::move(g), scale};
    }
    default:
      return {p.data, std::max(1.0, linalg::max_abs(p.data))};
  }
}

}  // namespace

double coset_distance(const Point& a, const Point& b) {
  require(a.model == b.model, "same_coset needs matching models (" + to_string(a.model) + " vs " +
                                  to_string(b.model) + ")");
  require(a.n == b.n && a.k == b.k, "same_coset needs matching dimensions");
  const auto [ia, sa] = invariant(a);
  const auto [ib, sb] = invariant(b);
  if (ia.rows() != ib.rows() || ia.cols() != ib.cols()) return INFINITY;
  return linalg::max_abs(ia - ib) / std::max(sa, sb);
}

bool same_coset(const Point& a, const Point& b, double tol) { return coset_distance(a, b) <= tol; }

namespace {

struct Edge {
  Model from;
  Model to;
  std::string name;
  std::function<Point(const Point&, const std::optional<std::pair<Rational, Rational>>&)> apply;
};

std::vector<Edge> edges() {
  using AB = std::optional<std::pair<Rational, Rational>>;
  auto plain = [](Point (*f)(const Point&)) {
    return [f](const Point& p, const AB&) { return f(p); };
  };
  std::vector<Edge> e;
  auto both = [&](Model a, Model b, const std::string& name, Point (*f)(const Point&),
                  Point (*finv)(const Point&)) {
    e.push_back({a, b, name, plain(f)});
    e.push_back({b, a, name + "^-1", plain(finv)});
  };
  both(Model::GrassmannOrthogonalQuotient, Model::GrassmannStiefelQuotient, "phi1", phi1, phi1_inv);
  both(Model::GrassmannStiefelQuotient, Model::Projection, "phi2", phi2, phi2_inv);
  both(Model::GrassmannStiefelQuotient, Model::GrassmannFullRankQuotient, "phi4", phi4, phi4_inv);
  both(Model::GrassmannOrthogonalQuotient, Model::GrassmannParabolicQuotient, "phi5", phi5,
       phi5_inv);
  both(Model::StiefelOrthogonalQuotient, Model::Stiefel, "psi1", psi1, psi1_inv);
  both(Model::StiefelParabolicQuotient, Model::FullRank, "psi2", psi2, psi2_inv);
  both(Model::CartanQuotient, Model::Spd, "rho", rho, rho_inv);

  e.push_back({Model::Projection, Model::Quadratic, "phi3", [](const Point& p, const AB& ab) {
                 require(ab.has_value(), "converting to the quadratic model needs (a, b)");
                 return phi3(p, ab->first, ab->second);
               }});
  e.push_back({Model::Quadratic, Model::Projection, "phi3^-1",
               [](const Point& p, const AB&) { return phi3_inv(p); }});
  e.push_back({Model::Projection, Model::Involution, "phi3[a=1,b=-1]",
               [](const Point& p, const AB&) {
                 Point w = phi3(p, 1, -1);
                 w.model = Model::Involution;
                 w.ab.reset();
                 return w;
               }});
  e.push_back({Model::Involution, Model::Projection, "phi3[a=1,b=-1]^-1",
               [](const Point& p, const AB&) { return phi3_inv(p); }});
  return e;
}

}  // namespace

Route convert(const Point& from, Model to, std::optional<std::pair<Rational, Rational>> ab) {
  require_valid(from);
  Route route{{}, from};
  if (from.model == to) {
    if (to != Model::Quadratic || !ab || (from.ab && *from.ab == *ab)) return route;
  }
  const auto graph = edges();
  // Breadth-first search; the map graph is a forest so the path is unique.
  std::map<Model, int> via;  // model -> index of the edge used to reach it
  std::deque<Model> queue{from.model};
  via[from.model] = -1;
  while (!queue.empty()) {
    const Model m = queue.front();
    queue.pop_front();
    for (int i = 0; i < static_cast<int>(graph.size()); ++i) {
      if (graph[i].from != m || via.count(graph[i].to)) continue;
      via[graph[i].to] = i;
      queue.push_back(graph[i].to);
    }
  }
  if (from.model == to && to == Model::Quadratic) {
    // Re-parameterize Gr_{a,b} -> Gr_{a',b'} through the projection model.
    route.result = phi3(phi3_inv(from), ab->first, ab->second);
    route.steps = {"phi3^-1", "phi3"};
    return route;
  }
  if (!via.count(to))
    fail(ErrorCode::NoPath, "no conversion path from " + to_string(from.model) + " to " +
                                to_string(to));
  std::vector<int> path;
  for (Model m = to; via.at(m) >= 0; m = graph[via.at(m)].from) path.push_back(via.at(m));
  std::reverse(path.begin(), path.end());
  for (int i : path) {
    route.result = graph[i].apply(route.result, ab);
    route.steps.push_back(graph[i].name);
  }
  return route;
}

}  // namespace grasshard::conversions
