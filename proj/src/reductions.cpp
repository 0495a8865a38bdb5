#include "grasshard/reductions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "grasshard/error.hpp"

namespace grasshard {

namespace {

constexpr std::array<std::pair<Domain, const char*>, 8> kDomainNames{{
    {Domain::Grassmann, "grassmann"},
    {Domain::Quadratic, "quadratic"},
    {Domain::Simplex, "simplex"},
    {Domain::Density, "density"},
    {Domain::Stiefel, "stiefel"},
    {Domain::Orthogonal, "orthogonal"},
    {Domain::Sphere, "sphere"},
    {Domain::Spd, "spd"},
}};

std::string graph_source(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + ";edges=";
  bool first = true;
  for (const auto& [i, j] : g.edges()) {
    if (!first) s += ',';
    s += std::to_string(i) + '-' + std::to_string(j);
    first = false;
  }
  return s;
}

std::string matrix_source(const RationalMatrix& a) {
  std::string s = "[";
  for (int i = 0; i < a.rows(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < a.cols(); ++j) s += (j ? "," : "") + to_string(a(i, j));
    s += "]";
  }
  return s + "]";
}

void check_k(const Graph& g, int k) {
  require(k >= 1 && k <= g.n(), "k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                                     ", n = " + std::to_string(g.n()) + ")");
}

// 2 * sum over stored edges of v_i v_j, with v_i the i-th diagonal entry (or
// vector entry when vec is true).
SparsePoly edge_form(const Graph& g, VarShape shape, bool vec) {
  SparsePoly f(shape);
  for (const auto& [i, j] : g.edges()) {
    const VarIndex a = vec ? VarIndex{i, 1} : VarIndex{i, i};
    const VarIndex b = vec ? VarIndex{j, 1} : VarIndex{j, j};
    f.add_term(Monomial({{a, 1}, {b, 1}}), 2);
  }
  return f;
}

Rational ms_value(int k, int omega) { return Rational(k * k) * Rational(omega - 1, omega); }

// k/omega on the lexicographically smallest maximum clique.
std::vector<Rational> clique_witness(const Graph& g, int k) {
  const auto clique = maximum_clique(g);
  std::vector<Rational> w(g.n(), Rational(0));
  const Rational share(k, static_cast<long>(clique.size()));
  for (int v : clique) w[v - 1] = share;
  for (auto& q : w) q.canonicalize();
  return w;
}

VarShape expected_shape(const ReductionInstance& inst) {
  switch (inst.domain) {
    case Domain::Grassmann:
    case Domain::Quadratic:
    case Domain::Density:
    case Domain::Spd:
      return VarShape::symmetric_matrix(inst.n);
    case Domain::Simplex:
    case Domain::Sphere:
      return VarShape::vector(inst.n);
    case Domain::Stiefel:
      return VarShape::matrix(inst.n, inst.k);
    case Domain::Orthogonal:
      return VarShape::matrix(inst.n, inst.n);
  }
  return {};
}

ReductionInstance graph_instance(Domain domain, const Graph& g, int k, SparsePoly f,
                                 const char* reduction, const char* anchor) {
  ReductionInstance inst;
  inst.domain = domain;
  inst.n = g.n();
  inst.k = k;
  inst.objective = std::move(f);
  inst.provenance = {reduction, graph_source(g), anchor};
  return inst;
}

}  // namespace

std::string to_string(Sense sense) { return sense == Sense::Maximize ? "maximize" : "minimize"; }

Sense parse_sense(const std::string& tag) {
  if (tag == "maximize") return Sense::Maximize;
  if (tag == "minimize") return Sense::Minimize;
  fail(ErrorCode::Parse, "unknown sense \"" + tag + "\"");
}

std::string to_string(Domain domain) {
  for (const auto& [d, name] : kDomainNames)
    if (d == domain) return name;
  return "unknown";
}

Domain parse_domain(const std::string& tag) {
  for (const auto& [d, name] : kDomainNames)
    if (tag == name) return d;
  fail(ErrorCode::Parse, "unknown instance model \"" + tag + "\"");
}

double TheoreticalValue::to_double() const {
  const double v = radicand.get_d();
  return is_sqrt ? std::sqrt(v) : v;
}

std::string TheoreticalValue::expression() const {
  return is_sqrt ? "sqrt(" + grasshard::to_string(radicand) + ")" : grasshard::to_string(radicand);
}

void check_instance(const ReductionInstance& inst) {
  require(inst.n >= 1, "instance needs n >= 1");
  const bool square = inst.domain == Domain::Orthogonal || inst.domain == Domain::Spd ||
                      inst.domain == Domain::Sphere;
  require(square || (inst.k >= 1 && inst.k <= inst.n), "instance needs 1 <= k <= n");
  if (inst.domain == Domain::Quadratic)
    require(inst.ab.has_value() && inst.ab->first != inst.ab->second,
            "quadratic instances need distinct (a, b)");
  if (inst.domain == Domain::Density) require(inst.k == 1, "density instances have k = 1");
  if (!(inst.objective.shape() == expected_shape(inst)))
    fail(ErrorCode::InvalidArgument,
         "objective variable shape does not match the " + to_string(inst.domain) + " model");
}

ReductionInstance clique_decision_form(const Graph& g, int k) {
  check_k(g, k);
  const int n = g.n();
  SparsePoly f = edge_form(g, VarShape::symmetric_matrix(n), false);
  for (int i = 1; i <= n; ++i) f.add_term(Monomial::of({i, i}, 2), 1);
  auto inst = graph_instance(Domain::Grassmann, g, k, std::move(f), "clique-decision", "Prop 4.1");
  if (has_k_clique(g, k)) {
    inst.theoretical_value = TheoreticalValue::rational(k * k);
    std::vector<Rational> d(n, Rational(0));
    // The lexicographically first k-clique inside the smallest maximum clique.
    const auto clique = maximum_clique(g);
    for (int i = 0; i < k; ++i) d[clique[i] - 1] = 1;
    inst.witness = std::move(d);
  }
  inst.context["has_k_clique"] = inst.theoretical_value ? "true" : "false";
  inst.context["gap_bound"] = to_string(Rational(k * k) - Rational(1, (n + 1) * (n + 1)));
  if (n - k - 1 >= 1)
    inst.context["fptas_epsilon"] = to_string(Rational(1, 2 * k * k * (n - k - 1) * (n - k - 1)));
  return inst;
}

ReductionInstance clique_number_form(const Graph& g, int k) {
  check_k(g, k);
  auto inst = graph_instance(Domain::Grassmann, g, k,
                             edge_form(g, VarShape::symmetric_matrix(g.n()), false),
                             "clique-number", "Prop 5.3");
  const int omega = clique_number(g);
  inst.context["omega"] = std::to_string(omega);
  inst.context["fptas_epsilon"] = to_string(Rational(1, 2 * k * k * g.n() * g.n()));
  if (omega >= k) {
    inst.theoretical_value = TheoreticalValue::rational(ms_value(k, omega));
    inst.witness = clique_witness(g, k);
  }
  return inst;
}

ReductionInstance simplex_ms_form(const Graph& g, int k) {
  check_k(g, k);
  auto inst = graph_instance(Domain::Simplex, g, k, edge_form(g, VarShape::vector(g.n()), true),
                             "simplex-motzkin-straus", "Prop 5.1");
  const int omega = clique_number(g);
  inst.context["omega"] = std::to_string(omega);
  if (omega >= k) {
    inst.theoretical_value = TheoreticalValue::rational(ms_value(k, omega));
    inst.witness = clique_witness(g, k);
  }
  return inst;
}

ReductionInstance density_qp_form(const Graph& g) {
  require(g.n() >= 1, "density form needs n >= 1");
  auto inst = graph_instance(Domain::Density, g, 1,
                             edge_form(g, VarShape::symmetric_matrix(g.n()), false), "density-qp",
                             "Cor 5.5");
  const int omega = clique_number(g);
  inst.context["omega"] = std::to_string(omega);
  inst.theoretical_value = TheoreticalValue::rational(ms_value(1, omega));
  inst.witness = clique_witness(g, 1);
  return inst;
}

SparsePoly quartic_sphere_lift(const SparsePoly& f) {
  const VarShape& s = f.shape();
  require(s.cols == 1 && !s.symmetric, "quartic lift needs a vector variable");
  require(!f.is_zero() && f.is_homogeneous(3), "quartic lift needs a homogeneous cubic");
  const int n = s.rows + 1;
  const VarShape target = VarShape::vector(n);
  const SparsePoly fx =
      substitute(f, target, [&](VarIndex v) { return SparsePoly::variable(target, v.row); });
  return fx * SparsePoly::variable(target, n);
}

ReductionInstance grassmann_h_from_quartic(const SparsePoly& g) {
  const VarShape& s = g.shape();
  require(s.cols == 1 && !s.symmetric, "h construction needs a vector variable");
  require(!g.is_zero() && g.is_homogeneous(4), "h construction needs a homogeneous quartic");
  const int n = s.rows;
  const VarShape target = VarShape::symmetric_matrix(n);
  SparsePoly h(target);
  for (const auto& [m, c] : g.terms()) {
    std::vector<int> idx;
    for (const auto& [v, e] : m.factors())
      for (int r = 0; r < e; ++r) idx.push_back(v.row);
    std::sort(idx.begin(), idx.end());
    h.add_term(Monomial({{{idx[0], idx[1]}, 1}, {{idx[2], idx[3]}, 1}}), c);
  }
  ReductionInstance inst;
  inst.domain = Domain::Grassmann;
  inst.n = n;
  inst.k = 1;
  inst.objective = std::move(h);
  inst.provenance = {"grassmann-h-from-quartic", "quartic with " + std::to_string(g.term_count()) +
                                                     " terms",
                     "Cor 7.3"};
  inst.context["lift_constant"] = "3*sqrt(3)/16";
  return inst;
}

double lift_constant() { return 3.0 * std::sqrt(3.0) / 16.0; }

// F(x, y) = sum over non-edges {i < j} of x_i x_j y_ij on the unit sphere of
// R^{n + #non-edges}. With |x|^2 = r^2 and y aligned to (x_i x_j), F reaches
// r^2 sqrt(1 - r^2) * sqrt(max_u sum_{non-edges} u_i u_j) with u on the
// simplex; Motzkin-Straus on the complement gives (1 - 1/alpha)/2, and
// r^2 = 2/3 is optimal, so max F = sqrt(2 (1 - 1/alpha) / 27). Scaling by
// sqrt(27/2) gives sqrt(1 - 1/alpha).
ReductionInstance nesterov_cubic(const Graph& g, bool enabled) {
  if (!enabled)
    fail(ErrorCode::NotImplemented,
         "nesterov cubic is not implemented unless the feature flag is enabled");
  require(g.n() >= 1, "nesterov cubic needs a nonempty graph");
  const int n = g.n();
  std::vector<Graph::Edge> non_edges = g.complement().edges();
  const int dim = n + static_cast<int>(non_edges.size());
  const VarShape shape = VarShape::vector(dim);
  SparsePoly f(shape);
  for (std::size_t e = 0; e < non_edges.size(); ++e) {
    const auto [i, j] = non_edges[e];
    f.add_term(Monomial({{{i, 1}, 1}, {{j, 1}, 1}, {{n + 1 + static_cast<int>(e), 1}, 1}}), 1);
  }
  const int alpha = stability_number(g);
  ReductionInstance inst;
  inst.domain = Domain::Sphere;
  inst.n = dim;
  inst.k = 1;
  inst.objective = std::move(f);
  inst.provenance = {"nesterov-cubic", graph_source(g), "Thm 7.2"};
  inst.theoretical_value =
      TheoreticalValue::sqrt_of(Rational(2, 27) * Rational(alpha - 1, alpha));
  inst.context["alpha"] = std::to_string(alpha);
  inst.context["scale"] = "sqrt(27/2)";
  inst.context["scaled_value"] = "sqrt(" + to_string(Rational(alpha - 1, alpha)) + ")";
  return inst;
}

namespace {

ReductionInstance pullback(const ReductionInstance& inst, Domain target, const char* tag) {
  require(inst.domain == Domain::Grassmann,
          std::string(tag) + " needs a grassmann instance, got " + to_string(inst.domain));
  check_instance(inst);
  ReductionInstance out = inst;
  out.domain = target;
  out.objective = target == Domain::Stiefel ? substitute_gram(inst.objective, inst.k)
                                            : substitute_corner(inst.objective, inst.k);
  out.witness.reset();
  out.provenance.reduction += std::string("+") + tag;
  return out;
}

}  // namespace

ReductionInstance stiefel_pullback(const ReductionInstance& inst) {
  return pullback(inst, Domain::Stiefel, "stiefel-pullback");
}

ReductionInstance orthogonal_pullback(const ReductionInstance& inst) {
  return pullback(inst, Domain::Orthogonal, "orthogonal-pullback");
}

ReductionInstance first_column_pullback(const ReductionInstance& inst, int k, Domain target) {
  require(inst.domain == Domain::Sphere, "first-column pullback needs a sphere instance");
  require(target == Domain::Stiefel || target == Domain::Orthogonal,
          "first-column pullback targets stiefel or orthogonal");
  check_instance(inst);
  if (target == Domain::Orthogonal) k = inst.n;
  require(k >= 1 && k <= inst.n, "first-column pullback needs 1 <= k <= n");
  ReductionInstance out = inst;
  out.domain = target;
  out.k = k;
  out.objective = substitute_first_column(inst.objective, k);
  out.witness.reset();
  out.provenance.reduction += "+first-column-pullback";
  return out;
}

ReductionInstance quadratic_model_transfer(const ReductionInstance& inst, const Rational& a,
                                           const Rational& b) {
  require(inst.domain == Domain::Grassmann, "quadratic transfer needs a grassmann instance");
  require(a != b, "quadratic model needs a != b");
  check_instance(inst);
  ReductionInstance out = inst;
  out.domain = Domain::Quadratic;
  out.ab = std::make_pair(a, b);
  const Rational s = 1 / (a - b);
  out.objective = compose_affine_matrix(inst.objective, s, -b * s);
  out.witness.reset();
  out.provenance.reduction += "+quadratic-model";
  return out;
}

ReductionInstance copositivity_form(const RationalMatrix& a) {
  require(a.rows() == a.cols() && a.rows() >= 1, "copositivity form needs a square matrix");
  const int n = a.rows();
  SparsePoly f(VarShape::symmetric_matrix(n));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) f.add_term(Monomial({{{i, i}, 1}, {{k, k}, 1}}), a(i - 1, k - 1));
  ReductionInstance inst;
  inst.domain = Domain::Spd;
  inst.n = n;
  inst.k = n;
  inst.sense = Sense::Minimize;
  inst.objective = std::move(f);
  inst.provenance = {"copositivity", matrix_source(a), "Lemma 8.1"};
  inst.context["threshold"] = "0";
  return inst;
}

namespace {

ReductionInstance lp_instance(const RationalMatrix& a, Domain domain, VarShape shape, int k,
                              const char* reduction) {
  SparsePoly f(shape);
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) f.add_term(Monomial::of({i, j}), a(i - 1, j - 1));
  ReductionInstance inst;
  inst.domain = domain;
  inst.n = a.rows();
  inst.k = k;
  inst.objective = std::move(f);
  inst.provenance = {reduction, matrix_source(a), "Lemma 9.1"};
  return inst;
}

}  // namespace

ReductionInstance lp_stiefel_form(const RationalMatrix& a) {
  require(a.rows() >= a.cols() && a.cols() >= 1, "stiefel LP needs an n x k matrix with n >= k");
  return lp_instance(a, Domain::Stiefel, VarShape::matrix(a.rows(), a.cols()), a.cols(),
                     "lp-stiefel");
}

ReductionInstance lp_grassmann_form(const RationalMatrix& a, int k) {
  require(a.rows() == a.cols() && a.rows() >= 1, "grassmann LP needs a square matrix");
  require(k >= 1 && k <= a.rows(), "grassmann LP needs 1 <= k <= n");
  return lp_instance(a, Domain::Grassmann, VarShape::symmetric_matrix(a.rows()), k,
                     "lp-grassmann");
}

ReductionInstance lp_spd_form(const RationalMatrix& a) {
  require(a.rows() == a.cols() && a.rows() >= 1, "SPD LP needs a square matrix");
  return lp_instance(a, Domain::Spd, VarShape::symmetric_matrix(a.rows()), a.rows(), "lp-spd");
}

Eigen::MatrixXd linear_coefficients(const SparsePoly& f) {
  require(f.is_zero() || f.is_homogeneous(1), "expected a homogeneous linear objective");
  const VarShape& s = f.shape();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s.rows, s.cols);
  for (const auto& [m, c] : f.terms()) {
    const VarIndex v = m.factors().front().first;
    const double x = c.get_d();
    if (s.symmetric && v.row != v.col) {
      a(v.row - 1, v.col - 1) = 0.5 * x;
      a(v.col - 1, v.row - 1) = 0.5 * x;
    } else {
      a(v.row - 1, v.col - 1) = x;
    }
  }
  return a;
}

}  // namespace grasshard
