#include "grasshard/serialize.hpp"

#include <cstdio>

#include "grasshard/error.hpp"

namespace grasshard::json {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Rational rational_from(const Json& v) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    Rational q(v.get<double>());
    q.canonicalize();
    return q;
  }
  bad("expected a rational (string or integer)");
}

Json rational_to(const Rational& q) { return to_string(q); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json ab_to_json(const std::pair<Rational, Rational>& ab) {
  return Json::array({rational_to(ab.first), rational_to(ab.second)});
}

std::pair<Rational, Rational> ab_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("\"ab\" must be a pair [a, b]");
  return {rational_from(j[0]), rational_from(j[1])};
}

Eigen::MatrixXd row_major(const Json& data, int rows, int cols) {
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * cols)
    bad("\"data\" must hold rows * cols numbers");
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Json& v = data[static_cast<std::size_t>(i) * cols + j];
      if (!v.is_number()) bad("\"data\" entries must be numbers");
      m(i, j) = v.get<double>();
    }
  return m;
}

Json row_major_data(const Eigen::MatrixXd& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return data;
}

Json string_map(const std::map<std::string, std::string>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back(Json::array({i, j}));
  return Json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("\"edges\" must be an array");
  std::vector<Graph::Edge> list;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      bad("each edge must be a pair of integers");
    list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(n, list);
  } catch (const Error& e) {
    bad(std::string("invalid graph: ") + e.what());
  }
}

Json to_json(const SparsePoly& f) {
  const VarShape& s = f.shape();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json mono = Json::array();
    for (const auto& [v, e] : m.factors()) mono.push_back(Json::array({v.row, v.col, e}));
    terms.push_back(Json{{"m", mono}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  Json j{{"shape", Json::array({s.rows, s.cols})}};
  if (s.symmetric) j["symmetric"] = true;
  j["terms"] = terms;
  return j;
}

SparsePoly poly_from_json(const Json& j) {
  const Json& shape = field(j, "shape");
  if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_integer() ||
      !shape[1].is_number_integer())
    bad("\"shape\" must be [rows, cols]");
  VarShape s{shape[0].get<int>(), shape[1].get<int>(), false};
  if (s.rows < 1 || s.cols < 1) bad("\"shape\" must be positive");
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) bad("\"symmetric\" must be a boolean");
    s.symmetric = j["symmetric"].get<bool>();
    if (s.symmetric && s.rows != s.cols) bad("symmetric variables must be square");
  }
  SparsePoly f(s);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const Json& t : terms) {
    std::vector<Monomial::Factor> factors;
    const Json& m = field(t, "m");
    if (!m.is_array()) bad("\"m\" must be an array");
    for (const Json& fac : m) {
      if (!fac.is_array() || fac.size() != 3) bad("monomial factors are [row, col, exponent]");
      for (const Json& x : fac)
        if (!x.is_number_integer()) bad("monomial factors must be integers");
      const VarIndex v{fac[0].get<int>(), fac[1].get<int>()};
      if (!s.contains(v)) bad("monomial variable out of range");
      if (fac[2].get<int>() < 0) bad("negative exponent");
      factors.emplace_back(v, fac[2].get<int>());
    }
    const mpz_class num(string_field(t, "num")), den(string_field(t, "den"));
    if (den == 0) bad("zero denominator");
    Rational c(num, den);
    c.canonicalize();
    f.add_term(Monomial(factors), c);
  }
  return f;
}

Json to_json(const Point& p) {
  Json j{{"model", to_string(p.model)}, {"n", p.n}, {"k", p.k}, {"data", row_major_data(p.data)}};
  if (p.ab) j["ab"] = ab_to_json(*p.ab);
  return j;
}

Point point_from_json(const Json& j) {
  Point p;
  p.model = parse_model(string_field(j, "model"));
  p.n = int_field(j, "n");
  p.k = int_field(j, "k");
  if (p.n < 1 || p.k < 1 || p.k > p.n) bad("point needs 1 <= k <= n");
  const auto [r, c] = representative_shape(p.model, p.n, p.k);
  p.data = row_major(field(j, "data"), r, c);
  if (j.contains("ab")) p.ab = ab_from_json(j["ab"]);
  return p;
}

Json to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.cols(); ++k) row.push_back(rational_to(a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
    bad("matrix must be a nonempty array of rows");
  const int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
  RationalMatrix a(r, c);
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c) bad("ragged matrix rows");
    for (int k = 0; k < c; ++k) a(i, k) = rational_from(rows[i][k]);
  }
  return a;
}

Json to_json(const TheoreticalValue& v) {
  Json j = Json::object();
  if (v.is_sqrt) {
    j["sqrt_expr"] = v.expression();
  } else {
    j["num"] = v.radicand.get_num().get_str();
    j["den"] = v.radicand.get_den().get_str();
  }
  j["value"] = v.to_double();
  return j;
}

TheoreticalValue theoretical_value_from_json(const Json& j) {
  if (j.contains("sqrt_expr")) {
    const std::string e = string_field(j, "sqrt_expr");
    if (e.size() < 7 || e.rfind("sqrt(", 0) != 0 || e.back() != ')')
      bad("\"sqrt_expr\" must read sqrt(p/q)");
    return TheoreticalValue::sqrt_of(parse_rational(e.substr(5, e.size() - 6)));
  }
  Rational q(mpz_class(string_field(j, "num")), mpz_class(string_field(j, "den")));
  if (q.get_den() == 0) bad("zero denominator");
  q.canonicalize();
  return TheoreticalValue::rational(q);
}

Json to_json(const ReductionInstance& inst) {
  Json j{{"model", to_string(inst.domain)}, {"n", inst.n}, {"k", inst.k}};
  if (inst.ab) j["ab"] = ab_to_json(*inst.ab);
  j["sense"] = to_string(inst.sense);
  j["objective"] = to_json(inst.objective);
  j["provenance"] = Json{{"reduction", inst.provenance.reduction},
                         {"source", inst.provenance.source},
                         {"anchor", inst.provenance.anchor}};
  j["theoretical_value"] = inst.theoretical_value ? to_json(*inst.theoretical_value) : Json();
  if (inst.witness) {
    Json w = Json::array();
    for (const auto& q : *inst.witness) w.push_back(rational_to(q));
    j["witness"] = w;
  }
  j["context"] = string_map(inst.context);
  return j;
}

ReductionInstance instance_from_json(const Json& j) {
  ReductionInstance inst;
  inst.domain = parse_domain(string_field(j, "model"));
  inst.n = int_field(j, "n");
  inst.k = int_field(j, "k");
  if (j.contains("ab") && !j["ab"].is_null()) inst.ab = ab_from_json(j["ab"]);
  inst.sense = j.contains("sense") ? parse_sense(string_field(j, "sense")) : Sense::Maximize;
  inst.objective = poly_from_json(field(j, "objective"));
  if (j.contains("provenance")) {
    const Json& p = j["provenance"];
    inst.provenance = {p.value("reduction", ""), p.value("source", ""), p.value("anchor", "")};
  }
  if (j.contains("theoretical_value") && !j["theoretical_value"].is_null())
    inst.theoretical_value = theoretical_value_from_json(j["theoretical_value"]);
  if (j.contains("witness")) {
    std::vector<Rational> w;
    for (const Json& q : j["witness"]) w.push_back(rational_from(q));
    inst.witness = std::move(w);
  }
  if (j.contains("context")) {
    if (!j["context"].is_object()) bad("\"context\" must be an object");
    for (const auto& [k, v] : j["context"].items()) {
      if (!v.is_string()) bad("context values must be strings");
      inst.context[k] = v.get<std::string>();
    }
  }
  try {
    check_instance(inst);
  } catch (const Error& e) {
    bad(std::string("invalid instance: ") + e.what());
  }
  return inst;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", row_major_data(m)}};
}

Json to_json(const SolveReport& r) {
  Json j{{"method", r.method}, {"model", to_string(r.domain)}, {"n", r.n}, {"k", r.k},
         {"sense", to_string(r.sense)}};
  j["value_kind"] = r.infinite ? "+inf" : "finite";
  j["best_value"] = r.infinite ? Json() : Json(r.best_value);
  j["best_start"] = r.best_start;
  if (r.best_point.size() > 0) {
    Json bp = matrix_to_json(r.best_point);
    bp["model"] = r.point_model;
    j["best_point"] = bp;
  } else {
    j["best_point"] = Json();
  }
  if (r.best_projection) {
    Json pp = matrix_to_json(*r.best_projection);
    pp["model"] = "projection";
    j["best_projection"] = pp;
  }
  Json starts = Json::array();
  for (std::size_t s = 0; s < r.per_start.size(); ++s) {
    const auto& rec = r.per_start[s];
    starts.push_back(Json{{"start", s},
                          {"seed", rec.seed},
                          {"iterations", rec.iterations},
                          {"final_value", rec.final_value},
                          {"grad_norm", rec.grad_norm}});
  }
  j["per_start"] = starts;
  if (r.config) {
    const auto& c = *r.config;
    j["config"] = Json{{"starts", c.starts},
                       {"iters", c.iters},
                       {"seed", c.seed},
                       {"step_rule", "armijo"},
                       {"initial_step", c.initial_step},
                       {"shrink", c.shrink},
                       {"armijo_c", c.armijo_c},
                       {"max_backtracks", c.max_backtracks},
                       {"grad_tol", c.grad_tol}};
  }
  j["theoretical_value"] = r.theoretical_value ? to_json(*r.theoretical_value) : Json();
  j["gap"] = r.gap ? Json(*r.gap) : Json();
  j["provenance"] = Json{{"reduction", r.provenance.reduction},
                         {"source", r.provenance.source},
                         {"anchor", r.provenance.anchor}};
  j["context"] = string_map(r.context);
  return j;
}

std::string report_csv(const SolveReport& r) {
  std::string out = "start,seed,iterations,final_value,grad_norm\n";
  for (std::size_t s = 0; s < r.per_start.size(); ++s) {
    const auto& rec = r.per_start[s];
    out += std::to_string(s) + ',' + std::to_string(rec.seed) + ',' +
           std::to_string(rec.iterations) + ',' + format_double(rec.final_value) + ',' +
           format_double(rec.grad_norm) + '\n';
  }
  return out;
}

}  // namespace grasshard::json
