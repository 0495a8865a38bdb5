#include "grasshard/grasshard.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "grasshard/conversions.hpp"
#include "grasshard/error.hpp"
#include "grasshard/graph.hpp"
#include "grasshard/reductions.hpp"
#include "grasshard/schur_horn.hpp"
#include "grasshard/serialize.hpp"
#include "grasshard/solvers.hpp"
#include "grasshard/verify.hpp"

struct gh_graph {
  grasshard::Graph value;
};
struct gh_instance {
  grasshard::ReductionInstance value;
};
struct gh_point {
  grasshard::Point value;
};
struct gh_report {
  grasshard::SolveReport value;
};

namespace {

using namespace grasshard;

thread_local std::string last_error;

gh_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return GH_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return GH_ERR_PARSE;
    case ErrorCode::Io: return GH_ERR_IO;
    case ErrorCode::Numerical: return GH_ERR_NUMERICAL;
    case ErrorCode::NotImplemented: return GH_ERR_NOT_IMPLEMENTED;
    case ErrorCode::NoPath: return GH_ERR_NO_PATH;
    case ErrorCode::Internal: return GH_ERR_INTERNAL;
  }
  return GH_ERR_INTERNAL;
}

template <typename F>
gh_status try_(F&& f) {
  try {
    last_error.clear();
    f();
    return GH_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GH_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GH_ERR_INTERNAL;
  }
}

template <typename T>
const T& deref(const T* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string("null ") + what);
  return *p;
}

void need_out(const void* out) {
  if (!out) fail(ErrorCode::InvalidArgument, "null output pointer");
}

std::string need_text(const char* s, const char* what) {
  if (!s) fail(ErrorCode::InvalidArgument, std::string("null ") + what);
  return s;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<std::pair<Rational, Rational>> ab_from(const char* a, const char* b) {
  if (!a && !b) return std::nullopt;
  if (!a || !b) fail(ErrorCode::InvalidArgument, "a and b must be given together");
  return std::make_pair(parse_rational(a), parse_rational(b));
}

}  // namespace

extern "C" {

const char* gh_version(void) { return "0.1.0"; }

const char* gh_status_string(gh_status status) {
  switch (status) {
    case GH_OK: return "ok";
    case GH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GH_ERR_PARSE: return "parse error";
    case GH_ERR_IO: return "i/o error";
    case GH_ERR_NUMERICAL: return "numerical failure";
    case GH_ERR_NOT_IMPLEMENTED: return "not implemented";
    case GH_ERR_NO_PATH: return "no conversion path";
    case GH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gh_last_error(void) { return last_error.c_str(); }

void gh_string_free(char* s) { std::free(s); }

gh_status gh_graph_parse(const char* text, gh_graph** out) {
  return try_([&] {
    need_out(out);
    const std::string t = need_text(text, "graph text");
    const auto first = t.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && t[first] == '{')
      *out = new gh_graph{json::graph_from_json(json::parse(t))};
    else
      *out = new gh_graph{parse_graph(t)};
  });
}

gh_status gh_graph_generate(const char* family, int n, uint64_t p_num, uint64_t p_den,
                            uint64_t seed, gh_graph** out) {
  return try_([&] {
    need_out(out);
    const GraphFamily fam = parse_family(need_text(family, "family"));
    *out = new gh_graph{generate(fam, GenerateParams{n, p_num, p_den}, seed)};
  });
}

gh_status gh_graph_to_json(const gh_graph* g, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(json::dump(json::to_json(deref(g, "graph").value)));
  });
}

gh_status gh_graph_to_edge_list(const gh_graph* g, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(to_edge_list(deref(g, "graph").value));
  });
}

gh_status gh_graph_size(const gh_graph* g, int* n, size_t* edges) {
  return try_([&] {
    const Graph& graph = deref(g, "graph").value;
    if (n) *n = graph.n();
    if (edges) *edges = graph.edge_count();
  });
}

gh_status gh_graph_clique_number(const gh_graph* g, int* out) {
  return try_([&] {
    need_out(out);
    *out = clique_number(deref(g, "graph").value);
  });
}

gh_status gh_graph_stability_number(const gh_graph* g, int* out) {
  return try_([&] {
    need_out(out);
    *out = stability_number(deref(g, "graph").value);
  });
}

void gh_graph_free(gh_graph* g) { delete g; }

gh_status gh_reduce_graph(const char* reduction, const gh_graph* g, int k, int enable_nesterov,
                          gh_instance** out) {
  return try_([&] {
    need_out(out);
    const std::string r = need_text(reduction, "reduction");
    const Graph& graph = deref(g, "graph").value;
    ReductionInstance inst;
    if (r == "clique-decision")
      inst = clique_decision_form(graph, k);
    else if (r == "clique-number")
      inst = clique_number_form(graph, k);
    else if (r == "simplex-ms")
      inst = simplex_ms_form(graph, k);
    else if (r == "density")
      inst = density_qp_form(graph);
    else if (r == "nesterov")
      inst = nesterov_cubic(graph, enable_nesterov != 0);
    else
      fail(ErrorCode::InvalidArgument, "unknown graph reduction \"" + r + "\"");
    *out = new gh_instance{std::move(inst)};
  });
}

gh_status gh_reduce_matrix(const char* reduction, const char* matrix_json, int k,
                           gh_instance** out) {
  return try_([&] {
    need_out(out);
    const std::string r = need_text(reduction, "reduction");
    const RationalMatrix a =
        json::rational_matrix_from_json(json::parse(need_text(matrix_json, "matrix")));
    ReductionInstance inst;
    if (r == "copositivity")
      inst = copositivity_form(a);
    else if (r == "lp-stiefel")
      inst = lp_stiefel_form(a);
    else if (r == "lp-grassmann")
      inst = lp_grassmann_form(a, k);
    else if (r == "lp-spd")
      inst = lp_spd_form(a);
    else
      fail(ErrorCode::InvalidArgument, "unknown matrix reduction \"" + r + "\"");
    *out = new gh_instance{std::move(inst)};
  });
}

gh_status gh_instance_pullback(const gh_instance* inst, const char* target, int k,
                               gh_instance** out) {
  return try_([&] {
    need_out(out);
    const std::string t = need_text(target, "target");
    const ReductionInstance& in = deref(inst, "instance").value;
    ReductionInstance res;
    if (t == "stiefel")
      res = stiefel_pullback(in);
    else if (t == "orthogonal")
      res = orthogonal_pullback(in);
    else if (t == "first-column-stiefel")
      res = first_column_pullback(in, k, Domain::Stiefel);
    else if (t == "first-column-orthogonal")
      res = first_column_pullback(in, k, Domain::Orthogonal);
    else
      fail(ErrorCode::InvalidArgument, "unknown pullback target \"" + t + "\"");
    *out = new gh_instance{std::move(res)};
  });
}

gh_status gh_instance_parse(const char* text, gh_instance** out) {
  return try_([&] {
    need_out(out);
    *out = new gh_instance{json::instance_from_json(json::parse(need_text(text, "instance")))};
  });
}

gh_status gh_instance_to_json(const gh_instance* inst, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(json::dump(json::to_json(deref(inst, "instance").value)));
  });
}

void gh_instance_free(gh_instance* inst) { delete inst; }

gh_status gh_solve_multistart(const gh_instance* inst, int starts, int iters, uint64_t seed,
                              gh_report** out) {
  return try_([&] {
    need_out(out);
    RgdConfig cfg;
    cfg.starts = starts;
    cfg.iters = iters;
    cfg.seed = seed;
    *out = new gh_report{multistart_rgd(deref(inst, "instance").value, cfg)};
  });
}

gh_status gh_solve_closed_form(const gh_instance* inst, gh_report** out) {
  return try_([&] {
    need_out(out);
    *out = new gh_report{solve_closed_form(deref(inst, "instance").value)};
  });
}

gh_status gh_report_to_json(const gh_report* r, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(json::dump(json::to_json(deref(r, "report").value)));
  });
}

gh_status gh_report_to_csv(const gh_report* r, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(json::report_csv(deref(r, "report").value));
  });
}

gh_status gh_report_best_value(const gh_report* r, double* value, int* infinite) {
  return try_([&] {
    const SolveReport& rep = deref(r, "report").value;
    if (value) *value = rep.infinite ? 0.0 : rep.best_value;
    if (infinite) *infinite = rep.infinite ? 1 : 0;
  });
}

void gh_report_free(gh_report* r) { delete r; }

gh_status gh_point_parse(const char* text, gh_point** out) {
  return try_([&] {
    need_out(out);
    *out = new gh_point{json::point_from_json(json::parse(need_text(text, "point")))};
  });
}

gh_status gh_point_random(const char* model, int n, int k, uint64_t seed, const char* a,
                          const char* b, gh_point** out) {
  return try_([&] {
    need_out(out);
    *out = new gh_point{random_point(parse_model(need_text(model, "model")), n, k, seed, ab_from(a, b))};
  });
}

gh_status gh_point_to_json(const gh_point* p, char** out) {
  return try_([&] {
    need_out(out);
    *out = copy_string(json::dump(json::to_json(deref(p, "point").value)));
  });
}

gh_status gh_point_validate(const gh_point* p, char** violations_json) {
  return try_([&] {
    need_out(violations_json);
    json::Json list = json::Json::array();
    for (const auto& v : validate(deref(p, "point").value))
      list.push_back(json::Json{{"name", v.name}, {"residual", v.residual}});
    *violations_json = copy_string(json::dump(list));
  });
}

gh_status gh_convert(const gh_point* p, const char* to_model, const char* a, const char* b,
                     gh_point** out, char** steps_json) {
  return try_([&] {
    need_out(out);
    const Model to = parse_model(need_text(to_model, "target model"));
    auto route = conversions::convert(deref(p, "point").value, to, ab_from(a, b));
    std::string steps = json::dump(json::Json(route.steps));
    *out = new gh_point{std::move(route.result)};
    if (steps_json) *steps_json = copy_string(steps);
  });
}

gh_status gh_same_coset(const gh_point* x, const gh_point* y, double tol, int* out) {
  return try_([&] {
    need_out(out);
    *out = conversions::same_coset(deref(x, "point").value, deref(y, "point").value, tol) ? 1 : 0;
  });
}

gh_status gh_lift_diagonal(const double* d, int n, int k, gh_point** out) {
  return try_([&] {
    need_out(out);
    if (!d || n < 1) fail(ErrorCode::InvalidArgument, "lift needs a nonempty diagonal");
    *out = new gh_point{lift_diagonal(Eigen::Map<const Eigen::VectorXd>(d, n), k)};
  });
}

void gh_point_free(gh_point* p) { delete p; }

gh_status gh_verify_suites(char** names_json) {
  return try_([&] {
    need_out(names_json);
    *names_json = copy_string(json::dump(json::Json(verify::suite_names())));
  });
}

gh_status gh_verify(const char* suite, uint64_t seed, int nmax, int starts, int iters,
                    int enable_nesterov, int* passed, char** summary_json) {
  return try_([&] {
    verify::Options opts;
    opts.seed = seed;
    opts.nmax = nmax;
    opts.starts = starts;
    opts.iters = iters;
    opts.nesterov = enable_nesterov != 0;
    const auto result = verify::run(need_text(suite, "suite"), opts);
    if (passed) *passed = result.passed ? 1 : 0;
    if (summary_json) *summary_json = copy_string(verify::to_json(result));
  });
}

}  // extern "C"
