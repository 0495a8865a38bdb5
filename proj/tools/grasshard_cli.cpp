// Command-line front end. Talks to the library only through grasshard.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error,
// 3 feature-gated functionality.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasshard/grasshard.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGated = 3;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(gh_status s) { return s == GH_ERR_NOT_IMPLEMENTED ? kExitGated : kExitUsage; }

void check(gh_status s, const std::string& context) {
  if (s != GH_OK)
    throw CliError{exit_code_for(s), context + ": " + gh_status_string(s) + ": " + gh_last_error()};
}

struct Deleter {
  void operator()(gh_graph* p) const { gh_graph_free(p); }
  void operator()(gh_instance* p) const { gh_instance_free(p); }
  void operator()(gh_point* p) const { gh_point_free(p); }
  void operator()(gh_report* p) const { gh_report_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  gh_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temp file in the target directory, then rename; "-" or empty means stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitUsage, "cannot write " + path};
    out << text;
    out.flush();
    if (!out) throw CliError{kExitUsage, "cannot write " + path};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CliError{kExitUsage, "cannot move output into " + path};
  }
}

void require_distinct(const std::vector<std::string>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (!paths[i].empty() && paths[i] != "-" && paths[i] == paths[j])
        throw CliError{kExitUsage, "input and output paths must be distinct (" + paths[i] + ")"};
}

const char* opt_cstr(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

// --- graph-gen --------------------------------------------------------------

struct GraphGenArgs {
  std::string family;
  int n = 0;
  std::string p = "1/2";
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out;
};

std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& p) {
  const auto slash = p.find('/');
  try {
    if (slash == std::string::npos) {
      const auto v = std::stoull(p);
      return {v, 1};
    }
    return {std::stoull(p.substr(0, slash)), std::stoull(p.substr(slash + 1))};
  } catch (const std::exception&) {
    throw CliError{kExitUsage, "--p must be a fraction like 1/2"};
  }
}

int run_graph_gen(const GraphGenArgs& a) {
  if (a.family == "gnp" && !a.seed) throw CliError{kExitUsage, "graph-gen gnp needs --seed"};
  const auto [num, den] = parse_probability(a.p);
  gh_graph* raw = nullptr;
  check(gh_graph_generate(a.family.c_str(), a.n, num, den, a.seed.value_or(0), &raw), "graph-gen");
  Handle<gh_graph> g(raw);
  char* text = nullptr;
  if (a.format == "edges")
    check(gh_graph_to_edge_list(g.get(), &text), "graph-gen");
  else
    check(gh_graph_to_json(g.get(), &text), "graph-gen");
  write_output(a.out, take(text));
  return kExitOk;
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string reduction;
  std::string graph;
  std::string matrix;
  int k = 1;
  std::string pullback;
  int pullback_k = 0;
  bool nesterov = false;
  std::string out;
};

int run_reduce(const ReduceArgs& a) {
  require_distinct({a.graph, a.matrix, a.out});
  static const std::vector<std::string> graph_reductions{"clique-decision", "clique-number",
                                                         "simplex-ms", "density", "nesterov"};
  const bool from_graph = std::find(graph_reductions.begin(), graph_reductions.end(),
                                    a.reduction) != graph_reductions.end();
  gh_instance* raw = nullptr;
  if (from_graph) {
    if (a.graph.empty()) throw CliError{kExitUsage, "reduce " + a.reduction + " needs --graph"};
    gh_graph* graw = nullptr;
    check(gh_graph_parse(read_file(a.graph).c_str(), &graw), "reading " + a.graph);
    Handle<gh_graph> g(graw);
    check(gh_reduce_graph(a.reduction.c_str(), g.get(), a.k, a.nesterov ? 1 : 0, &raw), "reduce");
  } else {
    if (a.matrix.empty()) throw CliError{kExitUsage, "reduce " + a.reduction + " needs --matrix"};
    check(gh_reduce_matrix(a.reduction.c_str(), read_file(a.matrix).c_str(), a.k, &raw), "reduce");
  }
  Handle<gh_instance> inst(raw);
  if (!a.pullback.empty()) {
    gh_instance* pulled = nullptr;
    check(gh_instance_pullback(inst.get(), a.pullback.c_str(), a.pullback_k, &pulled), "pullback");
    inst.reset(pulled);
  }
  char* text = nullptr;
  check(gh_instance_to_json(inst.get(), &text), "reduce");
  write_output(a.out, take(text));
  return kExitOk;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string method = "multistart";
  int starts = 20;
  int iters = 500;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string csv;
};

int run_solve(const SolveArgs& a) {
  require_distinct({a.instance, a.out, a.csv});
  if (a.method == "multistart" && !a.seed) throw CliError{kExitUsage, "solve --method multistart needs --seed"};
  gh_instance* iraw = nullptr;
  check(gh_instance_parse(read_file(a.instance).c_str(), &iraw), "reading " + a.instance);
  Handle<gh_instance> inst(iraw);
  gh_report* rraw = nullptr;
  if (a.method == "multistart")
    check(gh_solve_multistart(inst.get(), a.starts, a.iters, *a.seed, &rraw), "solve");
  else
    check(gh_solve_closed_form(inst.get(), &rraw), "solve");
  Handle<gh_report> report(rraw);
  char* text = nullptr;
  check(gh_report_to_json(report.get(), &text), "solve");
  write_output(a.out, take(text));
  if (!a.csv.empty()) {
    check(gh_report_to_csv(report.get(), &text), "solve");
    write_output(a.csv, take(text));
  }
  return kExitOk;
}

// --- convert ----------------------------------------------------------------

struct ConvertArgs {
  std::string from;
  std::string to;
  std::string in;
  std::string out;
  std::optional<std::string> a;
  std::optional<std::string> b;
};

int run_convert(const ConvertArgs& c) {
  require_distinct({c.in, c.out});
  gh_point* praw = nullptr;
  check(gh_point_parse(read_file(c.in).c_str(), &praw), "reading " + c.in);
  Handle<gh_point> p(praw);
  // The point file names its own model; --from must agree with it.
  char* src = nullptr;
  check(gh_point_to_json(p.get(), &src), "convert");
  const std::string src_json = take(src);
  if (src_json.find("\"model\": \"" + c.from + "\"") == std::string::npos)
    throw CliError{kExitUsage, "--from " + c.from + " does not match the model of " + c.in};

  gh_point* out = nullptr;
  char* steps = nullptr;
  check(gh_convert(p.get(), c.to.c_str(), opt_cstr(c.a), opt_cstr(c.b), &out, &steps), "convert");
  Handle<gh_point> result(out);
  std::cerr << "path: " << take(steps);
  char* text = nullptr;
  check(gh_point_to_json(result.get(), &text), "convert");
  write_output(c.out, take(text));
  return kExitOk;
}

// --- lift -------------------------------------------------------------------

struct LiftArgs {
  std::string d;
  int k = 1;
  std::string out;
};

int run_lift(const LiftArgs& a) {
  std::vector<double> d;
  std::stringstream ss(a.d);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      d.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError{kExitUsage, "--d must be a comma-separated list of numbers"};
    }
  }
  gh_point* raw = nullptr;
  check(gh_lift_diagonal(d.data(), static_cast<int>(d.size()), a.k, &raw), "lift");
  Handle<gh_point> p(raw);
  char* text = nullptr;
  check(gh_point_to_json(p.get(), &text), "lift");
  write_output(a.out, take(text));
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  int nmax = 6;
  int starts = 20;
  int iters = 500;
  bool nesterov = false;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    char* names = nullptr;
    check(gh_verify_suites(&names), "verify");
    for (const auto& name : nlohmann::json::parse(take(names))) suites.push_back(name.get<std::string>());
    if (!a.nesterov) std::erase(suites, std::string("nesterov"));
  } else {
    suites.push_back(a.suite);
  }
  bool all_passed = true;
  auto summary = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    int passed = 0;
    char* text = nullptr;
    check(gh_verify(s.c_str(), a.seed, a.nmax, a.starts, a.iters, a.nesterov ? 1 : 0, &passed, &text),
          "verify " + s);
    summary.push_back(nlohmann::ordered_json::parse(take(text)));
    all_passed = all_passed && passed;
    std::cerr << s << ": " << (passed ? "pass" : "FAIL") << "\n";
  }
  write_output(a.out, (a.suite == "all" ? summary : summary.front()).dump(2) + "\n");
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial optimization over Grassmann, Stiefel and Cartan manifold models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gh_version()));

  GraphGenArgs gg;
  auto* cmd_gg = app.add_subcommand("graph-gen", "Generate a graph from a named family");
  cmd_gg->add_option("--family", gg.family, "complete, cycle, path, empty, petersen or gnp")->required();
  cmd_gg->add_option("--n", gg.n, "Number of vertices (ignored for petersen)");
  cmd_gg->add_option("--p", gg.p, "Edge probability for gnp as a fraction")->capture_default_str();
  cmd_gg->add_option("--seed", gg.seed, "Seed (required for gnp)");
  cmd_gg->add_option("--format", gg.format, "json or edges")
      ->check(CLI::IsMember({"json", "edges"}))
      ->capture_default_str();
  cmd_gg->add_option("--out", gg.out, "Output file (stdout if omitted)");

  ReduceArgs rd;
  auto* cmd_rd = app.add_subcommand("reduce", "Build an optimization instance from a graph or matrix");
  cmd_rd->add_option("reduction", rd.reduction,
                     "clique-decision, clique-number, simplex-ms, density, nesterov, copositivity, "
                     "lp-stiefel, lp-grassmann or lp-spd")
      ->required();
  cmd_rd->add_option("--graph", rd.graph, "Graph file (JSON or edge list)");
  cmd_rd->add_option("--matrix", rd.matrix, "Matrix file: JSON array of rows of rationals");
  cmd_rd->add_option("-k", rd.k, "Subspace dimension k")->capture_default_str();
  cmd_rd->add_option("--pullback", rd.pullback,
                     "Pull back to stiefel, orthogonal, first-column-stiefel or first-column-orthogonal");
  cmd_rd->add_option("--pullback-k", rd.pullback_k, "Column count for first-column pullbacks");
  cmd_rd->add_flag("--enable-nesterov", rd.nesterov, "Enable the feature-gated nesterov cubic");
  cmd_rd->add_option("--out", rd.out, "Output instance file (stdout if omitted)");

  SolveArgs sv;
  auto* cmd_sv = app.add_subcommand("solve", "Solve an instance and write a report");
  cmd_sv->add_option("--instance", sv.instance, "Instance JSON file")->required();
  cmd_sv->add_option("--method", sv.method, "multistart or closed-form")
      ->check(CLI::IsMember({"multistart", "closed-form"}))
      ->capture_default_str();
  cmd_sv->add_option("--starts", sv.starts, "Number of starts")->capture_default_str();
  cmd_sv->add_option("--iters", sv.iters, "Iterations per start")->capture_default_str();
  cmd_sv->add_option("--seed", sv.seed, "Seed (required for multistart)");
  cmd_sv->add_option("--out", sv.out, "Report JSON file (stdout if omitted)");
  cmd_sv->add_option("--csv", sv.csv, "Per-start CSV summary file");

  ConvertArgs cv;
  auto* cmd_cv = app.add_subcommand("convert", "Map a point between manifold models");
  cmd_cv->add_option("--from", cv.from, "Model tag of the input point")->required();
  cmd_cv->add_option("--to", cv.to, "Target model tag")->required();
  cmd_cv->add_option("--in", cv.in, "Input point JSON")->required();
  cmd_cv->add_option("--out", cv.out, "Output point JSON (stdout if omitted)");
  cmd_cv->add_option("--a", cv.a, "Quadratic model parameter a (rational)");
  cmd_cv->add_option("--b", cv.b, "Quadratic model parameter b (rational)");

  LiftArgs lf;
  auto* cmd_lf = app.add_subcommand("lift", "Rank-k projection with a prescribed diagonal");
  cmd_lf->add_option("--d", lf.d, "Comma-separated target diagonal")->required();
  cmd_lf->add_option("--k", lf.k, "Rank")->required();
  cmd_lf->add_option("--out", lf.out, "Output point JSON (stdout if omitted)");

  VerifyArgs vf;
  auto* cmd_vf = app.add_subcommand("verify", "Run a verification suite");
  cmd_vf->add_option("suite", vf.suite,
                     "roundtrips, motzkin-straus, clique-decision, density, schur-horn, "
                     "lp-closed-form, copositivity, pullbacks, cor73-constant, gradients, "
                     "nesterov or all")
      ->required();
  cmd_vf->add_option("--seed", vf.seed, "Seed")->capture_default_str();
  cmd_vf->add_option("--nmax", vf.nmax, "Largest graph size")->capture_default_str();
  cmd_vf->add_option("--starts", vf.starts, "Multistart starts")->capture_default_str();
  cmd_vf->add_option("--iters", vf.iters, "Multistart iterations")->capture_default_str();
  cmd_vf->add_flag("--enable-nesterov", vf.nesterov, "Enable the feature-gated nesterov suite");
  cmd_vf->add_option("--out", vf.out, "Summary JSON file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_gg) return run_graph_gen(gg);
    if (*cmd_rd) return run_reduce(rd);
    if (*cmd_sv) return run_solve(sv);
    if (*cmd_cv) return run_convert(cv);
    if (*cmd_lf) return run_lift(lf);
    if (*cmd_vf) return run_verify(vf);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
