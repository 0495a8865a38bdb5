#include "grasshard/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "grasshard/error.hpp"
#include "grasshard/random.hpp"

namespace grasshard {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  require(n >= 1, "graph must have at least one vertex");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [a, b] : edges) {
    require(a >= 1 && a <= n && b >= 1 && b <= n,
            "edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
    require(a != b, "self-loop at vertex " + std::to_string(a));
    const int i = std::min(a, b), j = std::max(a, b);
    char& slot = adj_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    require(!slot, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    slot = 1;
    adj_[static_cast<std::size_t>(j - 1) * n + (i - 1)] = 1;
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return adj_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!adjacent(i, j)) out.emplace_back(i, j);
  return Graph(n_, out);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

bool read_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  return !(in >> rest);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = 0, m = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (!read_ints(line, n, m)) parse_fail(lineno, "expected header \"n m\"");
    header = true;
    break;
  }
  if (!header) parse_fail(lineno, "empty input");
  if (n < 1 || n > 1'000'000) parse_fail(lineno, "vertex count must be positive");
  if (m < 0) parse_fail(lineno, "edge count must be nonnegative");

  std::vector<Graph::Edge> edges;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    long long a = 0, b = 0;
    if (!read_ints(line, a, b)) parse_fail(lineno, "malformed edge line \"" + line + "\"");
    if (a < 1 || a > n || b < 1 || b > n) parse_fail(lineno, "endpoint out of range");
    if (a == b) parse_fail(lineno, "self-loop at vertex " + std::to_string(a));
    const long long i = std::min(a, b), j = std::max(a, b);
    char& s = seen[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    if (s) parse_fail(lineno, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    s = 1;
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (static_cast<long long>(edges.size()) < m)
    parse_fail(lineno, "expected " + std::to_string(m) + " edges, found " +
                           std::to_string(edges.size()));
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) parse_fail(lineno, "trailing content after the declared edges");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbour_masks(const Graph& g) {
  require(g.n() <= kMaxOracleVertices,
          "exhaustive oracles are capped at n <= " + std::to_string(kMaxOracleVertices));
  std::vector<Mask> nb(g.n(), 0);
  for (auto [i, j] : g.edges()) {
    nb[i - 1] |= Mask{1} << (j - 1);
    nb[j - 1] |= Mask{1} << (i - 1);
  }
  return nb;
}

// Branch over candidate sets in increasing vertex order; prune when the
// clique plus all remaining candidates cannot beat the incumbent. Visiting
// vertices in ascending order makes the first maximum found lexicographically
// smallest.
void expand(const std::vector<Mask>& nb, Mask clique, Mask candidates, int size, int& best,
            Mask& best_set) {
  if (candidates == 0) {
    if (size > best) {
      best = size;
      best_set = clique;
    }
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    const Mask bit = Mask{1} << v;
    candidates &= ~bit;
    // Only later vertices remain as candidates to avoid revisiting sets.
    expand(nb, clique | bit, candidates & nb[v], size + 1, best, best_set);
  }
  if (size > best) {
    best = size;
    best_set = clique;
  }
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
  const auto nb = neighbour_masks(g);
  const Mask all = g.n() == 32 ? ~Mask{0} : ((Mask{1} << g.n()) - 1);
  int best = 0;
  Mask best_set = 0;
  expand(nb, 0, all, 0, best, best_set);
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (best_set & (Mask{1} << v)) out.push_back(v + 1);
  return out;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

int stability_number(const Graph& g) { return clique_number(g.complement()); }

bool has_k_clique(const Graph& g, int k) {
  require(k >= 1 && k <= g.n(), "k must lie in 1..n");
  const auto nb = neighbour_masks(g);
  // Direct search for any k-subset; independent of clique_number's pruning.
  struct Search {
    const std::vector<Mask>& nb;
    int k;
    bool run(Mask candidates, int size) const {
      if (size == k) return true;
      while (candidates) {
        if (size + std::popcount(candidates) < k) return false;
        const int v = std::countr_zero(candidates);
        candidates &= ~(Mask{1} << v);
        if (run(candidates & nb[v], size + 1)) return true;
      }
      return false;
    }
  };
  const Mask all = (Mask{1} << g.n()) - 1;
  return Search{nb, k}.run(all, 0);
}

GraphFamily parse_family(const std::string& name) {
  if (name == "complete") return GraphFamily::Complete;
  if (name == "cycle") return GraphFamily::Cycle;
  if (name == "path") return GraphFamily::Path;
  if (name == "empty") return GraphFamily::Empty;
  if (name == "petersen") return GraphFamily::Petersen;
  if (name == "gnp") return GraphFamily::Gnp;
  fail(ErrorCode::InvalidArgument, "unknown graph family \"" + name + "\"");
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Complete: return "complete";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Path: return "path";
    case GraphFamily::Empty: return "empty";
    case GraphFamily::Petersen: return "petersen";
    case GraphFamily::Gnp: return "gnp";
  }
  return "unknown";
}

Graph generate(GraphFamily family, const GenerateParams& params, std::uint64_t seed) {
  const int n = params.n;
  std::vector<Graph::Edge> edges;
  switch (family) {
    case GraphFamily::Complete:
      require(n >= 1, "complete graph needs n >= 1");
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      return Graph(n, edges);
    case GraphFamily::Cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, n);
      return Graph(n, edges);
    case GraphFamily::Path:
      require(n >= 1, "path needs n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    case GraphFamily::Empty:
      require(n >= 1, "empty graph needs n >= 1");
      return Graph(n);
    case GraphFamily::Petersen:
      require(n == 0 || n == 10, "the Petersen graph has 10 vertices");
      // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 5 + 1);
        edges.emplace_back(i + 1, i + 6);
        edges.emplace_back(i + 6, (i + 2) % 5 + 6);
      }
      return Graph(10, edges);
    case GraphFamily::Gnp: {
      require(n >= 1, "gnp needs n >= 1");
      require(params.p_den >= 1 && params.p_num <= params.p_den,
              "gnp needs 0 <= p_num <= p_den, p_den >= 1");
      Rng rng(seed);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (rng.below(params.p_den) < params.p_num) edges.emplace_back(i, j);
      return Graph(n, edges);
    }
  }
  fail(ErrorCode::Internal, "unhandled graph family");
}

}  // namespace grasshard
