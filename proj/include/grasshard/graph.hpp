#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grasshard {

// Undirected simple graph on vertices 1..n. Each edge {i,j} is stored once
// with i < j; formulas written over ordered edge pairs double every stored
// edge explicitly.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted lexicographically, i < j, 1-based.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;  // n x n, row-major, 0-based
};

// "n m" header followed by m lines "i j".
Graph parse_graph(const std::string& text);
std::string to_edge_list(const Graph& g);

// Exhaustive oracles. Hard cap: n <= kMaxOracleVertices.
inline constexpr int kMaxOracleVertices = 24;
int clique_number(const Graph& g);
int stability_number(const Graph& g);
bool has_k_clique(const Graph& g, int k);
// Lexicographically smallest maximum clique, 1-based, ascending.
std::vector<int> maximum_clique(const Graph& g);

enum class GraphFamily { Complete, Cycle, Path, Empty, Petersen, Gnp };

GraphFamily parse_family(const std::string& name);
std::string to_string(GraphFamily family);

struct GenerateParams {
  int n = 0;
  // Edge probability p_num / p_den for Gnp.
  std::uint64_t p_num = 1;
  std::uint64_t p_den = 2;
};

// Deterministic per (family, params, seed). Gnp draws one Rng::below(p_den)
// per pair (i,j) in lexicographic order and keeps the edge when the draw is
// < p_num.
Graph generate(GraphFamily family, const GenerateParams& params, std::uint64_t seed = 0);

}  // namespace grasshard
