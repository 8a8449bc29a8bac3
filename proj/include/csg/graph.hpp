#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "csg/errors.hpp"

namespace csg {

// Immutable simple undirected graph. Node ids are 0..n-1. Adjacency lists
// are sorted ascending; the edge list is normalized (u < v) and sorted.
// For graphs up to a few thousand nodes an adjacency bit matrix backs
// has_edge() in O(1); larger graphs fall back to binary search.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Rejects negative/out-of-range endpoints,
  // self-loops and duplicate edges (in either orientation).
  static Graph from_edges(int node_count,
                          const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int v) const {
    return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
  }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (!words_.empty())
      return (words_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] >>
              (v & 63)) &
             1;
    auto nb = neighbors(u);
    if (nb.size() > neighbors(v).size()) return has_edge(v, u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    return it != nb.end() && *it == v;
  }

  // Row of the adjacency bit matrix (empty span when the graph is too
  // large for the matrix). Useful for popcount-style common-neighbor math.
  std::span<const std::uint64_t> adjacency_row(int v) const {
    if (words_.empty()) return {};
    return {words_.data() + static_cast<std::size_t>(v) * row_words_,
            static_cast<std::size_t>(row_words_)};
  }

  // Normalized (u < v), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> flat_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> words_;
  int row_words_ = 0;
};

// Per-node colors with a dense palette 0..palette_size-1 (every id used).
struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;
  int palette_size = 0;
};

// Validates density/coverage of the palette.
ColoredGraph make_colored(Graph g, std::vector<int> colors);

// Fixed-width real-valued node features; values must be finite.
struct NodeFeatures {
  int dim = 0;
  std::vector<double> values;  // node-major, node_count * dim entries
};

NodeFeatures make_features(const Graph& g, int dim, std::vector<double> values);

// Nodes at exact shortest-path distance 1..k from v, one sorted vector per
// distance (trailing shells may be empty).
std::vector<std::vector<int>> k_hop_neighborhood(const Graph& g, int v, int k);

// Components as sorted node lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Replaces edge (u,v) with a fresh node w = n adjacent to exactly u and v.
Graph subdivide_edge(const Graph& g, int u, int v);

struct BipartiteResult {
  bool bipartite = false;
  // Two-coloring (0/1 per node) when bipartite.
  std::vector<int> coloring;
  // An odd cycle (vertex sequence, first != last) otherwise.
  std::vector<int> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

}  // namespace csg
