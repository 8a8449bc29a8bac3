#include "csg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace csg {
namespace {

// Above this the bit matrix would cost more than ~8 MB per graph.
constexpr int kBitMatrixMaxNodes = 8192;

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int node_count,
                        const std::vector<std::pair<int, int>>& edges) {
  if (node_count < 0) throw GraphError("node count must be non-negative");
  Graph g;
  g.n_ = node_count;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw GraphError("edge endpoint out of range: " + edge_str(u, v) +
                       " with node count " + std::to_string(node_count));
    if (u == v) throw GraphError("self-loop rejected: " + edge_str(u, v));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw GraphError("duplicate edge rejected: " +
                     edge_str(dup->first, dup->second));

  std::vector<int> deg(node_count, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (int v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.flat_.resize(g.offsets_[node_count]);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.flat_[cursor[u]++] = v;
    g.flat_[cursor[v]++] = u;
  }
  for (int v = 0; v < node_count; ++v)
    std::sort(g.flat_.begin() + g.offsets_[v], g.flat_.begin() + g.offsets_[v + 1]);

  if (node_count > 0 && node_count <= kBitMatrixMaxNodes) {
    g.row_words_ = (node_count + 63) / 64;
    g.words_.assign(static_cast<std::size_t>(node_count) * g.row_words_, 0);
    for (auto [u, v] : g.edges_) {
      g.words_[static_cast<std::size_t>(u) * g.row_words_ + (v >> 6)] |=
          std::uint64_t{1} << (v & 63);
      g.words_[static_cast<std::size_t>(v) * g.row_words_ + (u >> 6)] |=
          std::uint64_t{1} << (u & 63);
    }
  }
  return g;
}

ColoredGraph make_colored(Graph g, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != g.node_count())
    throw GraphError("color vector must cover every node");
  int palette = 0;
  for (int c : colors) {
    if (c < 0) throw GraphError("color ids must be non-negative");
    palette = std::max(palette, c + 1);
  }
  std::vector<char> used(palette, 0);
  for (int c : colors) used[c] = 1;
  for (int c = 0; c < palette; ++c)
    if (!used[c])
      throw GraphError("palette not dense: color " + std::to_string(c) +
                       " unused");
  return {std::move(g), std::move(colors), palette};
}

NodeFeatures make_features(const Graph& g, int dim,
                           std::vector<double> values) {
  if (dim <= 0) throw GraphError("feature dimension must be positive");
  if (values.size() != static_cast<std::size_t>(g.node_count()) *
                           static_cast<std::size_t>(dim))
    throw GraphError("feature matrix must be node_count x dim");
  for (double x : values)
    if (!std::isfinite(x)) throw GraphError("feature values must be finite");
  return {dim, std::move(values)};
}

std::vector<std::vector<int>> k_hop_neighborhood(const Graph& g, int v,
                                                 int k) {
  if (v < 0 || v >= g.node_count())
    throw GraphError("node id out of range: " + std::to_string(v));
  if (k < 1) throw GraphError("hop count must be positive");
  std::vector<std::vector<int>> shells(k);
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] == k) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[u] + 1;
      shells[dist[w] - 1].push_back(w);
      q.push(w);
    }
  }
  // BFS pushes in ascending neighbor order but shells can interleave;
  // sort to make the contract explicit.
  for (auto& s : shells) std::sort(s.begin(), s.end());
  return shells;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.node_count(), 0);
  for (int s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // Outer scan visits smallest members in increasing order already.
  return comps;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.node_count() || v < 0 || v >= g.node_count())
    throw GraphError("node id out of range for subdivision");
  if (!g.has_edge(u, v))
    throw GraphError("cannot subdivide a missing edge (" + std::to_string(u) +
                     "," + std::to_string(v) + ")");
  int w = g.node_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size() + 1);
  for (auto [a, b] : g.edges()) {
    if (a == std::min(u, v) && b == std::max(u, v)) continue;
    edges.emplace_back(a, b);
  }
  edges.emplace_back(u, w);
  edges.emplace_back(v, w);
  return Graph::from_edges(g.node_count() + 1, edges);
}

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult res;
  std::vector<int> side(g.node_count(), -1);
  std::vector<int> parent(g.node_count(), -1);
  for (int s = 0; s < g.node_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = side[u] ^ 1;
          parent[w] = u;
          q.push(w);
          continue;
        }
        if (side[w] != side[u]) continue;
        // Same side: the two tree paths to the BFS roots meet and close
        // an odd cycle. Walk both up to their first common ancestor.
        std::vector<int> up_u{u}, up_w{w};
        for (int x = u; parent[x] != -1; x = parent[x]) up_u.push_back(parent[x]);
        for (int x = w; parent[x] != -1; x = parent[x]) up_w.push_back(parent[x]);
        int i = static_cast<int>(up_u.size()) - 1;
        int j = static_cast<int>(up_w.size()) - 1;
        while (i > 0 && j > 0 && up_u[i - 1] == up_w[j - 1]) {
          --i;
          --j;
        }
        // ancestor..u (tree), u-w (the violating edge), w..child-of-ancestor
        // (tree, wraps back to the ancestor).
        res.odd_cycle.assign(up_u.begin(), up_u.begin() + i + 1);
        std::reverse(res.odd_cycle.begin(), res.odd_cycle.end());
        res.odd_cycle.insert(res.odd_cycle.end(), up_w.begin(),
                             up_w.begin() + j);
        return res;
      }
    }
  }
  res.bipartite = true;
  res.coloring = std::move(side);
  return res;
}

}  // namespace csg
