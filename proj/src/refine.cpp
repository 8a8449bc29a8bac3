#include "csg/refine.hpp"

#include <algorithm>
#include <cstring>

namespace csg {
namespace {

std::vector<int> dense_ids(const std::vector<Digest128>& hashes,
                           int* class_count) {
  std::vector<Digest128> sorted = hashes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ids(hashes.size());
  for (std::size_t v = 0; v < hashes.size(); ++v)
    ids[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), hashes[v]) -
        sorted.begin());
  *class_count = static_cast<int>(sorted.size());
  return ids;
}

}  // namespace

ColorPartition refine_fixpoint(
    int node_count, const std::string& tag,
    const std::vector<Digest128>& init,
    const std::vector<std::vector<std::vector<int>>>& channels,
    int max_rounds) {
  if (static_cast<int>(init.size()) != node_count)
    throw GraphError("initial colors must cover every node");
  for (const auto& ch : channels) {
    if (static_cast<int>(ch.size()) != node_count)
      throw GraphError("every channel must cover every node");
    for (const auto& members : ch)
      for (int u : members)
        if (u < 0 || u >= node_count)
          throw GraphError("channel member id out of range: " +
                           std::to_string(u));
  }

  ColorPartition p;
  p.hashes = init;
  if (node_count == 0) {
    p.rounds = 0;
    return p;
  }
  int classes_before;
  std::vector<int> ids = dense_ids(p.hashes, &classes_before);

  std::vector<Digest128> next(node_count);
  std::vector<Digest128> bucket;
  for (int round = 1;; ++round) {
    for (int v = 0; v < node_count; ++v) {
      Hasher h;
      h.str(tag);
      h.u32(static_cast<std::uint32_t>(round));
      h.digest(p.hashes[v]);
      for (const auto& ch : channels) {
        bucket.clear();
        for (int u : ch[v]) bucket.push_back(p.hashes[u]);
        std::sort(bucket.begin(), bucket.end());
        h.sorted_multiset(bucket);
      }
      next[v] = h.finish();
    }
    p.hashes.swap(next);
    p.rounds = round;
    int classes_after;
    p.ids = dense_ids(p.hashes, &classes_after);
    p.class_count = classes_after;
    p.history.push_back(p.ids);
    // Own color feeds every round, so the partition can only refine;
    // an unchanged class count therefore means an unchanged partition.
    if (classes_after == classes_before) {
      p.stable = true;
      break;
    }
    classes_before = classes_after;
    if (max_rounds > 0 && round >= max_rounds) {
      p.stable = false;
      break;
    }
  }
  return p;
}

std::vector<Digest128> uniform_init(int node_count) {
  Digest128 seed = Hasher().str("uniform-init").finish();
  return std::vector<Digest128>(node_count, seed);
}

std::vector<Digest128> init_from_colors(const ColoredGraph& cg) {
  std::vector<Digest128> init(cg.graph.node_count());
  for (int v = 0; v < cg.graph.node_count(); ++v)
    init[v] =
        Hasher().str("color-init").u32(static_cast<std::uint32_t>(cg.colors[v]))
            .finish();
  return init;
}

std::vector<Digest128> init_from_features(const Graph& g,
                                          const NodeFeatures& f) {
  if (f.values.size() != static_cast<std::size_t>(g.node_count()) *
                             static_cast<std::size_t>(f.dim))
    throw GraphError("feature matrix must be node_count x dim");
  std::vector<Digest128> init(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    Hasher h;
    h.str("feature-init");
    h.u32(static_cast<std::uint32_t>(f.dim));
    for (int d = 0; d < f.dim; ++d) {
      double x = f.values[static_cast<std::size_t>(v) * f.dim + d];
      if (x == 0.0) x = 0.0;  // collapse -0.0 so equal values hash equal
      std::uint64_t bits;
      static_assert(sizeof bits == sizeof x);
      std::memcpy(&bits, &x, sizeof bits);
      h.u64(bits);
    }
    init[v] = h.finish();
  }
  return init;
}

namespace {

std::vector<std::vector<std::vector<int>>> adjacency_channel(const Graph& g) {
  std::vector<std::vector<std::vector<int>>> channels(1);
  channels[0].resize(g.node_count());
  for (int v = 0; v < g.node_count(); ++v)
    channels[0][v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return channels;
}

}  // namespace

ColorPartition wl1_refine(const Graph& g,
                          std::optional<std::vector<Digest128>> init,
                          int max_rounds) {
  return refine_fixpoint(g.node_count(), "wl1",
                         init ? *init : uniform_init(g.node_count()),
                         adjacency_channel(g), max_rounds);
}

ColorPartition khop_refine(const Graph& g, int k,
                           std::optional<std::vector<Digest128>> init,
                           int max_rounds) {
  if (k < 1) throw GraphError("khop needs k >= 1");
  std::vector<std::vector<std::vector<int>>> channels(
      k, std::vector<std::vector<int>>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) {
    auto shells = k_hop_neighborhood(g, v, k);
    for (int d = 0; d < k; ++d) channels[d][v] = std::move(shells[d]);
  }
  return refine_fixpoint(g.node_count(), "khop:" + std::to_string(k),
                         init ? *init : uniform_init(g.node_count()),
                         channels, max_rounds);
}

GraphFingerprint fingerprint(const ColorPartition& p) {
  std::vector<Digest128> sorted = p.hashes;
  std::sort(sorted.begin(), sorted.end());
  Hasher h;
  h.str("fingerprint");
  h.sorted_multiset(sorted);
  return {h.finish()};
}

bool is_wl_colorable(const Graph& g) {
  ColorPartition p = wl1_refine(g);
  for (auto [u, v] : g.edges())
    if (p.ids[u] == p.ids[v]) return false;
  return true;
}

Graph make_wl_colorable(const Graph& g, int max_sweeps) {
  if (max_sweeps < 1) throw GraphError("need at least one sweep");
  Graph cur = g;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    ColorPartition p = wl1_refine(cur);
    std::vector<std::pair<int, int>> mono;
    for (auto [u, v] : cur.edges())
      if (p.ids[u] == p.ids[v]) mono.emplace_back(u, v);
    if (mono.empty()) return cur;
    // Subdivide every monochromatic edge in one batch: drop them, give
    // each a fresh midpoint node.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(cur.edges().size() + mono.size());
    std::size_t next_mono = 0;
    int fresh = cur.node_count();
    for (auto [u, v] : cur.edges()) {
      if (next_mono < mono.size() && mono[next_mono] == std::make_pair(u, v)) {
        edges.emplace_back(u, fresh);
        edges.emplace_back(v, fresh);
        ++fresh;
        ++next_mono;
        continue;
      }
      edges.emplace_back(u, v);
    }
    cur = Graph::from_edges(fresh, edges);
  }
  if (is_wl_colorable(cur)) return cur;
  throw ColorableError("graph still has monochromatic edges after " +
                           std::to_string(max_sweeps) + " sweeps",
                       std::move(cur));
}

}  // namespace csg
