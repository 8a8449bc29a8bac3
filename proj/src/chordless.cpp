#include "csg/chordless.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csg {
namespace {

void check_verts(const Graph& g, const std::vector<int>& verts,
                 const char* what) {
  for (int v : verts)
    if (v < 0 || v >= g.node_count())
      throw GraphError(std::string(what) + " references node " +
                       std::to_string(v) + " outside the graph");
}

// Shared DFS state for the fast cycle enumerator.
struct CycleSearch {
  const Graph& g;
  int max_len;
  std::vector<ChordlessCycle>& out;
  std::vector<int> path;
  std::vector<char> on_path;

  // Invariant: path is an induced path, path[0] is its minimum vertex,
  // every other vertex is > path[0].
  void extend() {
    int s = path[0];
    int last = path.back();
    int k = static_cast<int>(path.size());
    for (int u : g.neighbors(last)) {
      if (u <= s || on_path[u]) continue;
      if (k >= 2) {
        // Any adjacency to an interior vertex would be a chord.
        bool chord = false;
        for (int i = 1; i + 1 < k; ++i)
          if (g.has_edge(u, path[i])) {
            chord = true;
            break;
          }
        if (chord) continue;
        if (g.has_edge(u, s)) {
          // Closing edge: path + u is a chordless cycle. Orientation
          // guard path[1] < u emits each cycle once.
          if (k + 1 <= max_len && path[1] < u) {
            std::vector<int> cyc = path;
            cyc.push_back(u);
            out.push_back({std::move(cyc)});
          }
          continue;  // extending through u would carry chord (u, s)
        }
      }
      if (k + 2 <= max_len) {
        path.push_back(u);
        on_path[u] = 1;
        extend();
        on_path[u] = 0;
        path.pop_back();
      }
    }
  }
};

// All-simple-cycle backtracking used by the brute-force oracle and the
// statistics counter. Calls visit(path) for every simple cycle, each
// exactly once (min vertex first, smaller second vertex). Budget < 0
// means unlimited; each neighbor scan step costs one unit.
template <typename Visit>
void walk_simple_cycles(const Graph& g, int max_len, std::int64_t budget,
                        std::int64_t& steps, Visit&& visit) {
  std::vector<int> path;
  std::vector<char> on_path(g.node_count(), 0);
  auto dfs = [&](auto&& self, int s) -> void {
    int last = path.back();
    for (int u : g.neighbors(last)) {
      ++steps;
      if (budget >= 0 && steps > budget)
        throw BudgetError("cycle budget exhausted after " +
                              std::to_string(budget) + " steps",
                          {});
      if (u == s && path.size() >= 3) {
        if (path[1] < path.back()) visit(path);
        continue;
      }
      if (u <= s || on_path[u]) continue;
      if (static_cast<int>(path.size()) + 1 <= max_len) {
        path.push_back(u);
        on_path[u] = 1;
        self(self, s);
        on_path[u] = 0;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < g.node_count(); ++s) {
    path.assign(1, s);
    on_path.assign(g.node_count(), 0);
    on_path[s] = 1;
    dfs(dfs, s);
  }
}

}  // namespace

ChordlessCycle canonical_cycle(std::vector<int> verts) {
  int n = static_cast<int>(verts.size());
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  int mi = static_cast<int>(
      std::min_element(verts.begin(), verts.end()) - verts.begin());
  std::rotate(verts.begin(), verts.begin() + mi, verts.end());
  if (verts[1] > verts[n - 1])
    std::reverse(verts.begin() + 1, verts.end());
  return {std::move(verts)};
}

ChordlessPath canonical_path(std::vector<int> verts) {
  if (verts.size() < 2) throw GraphError("path needs at least 2 vertices");
  if (verts.front() > verts.back()) std::reverse(verts.begin(), verts.end());
  return {std::move(verts)};
}

std::vector<ChordlessCycle> enumerate_chordless_cycles(const Graph& g,
                                                       int max_len) {
  if (max_len < 3 && max_len != kUnbounded)
    throw GraphError("cycle length bound must be at least 3");
  std::vector<ChordlessCycle> out;
  CycleSearch search{g, max_len, out, {}, std::vector<char>(g.node_count(), 0)};
  for (int s = 0; s < g.node_count(); ++s) {
    search.path.assign(1, s);
    std::fill(search.on_path.begin(), search.on_path.end(), 0);
    search.on_path[s] = 1;
    search.extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChordlessPath> enumerate_chordless_paths(const Graph& g,
                                                     int max_len) {
  if (max_len < 1) throw GraphError("path length bound must be at least 1");
  std::vector<ChordlessPath> out;
  std::vector<int> path;
  std::vector<char> on_path(g.node_count(), 0);
  // Invariant: path is induced. Both directions are walked; the
  // front() < back() guard emits each path once.
  auto dfs = [&](auto&& self) -> void {
    int last = path.back();
    int k = static_cast<int>(path.size());
    if (k >= 2 && path.front() < last) out.push_back({path});
    if (k - 1 + 1 > max_len) return;  // next edge would exceed the bound
    for (int u : g.neighbors(last)) {
      if (on_path[u]) continue;
      bool chord = false;
      for (int i = 0; i + 1 < k; ++i)
        if (g.has_edge(u, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(u);
      on_path[u] = 1;
      self(self);
      on_path[u] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.node_count(); ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(dfs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cycle_is_chordless(const Graph& g, const std::vector<int>& verts) {
  int n = static_cast<int>(verts.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(verts[i], verts[(i + 1) % n])) return false;
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // closing edge
      if (g.has_edge(verts[i], verts[j])) return false;
    }
  }
  return true;
}

bool path_is_chordless(const Graph& g, const std::vector<int>& verts) {
  int n = static_cast<int>(verts.size());
  if (n < 2) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (!g.has_edge(verts[i], verts[i + 1])) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (g.has_edge(verts[i], verts[j])) return false;
  return true;
}

std::vector<ChordlessCycle> brute_force_chordless_cycles(const Graph& g,
                                                         int max_len) {
  std::vector<ChordlessCycle> out;
  std::int64_t steps = 0;
  walk_simple_cycles(g, max_len, -1, steps, [&](const std::vector<int>& cyc) {
    if (cycle_is_chordless(g, cyc)) out.push_back(canonical_cycle(cyc));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChordlessPath> brute_force_chordless_paths(const Graph& g,
                                                       int max_len) {
  std::vector<ChordlessPath> out;
  std::vector<int> path;
  std::vector<char> on_path(g.node_count(), 0);
  auto dfs = [&](auto&& self) -> void {
    if (path.size() >= 2 && path.front() < path.back() &&
        path_is_chordless(g, path))
      out.push_back({path});
    if (static_cast<int>(path.size()) > max_len) return;
    for (int u : g.neighbors(path.back())) {
      if (on_path[u]) continue;
      path.push_back(u);
      on_path[u] = 1;
      self(self);
      on_path[u] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.node_count(); ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(dfs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StructureIndex build_structure_index(const Graph& g,
                                     std::vector<ChordlessCycle> cycles,
                                     std::vector<ChordlessPath> paths) {
  StructureIndex idx;
  idx.cycles = std::move(cycles);
  idx.paths = std::move(paths);
  idx.node_cycles.resize(g.node_count());
  idx.node_paths.resize(g.node_count());
  int max_clen = 0, max_plen = 0;
  for (const auto& c : idx.cycles) max_clen = std::max(max_clen, c.length());
  for (const auto& p : idx.paths) max_plen = std::max(max_plen, p.length());
  idx.cycles_by_length.resize(max_clen + 1);
  idx.paths_by_length.resize(max_plen + 1);
  for (int i = 0; i < static_cast<int>(idx.cycles.size()); ++i) {
    check_verts(g, idx.cycles[i].verts, "cycle");
    idx.cycles_by_length[idx.cycles[i].length()].push_back(i);
    for (int v : idx.cycles[i].verts) idx.node_cycles[v].push_back(i);
  }
  for (int i = 0; i < static_cast<int>(idx.paths.size()); ++i) {
    check_verts(g, idx.paths[i].verts, "path");
    idx.paths_by_length[idx.paths[i].length()].push_back(i);
    for (int v : idx.paths[i].verts) idx.node_paths[v].push_back(i);
  }
  return idx;
}

std::vector<std::pair<int, int>> check_path_partition(
    const Graph& g, const std::vector<int>& verts) {
  check_verts(g, verts, "path");
  int n = static_cast<int>(verts.size());
  if (n < 2) throw GraphError("path needs at least 2 vertices");
  std::vector<char> seen(g.node_count(), 0);
  for (int v : verts) {
    if (seen[v]) throw GraphError("input is not a simple path: repeated node " +
                                  std::to_string(v));
    seen[v] = 1;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!g.has_edge(verts[i], verts[i + 1]))
      throw GraphError("input is not a path: missing edge (" +
                       std::to_string(verts[i]) + "," +
                       std::to_string(verts[i + 1]) + ")");

  std::vector<std::pair<int, int>> segments;
  // Finds the chord whose cut point is closest to the segment middle,
  // cuts there, recurses on both halves.
  auto split = [&](auto&& self, int from, int to) -> void {
    double mid = (from + to) / 2.0;
    int best_cut = -1;
    double best_dist = 0;
    for (int i = from; i <= to; ++i) {
      for (int j = i + 2; j <= to; ++j) {
        if (!g.has_edge(verts[i], verts[j])) continue;
        int cut = (i + j) / 2;  // strictly between i and j
        double d = std::abs(cut - mid);
        if (best_cut == -1 || d < best_dist) {
          best_cut = cut;
          best_dist = d;
        }
      }
    }
    if (best_cut == -1) {
      segments.emplace_back(from, to);
      return;
    }
    self(self, from, best_cut);
    self(self, best_cut, to);
  };
  split(split, 0, n - 1);
  return segments;
}

CycleStats cycle_statistics(const Graph& g, int max_len, std::int64_t budget) {
  CycleStats stats;
  int cap = (max_len == kUnbounded) ? g.node_count() : max_len;
  stats.simple_by_length.assign(cap + 1, 0);
  stats.chordless_by_length.assign(cap + 1, 0);
  try {
    walk_simple_cycles(g, max_len, budget, stats.steps_used,
                       [&](const std::vector<int>& cyc) {
                         int len = static_cast<int>(cyc.size());
                         ++stats.simple_cycles;
                         ++stats.simple_by_length[len];
                         if (cycle_is_chordless(g, cyc)) {
                           ++stats.chordless_cycles;
                           ++stats.chordless_by_length[len];
                         }
                       });
  } catch (const BudgetError&) {
    throw BudgetError("cycle budget of " + std::to_string(budget) +
                          " steps exhausted",
                      std::move(stats));
  }
  return stats;
}

}  // namespace csg
