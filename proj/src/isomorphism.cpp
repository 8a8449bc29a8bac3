#include "csg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "csg/hash128.hpp"
#include "csg/refine.hpp"

namespace csg {
namespace {

std::vector<Digest128> stable_colors(const Graph& g,
                                     std::vector<Digest128> init) {
  return wl1_refine(g, std::move(init)).hashes;
}

bool same_multiset(std::vector<Digest128> a, std::vector<Digest128> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Smallest non-singleton class, ties by hash; returns the class hash or
// nullopt when the coloring is discrete.
std::optional<Digest128> pick_target_class(
    const std::vector<Digest128>& colors) {
  std::map<Digest128, int> count;
  for (const auto& c : colors) ++count[c];
  std::optional<Digest128> best;
  int best_size = 0;
  for (const auto& [hash, n] : count) {
    if (n < 2) continue;
    if (!best || n < best_size) {
      best = hash;
      best_size = n;
    }
  }
  return best;
}

Digest128 individualized(const Digest128& old) {
  return Hasher().str("individualize").digest(old).finish();
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;

  bool verify(const std::vector<Digest128>& ca,
              const std::vector<Digest128>& cb) const {
    int n = a.node_count();
    std::vector<int> pa(n), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    std::iota(pb.begin(), pb.end(), 0);
    std::sort(pa.begin(), pa.end(),
              [&](int x, int y) { return ca[x] < ca[y]; });
    std::sort(pb.begin(), pb.end(),
              [&](int x, int y) { return cb[x] < cb[y]; });
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) {
      if (ca[pa[i]] != cb[pb[i]]) return false;
      map[pa[i]] = pb[i];
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (a.has_edge(u, v) != b.has_edge(map[u], map[v])) return false;
    return true;
  }

  bool search(const std::vector<Digest128>& ca,
              const std::vector<Digest128>& cb) const {
    auto target = pick_target_class(ca);
    if (!target) return verify(ca, cb);
    int va = -1;
    for (int v = 0; v < a.node_count(); ++v)
      if (ca[v] == *target) {
        va = v;
        break;
      }
    std::vector<Digest128> next_a = ca;
    next_a[va] = individualized(ca[va]);
    auto ra = stable_colors(a, next_a);
    for (int u = 0; u < b.node_count(); ++u) {
      if (cb[u] != *target) continue;
      std::vector<Digest128> next_b = cb;
      next_b[u] = individualized(cb[u]);
      auto rb = stable_colors(b, next_b);
      if (!same_multiset(ra, rb)) continue;
      if (search(ra, rb)) return true;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.node_count() == 0) return true;
  auto ca = stable_colors(a, uniform_init(a.node_count()));
  auto cb = stable_colors(b, uniform_init(b.node_count()));
  if (!same_multiset(ca, cb)) return false;
  return IsoSearch{a, b}.search(ca, cb);
}

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  int n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || a.degree(i) != b.degree(u)) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (a.has_edge(i, j) != b.has_edge(u, map[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[i] = u;
      used[u] = 1;
      if (self(self, i + 1)) return true;
      used[u] = 0;
      map[i] = -1;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace csg
