#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "csg/csgnn.hpp"
#include "csg/generate.hpp"
#include "csg/graph6.hpp"
#include "csg/harness.hpp"
#include "csg/isomorphism.hpp"

using namespace csg;

namespace {

Graph c_n(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph::from_edges(g.node_count(), edges);
}

StructureIndex index_of(const Graph& g, int lmax) {
  return build_structure_index(g, enumerate_chordless_cycles(g, lmax),
                               enumerate_chordless_paths(g, 1));
}

}  // namespace

TEST_CASE("config validation") {
  CsgnnConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.max_cycle_len = 2;
  CHECK_THROWS_AS(validate(cfg), GraphError);
  cfg = {};
  cfg.max_path_len = 0;
  CHECK_THROWS_AS(validate(cfg), GraphError);
  cfg = {};
  cfg.max_rounds = -1;
  CHECK_THROWS_AS(validate(cfg), GraphError);
}

TEST_CASE("cycle histograms per node") {
  // hexagon with long chord: chord endpoints sit on two squares
  auto g = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  auto feats = encode_cycle_features(g, index_of(g, 6), 6);
  REQUIRE(feats.size() == 6);
  CHECK(feats[0].count_by_length[4] == 2);
  CHECK(feats[0].total == 2);
  CHECK(feats[1].count_by_length[4] == 1);
  CHECK(feats[1].total == 1);
  CHECK(feats[0].count_by_length[3] == 0);

  // decalin: the two shared-edge nodes lie on both hexagons
  auto d = decalin();
  auto df = encode_cycle_features(d, index_of(d, 6), 6);
  int on_two = 0, on_one = 0;
  for (const auto& f : df) {
    if (f.count_by_length[6] == 2) ++on_two;
    if (f.count_by_length[6] == 1) ++on_one;
  }
  CHECK(on_two == 2);
  CHECK(on_one == 8);

  // bound excludes longer cycles entirely
  auto p = petersen();
  auto pf = encode_cycle_features(p, index_of(p, 4), 4);
  for (const auto& f : pf) CHECK(f.total == 0);
}

// Equal node partitions up to renaming of the dense class ids (ids order
// by method-tagged hashes, so two chains number the same classes apart).
static bool same_partition(const ColorPartition& a, const ColorPartition& b) {
  if (a.class_count != b.class_count || a.ids.size() != b.ids.size())
    return false;
  std::map<int, int> fwd;
  for (std::size_t v = 0; v < a.ids.size(); ++v) {
    auto [it, fresh] = fwd.emplace(a.ids[v], b.ids[v]);
    if (!fresh && it->second != b.ids[v]) return false;
  }
  return true;
}

TEST_CASE("high girth with radius 1 collapses onto the degree chain") {
  // no chordless cycles within the bound and only direct-neighbor
  // co-membership: the partition must equal plain wl1
  CsgnnConfig cfg;
  cfg.max_cycle_len = 4;  // petersen girth is 5
  cfg.max_path_len = 1;
  for (auto variant :
       {CsgnnConfig::Variant::kEncode, CsgnnConfig::Variant::kMessagePassing}) {
    cfg.variant = variant;
    auto a = csgnn_refine(petersen(), cfg);
    auto b = wl1_refine(petersen());
    CHECK(same_partition(a, b));
  }
  // same on a tree
  auto tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5},
                                    {4, 6}});
  CsgnnConfig tcfg;
  tcfg.max_path_len = 1;
  CHECK(same_partition(csgnn_refine(tree, tcfg), wl1_refine(tree)));
}

TEST_CASE("hydrocarbon twins split on cycle structure") {
  auto a = decalin();
  auto b = bicyclopentyl();
  CHECK(fingerprint(wl1_refine(a)) == fingerprint(wl1_refine(b)));
  for (auto variant :
       {CsgnnConfig::Variant::kEncode, CsgnnConfig::Variant::kMessagePassing}) {
    CsgnnConfig cfg;
    cfg.variant = variant;
    CHECK(csgnn_fingerprint(a, cfg) != csgnn_fingerprint(b, cfg));
  }
}

TEST_CASE("hexagon vs two triangles split at initialization") {
  CHECK(csgnn_fingerprint(c_n(6)) != csgnn_fingerprint(cycle_union({3, 3})));
}

TEST_CASE("strongly regular pair splits on square counts") {
  auto r = rook_4x4();
  auto s = shrikhande();
  CHECK(fingerprint(wl1_refine(r)) == fingerprint(wl1_refine(s)));
  CHECK(fingerprint(khop_refine(r, 3)) == fingerprint(khop_refine(s, 3)));
  CHECK(csgnn_fingerprint(r) != csgnn_fingerprint(s));
  // the split is visible in raw square membership already
  auto rf = encode_cycle_features(r, index_of(r, 4), 4);
  auto sf = encode_cycle_features(s, index_of(s, 4), 4);
  CHECK(rf[0].count_by_length[4] != sf[0].count_by_length[4]);
}

TEST_CASE("bridge twins: found by search, reverified from scratch") {
  auto a = parse_graph6("I?aIECoK?");
  auto b = parse_graph6("I?B@cOoq?");
  // degree refinement cannot tell them apart (exact integer oracle)
  auto cls = exact_wl1_classes({a, b});
  CHECK(cls[0] == cls[1]);
  CHECK(fingerprint(wl1_refine(a)) == fingerprint(wl1_refine(b)));
  // they are genuinely different graphs
  CHECK_FALSE(brute_force_isomorphic(a, b));
  CHECK_FALSE(are_isomorphic(a, b));
  // the first has a bridge whose sides hold cycles of different lengths
  bool found_bridge = false;
  for (auto [u, v] : a.edges()) {
    std::vector<int> side(a.node_count(), -1);
    std::vector<int> queue{u};
    side[u] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (int y : a.neighbors(queue[qi])) {
        if (queue[qi] == u && y == v) continue;
        if (side[y] < 0) side[y] = 0, queue.push_back(y);
      }
    if (side[v] == 0) continue;
    auto lengths = [&](bool left) {
      std::vector<int> keep;
      for (int x = 0; x < a.node_count(); ++x)
        if ((side[x] == 0) == left) keep.push_back(x);
      std::vector<int> remap(a.node_count(), -1);
      for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = (int)i;
      std::vector<std::pair<int, int>> edges;
      for (auto [x, y] : a.edges())
        if (remap[x] >= 0 && remap[y] >= 0)
          edges.push_back({remap[x], remap[y]});
      std::set<int> lens;
      for (const auto& c : enumerate_chordless_cycles(
               Graph::from_edges((int)keep.size(), edges)))
        lens.insert(c.length());
      return lens;
    };
    auto ls = lengths(true), rs = lengths(false);
    if (!ls.empty() && !rs.empty() && ls != rs) found_bridge = true;
  }
  CHECK(found_bridge);
  // cycle-aware refinement separates the pair
  CHECK(csgnn_fingerprint(a) != csgnn_fingerprint(b));
}

TEST_CASE("fingerprints are invariant under relabeling") {
  std::mt19937 rng(3);
  std::vector<Graph> pool = {decalin(), petersen(), rook_4x4(),
                             parse_graph6("I?aIECoK?")};
  for (int t = 0; t < 16; ++t) {
    const auto& g = pool[t % pool.size()];
    std::vector<int> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(csgnn_fingerprint(g) == csgnn_fingerprint(relabel(g, perm)));
  }
}

TEST_CASE("variants and parameters are tagged apart") {
  auto g = decalin();
  CsgnnConfig mp;
  CsgnnConfig enc;
  enc.variant = CsgnnConfig::Variant::kEncode;
  CHECK(csgnn_fingerprint(g, mp) != csgnn_fingerprint(g, enc));
  CsgnnConfig l5;
  l5.max_cycle_len = 5;
  CHECK(csgnn_fingerprint(g, mp) != csgnn_fingerprint(g, l5));
}

TEST_CASE("round cap marks the run unstable") {
  CsgnnConfig cfg;
  cfg.max_rounds = 1;
  auto p = csgnn_refine(decalin(), cfg);
  CHECK(p.rounds == 1);
  auto full = csgnn_refine(decalin());
  CHECK(full.stable);
}

TEST_CASE("features feed the initial colors") {
  auto g = c_n(6);
  auto fa = make_features(g, 1, {1, 1, 1, 1, 1, 1});
  auto fb = make_features(g, 1, {1, 1, 1, 1, 1, 2});
  CsgnnConfig cfg;
  auto pa = csgnn_refine(g, cfg, fa);
  auto pb = csgnn_refine(g, cfg, fb);
  CHECK(pa.class_count == 1);
  CHECK(pb.class_count > 1);
  CHECK(fingerprint(pa) != fingerprint(pb));
}

TEST_CASE("dominance report and ordering") {
  DominanceReport r = dominance_check(decalin(), bicyclopentyl());
  CHECK_FALSE(r.wl1);
  CHECK(r.csgnn);
  r = dominance_check(c_n(6), cycle_union({3, 3}));
  CHECK_FALSE(r.wl1);
  CHECK(r.khop);
  CHECK(r.csgnn);
  r = dominance_check(petersen(), petersen());
  CHECK_FALSE(r.wl1);
  CHECK_FALSE(r.khop);
  CHECK_FALSE(r.csgnn);

  // wl1-split pairs are always csgnn-split (the structure chain refines
  // the degree chain); probe across a sweep rather than single cases
  auto pool = connected_graphs(6);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> pd(0, (int)pool.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& a = pool[pd(rng)];
    const auto& b = pool[pd(rng)];
    auto rep = dominance_check(a, b);
    if (rep.wl1) CHECK(rep.csgnn);
  }
}
