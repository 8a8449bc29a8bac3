// Searches the two-hub bicyclic family (dumbbells: two cycles joined by a
// bridge path; thetas: two hubs joined by three disjoint paths) for pairs
// that vertex refinement cannot separate but cycle-aware refinement can.
// Hits are printed as graph6 literals so they can be frozen into tests.

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csg/chordless.hpp"
#include "csg/csgnn.hpp"
#include "csg/generate.hpp"
#include "csg/graph6.hpp"
#include "csg/harness.hpp"
#include "csg/isomorphism.hpp"

namespace {

struct Candidate {
  csg::Graph graph;
  std::string label;
  bool bridged_unequal;  // has a bridge separating cycles of unequal length
};

// Two cycles C_p and C_q whose hubs are joined by a path with `len` edges.
csg::Graph dumbbell(int p, int q, int len) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) edges.push_back({i, (i + 1) % p});
  for (int i = 0; i < q; ++i) edges.push_back({p + i, p + (i + 1) % q});
  int prev = 0;
  for (int i = 0; i < len - 1; ++i) {
    edges.push_back({prev, p + q + i});
    prev = p + q + i;
  }
  edges.push_back({prev, p});
  return csg::Graph::from_edges(p + q + len - 1, edges);
}

// Two hubs joined by three internally disjoint paths of a, b, c edges.
csg::Graph theta(int a, int b, int c) {
  int n = a + b + c - 1;
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return csg::Graph::from_edges(n, edges);
}

bool wl_equivalent(const csg::Graph& a, const csg::Graph& b) {
  auto classes = csg::exact_wl1_classes({a, b});
  return classes[0] == classes[1];
}

}  // namespace

// True when removing some single edge splits the graph into two cyclic
// halves whose chordless-cycle length multisets differ.
bool has_splitting_bridge(const csg::Graph& g) {
  auto cycle_lengths = [](const csg::Graph& h, const std::vector<int>& keep) {
    std::vector<int> remap(h.node_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = (int)i;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : h.edges())
      if (remap[a] >= 0 && remap[b] >= 0)
        edges.push_back({remap[a], remap[b]});
    auto sub = csg::Graph::from_edges((int)keep.size(), edges);
    std::vector<int> lens;
    for (const auto& c : csg::enumerate_chordless_cycles(sub, csg::kUnbounded))
      lens.push_back((int)c.verts.size());
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  for (auto [u, v] : g.edges()) {
    // BFS from u avoiding the edge (u,v); a bridge never reaches v.
    std::vector<int> side(g.node_count(), -1);
    std::vector<int> queue{u};
    side[u] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y : g.neighbors(x)) {
        if (x == u && y == v) continue;
        if (side[y] < 0) {
          side[y] = 0;
          queue.push_back(y);
        }
      }
    }
    if (side[v] == 0) continue;  // not a bridge
    std::vector<int> left, right;
    for (int x = 0; x < g.node_count(); ++x)
      (side[x] == 0 ? left : right).push_back(x);
    auto ll = cycle_lengths(g, left);
    auto rl = cycle_lengths(g, right);
    // Strict reading: some cycle length on one side is absent on the other.
    std::set<int> ls(ll.begin(), ll.end()), rs(rl.begin(), rl.end());
    if (!ls.empty() && !rs.empty() && ls != rs) return true;
  }
  return false;
}

// Levelwise generation restricted to at most `max_edges` edges (extension
// masks only ever add edges, so the cap can prune every level).
std::vector<csg::Graph> sparse_graphs(int n, int max_edges) {
  std::vector<csg::Graph> level{csg::Graph::from_edges(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<std::vector<unsigned char>, csg::Graph> next;
    for (const auto& g : level) {
      int m = g.edge_count();
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        int extra = __builtin_popcount(mask);
        if (m + extra > max_edges) continue;
        std::vector<std::pair<int, int>> edges(g.edges().begin(),
                                               g.edges().end());
        for (int v = 0; v < k - 1; ++v)
          if (mask & (1u << v)) edges.push_back({v, k - 1});
        auto h = csg::Graph::from_edges(k, edges);
        next.emplace(csg::canonical_form(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
    std::cout << "level " << k << ": " << level.size() << " graphs\n";
  }
  return level;
}

void scan_graphs(std::vector<csg::Graph> graphs) {
  auto classes = csg::exact_wl1_classes(graphs);
  std::map<int, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    buckets[classes[i]].push_back(i);
  int twin_buckets = 0;
  for (const auto& [cls, members] : buckets) {
    if (members.size() < 2) continue;
    ++twin_buckets;
    bool interesting = false;
    for (auto i : members) interesting |= has_splitting_bridge(graphs[i]);
    if (!interesting) continue;
    std::cout << "bucket (class " << cls << "):\n";
    for (auto i : members) {
      std::string lens;
      for (const auto& c :
           csg::enumerate_chordless_cycles(graphs[i], csg::kUnbounded))
        lens += std::to_string(c.verts.size()) + " ";
      std::cout << "  " << csg::write_graph6(graphs[i])
                << "  cycles [" << lens << "]"
                << (has_splitting_bridge(graphs[i]) ? "  <bridge-split>" : "")
                << "\n";
    }
    csg::CsgnnConfig cfg;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        bool split =
            csg::csgnn_fingerprint(graphs[members[a]], cfg).digest !=
            csg::csgnn_fingerprint(graphs[members[b]], cfg).digest;
        std::cout << "  pair (" << a << "," << b
                  << ") cycle-refinement separates: "
                  << (split ? "yes" : "NO") << "\n";
      }
  }
  std::cout << "twin buckets total: " << twin_buckets << "\n";
}

int main(int argc, char** argv) {
  CLI::App app{"search for refinement twin fixtures"};
  int max_n = 16;
  int scan_n = 0;
  int sparse_n = 0;
  int max_edges = 12;
  app.add_option("--max-n", max_n, "largest vertex count to try")
      ->capture_default_str();
  app.add_option("--scan", scan_n,
                 "exhaustive scan over all connected graphs of this size");
  app.add_option("--scan-sparse", sparse_n,
                 "scan all graphs of this size with few edges");
  app.add_option("--max-edges", max_edges, "edge cap for --scan-sparse")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (scan_n > 0) {
    scan_graphs(csg::connected_graphs(scan_n));
    return 0;
  }
  if (sparse_n > 0) {
    scan_graphs(sparse_graphs(sparse_n, max_edges));
    return 0;
  }

  for (int n = 6; n <= max_n; ++n) {
    std::vector<Candidate> family;
    for (int p = 3; p <= n; ++p)
      for (int q = p; q <= n; ++q)
        for (int len = 1; p + q + len - 1 <= n; ++len)
          if (p + q + len - 1 == n)
            family.push_back({dumbbell(p, q, len),
                              "dumbbell(" + std::to_string(p) + "," +
                                  std::to_string(q) + "," +
                                  std::to_string(len) + ")",
                              p != q});
    for (int a = 1; a <= n; ++a)
      for (int b = std::max(a, 2); b <= n; ++b)
        for (int c = b; a + b + c - 1 <= n; ++c)
          if (a + b + c - 1 == n)
            family.push_back({theta(a, b, c),
                              "theta(" + std::to_string(a) + "," +
                                  std::to_string(b) + "," +
                                  std::to_string(c) + ")",
                              false});

    for (size_t i = 0; i < family.size(); ++i) {
      for (size_t j = i + 1; j < family.size(); ++j) {
        const auto& A = family[i];
        const auto& B = family[j];
        if (!A.bridged_unequal && !B.bridged_unequal) continue;
        if (!wl_equivalent(A.graph, B.graph)) continue;
        if (csg::are_isomorphic(A.graph, B.graph)) continue;
        csg::CsgnnConfig cfg;
        bool cycle_split = csg::csgnn_fingerprint(A.graph, cfg).digest !=
                           csg::csgnn_fingerprint(B.graph, cfg).digest;
        auto lens = [](const csg::Graph& g) {
          std::string out;
          for (const auto& c :
               csg::enumerate_chordless_cycles(g, csg::kUnbounded))
            out += std::to_string(c.verts.size()) + " ";
          return out;
        };
        std::cout << "n=" << n << "  " << A.label << "  vs  " << B.label
                  << "\n  g6: " << csg::write_graph6(A.graph) << "  |  "
                  << csg::write_graph6(B.graph)
                  << "\n  cycle lengths: [" << lens(A.graph) << "] vs ["
                  << lens(B.graph) << "]"
                  << "\n  cycle-refinement separates: "
                  << (cycle_split ? "yes" : "NO") << "\n";
      }
    }
  }
  return 0;
}
