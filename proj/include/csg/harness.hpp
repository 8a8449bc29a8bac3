#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "csg/csgnn.hpp"
#include "csg/dataset.hpp"
#include "csg/refine.hpp"

namespace csg {

// Method strings: "wl1", "khop:<k>", "csgnn" or
// "csgnn:Lmax=6,Kmax=3,variant=mp|encode,rounds=0".
struct MethodSpec {
  enum class Kind { kWl1, kKhop, kCsgnn };
  Kind kind = Kind::kWl1;
  int k = 1;          // khop radius
  CsgnnConfig cfg;    // csgnn parameters
  std::string text;   // normalized echo for reports
};

MethodSpec parse_method(const std::string& s);

GraphFingerprint method_fingerprint(const Graph& g, const MethodSpec& m);

struct DistinguishReport {
  std::string dataset;
  std::string method;
  int graph_count = 0;
  std::int64_t pair_count = 0;
  std::int64_t undistinguished = 0;
  // Up to 100 undistinguished pairs, lexicographic by graph index.
  std::vector<std::pair<int, int>> sample;
  int workers = 1;
  double wall_seconds = 0;
};

// Compares fingerprints across the bundle's pairs. all_pairs bundles are
// counted via fingerprint buckets (sum of C(size,2)), which is exactly
// the pairwise loop's answer without the quadratic scan. Runs with a
// csgnn method also compute wl1 fingerprints and fail hard
// (InvariantError) if any pair is split by wl1 but not by csgnn.
DistinguishReport run_distinguish(const DatasetBundle& bundle,
                                  const MethodSpec& method, int workers,
                                  bool enforce_dominance = true);

struct StatsReport {
  std::string dataset;
  int graph_count = 0;
  double avg_nodes = 0;
  double avg_edges = 0;          // undirected edges per graph
  double avg_edge_entries = 0;   // directed entries (2x edges), the other
                                 // convention benchmark tables use
  double avg_simple_cycles = 0;
  double avg_chordless_cycles = 0;
  int budget_exhausted = 0;      // graphs whose counts are partial
  int max_len = 0;               // 0 echoes "unbounded"
  std::int64_t budget = 0;
  int workers = 1;
  double wall_seconds = 0;
};

StatsReport run_stats(const DatasetBundle& bundle, int max_len,
                      std::int64_t budget, int workers);

// One line per structure: "<graph-index> cycle|path <v0> <v1> ...",
// cycles first, canonical order.
std::vector<std::string> run_enumerate(const std::vector<Graph>& graphs,
                                       int max_cycle_len, int max_path_len);

struct SweepRow {
  int max_cycle_len = 0;
  int max_path_len = 0;
  std::string variant;
  std::int64_t pair_count = 0;
  std::int64_t undistinguished = 0;
  double wall_seconds = 0;
};

struct SweepReport {
  std::string dataset;
  std::vector<SweepRow> rows;
  // Smallest (Lmax, Kmax) leaving zero pairs undistinguished, or -1/-1.
  int best_cycle_len = -1;
  int best_path_len = -1;
};

SweepReport run_sweep(const DatasetBundle& bundle, int lmax_lo, int lmax_hi,
                      int kmax_lo, int kmax_hi, CsgnnConfig::Variant variant,
                      int workers);

// Exact degree-refinement equivalence classes across a graph collection,
// via a shared per-round color dictionary (no hashing involved). Returns
// one class id per graph; equal id <=> 1-WL-equivalent. Independent
// cross-check for the fingerprint pipeline.
std::vector<int> exact_wl1_classes(const std::vector<Graph>& graphs);

// Stable text table "<name>\t<index>\t<method>\t<hex digest>", one line
// per graph x method. Backs the golden determinism fixtures.
std::string fingerprint_table(const std::string& name,
                              const std::vector<Graph>& graphs,
                              const std::vector<std::string>& methods);

// The committed golden table: every fixture file under `fixture_dir`
// crossed with a fixed method list. Generator and determinism checks
// both call this, so the recipe cannot drift between them.
std::string golden_fixture_table(const std::string& fixture_dir);

nlohmann::json to_json(const DistinguishReport& r);
nlohmann::json to_json(const StatsReport& r);
nlohmann::json to_json(const SweepReport& r);
std::string to_csv(const DistinguishReport& r);
std::string to_csv(const StatsReport& r);
std::string to_csv(const SweepReport& r);

inline constexpr int kSchemaVersion = 1;

}  // namespace csg
