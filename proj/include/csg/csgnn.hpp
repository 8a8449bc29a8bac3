#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csg/chordless.hpp"
#include "csg/graph.hpp"
#include "csg/refine.hpp"

namespace csg {

// Per-node histogram of chordless-cycle memberships by cycle length.
struct CycleFeature {
  std::vector<std::int64_t> count_by_length;  // index = length, 0..max_len
  std::int64_t total = 0;

  friend bool operator==(const CycleFeature&, const CycleFeature&) = default;
};

struct CsgnnConfig {
  int max_cycle_len = 6;  // chordless cycles considered, >= 3
  int max_path_len = 3;   // chordless-path co-membership radius, >= 1
  int max_rounds = 0;     // 0 = run to stability
  enum class Variant {
    kEncode,          // cycle histogram init + path-co-membership rounds
    kMessagePassing,  // rounds additionally aggregate cycle co-members
  };
  Variant variant = Variant::kMessagePassing;
};

void validate(const CsgnnConfig& cfg);

// Histogram of chordless cycles (length 3..max_cycle_len) through each
// node, read off a prebuilt index.
std::vector<CycleFeature> encode_cycle_features(const Graph& g,
                                                const StructureIndex& index,
                                                int max_cycle_len);

// Chordless-structure color refinement. Initial color hashes the cycle
// histogram (plus node features when given); each round aggregates the
// sorted color multiset of path co-members per length 1..max_path_len
// (message-passing form: plus cycle co-members per length
// 3..max_cycle_len). Co-membership always excludes the node itself.
ColorPartition csgnn_refine(const Graph& g, const CsgnnConfig& cfg = {},
                            const std::optional<NodeFeatures>& features = {});

GraphFingerprint csgnn_fingerprint(const Graph& g,
                                   const CsgnnConfig& cfg = {});

struct DominanceReport {
  bool wl1 = false;    // wl1 fingerprints differ
  bool khop = false;   // khop (k = max_path_len) fingerprints differ
  bool csgnn = false;  // csgnn fingerprints differ
};

// Runs all three refinements on a pair with consistent parameters. The
// structure chain subsumes the degree chain: wl1 && !csgnn cannot happen
// (short of a 128-bit hash collision), and the harness treats it as a
// hard invariant violation.
DominanceReport dominance_check(const Graph& a, const Graph& b,
                                const CsgnnConfig& cfg = {});

}  // namespace csg
