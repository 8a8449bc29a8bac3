#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/errors.hpp"
#include "csg/graph.hpp"
#include "csg/hash128.hpp"

namespace csg {

// Result of running a color-refinement chain to stability.
struct ColorPartition {
  // Construction hash per node after the last executed round. Equal hash
  // <=> same class; ordering hashes yields the canonical class order.
  std::vector<Digest128> hashes;
  // Dense ids 0..class_count-1, assigned by ascending hash.
  std::vector<int> ids;
  int class_count = 0;
  int rounds = 0;      // rounds executed (>= 1 for non-empty graphs)
  bool stable = true;  // false only when a round cap stopped the chain early
  // Dense ids after every executed round, for inspecting the chain.
  std::vector<std::vector<int>> history;
};

// Label-invariant digest of a partition: hash of the sorted multiset of
// final construction hashes (graph size rides along via the multiset
// count).
struct GraphFingerprint {
  Digest128 digest;

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
  friend auto operator<=>(const GraphFingerprint&, const GraphFingerprint&) = default;
};

// Generic synchronous refinement: each round rehashes every node from its
// previous hash plus the sorted color multiset of each member list in
// `channels` (channel -> node -> member node ids). The method tag and the
// round index are folded into every hash so different chains and chain
// positions can never alias. Stops once the class count stops growing
// (the chain only ever refines, so equal counts mean an unchanged
// partition), or after max_rounds > 0 rounds.
ColorPartition refine_fixpoint(
    int node_count, const std::string& tag,
    const std::vector<Digest128>& init,
    const std::vector<std::vector<std::vector<int>>>& channels,
    int max_rounds = 0);

// Uniform initial color for n nodes (the default when no colors or
// features are supplied).
std::vector<Digest128> uniform_init(int node_count);
// Initial hashes from dense color ids / from raw feature rows.
std::vector<Digest128> init_from_colors(const ColoredGraph& cg);
std::vector<Digest128> init_from_features(const Graph& g,
                                          const NodeFeatures& f);

// Degree-neighborhood refinement (each round: own color + sorted
// neighbor-color multiset).
ColorPartition wl1_refine(const Graph& g,
                          std::optional<std::vector<Digest128>> init = {},
                          int max_rounds = 0);

// Shell refinement: each round aggregates one sorted multiset per exact
// hop distance 1..k. k = 1 reproduces wl1_refine's partition.
ColorPartition khop_refine(const Graph& g, int k,
                           std::optional<std::vector<Digest128>> init = {},
                           int max_rounds = 0);

GraphFingerprint fingerprint(const ColorPartition& p);

// Thrown when the sweep cap is hit; carries the last graph produced.
class ColorableError : public Error {
 public:
  ColorableError(std::string what, Graph last)
      : Error(std::move(what)), last_(std::move(last)) {}
  const Graph& last() const { return last_; }

 private:
  Graph last_;
};

// Subdivides every edge whose endpoints share a wl1 color, re-refines,
// and repeats until no monochromatic edge remains (at most max_sweeps
// sweeps, then ColorableError).
Graph make_wl_colorable(const Graph& g, int max_sweeps = 10);

// True when no edge of g joins two nodes of the same wl1 color.
bool is_wl_colorable(const Graph& g);

}  // namespace csg
