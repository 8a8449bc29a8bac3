#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "csg/graph.hpp"

namespace csg {

// Induced cycle, canonical form: verts[0] is the minimum vertex and
// verts[1] is the smaller of its two cycle neighbors. Length = vertex
// count (>= 3).
struct ChordlessCycle {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }
  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
  friend auto operator<=>(const ChordlessCycle&, const ChordlessCycle&) = default;
};

// Induced path, canonical form: verts.front() < verts.back(). Length =
// edge count (>= 1).
struct ChordlessPath {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()) - 1; }
  friend bool operator==(const ChordlessPath&, const ChordlessPath&) = default;
  friend auto operator<=>(const ChordlessPath&, const ChordlessPath&) = default;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

ChordlessCycle canonical_cycle(std::vector<int> verts);
ChordlessPath canonical_path(std::vector<int> verts);

// All chordless (induced) cycles of length 3..max_len, sorted. DFS over
// induced open paths anchored at their minimum vertex; never walks a
// cycle twice.
std::vector<ChordlessCycle> enumerate_chordless_cycles(const Graph& g,
                                                       int max_len = kUnbounded);

// All chordless (induced) paths with 1..max_len edges, sorted. Every
// single edge is one.
std::vector<ChordlessPath> enumerate_chordless_paths(const Graph& g,
                                                     int max_len);

// Reference implementations: enumerate every simple cycle/path by
// unpruned backtracking, then keep the chordless ones by definition scan.
// Exponential; meant for graphs of roughly a dozen nodes.
std::vector<ChordlessCycle> brute_force_chordless_cycles(const Graph& g,
                                                         int max_len = kUnbounded);
std::vector<ChordlessPath> brute_force_chordless_paths(const Graph& g,
                                                       int max_len);

// Definition checks used by tests and the brute-force filters.
bool cycle_is_chordless(const Graph& g, const std::vector<int>& verts);
bool path_is_chordless(const Graph& g, const std::vector<int>& verts);

// Structures bucketed by length plus per-node membership, the shape the
// refinement stages consume.
struct StructureIndex {
  std::vector<ChordlessCycle> cycles;  // sorted canonical
  std::vector<ChordlessPath> paths;    // sorted canonical
  // structure ids (indices into the vectors above) per node, sorted
  std::vector<std::vector<int>> node_cycles;
  std::vector<std::vector<int>> node_paths;
  // ids bucketed by length; index = length (cycles: vertex count, paths:
  // edge count); short prefixes unused
  std::vector<std::vector<int>> cycles_by_length;
  std::vector<std::vector<int>> paths_by_length;
};

StructureIndex build_structure_index(const Graph& g,
                                     std::vector<ChordlessCycle> cycles,
                                     std::vector<ChordlessPath> paths);

// Splits a simple path (given by its vertex sequence in order) into
// chordless segments: if some chord (i,j) spans the segment, cut at the
// in-between point nearest the segment middle and recurse. Returns
// consecutive index ranges [from, to] into verts.
std::vector<std::pair<int, int>> check_path_partition(
    const Graph& g, const std::vector<int>& verts);

struct CycleStats {
  std::int64_t simple_cycles = 0;
  std::int64_t chordless_cycles = 0;
  // histograms indexed by cycle length (vertex count)
  std::vector<std::int64_t> simple_by_length;
  std::vector<std::int64_t> chordless_by_length;
  std::int64_t steps_used = 0;
};

// Thrown when the extension-step budget runs out; carries what was
// counted so far.
class BudgetError : public Error {
 public:
  BudgetError(std::string what, CycleStats partial)
      : Error(std::move(what)), partial_(std::move(partial)) {}
  const CycleStats& partial() const { return partial_; }

 private:
  CycleStats partial_;
};

inline constexpr std::int64_t kDefaultCycleBudget = 10'000'000;

// Counts simple and chordless cycles of length <= max_len by budgeted
// backtracking (each path extension costs one step).
CycleStats cycle_statistics(const Graph& g, int max_len = kUnbounded,
                            std::int64_t budget = kDefaultCycleBudget);

}  // namespace csg
