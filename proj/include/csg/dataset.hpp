#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csg/graph.hpp"

namespace csg {

enum class PairMode {
  kNone,         // plain graph collection
  kConsecutive,  // graphs (2i, 2i+1) form pair i
  kAllPairs,     // every i < j
};

PairMode parse_pair_mode(const std::string& s);
std::string to_string(PairMode m);

struct DatasetBundle {
  std::string name;
  std::vector<Graph> graphs;
  // Index pairs to compare; empty for kNone.
  std::vector<std::pair<int, int>> pairs;
  PairMode pair_mode = PairMode::kNone;
  // One label per graph when the source provides them.
  std::optional<std::vector<int>> labels;
};

// graph6 file -> bundle with the requested pairing. Consecutive mode
// rejects an odd graph count.
DatasetBundle load_pair_dataset(const std::string& path, PairMode mode,
                                std::string name = {});

// Standard two/three-file benchmark layout: <stem>_A.txt with 1-based
// global edges "u, v", <stem>_graph_indicator.txt mapping node -> graph,
// optional <stem>_graph_labels.txt. <stem> is the directory basename
// (falls back to "DS"). Node ids are remapped to dense 0-based ids per
// graph; directed duplicates merge into one undirected edge.
DatasetBundle load_tudataset(const std::string& dir);

// Manifest: JSON { "datasets": { name: { "format": "graph6"|"tudataset",
// "path": ..., "pairing": "none"|"consecutive"|"all_pairs" } } }.
// Relative paths resolve against the manifest's directory.
struct ManifestEntry {
  std::string name;
  std::string format;
  std::string path;     // resolved
  PairMode pairing = PairMode::kNone;
};

std::vector<ManifestEntry> load_manifest(const std::string& path);
DatasetBundle load_bundle(const ManifestEntry& entry);
DatasetBundle load_bundle(const std::string& manifest_path,
                          const std::string& dataset_name);

}  // namespace csg
