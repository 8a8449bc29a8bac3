#include "csg/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "csg/graph6.hpp"

namespace fs = std::filesystem;

namespace csg {
namespace {

std::vector<std::pair<int, int>> make_pairs(PairMode mode, int count,
                                            const std::string& path) {
  std::vector<std::pair<int, int>> pairs;
  switch (mode) {
    case PairMode::kNone:
      break;
    case PairMode::kConsecutive:
      if (count % 2 != 0)
        throw DataError("consecutive pairing needs an even graph count, got " +
                        std::to_string(count) + " in " + path);
      for (int i = 0; i + 1 < count; i += 2) pairs.emplace_back(i, i + 1);
      break;
    case PairMode::kAllPairs:
      for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
      break;
  }
  return pairs;
}

// "12, 34" with optional spaces; rejects anything else.
std::pair<long, long> parse_edge_line(const std::string& line,
                                      const std::string& path, long lineno) {
  std::istringstream ss(line);
  long u = 0, v = 0;
  char comma = 0;
  if (!(ss >> u >> comma >> v) || comma != ',')
    throw ParseError("expected 'u, v'", path, lineno);
  std::string rest;
  if (ss >> rest) throw ParseError("trailing content after edge", path, lineno);
  return {u, v};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    lines.push_back(raw);
  }
  // A single trailing blank line (final newline) is fine; interior blanks
  // are caught by the per-line parsers.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

PairMode parse_pair_mode(const std::string& s) {
  if (s == "none") return PairMode::kNone;
  if (s == "consecutive") return PairMode::kConsecutive;
  if (s == "all_pairs") return PairMode::kAllPairs;
  throw DataError("unknown pairing mode: " + s);
}

std::string to_string(PairMode m) {
  switch (m) {
    case PairMode::kNone: return "none";
    case PairMode::kConsecutive: return "consecutive";
    case PairMode::kAllPairs: return "all_pairs";
  }
  return "none";
}

DatasetBundle load_pair_dataset(const std::string& path, PairMode mode,
                                std::string name) {
  DatasetBundle b;
  b.name = name.empty() ? fs::path(path).stem().string() : std::move(name);
  b.graphs = load_graph6_file(path);
  b.pair_mode = mode;
  b.pairs = make_pairs(mode, static_cast<int>(b.graphs.size()), path);
  return b;
}

DatasetBundle load_tudataset(const std::string& dir) {
  fs::path root(dir);
  if (!fs::is_directory(root))
    throw DataError("not a dataset directory: " + dir);
  std::string stem = root.filename().string();
  if (stem.empty()) stem = root.parent_path().filename().string();
  auto pick = [&](const std::string& suffix) -> fs::path {
    fs::path named = root / (stem + suffix);
    if (fs::exists(named)) return named;
    fs::path generic = root / ("DS" + suffix);
    if (fs::exists(generic)) return generic;
    throw DataError("missing dataset file: " + named.string());
  };

  std::string ind_path = pick("_graph_indicator.txt").string();
  std::string adj_path = pick("_A.txt").string();

  auto ind_lines = read_lines(ind_path);
  long node_count = static_cast<long>(ind_lines.size());
  if (node_count == 0) throw DataError("empty graph indicator: " + ind_path);

  std::vector<int> node_graph(node_count);  // 0-based graph id per node
  int graph_count = 0;
  for (long i = 0; i < node_count; ++i) {
    long g = 0;
    try {
      g = std::stol(ind_lines[i]);
    } catch (...) {
      throw ParseError("expected a graph id", ind_path, i + 1);
    }
    if (g < 1)
      throw ParseError("graph ids are 1-based, got " + std::to_string(g),
                       ind_path, i + 1);
    node_graph[i] = static_cast<int>(g - 1);
    graph_count = std::max(graph_count, static_cast<int>(g));
  }

  // Dense 0-based local ids in global-node order.
  std::vector<int> local_id(node_count);
  std::vector<int> graph_size(graph_count, 0);
  for (long i = 0; i < node_count; ++i)
    local_id[i] = graph_size[node_graph[i]]++;
  for (int g = 0; g < graph_count; ++g)
    if (graph_size[g] == 0)
      throw DataError("graph " + std::to_string(g + 1) + " has no nodes in " +
                      ind_path);

  std::vector<std::set<std::pair<int, int>>> edges(graph_count);
  auto adj_lines = read_lines(adj_path);
  for (long i = 0; i < static_cast<long>(adj_lines.size()); ++i) {
    auto [gu, gv] = parse_edge_line(adj_lines[i], adj_path, i + 1);
    if (gu < 1 || gu > node_count || gv < 1 || gv > node_count)
      throw DataError(adj_path + ": line " + std::to_string(i + 1) +
                      ": node id " + std::to_string(gu < 1 || gu > node_count ? gu : gv) +
                      " outside 1.." + std::to_string(node_count));
    int a = static_cast<int>(gu - 1), b = static_cast<int>(gv - 1);
    if (node_graph[a] != node_graph[b])
      throw DataError(adj_path + ": line " + std::to_string(i + 1) +
                      ": edge crosses graphs " +
                      std::to_string(node_graph[a] + 1) + " and " +
                      std::to_string(node_graph[b] + 1));
    int u = local_id[a], v = local_id[b];
    if (u == v)
      throw DataError(adj_path + ": line " + std::to_string(i + 1) +
                      ": self-loop on node " + std::to_string(gu));
    edges[node_graph[a]].insert({std::min(u, v), std::max(u, v)});
  }

  DatasetBundle bundle;
  bundle.name = stem;
  bundle.graphs.reserve(graph_count);
  for (int g = 0; g < graph_count; ++g)
    bundle.graphs.push_back(Graph::from_edges(
        graph_size[g], {edges[g].begin(), edges[g].end()}));

  fs::path labels_named = root / (stem + "_graph_labels.txt");
  fs::path labels_generic = root / "DS_graph_labels.txt";
  fs::path labels =
      fs::exists(labels_named)
          ? labels_named
          : (fs::exists(labels_generic) ? labels_generic : fs::path{});
  if (!labels.empty()) {
    auto label_lines = read_lines(labels.string());
    if (static_cast<int>(label_lines.size()) != graph_count)
      throw DataError("label count " + std::to_string(label_lines.size()) +
                      " != graph count " + std::to_string(graph_count) +
                      " in " + labels.string());
    std::vector<int> ls(graph_count);
    for (int g = 0; g < graph_count; ++g) {
      try {
        ls[g] = std::stoi(label_lines[g]);
      } catch (...) {
        throw ParseError("expected an integer label", labels.string(), g + 1);
      }
    }
    bundle.labels = std::move(ls);
  }
  return bundle;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad manifest JSON: ") + e.what(), path);
  }
  if (!j.contains("datasets") || !j["datasets"].is_object())
    throw DataError("manifest needs a \"datasets\" object: " + path);
  fs::path base = fs::path(path).parent_path();
  std::vector<ManifestEntry> entries;
  for (auto& [name, spec] : j["datasets"].items()) {
    ManifestEntry e;
    e.name = name;
    try {
      e.format = spec.at("format").get<std::string>();
      fs::path p = spec.at("path").get<std::string>();
      e.path = (p.is_absolute() ? p : base / p).string();
      e.pairing = parse_pair_mode(spec.value("pairing", "none"));
    } catch (const nlohmann::json::exception& ex) {
      throw DataError("manifest entry \"" + name + "\": " + ex.what());
    }
    if (e.format != "graph6" && e.format != "tudataset")
      throw DataError("manifest entry \"" + name +
                      "\": unknown format " + e.format);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return entries;
}

DatasetBundle load_bundle(const ManifestEntry& entry) {
  if (entry.format == "graph6")
    return load_pair_dataset(entry.path, entry.pairing, entry.name);
  DatasetBundle b = load_tudataset(entry.path);
  b.name = entry.name;
  b.pair_mode = entry.pairing;
  b.pairs = make_pairs(entry.pairing, static_cast<int>(b.graphs.size()),
                       entry.path);
  return b;
}

DatasetBundle load_bundle(const std::string& manifest_path,
                          const std::string& dataset_name) {
  for (const auto& e : load_manifest(manifest_path))
    if (e.name == dataset_name) return load_bundle(e);
  throw DataError("dataset \"" + dataset_name + "\" not in manifest " +
                  manifest_path);
}

}  // namespace csg
