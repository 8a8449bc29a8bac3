#include "csg/csgnn.hpp"

#include <algorithm>
#include <string>

namespace csg {
namespace {

// Co-membership lists per structure length: for every structure of
// length len, its vertices become mutual members (self excluded),
// deduplicated. Result: lists[len][v] = sorted unique co-members.
template <typename Structure>
std::vector<std::vector<std::vector<int>>> co_member_lists(
    int node_count, const std::vector<Structure>& structures, int min_len,
    int max_len) {
  std::vector<std::vector<std::vector<int>>> lists(
      max_len + 1, std::vector<std::vector<int>>(node_count));
  for (const auto& s : structures) {
    int len = s.length();
    if (len < min_len || len > max_len) continue;
    for (int a : s.verts)
      for (int b : s.verts)
        if (a != b) lists[len][a].push_back(b);
  }
  for (int len = min_len; len <= max_len; ++len)
    for (auto& l : lists[len]) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  return lists;
}

std::string variant_name(CsgnnConfig::Variant v) {
  return v == CsgnnConfig::Variant::kEncode ? "encode" : "mp";
}

}  // namespace

void validate(const CsgnnConfig& cfg) {
  if (cfg.max_cycle_len < 3)
    throw GraphError("max cycle length must be at least 3");
  if (cfg.max_path_len < 1)
    throw GraphError("max path length must be at least 1");
  if (cfg.max_rounds < 0)
    throw GraphError("max rounds must be non-negative");
}

std::vector<CycleFeature> encode_cycle_features(const Graph& g,
                                                const StructureIndex& index,
                                                int max_cycle_len) {
  if (max_cycle_len < 3)
    throw GraphError("max cycle length must be at least 3");
  std::vector<CycleFeature> features(
      g.node_count(),
      CycleFeature{std::vector<std::int64_t>(max_cycle_len + 1, 0), 0});
  for (const auto& c : index.cycles) {
    if (c.length() > max_cycle_len) continue;
    for (int v : c.verts) {
      if (v < 0 || v >= g.node_count())
        throw GraphError("cycle references node outside the graph");
      ++features[v].count_by_length[c.length()];
      ++features[v].total;
    }
  }
  return features;
}

ColorPartition csgnn_refine(const Graph& g, const CsgnnConfig& cfg,
                            const std::optional<NodeFeatures>& features) {
  validate(cfg);
  StructureIndex index = build_structure_index(
      g, enumerate_chordless_cycles(g, cfg.max_cycle_len),
      enumerate_chordless_paths(g, cfg.max_path_len));
  std::vector<CycleFeature> hist =
      encode_cycle_features(g, index, cfg.max_cycle_len);

  std::vector<Digest128> feature_init;
  if (features) feature_init = init_from_features(g, *features);

  std::vector<Digest128> init(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    Hasher h;
    h.str("csgnn-init");
    if (features)
      h.u8(1).digest(feature_init[v]);
    else
      h.u8(0);
    for (int len = 3; len <= cfg.max_cycle_len; ++len)
      h.i64(hist[v].count_by_length[len]);
    init[v] = h.finish();
  }

  auto channels = co_member_lists(g.node_count(), index.paths, 1,
                                  cfg.max_path_len);
  std::vector<std::vector<std::vector<int>>> round_channels(
      channels.begin() + 1, channels.begin() + cfg.max_path_len + 1);
  if (cfg.variant == CsgnnConfig::Variant::kMessagePassing) {
    auto cyc = co_member_lists(g.node_count(), index.cycles, 3,
                               cfg.max_cycle_len);
    round_channels.insert(round_channels.end(), cyc.begin() + 3,
                          cyc.begin() + cfg.max_cycle_len + 1);
  }

  std::string tag = "csgnn:" + variant_name(cfg.variant) +
                    ":L=" + std::to_string(cfg.max_cycle_len) +
                    ":K=" + std::to_string(cfg.max_path_len);
  return refine_fixpoint(g.node_count(), tag, init, round_channels,
                         cfg.max_rounds);
}

GraphFingerprint csgnn_fingerprint(const Graph& g, const CsgnnConfig& cfg) {
  return fingerprint(csgnn_refine(g, cfg));
}

DominanceReport dominance_check(const Graph& a, const Graph& b,
                                const CsgnnConfig& cfg) {
  validate(cfg);
  DominanceReport r;
  r.wl1 = fingerprint(wl1_refine(a)) != fingerprint(wl1_refine(b));
  r.khop = fingerprint(khop_refine(a, cfg.max_path_len)) !=
           fingerprint(khop_refine(b, cfg.max_path_len));
  r.csgnn = csgnn_fingerprint(a, cfg) != csgnn_fingerprint(b, cfg);
  return r;
}

}  // namespace csg
