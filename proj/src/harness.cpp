#include "csg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "csg/chordless.hpp"
#include "csg/graph6.hpp"
#include "csg/parallel.hpp"

namespace csg {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw UsageError("bad " + what + ": " + s);
  }
}

}  // namespace

MethodSpec parse_method(const std::string& s) {
  MethodSpec m;
  if (s == "wl1") {
    m.kind = MethodSpec::Kind::kWl1;
    m.text = "wl1";
    return m;
  }
  if (s.rfind("khop:", 0) == 0) {
    m.kind = MethodSpec::Kind::kKhop;
    m.k = parse_int(s.substr(5), "khop radius");
    if (m.k < 1) throw UsageError("khop radius must be >= 1");
    m.text = "khop:" + std::to_string(m.k);
    return m;
  }
  if (s == "csgnn" || s.rfind("csgnn:", 0) == 0) {
    m.kind = MethodSpec::Kind::kCsgnn;
    if (s.size() > 6) {
      std::stringstream ss(s.substr(6));
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
          throw UsageError("bad csgnn option (want key=value): " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "Lmax")
          m.cfg.max_cycle_len = parse_int(val, "Lmax");
        else if (key == "Kmax")
          m.cfg.max_path_len = parse_int(val, "Kmax");
        else if (key == "rounds")
          m.cfg.max_rounds = parse_int(val, "rounds");
        else if (key == "variant") {
          if (val == "mp")
            m.cfg.variant = CsgnnConfig::Variant::kMessagePassing;
          else if (val == "encode")
            m.cfg.variant = CsgnnConfig::Variant::kEncode;
          else
            throw UsageError("bad variant (want mp|encode): " + val);
        } else {
          throw UsageError("unknown csgnn option: " + key);
        }
      }
    }
    try {
      validate(m.cfg);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    m.text = "csgnn:Lmax=" + std::to_string(m.cfg.max_cycle_len) +
             ",Kmax=" + std::to_string(m.cfg.max_path_len) + ",variant=" +
             (m.cfg.variant == CsgnnConfig::Variant::kEncode ? "encode"
                                                             : "mp") +
             ",rounds=" + std::to_string(m.cfg.max_rounds);
    return m;
  }
  throw UsageError("unknown method: " + s +
                   " (want wl1 | khop:<k> | csgnn[:opts])");
}

GraphFingerprint method_fingerprint(const Graph& g, const MethodSpec& m) {
  switch (m.kind) {
    case MethodSpec::Kind::kWl1:
      return fingerprint(wl1_refine(g));
    case MethodSpec::Kind::kKhop:
      return fingerprint(khop_refine(g, m.k));
    case MethodSpec::Kind::kCsgnn:
      return csgnn_fingerprint(g, m.cfg);
  }
  throw UsageError("unhandled method kind");
}

DistinguishReport run_distinguish(const DatasetBundle& bundle,
                                  const MethodSpec& method, int workers,
                                  bool enforce_dominance) {
  auto start = std::chrono::steady_clock::now();
  DistinguishReport r;
  r.dataset = bundle.name;
  r.method = method.text;
  r.graph_count = static_cast<int>(bundle.graphs.size());
  r.workers = workers;

  bool needs_wl1 =
      enforce_dominance && method.kind == MethodSpec::Kind::kCsgnn;
  struct PerGraph {
    GraphFingerprint fp;
    GraphFingerprint wl1;
  };
  std::vector<PerGraph> per =
      parallel_map<PerGraph>(r.graph_count, workers, [&](int i) {
        PerGraph p;
        p.fp = method_fingerprint(bundle.graphs[i], method);
        if (needs_wl1) p.wl1 = fingerprint(wl1_refine(bundle.graphs[i]));
        return p;
      });

  auto check_pair = [&](int i, int j) {
    if (needs_wl1 && per[i].fp == per[j].fp && per[i].wl1 != per[j].wl1)
      throw InvariantError(
          "structure refinement merged a pair that degree refinement "
          "splits: graphs " +
          std::to_string(i) + " and " + std::to_string(j) + " of " +
          bundle.name);
  };

  if (bundle.pair_mode == PairMode::kAllPairs) {
    // Bucket by fingerprint: sum of C(size,2) equals the pairwise loop.
    std::map<Digest128, std::vector<int>> buckets;
    for (int i = 0; i < r.graph_count; ++i)
      buckets[per[i].fp.digest].push_back(i);
    r.pair_count =
        static_cast<std::int64_t>(r.graph_count) * (r.graph_count - 1) / 2;
    for (const auto& [fp, members] : buckets) {
      std::int64_t sz = static_cast<std::int64_t>(members.size());
      r.undistinguished += sz * (sz - 1) / 2;
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          check_pair(members[a], members[b]);
          if (r.sample.size() < 100)
            r.sample.emplace_back(members[a], members[b]);
        }
    }
    std::sort(r.sample.begin(), r.sample.end());
  } else {
    r.pair_count = static_cast<std::int64_t>(bundle.pairs.size());
    for (auto [i, j] : bundle.pairs) {
      check_pair(i, j);
      if (per[i].fp == per[j].fp) {
        ++r.undistinguished;
        if (r.sample.size() < 100) r.sample.emplace_back(i, j);
      }
    }
  }
  r.wall_seconds = seconds_since(start);
  return r;
}

StatsReport run_stats(const DatasetBundle& bundle, int max_len,
                      std::int64_t budget, int workers) {
  auto start = std::chrono::steady_clock::now();
  StatsReport r;
  r.dataset = bundle.name;
  r.graph_count = static_cast<int>(bundle.graphs.size());
  r.max_len = max_len == kUnbounded ? 0 : max_len;
  r.budget = budget;
  r.workers = workers;
  if (r.graph_count == 0) return r;

  struct Row {
    CycleStats stats;
    bool exhausted = false;
  };
  std::vector<Row> rows =
      parallel_map<Row>(r.graph_count, workers, [&](int i) {
        Row row;
        try {
          row.stats = cycle_statistics(bundle.graphs[i], max_len, budget);
        } catch (const BudgetError& e) {
          row.stats = e.partial();
          row.exhausted = true;
        }
        return row;
      });

  double n = r.graph_count;
  for (int i = 0; i < r.graph_count; ++i) {
    r.avg_nodes += bundle.graphs[i].node_count() / n;
    r.avg_edges += bundle.graphs[i].edge_count() / n;
    r.avg_simple_cycles += rows[i].stats.simple_cycles / n;
    r.avg_chordless_cycles += rows[i].stats.chordless_cycles / n;
    if (rows[i].exhausted) ++r.budget_exhausted;
  }
  r.avg_edge_entries = 2 * r.avg_edges;
  r.wall_seconds = seconds_since(start);
  return r;
}

std::vector<std::string> run_enumerate(const std::vector<Graph>& graphs,
                                       int max_cycle_len, int max_path_len) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto emit = [&](const char* kind, const std::vector<int>& verts) {
      std::string line = std::to_string(i) + " " + kind;
      for (int v : verts) line += " " + std::to_string(v);
      lines.push_back(std::move(line));
    };
    for (const auto& c : enumerate_chordless_cycles(graphs[i], max_cycle_len))
      emit("cycle", c.verts);
    for (const auto& p : enumerate_chordless_paths(graphs[i], max_path_len))
      emit("path", p.verts);
  }
  return lines;
}

SweepReport run_sweep(const DatasetBundle& bundle, int lmax_lo, int lmax_hi,
                      int kmax_lo, int kmax_hi, CsgnnConfig::Variant variant,
                      int workers) {
  if (lmax_lo < 3 || lmax_hi < lmax_lo || kmax_lo < 1 || kmax_hi < kmax_lo)
    throw UsageError("bad sweep ranges");
  SweepReport rep;
  rep.dataset = bundle.name;
  for (int l = lmax_lo; l <= lmax_hi; ++l)
    for (int k = kmax_lo; k <= kmax_hi; ++k) {
      MethodSpec m;
      m.kind = MethodSpec::Kind::kCsgnn;
      m.cfg.max_cycle_len = l;
      m.cfg.max_path_len = k;
      m.cfg.variant = variant;
      m.text = "csgnn";
      DistinguishReport d = run_distinguish(bundle, m, workers);
      SweepRow row;
      row.max_cycle_len = l;
      row.max_path_len = k;
      row.variant =
          variant == CsgnnConfig::Variant::kEncode ? "encode" : "mp";
      row.pair_count = d.pair_count;
      row.undistinguished = d.undistinguished;
      row.wall_seconds = d.wall_seconds;
      rep.rows.push_back(row);
      if (d.undistinguished == 0 && rep.best_cycle_len == -1) {
        rep.best_cycle_len = l;
        rep.best_path_len = k;
      }
    }
  return rep;
}

std::string fingerprint_table(const std::string& name,
                              const std::vector<Graph>& graphs,
                              const std::vector<std::string>& methods) {
  std::ostringstream out;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (const auto& m : methods)
      out << name << "\t" << i << "\t" << m << "\t"
          << method_fingerprint(graphs[i], parse_method(m)).digest.hex()
          << "\n";
  return out.str();
}

std::string golden_fixture_table(const std::string& fixture_dir) {
  static const std::vector<std::string> kFiles{
      "hydrocarbon_pair.g6", "cycle_split_pair.g6", "component_pair.g6",
      "srg16_pair.g6",       "bridge_pair.g6",      "petersen.g6",
      "fused_squares.g6"};
  static const std::vector<std::string> kMethods{
      "wl1", "khop:2", "csgnn", "csgnn:Lmax=6,Kmax=3,variant=encode"};
  std::string out;
  for (const auto& file : kFiles) {
    auto graphs = load_graph6_file(fixture_dir + "/" + file);
    std::string stem = file.substr(0, file.rfind('.'));
    out += fingerprint_table(stem, graphs, kMethods);
  }
  return out;
}

std::vector<int> exact_wl1_classes(const std::vector<Graph>& graphs) {
  // Synchronized refinement with one shared dictionary per round: colors
  // are small ints meaningful across graphs, so cross-graph multiset
  // equality is exact (no hashes anywhere).
  int rounds = 0;
  for (const auto& g : graphs) rounds = std::max(rounds, g.node_count());
  std::vector<std::vector<int>> colors(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    colors[gi].assign(graphs[gi].node_count(), 0);
  for (int round = 0; round < rounds; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    std::vector<std::vector<int>> next(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = graphs[gi];
      next[gi].resize(g.node_count());
      for (int v = 0; v < g.node_count(); ++v) {
        std::vector<int> nb;
        nb.reserve(g.neighbors(v).size());
        for (int u : g.neighbors(v)) nb.push_back(colors[gi][u]);
        std::sort(nb.begin(), nb.end());
        auto key = std::make_pair(colors[gi][v], std::move(nb));
        auto it = dict.emplace(std::move(key), static_cast<int>(dict.size()))
                      .first;
        next[gi][v] = it->second;
      }
    }
    colors = std::move(next);
  }
  std::map<std::vector<int>, int> classes;
  std::vector<int> out(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    std::vector<int> sig = colors[gi];
    std::sort(sig.begin(), sig.end());
    auto it =
        classes.emplace(std::move(sig), static_cast<int>(classes.size()))
            .first;
    out[gi] = it->second;
  }
  return out;
}

namespace {

nlohmann::json base_json(const std::string& kind) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}};
}

}  // namespace

nlohmann::json to_json(const DistinguishReport& r) {
  nlohmann::json j = base_json("distinguish");
  j["dataset"] = r.dataset;
  j["method"] = r.method;
  j["graph_count"] = r.graph_count;
  j["pair_count"] = r.pair_count;
  j["undistinguished"] = r.undistinguished;
  nlohmann::json sample = nlohmann::json::array();
  for (auto [a, b] : r.sample) sample.push_back({a, b});
  j["undistinguished_sample"] = sample;
  j["workers"] = r.workers;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

nlohmann::json to_json(const StatsReport& r) {
  nlohmann::json j = base_json("stats");
  j["dataset"] = r.dataset;
  j["graph_count"] = r.graph_count;
  j["avg_nodes"] = r.avg_nodes;
  j["avg_edges"] = r.avg_edges;
  j["avg_edge_entries"] = r.avg_edge_entries;
  j["avg_simple_cycles"] = r.avg_simple_cycles;
  j["avg_chordless_cycles"] = r.avg_chordless_cycles;
  j["budget_exhausted"] = r.budget_exhausted;
  j["max_len"] = r.max_len;
  j["budget"] = r.budget;
  j["workers"] = r.workers;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json j = base_json("sweep");
  j["dataset"] = r.dataset;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"max_cycle_len", row.max_cycle_len},
                    {"max_path_len", row.max_path_len},
                    {"variant", row.variant},
                    {"pair_count", row.pair_count},
                    {"undistinguished", row.undistinguished},
                    {"wall_seconds", row.wall_seconds}});
  j["rows"] = rows;
  j["best_cycle_len"] = r.best_cycle_len;
  j["best_path_len"] = r.best_path_len;
  return j;
}

std::string to_csv(const DistinguishReport& r) {
  std::ostringstream out;
  out << "dataset,method,graph_count,pair_count,undistinguished,wall_seconds\n"
      << r.dataset << ',' << r.method << ',' << r.graph_count << ','
      << r.pair_count << ',' << r.undistinguished << ',' << r.wall_seconds
      << '\n';
  return out.str();
}

std::string to_csv(const StatsReport& r) {
  std::ostringstream out;
  out << "dataset,graph_count,avg_nodes,avg_edges,avg_edge_entries,"
         "avg_simple_cycles,avg_chordless_cycles,budget_exhausted,"
         "max_len,budget,wall_seconds\n"
      << r.dataset << ',' << r.graph_count << ',' << r.avg_nodes << ','
      << r.avg_edges << ',' << r.avg_edge_entries << ','
      << r.avg_simple_cycles << ',' << r.avg_chordless_cycles << ','
      << r.budget_exhausted << ',' << r.max_len << ',' << r.budget << ','
      << r.wall_seconds << '\n';
  return out.str();
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "dataset,variant,max_cycle_len,max_path_len,pair_count,"
         "undistinguished,wall_seconds\n";
  for (const auto& row : r.rows)
    out << r.dataset << ',' << row.variant << ',' << row.max_cycle_len << ','
        << row.max_path_len << ',' << row.pair_count << ','
        << row.undistinguished << ',' << row.wall_seconds << '\n';
  return out.str();
}

}  // namespace csg
