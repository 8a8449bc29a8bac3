#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "csg/generate.hpp"
#include "csg/graph6.hpp"
#include "csg/harness.hpp"

using namespace csg;
namespace fs = std::filesystem;

namespace {

Graph c_n(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

DatasetBundle bundle_of(std::string name, std::vector<Graph> graphs,
                        PairMode mode) {
  DatasetBundle b;
  b.name = std::move(name);
  b.graphs = std::move(graphs);
  b.pair_mode = mode;
  int n = (int)b.graphs.size();
  if (mode == PairMode::kConsecutive)
    for (int i = 0; i + 1 < n; i += 2) b.pairs.push_back({i, i + 1});
  if (mode == PairMode::kAllPairs)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.pairs.push_back({i, j});
  return b;
}

}  // namespace

TEST_CASE("method parsing") {
  auto m = parse_method("wl1");
  CHECK(m.kind == MethodSpec::Kind::kWl1);
  CHECK(m.text == "wl1");

  m = parse_method("khop:3");
  CHECK(m.kind == MethodSpec::Kind::kKhop);
  CHECK(m.k == 3);

  m = parse_method("csgnn");
  CHECK(m.kind == MethodSpec::Kind::kCsgnn);
  CHECK(m.cfg.max_cycle_len == 6);
  CHECK(m.cfg.max_path_len == 3);
  CHECK(m.cfg.variant == CsgnnConfig::Variant::kMessagePassing);

  m = parse_method("csgnn:Lmax=5,Kmax=2,variant=encode,rounds=4");
  CHECK(m.cfg.max_cycle_len == 5);
  CHECK(m.cfg.max_path_len == 2);
  CHECK(m.cfg.max_rounds == 4);
  CHECK(m.cfg.variant == CsgnnConfig::Variant::kEncode);

  m = parse_method("csgnn:Kmax=1");
  CHECK(m.cfg.max_cycle_len == 6);
  CHECK(m.cfg.max_path_len == 1);

  CHECK_THROWS_AS(parse_method(""), UsageError);
  CHECK_THROWS_AS(parse_method("wl2"), UsageError);
  CHECK_THROWS_AS(parse_method("khop:0"), UsageError);
  CHECK_THROWS_AS(parse_method("khop:x"), UsageError);
  CHECK_THROWS_AS(parse_method("csgnn:Lmax=2"), UsageError);
  CHECK_THROWS_AS(parse_method("csgnn:bogus=1"), UsageError);
  CHECK_THROWS_AS(parse_method("csgnn:variant=magic"), UsageError);
}

TEST_CASE("method fingerprints match the direct calls") {
  auto g = decalin();
  CHECK(method_fingerprint(g, parse_method("wl1")) ==
        fingerprint(wl1_refine(g)));
  CHECK(method_fingerprint(g, parse_method("khop:2")) ==
        fingerprint(khop_refine(g, 2)));
  CHECK(method_fingerprint(g, parse_method("csgnn")) == csgnn_fingerprint(g));
}

TEST_CASE("distinguish on consecutive pairs") {
  auto twins = bundle_of("twins", cycle_union_pairs(10),
                         PairMode::kConsecutive);
  auto wl = run_distinguish(twins, parse_method("wl1"), 1);
  CHECK(wl.graph_count == 20);
  CHECK(wl.pair_count == 10);
  CHECK(wl.undistinguished == 10);  // equal-size 2-regular twins
  CHECK(wl.sample.size() == 10);

  auto cs = run_distinguish(twins, parse_method("csgnn"), 1);
  CHECK(cs.undistinguished == 0);
  CHECK(cs.sample.empty());

  auto comp = bundle_of("components", {cycle_union({6, 6}), c_n(12)},
                        PairMode::kConsecutive);
  CHECK(run_distinguish(comp, parse_method("wl1"), 1).undistinguished == 1);
  // distance-2 shells are 2 nodes in both rings; only radius 3 reaches the
  // hexagon antipode (1 node vs 2) and splits the pair
  CHECK(run_distinguish(comp, parse_method("khop:2"), 1).undistinguished == 1);
  CHECK(run_distinguish(comp, parse_method("khop:3"), 1).undistinguished == 0);
  CHECK(run_distinguish(comp, parse_method("csgnn"), 1).undistinguished == 0);
}

TEST_CASE("bucket counting equals the explicit pairwise scan") {
  auto graphs = connected_graphs(7);
  graphs.resize(200);
  auto bundle = bundle_of("sub7", graphs, PairMode::kAllPairs);
  for (const char* method : {"wl1", "khop:2", "csgnn:Lmax=4,Kmax=1"}) {
    auto spec = parse_method(method);
    auto rep = run_distinguish(bundle, spec, 1);
    std::vector<GraphFingerprint> fps;
    for (const auto& g : graphs) fps.push_back(method_fingerprint(g, spec));
    std::int64_t collisions = 0;
    for (std::size_t i = 0; i < fps.size(); ++i)
      for (std::size_t j = i + 1; j < fps.size(); ++j)
        if (fps[i] == fps[j]) ++collisions;
    CHECK(rep.pair_count == 200 * 199 / 2);
    CHECK(rep.undistinguished == collisions);
  }
}

TEST_CASE("undistinguished sample is lexicographic and capped") {
  auto g = c_n(5);
  auto bundle = bundle_of("same", {g, g, g}, PairMode::kAllPairs);
  auto rep = run_distinguish(bundle, parse_method("wl1"), 1);
  CHECK(rep.undistinguished == 3);
  CHECK(rep.sample == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  std::vector<Graph> many(30, g);
  auto big = bundle_of("many", many, PairMode::kAllPairs);
  rep = run_distinguish(big, parse_method("wl1"), 1);
  CHECK(rep.pair_count == 435);
  CHECK(rep.undistinguished == 435);
  CHECK(rep.sample.size() == 100);
  CHECK(std::is_sorted(rep.sample.begin(), rep.sample.end()));
  CHECK(rep.sample.front() == std::pair<int, int>{0, 1});
}

TEST_CASE("distinguish honors multiple workers") {
  auto twins = bundle_of("twins", cycle_union_pairs(8), PairMode::kConsecutive);
  auto one = run_distinguish(twins, parse_method("csgnn"), 1);
  auto four = run_distinguish(twins, parse_method("csgnn"), 4);
  CHECK(one.undistinguished == four.undistinguished);
  CHECK(four.workers == 4);
}

TEST_CASE("stats aggregates cycle counts") {
  auto k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                  {2, 3}});
  auto bundle = bundle_of("mix", {k4, c_n(6)}, PairMode::kNone);
  auto rep = run_stats(bundle, kUnbounded, kDefaultCycleBudget, 1);
  CHECK(rep.max_len == 0);  // report echoes unbounded as 0
  CHECK(rep.graph_count == 2);
  CHECK(rep.avg_nodes == doctest::Approx(5.0));
  CHECK(rep.avg_edges == doctest::Approx(6.0));
  CHECK(rep.avg_edge_entries == doctest::Approx(12.0));
  CHECK(rep.avg_simple_cycles == doctest::Approx((7 + 1) / 2.0));
  CHECK(rep.avg_chordless_cycles == doctest::Approx((4 + 1) / 2.0));
  CHECK(rep.budget_exhausted == 0);

  // max_len applies
  auto rep3 = run_stats(bundle, 3, kDefaultCycleBudget, 1);
  CHECK(rep3.avg_simple_cycles == doctest::Approx(2.0));  // only K4 triangles
  CHECK(rep3.max_len == 3);

  // budget exhaustion is reported per graph, with partial counts kept
  std::vector<std::pair<int, int>> k9e;
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) k9e.push_back({u, v});
  auto k9 = Graph::from_edges(9, k9e);
  auto tight = run_stats(bundle_of("k9", {k9, c_n(4)}, PairMode::kNone),
                         kUnbounded, 100, 1);
  CHECK(tight.budget_exhausted == 1);
  CHECK(tight.avg_nodes == doctest::Approx(6.5));
}

TEST_CASE("enumerate output lines") {
  auto g = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto lines = run_enumerate({g, p3}, 6, 2);
  // induced paths with <= 2 edges, canonical orientation front < back,
  // derived by hand from the adjacency (ends of a 2-edge path must be
  // non-adjacent)
  std::vector<std::string> want{
      "0 cycle 0 1 2 3",
      "0 cycle 0 3 4 5",
      "0 path 0 1",
      "0 path 0 1 2",
      "0 path 0 3",
      "0 path 0 3 2",
      "0 path 0 3 4",
      "0 path 0 5",
      "0 path 0 5 4",
      "0 path 1 0 3",
      "0 path 1 0 5",
      "0 path 1 2",
      "0 path 1 2 3",
      "0 path 2 3",
      "0 path 2 3 4",
      "0 path 3 0 5",
      "0 path 3 4",
      "0 path 3 4 5",
      "0 path 4 5",
      "1 path 0 1",
      "1 path 0 1 2",
      "1 path 1 2",
  };
  // compare as sets first for a readable failure, then exactly
  CHECK(std::set<std::string>(lines.begin(), lines.end()) ==
        std::set<std::string>(want.begin(), want.end()));
  CHECK(lines == want);
}

TEST_CASE("sweep reports the first fully-distinguishing config") {
  auto bundle = bundle_of("hydro", {decalin(), bicyclopentyl()},
                          PairMode::kConsecutive);
  auto rep = run_sweep(bundle, 3, 6, 1, 3,
                       CsgnnConfig::Variant::kMessagePassing, 1);
  CHECK(rep.dataset == "hydro");
  CHECK(rep.rows.size() == 4 * 3);
  bool found_best = false;
  for (const auto& row : rep.rows) {
    CHECK(row.pair_count == 1);
    // row order: Lmax major, Kmax minor
    CsgnnConfig cfg;
    cfg.max_cycle_len = row.max_cycle_len;
    cfg.max_path_len = row.max_path_len;
    auto spec = MethodSpec{MethodSpec::Kind::kCsgnn, 1, cfg, "csgnn"};
    auto direct = run_distinguish(bundle, spec, 1, false);
    CHECK(direct.undistinguished == row.undistinguished);
    if (!found_best && row.undistinguished == 0) {
      CHECK(rep.best_cycle_len == row.max_cycle_len);
      CHECK(rep.best_path_len == row.max_path_len);
      found_best = true;
    }
  }
  CHECK(found_best);
  // the hexagon bound must distinguish the hydrocarbon pair
  CHECK(rep.best_cycle_len <= 6);
}

TEST_CASE("exact wl1 classes oracle") {
  auto classes = exact_wl1_classes(
      {c_n(6), cycle_union({3, 3}), c_n(12), petersen(), decalin(),
       bicyclopentyl()});
  CHECK(classes[0] == classes[1]);   // equal-size 2-regular
  CHECK(classes[0] != classes[2]);   // different node count
  CHECK(classes[0] != classes[3]);
  CHECK(classes[4] == classes[5]);   // the hydrocarbon twins
  CHECK(classes[3] != classes[4]);
}

TEST_CASE("report serialization") {
  auto bundle = bundle_of("pairs", cycle_union_pairs(3),
                          PairMode::kConsecutive);
  auto rep = run_distinguish(bundle, parse_method("wl1"), 1);
  auto j = to_json(rep);
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "distinguish");
  CHECK(j["dataset"] == "pairs");
  CHECK(j["method"] == "wl1");
  CHECK(j["pair_count"] == 3);
  CHECK(j["undistinguished"] == 3);
  CHECK(j.contains("wall_seconds"));
  auto csv = to_csv(rep);
  CHECK(csv.find("dataset,method") == 0);
  CHECK(csv.find("pairs,wl1") != std::string::npos);

  auto st = run_stats(bundle, 6, 1000, 1);
  auto js = to_json(st);
  CHECK(js["kind"] == "stats");
  CHECK(js["graph_count"] == 6);
  CHECK(to_csv(st).find("dataset,graph_count") == 0);

  auto sw = run_sweep(bundle, 3, 4, 1, 1,
                      CsgnnConfig::Variant::kEncode, 1);
  auto jw = to_json(sw);
  CHECK(jw["kind"] == "sweep");
  CHECK(jw["rows"].size() == 2);
  auto csvw = to_csv(sw);
  CHECK(csvw.find("max_cycle_len") != std::string::npos);

  // identical reruns serialize identically apart from wall time
  auto rep2 = run_distinguish(bundle, parse_method("wl1"), 1);
  auto a = to_json(rep), b2 = to_json(rep2);
  a.erase("wall_seconds");
  b2.erase("wall_seconds");
  CHECK(a == b2);
}

TEST_CASE("cli end to end") {
  // exercise the shipped binary against a scratch manifest
  fs::path dir = fs::temp_directory_path() /
                 ("csg_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream g6(dir / "pair.g6");
    g6 << write_graph6(cycle_union({6, 6})) << "\n"
       << write_graph6(c_n(12)) << "\n";
    std::ofstream mf(dir / "manifest.json");
    mf << R"({"datasets":{"pair":{"format":"graph6","path":"pair.g6",)"
       << R"("pairing":"consecutive"}}})";
  }
  auto run = [&](const std::string& args) {
    std::string cmd = std::string(CSG_CLI_PATH) + " " + args +
                      " > " + (dir / "out.txt").string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(dir / "out.txt");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return std::make_pair(WEXITSTATUS(rc), text);
  };
  std::string mani = (dir / "manifest.json").string();

  auto [rc, text] = run("distinguish --manifest " + mani +
                        " --dataset pair --method wl1");
  CHECK(rc == 0);
  CHECK(text.find("\"undistinguished\": 1") != std::string::npos);

  std::tie(rc, text) = run("distinguish --manifest " + mani +
                           " --dataset pair --method csgnn");
  CHECK(rc == 0);
  CHECK(text.find("\"undistinguished\": 0") != std::string::npos);

  std::tie(rc, text) = run("stats --manifest " + mani + " --dataset pair");
  CHECK(rc == 0);
  CHECK(text.find("\"kind\": \"stats\"") != std::string::npos);

  // usage errors exit 1
  std::tie(rc, text) = run("distinguish --manifest " + mani +
                           " --dataset pair --method bogus");
  CHECK(rc == 1);
  // data errors exit 2
  std::tie(rc, text) = run("distinguish --manifest " + mani +
                           " --dataset missing --method wl1");
  CHECK(rc == 2);
  std::tie(rc, text) = run("distinguish --manifest /nope.json "
                           "--dataset pair --method wl1");
  CHECK(rc == 2);

  // csv emission
  fs::path csv = dir / "rep.csv";
  std::tie(rc, text) = run("distinguish --manifest " + mani +
                           " --dataset pair --method wl1 --csv " +
                           csv.string());
  CHECK(rc == 0);
  std::ifstream cf(csv);
  std::string csv_text((std::istreambuf_iterator<char>(cf)),
                       std::istreambuf_iterator<char>());
  CHECK(csv_text.find("dataset,method") == 0);

  // remaining subcommands, smoke level
  std::tie(rc, text) = run("enumerate --graphs " + (dir / "pair.g6").string() +
                           " --max-cycle-len 12");
  CHECK(rc == 0);
  CHECK(text.find("0 cycle") != std::string::npos);
  CHECK(text.find("1 cycle") != std::string::npos);

  std::tie(rc, text) = run("bench --manifest " + mani +
                           " --dataset pair --method wl1 --method csgnn "
                           "--repetitions 2");
  CHECK(rc == 0);
  CHECK(text.find("\"median_wall_seconds\"") != std::string::npos);
  CHECK(text.find("\"kind\": \"bench\"") != std::string::npos);

  std::tie(rc, text) = run("sweep --manifest " + mani +
                           " --dataset pair --lmax-lo 4 --lmax-hi 6 "
                           "--kmax-lo 1 --kmax-hi 1");
  CHECK(rc == 0);
  CHECK(text.find("\"kind\": \"sweep\"") != std::string::npos);

  fs::remove_all(dir);
}
