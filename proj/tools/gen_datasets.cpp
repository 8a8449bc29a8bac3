// Writes the toolkit's bundled datasets and the manifest. Everything here
// is deterministic: fixed seeds, canonical orders, no timestamps.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "csg/generate.hpp"
#include "csg/graph6.hpp"
#include "csg/harness.hpp"
#include "csg/isomorphism.hpp"

namespace fs = std::filesystem;

namespace {

void write_g6(const fs::path& path, const std::vector<csg::Graph>& graphs) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw csg::DataError("cannot write " + path.string());
  for (const auto& g : graphs) f << csg::write_graph6(g) << "\n";
  std::cout << path.string() << ": " << graphs.size() << " graphs\n";
}

// Golden fingerprint table over the small fixtures: one line per
// (dataset, graph, method), tab separated, fixed method list. Committed
// and re-derived by the acceptance checks.
void write_golden(const fs::path& path, const fs::path& fixture_dir) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw csg::DataError("cannot write " + path.string());
  f << csg::golden_fixture_table(fixture_dir.string());
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bundled dataset generator"};
  std::string outdir = "datasets";
  std::string golden;
  bool skip_sr25 = false;
  int sr25_restarts = 2000;
  app.add_option("--outdir", outdir, "output directory")
      ->capture_default_str();
  app.add_option("--golden", golden,
                 "also write the golden fingerprint table to this path");
  app.add_flag("--skip-sr25", skip_sr25,
               "skip the strongly-regular search (slowest stage)");
  app.add_option("--sr25-restarts", sr25_restarts,
                 "annealing restarts for the strongly-regular search")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(fs::path(outdir) / "fixtures");

    // All connected 8-node graphs up to isomorphism, canonical order.
    write_g6(fs::path(outdir) / "graph8c.g6", csg::connected_graphs(8));

    // 600 pairs of equal-size cycle unions with distinct part multisets.
    write_g6(fs::path(outdir) / "exp_cycles.g6",
             csg::cycle_union_pairs(600));

    if (!skip_sr25) {
      auto srgs = csg::generate_srg_25(15, sr25_restarts);
      if (srgs.size() < 15)
        std::cerr << "warning: strongly-regular search found only "
                  << srgs.size() << " of 15 classes\n";
      write_g6(fs::path(outdir) / "sr25.g6", srgs);
    }

    // Small named fixtures.
    fs::path fx = fs::path(outdir) / "fixtures";
    write_g6(fx / "hydrocarbon_pair.g6",
             {csg::decalin(), csg::bicyclopentyl()});
    write_g6(fx / "cycle_split_pair.g6",
             {csg::cycle_union({4, 4}), csg::cycle_union({8})});
    write_g6(fx / "component_pair.g6",
             {csg::cycle_union({6, 6}), csg::cycle_union({12})});
    write_g6(fx / "srg16_pair.g6", {csg::rook_4x4(), csg::shrikhande()});
    // Degree-refinement twins found by exhaustive search (find-twin-fixtures
    // --scan-sparse 10): the first has a bridge whose sides carry chordless
    // cycles of different lengths (3 vs 4); the second is bridge-free.
    write_g6(fx / "bridge_pair.g6",
             {csg::parse_graph6("I?aIECoK?"), csg::parse_graph6("I?B@cOoq?")});
    write_g6(fx / "petersen.g6", {csg::petersen()});
    // Hexagon with one long chord (two fused squares).
    write_g6(fx / "fused_squares.g6",
             {csg::Graph::from_edges(6, {{0, 1},
                                         {1, 2},
                                         {2, 3},
                                         {3, 4},
                                         {4, 5},
                                         {0, 5},
                                         {0, 3}})});

    nlohmann::json manifest{
        {"datasets",
         {{"graph8c",
           {{"format", "graph6"},
            {"path", "graph8c.g6"},
            {"pairing", "all_pairs"}}},
          {"exp_cycles",
           {{"format", "graph6"},
            {"path", "exp_cycles.g6"},
            {"pairing", "consecutive"}}},
          {"sr25",
           {{"format", "graph6"},
            {"path", "sr25.g6"},
            {"pairing", "all_pairs"}}},
          {"hydrocarbon_pair",
           {{"format", "graph6"},
            {"path", "fixtures/hydrocarbon_pair.g6"},
            {"pairing", "consecutive"}}},
          {"cycle_split_pair",
           {{"format", "graph6"},
            {"path", "fixtures/cycle_split_pair.g6"},
            {"pairing", "consecutive"}}},
          {"component_pair",
           {{"format", "graph6"},
            {"path", "fixtures/component_pair.g6"},
            {"pairing", "consecutive"}}},
          {"srg16_pair",
           {{"format", "graph6"},
            {"path", "fixtures/srg16_pair.g6"},
            {"pairing", "consecutive"}}},
          {"bridge_pair",
           {{"format", "graph6"},
            {"path", "fixtures/bridge_pair.g6"},
            {"pairing", "consecutive"}}},
          {"imdb_binary",
           {{"format", "tudataset"},
            {"path", "IMDB-BINARY"},
            {"pairing", "none"}}},
          {"imdb_multi",
           {{"format", "tudataset"},
            {"path", "IMDB-MULTI"},
            {"pairing", "none"}}}}}};
    std::ofstream mf(fs::path(outdir) / "manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << (fs::path(outdir) / "manifest.json").string() << "\n";

    if (!golden.empty()) {
      fs::create_directories(fs::path(golden).parent_path());
      write_golden(golden, fx);
    }
  } catch (const csg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
