// Command-line front end: distinguish | stats | enumerate | bench | sweep.
// Exit codes: 0 success, 1 usage, 2 missing/corrupt data, 3 violated
// structural invariant.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "csg/chordless.hpp"
#include "csg/graph6.hpp"
#include "csg/harness.hpp"
#include "csg/parallel.hpp"

namespace {

struct CommonOpts {
  std::string manifest = "datasets/manifest.json";
  std::string out;
  std::string csv;
  int workers = csg::default_workers();
  bool seedless = false;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--manifest", opts->manifest,
                  "dataset manifest (JSON)")
      ->capture_default_str();
  cmd->add_option("--out", opts->out, "write the JSON report here");
  cmd->add_option("--csv", opts->csv, "write the CSV summary here");
  cmd->add_option("--workers", opts->workers, "worker threads")
      ->capture_default_str();
  cmd->add_flag("--seedless", opts->seedless,
                "assert that no run-time seeding is involved (always true; "
                "prints a note)");
}

void emit(const nlohmann::json& j, const std::string& csv_text,
          const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(opts.out);
    if (!f) throw csg::DataError("cannot write " + opts.out);
    f << j.dump(2) << "\n";
  }
  if (!opts.csv.empty()) {
    std::ofstream f(opts.csv);
    if (!f) throw csg::DataError("cannot write " + opts.csv);
    f << csv_text;
  }
  if (opts.seedless)
    std::cerr << "note: all hashing is fixed-key; outputs carry no run-time "
                 "seed\n";
}

int run(int argc, char** argv) {
  CLI::App app{"chordless-structure refinement harness"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* cmd_distinguish = app.add_subcommand(
      "distinguish", "compare fingerprints across a dataset's pairs");
  std::string dataset, method = "csgnn";
  cmd_distinguish->add_option("--dataset", dataset, "dataset name")
      ->required();
  cmd_distinguish->add_option("--method", method,
                              "wl1 | khop:<k> | csgnn[:opts]")
      ->capture_default_str();
  add_common(cmd_distinguish, &opts);

  auto* cmd_stats = app.add_subcommand(
      "stats", "simple/chordless cycle statistics for a dataset");
  int max_len = 0;
  std::int64_t budget = csg::kDefaultCycleBudget;
  cmd_stats->add_option("--dataset", dataset, "dataset name")->required();
  cmd_stats->add_option("--max-len", max_len,
                        "cycle length cap (0 = unbounded)")
      ->capture_default_str();
  cmd_stats->add_option("--budget", budget,
                        "extension-step budget per graph")
      ->capture_default_str();
  add_common(cmd_stats, &opts);

  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "list chordless cycles and paths of graphs in a file");
  std::string graph_file;
  int enum_lmax = 6, enum_kmax = 3;
  cmd_enumerate->add_option("--graphs", graph_file, "graph6 file")
      ->required();
  cmd_enumerate->add_option("--max-cycle-len", enum_lmax, "cycle length cap")
      ->capture_default_str();
  cmd_enumerate->add_option("--max-path-len", enum_kmax, "path length cap")
      ->capture_default_str();
  cmd_enumerate->add_option("--out", opts.out, "write listing here");

  auto* cmd_bench = app.add_subcommand(
      "bench", "wall-clock comparison of methods on one dataset");
  std::vector<std::string> methods;
  int repetitions = 3;
  cmd_bench->add_option("--dataset", dataset, "dataset name")->required();
  cmd_bench->add_option("--method", methods, "repeatable method spec")
      ->required();
  cmd_bench->add_option("--repetitions", repetitions,
                        "timed runs per method; the median is reported");
  add_common(cmd_bench, &opts);

  auto* cmd_sweep =
      app.add_subcommand("sweep", "csgnn config grid on one dataset");
  int lmax_lo = 3, lmax_hi = 12, kmax_lo = 3, kmax_hi = 3;
  std::string variant = "mp";
  cmd_sweep->add_option("--dataset", dataset, "dataset name")->required();
  cmd_sweep->add_option("--lmax-lo", lmax_lo, "smallest cycle cap")
      ->capture_default_str();
  cmd_sweep->add_option("--lmax-hi", lmax_hi, "largest cycle cap")
      ->capture_default_str();
  cmd_sweep->add_option("--kmax-lo", kmax_lo, "smallest path cap")
      ->capture_default_str();
  cmd_sweep->add_option("--kmax-hi", kmax_hi, "largest path cap")
      ->capture_default_str();
  cmd_sweep->add_option("--variant", variant, "mp | encode")
      ->capture_default_str();
  add_common(cmd_sweep, &opts);

  CLI11_PARSE(app, argc, argv);

  if (cmd_distinguish->parsed()) {
    auto bundle = csg::load_bundle(opts.manifest, dataset);
    auto spec = csg::parse_method(method);
    auto rep = csg::run_distinguish(bundle, spec, opts.workers);
    emit(csg::to_json(rep), csg::to_csv(rep), opts);
  } else if (cmd_stats->parsed()) {
    auto bundle = csg::load_bundle(opts.manifest, dataset);
    auto rep = csg::run_stats(bundle, max_len == 0 ? csg::kUnbounded : max_len,
                              budget, opts.workers);
    emit(csg::to_json(rep), csg::to_csv(rep), opts);
  } else if (cmd_enumerate->parsed()) {
    auto graphs = csg::load_graph6_file(graph_file);
    auto lines = csg::run_enumerate(graphs, enum_lmax, enum_kmax);
    if (opts.out.empty()) {
      for (const auto& l : lines) std::cout << l << "\n";
    } else {
      std::ofstream f(opts.out);
      if (!f) throw csg::DataError("cannot write " + opts.out);
      for (const auto& l : lines) f << l << "\n";
    }
  } else if (cmd_bench->parsed()) {
    if (repetitions < 1) throw csg::UsageError("repetitions must be >= 1");
    auto bundle = csg::load_bundle(opts.manifest, dataset);
    nlohmann::json rows = nlohmann::json::array();
    std::string csv =
        "dataset,method,graph_count,pair_count,undistinguished,"
        "median_wall_seconds,repetitions\n";
    for (const auto& m : methods) {
      std::vector<double> walls;
      csg::DistinguishReport rep;
      for (int r = 0; r < repetitions; ++r) {
        rep = csg::run_distinguish(bundle, csg::parse_method(m),
                                   opts.workers);
        walls.push_back(rep.wall_seconds);
      }
      std::sort(walls.begin(), walls.end());
      double median = walls.size() % 2 == 1
                          ? walls[walls.size() / 2]
                          : (walls[walls.size() / 2 - 1] +
                             walls[walls.size() / 2]) /
                                2;
      auto j = csg::to_json(rep);
      j["median_wall_seconds"] = median;
      j["repetitions"] = repetitions;
      rows.push_back(std::move(j));
      std::ostringstream line;
      line << rep.dataset << ',' << rep.method << ',' << rep.graph_count
           << ',' << rep.pair_count << ',' << rep.undistinguished << ','
           << median << ',' << repetitions << '\n';
      csv += line.str();
    }
    nlohmann::json j{{"schema_version", csg::kSchemaVersion},
                     {"kind", "bench"},
                     {"dataset", dataset},
                     {"runs", rows}};
    emit(j, csv, opts);
  } else if (cmd_sweep->parsed()) {
    auto bundle = csg::load_bundle(opts.manifest, dataset);
    auto var = variant == "encode" ? csg::CsgnnConfig::Variant::kEncode
               : variant == "mp"
                   ? csg::CsgnnConfig::Variant::kMessagePassing
                   : throw csg::UsageError("bad variant: " + variant);
    auto rep = csg::run_sweep(bundle, lmax_lo, lmax_hi, kmax_lo, kmax_hi, var,
                              opts.workers);
    emit(csg::to_json(rep), csg::to_csv(rep), opts);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const csg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const csg::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const csg::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const csg::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const csg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
