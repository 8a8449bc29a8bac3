#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "csg/generate.hpp"
#include "csg/graph6.hpp"

using namespace csg;

namespace {

// Tiny independent encoder, written directly from the format definition:
// size byte(s), then the upper triangle in column order, 6 bits per byte,
// most significant first, offset 63.
std::string reference_encode(const Graph& g) {
  int n = g.node_count();
  std::string out;
  REQUIRE(n <= 62);  // reference handles the short form only
  out.push_back(static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v * 2 + bits[b + t];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("csg_g6_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".g6");
    std::ofstream f(path, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("known encodings") {
  // Worked example from the format definition: n=5, edges 01 03 13 34.
  auto g = Graph::from_edges(5, {{0, 1}, {0, 3}, {1, 3}, {3, 4}});
  CHECK(write_graph6(g) == "DeC");
  CHECK(parse_graph6("DeC") == g);

  CHECK(write_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(write_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(Graph::from_edges(2, {})) == "A?");
  CHECK(parse_graph6("A_").edge_count() == 1);
}

TEST_CASE("writer matches an independent reference encoder") {
  for (const auto& g : all_graphs(6)) CHECK(write_graph6(g) == reference_encode(g));
  CHECK(write_graph6(petersen()) == reference_encode(petersen()));
}

TEST_CASE("round trip across forms") {
  // short form boundary, long form start, and a mid-size long form
  for (int n : {0, 1, 2, 61, 62, 63, 64, 100}) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({(v * 7 + 3) % v, v});  // a tree
    auto g = Graph::from_edges(n, edges);
    auto s = write_graph6(g);
    if (n >= 63) CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
  }
  auto k5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(parse_graph6(write_graph6(k5)) == k5);
}

TEST_CASE("parser rejects malformed records") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("DeC "), ParseError);       // stray byte
  CHECK_THROWS_AS(parse_graph6("De"), ParseError);          // truncated
  CHECK_THROWS_AS(parse_graph6("DeC\x01"), ParseError);     // out of range
  CHECK_THROWS_AS(parse_graph6(std::string("D") + char(20) + "C"), ParseError);
  // nonzero padding bits in the final byte
  std::string bad = "A";
  bad.push_back(63 + 1);  // K2 needs only the top bit; low bits must be 0
  CHECK_THROWS_AS(parse_graph6(bad), ParseError);
  // long form truncated size
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);
}

TEST_CASE("file loader strips header and reports line numbers") {
  TempFile ok(">>graph6<<?\n@\nA_\r\nDeC\n");
  auto graphs = load_graph6_file(ok.path.string());
  REQUIRE(graphs.size() == 4);
  CHECK(graphs[0].node_count() == 0);
  CHECK(graphs[1].node_count() == 1);
  CHECK(graphs[2].edge_count() == 1);
  CHECK(graphs[3].node_count() == 5);

  TempFile bad("@\nZZ\x01ZZ\n");
  try {
    load_graph6_file(bad.path.string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find(bad.path.string()) != std::string::npos);
  }

  CHECK_THROWS_AS(load_graph6_file("/nonexistent/x.g6"), DataError);
}

TEST_CASE("blank lines are records too, and invalid") {
  TempFile f("@\n\nA_\n");
  try {
    load_graph6_file(f.path.string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // A trailing newline terminates the last record; it is not a blank line.
  TempFile ok("@\nA_\n");
  CHECK(load_graph6_file(ok.path.string()).size() == 2);
}
