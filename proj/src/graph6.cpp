#include "csg/graph6.hpp"

#include <fstream>

namespace csg {
namespace {

constexpr int kByteMin = 63;    // '?' encodes six zero bits
constexpr int kByteMax = 126;   // '~' opens a multi-byte size
constexpr int kMaxWritableNodes = 258047;

int checked_byte(unsigned char c, const std::string& path, long line) {
  if (c < kByteMin || c > kByteMax)
    throw ParseError("byte outside graph6 range 63..126: " +
                         std::to_string(static_cast<int>(c)),
                     path, line);
  return c - kByteMin;
}

Graph parse_record(std::string_view record, const std::string& path,
                   long line) {
  if (record.empty()) throw ParseError("empty graph6 record", path, line);
  std::size_t pos = 0;
  long long n;
  int first = checked_byte(record[0], path, line);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~' + three bytes = 18-bit size; a second '~' would start the
    // 36-bit form, which is far beyond what this toolkit handles.
    if (record.size() < 4)
      throw ParseError("truncated multi-byte node count", path, line);
    if (record[1] == '~')
      throw ParseError("node count beyond supported range (36-bit form)",
                       path, line);
    n = 0;
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | checked_byte(record[i], path, line);
    pos = 4;
  }
  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() - pos < need)
    throw ParseError("record shorter than adjacency bits require",
                     path, line);
  if (record.size() - pos > need)
    throw ParseError("trailing bytes after adjacency bits", path, line);

  std::vector<std::pair<int, int>> edges;
  int acc = 0, left = 0;
  // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (left == 0) {
        acc = checked_byte(record[pos++], path, line);
        left = 6;
      }
      if (acc & (1 << (left - 1))) edges.emplace_back(row, col);
      --left;
    }
  }
  if (left > 0 && (acc & ((1 << left) - 1)))
    throw ParseError("nonzero padding bits", path, line);
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  return parse_record(record, {}, 0);
}

std::string write_graph6(const Graph& g) {
  long long n = g.node_count();
  if (n > kMaxWritableNodes)
    throw GraphError("graph too large for graph6 output: " +
                     std::to_string(n) + " nodes");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kByteMin + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kByteMin + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kByteMin + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kByteMin + (n & 63)));
  }
  int acc = 0, used = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(kByteMin + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0)
    out.push_back(static_cast<char>(kByteMin + (acc << (6 - used))));
  return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open graph6 file: " + path);
  std::vector<Graph> graphs;
  std::string raw;
  long lineno = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view rec = raw;
    if (lineno == 1 && rec.substr(0, kHeader.size()) == kHeader)
      rec.remove_prefix(kHeader.size());
    if (rec.empty()) {
      if (lineno == 1) continue;  // header-only first line
      throw ParseError("blank line in graph6 file", path, lineno);
    }
    graphs.push_back(parse_record(rec, path, lineno));
  }
  return graphs;
}

}  // namespace csg
