#pragma once

#include <stdexcept>
#include <string>

namespace csg {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Contract violations while building or mutating graphs (bad node id,
// self-loop, duplicate edge, missing edge, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Malformed input bytes/records. Carries a 1-based line number when the
// input came from a file (0 when parsing a bare record).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string path = {}, long line = 0)
      : Error(format(what, path, line)), path_(std::move(path)), line_(line) {}

  const std::string& path() const { return path_; }
  long line() const { return line_; }

 private:
  static std::string format(const std::string& what, const std::string& path,
                            long line) {
    std::string out;
    if (!path.empty()) out += path + ": ";
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    return out + what;
  }
  std::string path_;
  long line_;
};

// Dataset-level problems: files missing, inconsistent companion files,
// edges crossing graph boundaries, odd graph count in a paired file, ...
class DataError : public Error {
 public:
  using Error::Error;
};

// Bad command-line usage / malformed method or config strings.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A structural guarantee the toolkit promises was observed broken at
// runtime (e.g. a pair split by degree refinement but not by structure
// refinement). The CLI maps this to its own exit code.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace csg
