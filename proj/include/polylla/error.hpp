#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when the error is not tied to
/// a particular line (e.g. a missing section).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Connectivity that cannot form a manifold triangulation.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Degenerate geometry: zero-area triangles, duplicate or collinear points.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A proven invariant of the meshing algorithm does not hold. Indicates
/// corrupt labels or a bug, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polylla
