#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centralitylab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number (0 when the
/// error is not tied to a line, e.g. an empty stream).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on arguments was violated (bad index, bad parameter, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Distance- or inversion-based computation attempted on a disconnected graph.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("requires connected graph") {}
};

/// Iterative or spectral numerics failed (no convergence, singular system, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Dense O(N^3) measure refused because the graph exceeds the node ceiling.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace centralitylab
