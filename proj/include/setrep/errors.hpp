#pragma once

#include <stdexcept>
#include <string>

namespace setrep {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or JSON input. The message names the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// An argument is outside the domain of the operation (edgeless graph,
/// disconnected graph, out-of-range vertex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidClique : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

class NoSuchPlaneConstruction : public Error {
 public:
  using Error::Error;
};

class NoPlaneExists : public Error {
 public:
  using Error::Error;
};

/// The requested closed form or witness construction does not cover the
/// input graph's class. `graph_class()` names the class (e.g. "K4").
class TheoremNotApplicable : public Error {
 public:
  explicit TheoremNotApplicable(std::string graph_class)
      : Error("TheoremNotApplicable(" + graph_class + ")"),
        graph_class_(std::move(graph_class)) {}

  const std::string& graph_class() const noexcept { return graph_class_; }

 private:
  std::string graph_class_;
};

}  // namespace setrep
