#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

/// Base class for errors caused by user input (malformed files, words, or
/// graphs outside the spherical catalog). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
public:
  ParseError(const std::string &what, int line, int column)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// Raised when a graph (or one of its components) is not a finite-type
/// Coxeter graph.
class NonSphericalError : public DomainError {
public:
  explicit NonSphericalError(std::vector<std::string> vertices)
      : DomainError(make_message(vertices)), vertices_(std::move(vertices)) {}

  const std::vector<std::string> &vertices() const noexcept { return vertices_; }

private:
  static std::string make_message(const std::vector<std::string> &vs) {
    std::string msg = "NonSpherical: component {";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i)
        msg += ", ";
      msg += vs[i];
    }
    return msg + "} is not a spherical Coxeter graph";
  }

  std::vector<std::string> vertices_;
};

} // namespace artin
