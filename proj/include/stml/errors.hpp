#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stml {

/// Raised when an input leaves the mathematical domain of an operation
/// (log of a non-positive constant term, division by a series with zero
/// constant term, ...). Carries the offending value.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, double offending)
      : std::runtime_error(what + " (offending value " + std::to_string(offending) + ")"),
        offending_(offending) {}

  double offending() const noexcept { return offending_; }

 private:
  double offending_;
};

/// Raised when a metric (or Jacobian) is singular at an evaluation point.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

/// Raised by the expression and model-file parsers; carries source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace stml
