#pragma once

#include <stdexcept>
#include <string>

namespace rcpsp {

/// Malformed input text (instance file, best-known table, result JSON).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// Input parsed but the resulting object breaks a structural invariant
/// (inconsistent activity counts, dangling ids, cycles, ...).
class StructuralError : public std::runtime_error {
  public:
    explicit StructuralError(const std::string& message) : std::runtime_error(message) {}
};

/// Instance that can never admit a feasible schedule, e.g. an activity
/// requesting more of a resource than its total capacity.
class InfeasibleInstanceError : public std::runtime_error {
  public:
    explicit InfeasibleInstanceError(const std::string& message) : std::runtime_error(message) {}
};

/// Duplicate key in a table that requires unique keys.
class DuplicateKeyError : public std::runtime_error {
  public:
    explicit DuplicateKeyError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace rcpsp
