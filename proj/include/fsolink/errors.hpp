#pragma once

#include <stdexcept>
#include <string>

namespace fsolink {

// Raised when an iterative numeric routine cannot reach its target:
// series truncation cap exceeded, bisection bracket lost, rejection
// envelope not located. Carries a human-readable diagnostic.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed or inconsistent scenario configuration; the message
// names the offending field. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fsolink
