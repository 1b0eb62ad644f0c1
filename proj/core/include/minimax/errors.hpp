#pragma once

#include <stdexcept>
#include <string>

namespace minimax {

// Error categories map 1:1 onto CLI exit codes (see tools/).
//   ConfigError    -> 2   bad configuration / registry miss / dimension mismatch
//   NumericError   -> 3   a numeric oracle failed to converge or produced garbage
//   InvariantError -> 4   a maintained invariant or property check was violated
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minimax
