#pragma once

#include <stdexcept>
#include <string>

namespace way {

// Bad or missing input data (malformed CSV/JSON, schema mismatch, range errors).
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (bad grid size, dimension not divisible, unknown preset).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failure during optimization or inference (NaN loss, divergence).
// The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace way
