#pragma once

#include <stdexcept>
#include <string>

namespace reassembly {

// Error taxonomy shared across the library. CLI exit codes:
// ConfigError -> 2, DivergenceError -> 3, IoError -> 4, anything else -> 1.

class InvalidRotationError : public std::runtime_error {
 public:
  explicit InvalidRotationError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInputError : public std::runtime_error {
 public:
  explicit EmptyInputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reassembly
