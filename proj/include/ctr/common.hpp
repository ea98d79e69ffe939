#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctr {

// Bad input data or a contract violation detected at runtime (exit code 1).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent configuration (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite loss or other numerical abort during training (exit code 2).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ctr
