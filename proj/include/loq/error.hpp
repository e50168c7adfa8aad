#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loq {

// Bad input data: corpus records, clause structure, references.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
  ValidationError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

// Bad parameters: registry, calibration, lattice shape.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace loq
