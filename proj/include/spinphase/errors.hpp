#pragma once

#include <stdexcept>

namespace spinphase {

/// Integration failure, consistency-gate violation, or other runtime numeric
/// breakdown. Maps to CLI exit code 1.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration input (file, key, or value). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinphase
