#pragma once

#include <stdexcept>

namespace spinbell {

/// A well-formed request that violates a configured limit or precondition
/// (grid cap, non-positive tolerance, zero shots, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinbell
