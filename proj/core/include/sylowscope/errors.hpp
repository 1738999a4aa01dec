#pragma once

#include <stdexcept>
#include <string>

namespace sylowscope {

/// A configured cap was hit. Callers always get this error rather than a
/// silently truncated or approximated result.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// No computation mode applies to the given ambient/subgroup combination.
struct ModeUnavailable : std::runtime_error {
  explicit ModeUnavailable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sylowscope
