#pragma once

#include <cstdint>

namespace sylowscope {

/// Resource caps. Exceeding a cap raises CapExceeded; nothing is ever
/// approximated or truncated silently. Set once at startup, before any
/// groups are shared across threads.
struct Limits {
  std::uint64_t element_cap = 1'000'000;       // max elements materialized per group
  std::uint64_t explicit_ambient_cap = 10'000; // explicit-mode subgroup machinery
  std::uint64_t subgroup_enum_cap = 10'000;    // all_subgroups ambient order
  std::uint64_t abstract_iso_cap = 1'000;      // abstract isomorphism search
  std::uint64_t coset_index_cap = 100'000;     // coset action degree
  std::uint32_t census_pmax_cap = 10'000'000;  // census prime bound
};

Limits& limits();

}  // namespace sylowscope
