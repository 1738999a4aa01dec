#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sylowscope/perm_group.hpp"
#include "sylowscope/permutation.hpp"

namespace sylowscope {

/// Sorted element indices into a Universe; the working representation of a
/// subgroup in explicit-mode algorithms.
using IndexSet = std::vector<std::uint32_t>;

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const;
};

/// Conjugacy classes of an explicit group: representatives, sizes, and the
/// class id of every element.
struct ConjugacyClasses {
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;  // element index -> class id
};

/// Indexed element table of an explicit group, with fast multiplication
/// (a Cayley table when the group is small enough) and cached element data.
/// Immutable and safe to share across threads.
class Universe {
public:
  explicit Universe(PermutationGroup group);

  const PermutationGroup& group() const;
  std::uint32_t size() const;
  const Permutation& at(std::uint32_t i) const;
  std::uint32_t index_of(const Permutation& p) const;
  std::optional<std::uint32_t> find(const Permutation& p) const;

  std::uint32_t identity_index() const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// g^-1 x g.
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const;
  std::uint64_t element_order(std::uint32_t a) const;

  /// Indices of the group's generators.
  const std::vector<std::uint32_t>& generator_indices() const;

  /// Conjugacy classes, computed once on first use.
  const ConjugacyClasses& classes() const;

  /// <seed> as a sorted index set (identity always included).
  IndexSet closure(const IndexSet& seed) const;

  IndexSet conjugate_set(const IndexSet& s, std::uint32_t g) const;

  IndexSet to_indices(const std::vector<Permutation>& perms) const;
  std::vector<Permutation> to_permutations(const IndexSet& s) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace sylowscope
