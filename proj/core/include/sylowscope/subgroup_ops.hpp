#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sylowscope/group_table.hpp"
#include "sylowscope/subgroup.hpp"
#include "sylowscope/universe.hpp"

namespace sylowscope {

// --- small number theory -------------------------------------------------

bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n (1 if p does not divide n).
std::uint64_t p_part(std::uint64_t n, unsigned p);
bool is_prime_power(std::uint64_t n);  // 1 counts as a prime power

// --- operations on a group's own elements ---------------------------------

/// A Sylow p-subgroup, grown deterministically from a p-element by repeated
/// normalizer extension. Order is the exact p-part of |g| (trivial when p
/// does not divide |g|). Throws on non-prime p.
PermutationGroup sylow_subgroup(const PermutationGroup& g, unsigned p);
Subgroup sylow_subgroup(const Subgroup& u, unsigned p);

PermutationGroup derived_subgroup(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);
/// All Sylow subgroups normal.
bool is_nilpotent(const PermutationGroup& g);

/// Every non-identity element is fixed-point-free (equivalently, all orbits
/// are regular). A transitive semiregular group is regular.
bool is_semiregular(const PermutationGroup& g);

/// An element of order |g| when g is cyclic (the least one), else nullopt.
std::optional<Permutation> cyclic_generator(const PermutationGroup& g);

/// Multiplication table of a small group (mul matches compose()).
GroupTable to_table(const PermutationGroup& g);

/// Small generating set picked greedily from a closed element set.
std::vector<Permutation> greedy_generators(const std::vector<Permutation>& elements);

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b);

// --- universe-relative operations ----------------------------------------
// The acting group is ⟨acting_gens⟩ inside the universe; pass
// u.generator_indices() to act by the whole group.

/// Largest subgroup of s normalized by the acting group (its core).
IndexSet core_in(const Universe& u, const std::vector<std::uint32_t>& acting_gens,
                 const IndexSet& s);

/// {g in acting_elements : s^g = s}. s_gens may be any generating subset of s.
IndexSet normalizer_in(const Universe& u, const IndexSet& acting_elements,
                       const IndexSet& s, const IndexSet& s_gens);

/// A witness g (as an ambient element) with a^g = b, searching the whole
/// conjugation orbit of a under the acting group; nullopt is exhaustive.
std::optional<Permutation> conjugator_in(const Universe& u,
                                         const std::vector<std::uint32_t>& acting_gens,
                                         const IndexSet& a, const IndexSet& b);

/// Conjugation orbit of s under the acting group (sorted, deduplicated).
std::vector<IndexSet> conjugation_orbit(const Universe& u,
                                        const std::vector<std::uint32_t>& acting_gens,
                                        const IndexSet& s);

struct CosetTable {
  std::vector<std::uint32_t> coset_of;  // element index -> coset id
  std::vector<std::uint32_t> reps;      // coset id -> least element index
};

/// Left cosets xS, ids in order of least element.
CosetTable left_cosets(const Universe& u, const IndexSet& s);

/// The permutation a group element induces on cosets (1-based coset points).
Permutation coset_permutation(const Universe& u, const CosetTable& t, std::uint32_t g);

struct CosetActionResult {
  PermutationGroup image;                      // transitive on [G:U] points
  std::vector<Permutation> generator_images;   // aligned with the ambient generators
  CosetTable cosets;
  IndexSet kernel;                             // equals core_in(G, U)
};

CosetActionResult coset_action_in(const Universe& u, const IndexSet& s);

// --- subgroup-level wrappers (explicit ambient unless noted) --------------

Subgroup core(const Subgroup& u);        // symmetric ambients handled symbolically
Subgroup normalizer(const Subgroup& u);
CosetActionResult coset_action(const Subgroup& u);

struct QuotientResult {
  PermutationGroup image;  // G/N acting on the cosets of N
  std::vector<Permutation> generator_images;
};
/// Throws std::invalid_argument when n is not normal in its ambient.
QuotientResult quotient_group(const Subgroup& n);

bool is_normal(const Subgroup& u);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Group generated by an index set, with a greedy small generating set.
PermutationGroup group_from_indices(const Universe& u, const IndexSet& s);

// --- complete subgroup enumeration ----------------------------------------

struct SubgroupLattice {
  std::vector<IndexSet> subgroups;               // sorted by (order, elements)
  std::vector<std::vector<std::uint32_t>> gens;  // generating indices, aligned
  std::vector<std::vector<std::uint32_t>> classes;  // conjugacy classes (subgroup ids)
  std::vector<std::uint32_t> class_of;           // subgroup id -> class id

  std::size_t count() const { return subgroups.size(); }
};

/// Every subgroup, by closure-extension: seed with all cyclic subgroups and
/// extend known subgroups by prime-power-order elements to a fixpoint
/// (elements of composite order add nothing new: each is a product of its
/// own prime-power parts). Grouped into conjugacy classes.
SubgroupLattice all_subgroups(const Universe& u);

/// Ids of the normal subgroups in a lattice.
std::vector<std::uint32_t> normal_subgroup_ids(const Universe& u, const SubgroupLattice& lat);

}  // namespace sylowscope
