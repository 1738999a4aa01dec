#pragma once

// Test-side oracles. Everything in here recomputes results by brute force,
// independent of the library's stabilizer chains, subgroup lattices, and
// distinct-degree factorization, so agreement is meaningful.

#include <cstdint>
#include <vector>

#include "sylowscope/permutation.hpp"
#include "sylowscope/polynomial.hpp"

namespace oracles {

/// Exhaustive closure of a generating set under composition (plain BFS on
/// permutations, no chain involved). Returns the sorted element list.
std::vector<sylowscope::Permutation> closure_elements(
    unsigned degree, const std::vector<sylowscope::Permutation>& gens);

std::uint64_t closure_order(unsigned degree,
                            const std::vector<sylowscope::Permutation>& gens);

/// Complete subgroup enumeration by join-closure: seed with every cyclic
/// subgroup (element powers), then close the collection under pairwise join
/// <H1 ∪ H2> to a fixpoint. A different route than the library's
/// element-extension, with the same answer.
std::uint64_t join_closure_subgroup_count(
    unsigned degree, const std::vector<sylowscope::Permutation>& gens);

/// Conjugacy class sizes by direct orbit computation over the full element
/// list (conjugating by every element, not just generators).
std::vector<std::uint64_t> conjugacy_class_sizes(
    unsigned degree, const std::vector<sylowscope::Permutation>& gens);

/// Irreducible factor degrees by exhaustive minimal-degree divisor search
/// (trial division by every monic polynomial of ascending degree; a minimal
/// divisor is automatically irreducible). Repeated factors are reported, so
/// this also decides squarefreeness.
std::vector<unsigned> trial_division_factor_degrees(const sylowscope::ModPoly& f);

bool trial_division_squarefree(const sylowscope::ModPoly& f);

}  // namespace oracles
