#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sylowscope/subgroup.hpp"
#include "sylowscope/subgroup_ops.hpp"

namespace sylowscope {

/// Conjugacy verdict with a verified witness (U^w = V) when true.
/// mode records how the answer was obtained:
///   "explicit"  - conjugation-orbit search in an enumerated ambient
///   "cyclic"    - cyclic subgroups of Sym(n), compared through the power map
///   "regular"   - semiregular subgroups of Sym(n), decided by abstract
///                 isomorphism (covers regular subgroups and their Sylows)
///   "order"     - refuted by an order mismatch alone
struct ConjugacyOutcome {
  bool value = false;
  std::optional<Permutation> witness;
  std::string mode;
};

struct SylowOutcome {
  bool value = false;
  std::vector<std::pair<unsigned, Permutation>> witnesses;  // prime -> conjugator
  std::optional<unsigned> failing_prime;
  std::string mode;
};

struct GassmannOutcome {
  bool value = false;
  std::optional<std::string> distinguishing_class;
  std::string mode;  // "classes" | "cycle-types"
};

ConjugacyOutcome is_conjugate(const Subgroup& u, const Subgroup& v);

/// Sylow-conjugacy: immediately false on an order mismatch; for prime-power
/// order it reduces to plain conjugacy (U is its own Sylow subgroup);
/// otherwise each prime's Sylow subgroups are compared inside the ambient.
SylowOutcome is_sylow_conjugate(const Subgroup& u, const Subgroup& v);

GassmannOutcome is_gassmann(const Subgroup& u, const Subgroup& v);

/// Fixed-coset counts of the action on G/U, indexed by the ambient's
/// conjugacy classes (explicit ambients only). Entry at the identity class
/// equals the index [G:U].
std::vector<std::uint64_t> permutation_character(const Subgroup& u);

struct PairReport {
  std::string ambient_id;
  std::string u_name, v_name;
  unsigned degree = 0;
  std::string ambient_order;
  std::uint64_t u_order = 0, v_order = 0;
  std::string u_index, v_index;
  std::vector<std::string> u_gens, v_gens;
  ConjugacyOutcome conjugacy;
  SylowOutcome sylow;
  GassmannOutcome gassmann;
  bool same_core = false;
  bool same_index = false;
};

/// Runs all three predicates plus the core/index comparisons and enforces
/// the implications between them (conjugate => everything,
/// sylow-conjugate => same core and index, gassmann => same index).
PairReport classify_pair(const Subgroup& u, const Subgroup& v);

nlohmann::ordered_json pair_report_json(const PairReport& r);

/// All unordered pairs of subgroup conjugacy classes of g that are
/// Sylow-conjugate but nonconjugate, one report per class pair,
/// canonically ordered.
std::vector<PairReport> search_pairs(const PermutationGroup& g, const std::string& ambient_id);

struct DegreeSearchResult {
  unsigned degree = 0;
  std::uint64_t subgroup_count = 0;      // subgroups of Sym(d)
  std::uint64_t transitive_classes = 0;  // conjugacy classes of transitive subgroups
  std::uint64_t transitive_subgroups = 0;
  std::uint64_t faithful_classes = 0;    // index-d trivial-core classes, over all G
  std::uint64_t pairs_checked = 0;
  std::uint64_t lemma_core_index_checked = 0;
  std::vector<PairReport> violations;    // Sylow-conjugate nonconjugate pairs
};

/// Exhaustive check over every transitive G <= Sym(d) (one per conjugacy
/// class) and every pair of index-d trivial-core subgroup classes of G:
/// Sylow-conjugate pairs must be conjugate. violations stays empty for
/// d <= 6.
DegreeSearchResult degree_search(unsigned d);

}  // namespace sylowscope
