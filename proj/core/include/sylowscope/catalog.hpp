#pragma once

#include <map>
#include <string>
#include <vector>

#include "sylowscope/finite_field.hpp"
#include "sylowscope/group_table.hpp"
#include "sylowscope/subgroup.hpp"

namespace sylowscope {

// --- standard constructions ------------------------------------------------
// Point labelings: symmetric/alternating/cyclic/dihedral groups act on
// {1..n} naturally; elementary_abelian(p,k) acts on k blocks of p points;
// regular embeddings act on {1..|H|} with point i standing for the i-th
// element of H (identity first).

PermutationGroup symmetric_group(unsigned n);
PermutationGroup alternating_group(unsigned n);
PermutationGroup cyclic_group(unsigned n);
/// Dihedral group of the given order (even, >= 6) acting on order/2 points.
PermutationGroup dihedral_group(unsigned order);
PermutationGroup elementary_abelian_group(unsigned p, unsigned k);

/// Left-regular action of a small abstract group inside Sym(|H|).
Subgroup regular_embedding(const GroupTable& h);
Subgroup regular_embedding(const PermutationGroup& h);

// --- matrix actions ----------------------------------------------------------

using FieldVector = std::vector<unsigned>;           // entries are field indices
using FieldMatrix = std::vector<std::vector<unsigned>>;

FieldVector apply_matrix(const FiniteField& f, const FieldMatrix& m, const FieldVector& v);

/// Projective points of F_q^d: normalized representatives (first nonzero
/// coordinate 1), sorted lexicographically; point labels are 1-based ranks.
std::vector<FieldVector> projective_points(const FiniteField& f, unsigned d);

/// The permutation a matrix induces on projective points.
Permutation projective_permutation(const FiniteField& f, unsigned d, const FieldMatrix& m);

/// The permutation a matrix induces on the nonzero vectors of F_q^d
/// (sorted lexicographically, 1-based ranks).
Permutation vector_permutation(const FiniteField& f, unsigned d, const FieldMatrix& m);

// --- the catalog -------------------------------------------------------------

/// A named group together with its distinguished subgroups.
struct CatalogEntry {
  std::string id;
  std::string summary;
  Ambient ambient;
  std::map<std::string, Subgroup> marked;

  const Subgroup& sub(const std::string& name) const;
};

const std::vector<std::string>& catalog_ids();
/// Deterministic; entries are cached after first construction.
const CatalogEntry& catalog_entry(const std::string& id);

/// GL(2,3) on the 8 nonzero vectors of F_3^2. Marked: U, V, P.
CatalogEntry make_gl2_3();

/// PSL(d,q) on projective points, generated by the images of all elementary
/// transvections. Marked: U (stabilizer of [e1]), V (stabilizer of the
/// hyperplane spanned by e2..ed).
CatalogEntry make_psl(unsigned d, unsigned q);

/// PSL(2,11) on the 12 points of the projective line. Marked: U, V (the two
/// conjugacy classes of order-60 subgroups, found by a seeded search),
/// a4 and d6 (a Hall pair of order 12).
CatalogEntry make_psl_2_11(std::uint64_t seed_base = 20110, unsigned attempts = 120);

/// The transitive group of order 42 and degree 7: the normalizer in Sym(7)
/// of a 7-cycle. Marked: C7.
CatalogEntry make_frobenius_42();

/// C3^2 x| C4 acting on the 9 points of F_3^2 (translations plus the
/// order-4 rotation). Marked: A (the normal C3^2), K (a complement).
CatalogEntry make_semidirect_c3sq_c4();

/// Regular C_{2p} vs regular D_{2p} inside Sym(2p). Marked: U, V.
CatalogEntry make_regular_cyclic_vs_dihedral(unsigned p);

/// Regular C_3^3 vs regular Heisenberg(3) inside Sym(27). Marked: U, V.
CatalogEntry make_regular_ea27_vs_heis3();

}  // namespace sylowscope
