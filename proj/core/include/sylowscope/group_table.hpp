#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sylowscope/permutation.hpp"

namespace sylowscope {

/// A small abstract group as an explicit multiplication table.
/// Element 0 is the identity. Construction validates the group axioms
/// (closure, identity, inverses, and associativity via Light's test on a
/// generating set).
class GroupTable {
public:
  static GroupTable from_table(std::vector<std::vector<std::uint16_t>> table);

  /// From a set of permutations closed under composition. Elements are
  /// indexed with the identity first, then in image-array order; mul matches
  /// compose().
  static GroupTable from_permutations(const std::vector<Permutation>& elements);

  static GroupTable cyclic(unsigned n);
  /// Dihedral group of the given order (order = 2n, n >= 1).
  static GroupTable dihedral(unsigned order);
  static GroupTable elementary_abelian(unsigned p, unsigned k);

  /// Upper unitriangular 3x3 matrices over F_p: order p^3, exponent p,
  /// nonabelian. p = 2 is rejected (exponent 4 breaks the constructions
  /// that rely on exponent p).
  static GroupTable heisenberg(unsigned p);

  unsigned order() const { return static_cast<unsigned>(table_.size()); }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a][b]; }
  std::uint16_t inv(std::uint16_t a) const { return inverse_[a]; }
  unsigned element_order(std::uint16_t a) const;
  bool is_abelian() const;
  unsigned exponent() const;
  std::vector<std::uint16_t> center() const;

  /// Multiset {element order -> count}.
  std::vector<std::pair<unsigned, unsigned>> order_histogram() const;

  /// Greedy small generating set (largest element order first).
  std::vector<std::uint16_t> generating_set() const;

  std::vector<std::uint16_t> closure(std::vector<std::uint16_t> seed) const;

private:
  GroupTable() = default;
  void finish_init();
  std::vector<std::vector<std::uint16_t>> table_;
  std::vector<std::uint16_t> inverse_;
};

/// Generator-image backtracking with element-order pruning.
/// Both orders must be <= limits().abstract_iso_cap.
bool abstract_isomorphic(const GroupTable& a, const GroupTable& b);

/// The isomorphism itself (index map a -> b), when one exists.
std::optional<std::vector<std::uint16_t>> find_isomorphism(const GroupTable& a,
                                                           const GroupTable& b);

}  // namespace sylowscope
