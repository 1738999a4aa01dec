#include "doctest.h"

#include <stdexcept>

#include "sylowscope/catalog.hpp"
#include "sylowscope/group_table.hpp"
#include "sylowscope/subgroup_ops.hpp"

using namespace sylowscope;

TEST_CASE("standard tables") {
  CHECK(GroupTable::cyclic(6).order() == 6);
  CHECK(GroupTable::cyclic(6).is_abelian());
  CHECK(GroupTable::dihedral(6).order() == 6);
  CHECK_FALSE(GroupTable::dihedral(6).is_abelian());
  CHECK(GroupTable::elementary_abelian(3, 3).order() == 27);
  CHECK(GroupTable::elementary_abelian(3, 3).exponent() == 3);
}

TEST_CASE("heisenberg group") {
  const GroupTable h = GroupTable::heisenberg(3);
  CHECK(h.order() == 27);
  CHECK(h.exponent() == 3);
  CHECK_FALSE(h.is_abelian());
  CHECK(h.center().size() == 3);
  CHECK_THROWS_AS(GroupTable::heisenberg(2), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::heisenberg(9), std::invalid_argument);

  const GroupTable h5 = GroupTable::heisenberg(5);
  CHECK(h5.order() == 125);
  CHECK(h5.exponent() == 5);
  CHECK(h5.center().size() == 5);
}

TEST_CASE("from_permutations matches composition") {
  PermutationGroup s3 = symmetric_group(3);
  const GroupTable t = GroupTable::from_permutations(s3.elements());
  CHECK(t.order() == 6);
  CHECK_FALSE(t.is_abelian());
  CHECK(t.element_order(0) == 1);
}

TEST_CASE("bad tables are rejected") {
  // 0 is not an identity here
  CHECK_THROWS_AS(GroupTable::from_table({{1, 0}, {0, 1}}), std::invalid_argument);
  // not associative: Z/4 with one entry corrupted breaks Light's test
  std::vector<std::vector<std::uint16_t>> z4(4, std::vector<std::uint16_t>(4));
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) z4[a][b] = static_cast<std::uint16_t>((a + b) % 4);
  z4[2][3] = 0;
  CHECK_THROWS_AS(GroupTable::from_table(z4), std::invalid_argument);
}

TEST_CASE("abstract isomorphism") {
  CHECK_FALSE(abstract_isomorphic(GroupTable::cyclic(6), GroupTable::dihedral(6)));
  CHECK(abstract_isomorphic(GroupTable::dihedral(6),
                            GroupTable::from_permutations(symmetric_group(3).elements())));
  CHECK_FALSE(abstract_isomorphic(GroupTable::elementary_abelian(3, 3),
                                  GroupTable::heisenberg(3)));
  CHECK(abstract_isomorphic(GroupTable::cyclic(12), GroupTable::cyclic(12)));
  CHECK_FALSE(abstract_isomorphic(GroupTable::cyclic(12),
                                  GroupTable::elementary_abelian(2, 2)));
  // same order, same abelianness: C4 vs C2^2 differ by order histogram
  CHECK_FALSE(abstract_isomorphic(GroupTable::cyclic(4),
                                  GroupTable::elementary_abelian(2, 2)));
}

TEST_CASE("isomorphism map is a homomorphism") {
  const GroupTable a = GroupTable::dihedral(8);
  const GroupTable b =
      GroupTable::from_permutations(dihedral_group(8).elements());
  const auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (unsigned x = 0; x < a.order(); ++x)
    for (unsigned y = 0; y < a.order(); ++y)
      CHECK((*iso)[a.mul(static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y))] ==
            b.mul((*iso)[x], (*iso)[y]));
}
