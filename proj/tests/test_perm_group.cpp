#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include <map>

#include "oracles.hpp"
#include "sylowscope/catalog.hpp"
#include "sylowscope/errors.hpp"
#include "sylowscope/perm_group.hpp"

using namespace sylowscope;

TEST_CASE("order of small generated groups") {
  PermutationGroup s3(3, {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 2 3)")});
  CHECK(s3.order() == 6);

  PermutationGroup none = PermutationGroup::trivial(3);
  CHECK(none.order() == 1);
  CHECK(none.contains(Permutation::identity(3)));

  PermutationGroup s4(4, {Permutation::parse(4, "(1 2)"), Permutation::parse(4, "(1 2 3 4)")});
  CHECK(s4.order() == 24);
  CHECK_THROWS_AS(PermutationGroup(0, {}), std::invalid_argument);
}

TEST_CASE("chain order equals the product of basic orbit lengths") {
  PermutationGroup g = symmetric_group(5);
  std::uint64_t product = 1;
  for (std::uint64_t len : g.basic_orbit_lengths()) product *= len;
  CHECK(product == g.order());
  CHECK(g.base().size() == g.basic_orbit_lengths().size());
}

TEST_CASE("chain order equals exhaustive closure on assorted groups") {
  const std::vector<PermutationGroup> groups = {
      symmetric_group(5), alternating_group(5), dihedral_group(12),
      cyclic_group(9),    symmetric_group(6),
  };
  for (const PermutationGroup& g : groups)
    CHECK(g.order() == oracles::closure_order(g.degree(), g.generators()));
}

TEST_CASE("membership") {
  PermutationGroup a4 = alternating_group(4);
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::parse(4, "(1 2)")));
  CHECK(a4.contains(Permutation::parse(4, "(1 2)(3 4)")));
  CHECK(a4.contains(Permutation::identity(4)));
  for (const Permutation& g : a4.generators()) CHECK(a4.contains(g));

  // membership agrees with the element list over a superset sample
  PermutationGroup s4 = symmetric_group(4);
  const auto& a4_els = a4.elements();
  for (const Permutation& x : s4.elements()) {
    const bool listed = std::binary_search(a4_els.begin(), a4_els.end(), x);
    CHECK(listed == a4.contains(x));
  }
}

TEST_CASE("elements are sorted, unique, and closed") {
  PermutationGroup g = dihedral_group(10);
  const auto& els = g.elements();
  CHECK(els.size() == 10);
  CHECK(std::is_sorted(els.begin(), els.end()));
  for (const Permutation& a : els) {
    CHECK(std::binary_search(els.begin(), els.end(), a.inverse()));
    CHECK(std::binary_search(els.begin(), els.end(), compose(a, els[3])));
  }
}

TEST_CASE("element enumeration cap refuses explicitly") {
  PermutationGroup g = cyclic_group(7);
  CHECK_THROWS_AS(g.elements(3), CapExceeded);
  CHECK(g.elements(7).size() == 7);
}

TEST_CASE("orbits and transitivity") {
  PermutationGroup g(3, {Permutation::parse(3, "(1 2)")});
  CHECK(g.orbit(3) == std::vector<unsigned>{3});
  CHECK(g.orbit(1) == std::vector<unsigned>{1, 2});
  CHECK_FALSE(g.is_transitive());
  CHECK(symmetric_group(6).is_transitive());
  CHECK(cyclic_group(12).is_transitive());
}

TEST_CASE("point stabilizer via the chain") {
  PermutationGroup s5 = symmetric_group(5);
  PermutationGroup stab = s5.point_stabilizer(3);
  CHECK(stab.order() == 24);
  for (const Permutation& g : stab.generators()) CHECK(g(3) == 3);
  // stabilizer of a fixed point is everything
  PermutationGroup fix(4, {Permutation::parse(4, "(1 2)")});
  CHECK(fix.point_stabilizer(4).order() == 2);
}

TEST_CASE("random_element is uniform and seed-deterministic") {
  PermutationGroup s4 = symmetric_group(4);
  CHECK(s4.random_element(12345) == s4.random_element(12345));

  SeededRng rng(99);
  std::map<Permutation, unsigned> hits;
  const unsigned draws = 10000;
  for (unsigned i = 0; i < draws; ++i) ++hits[s4.random_element(rng)];
  CHECK(hits.size() == 24);
  for (const auto& [perm, count] : hits) {
    const double freq = static_cast<double>(count) / draws;
    CHECK(freq > 1.0 / 24 - 0.01);
    CHECK(freq < 1.0 / 24 + 0.01);
  }
}

TEST_CASE("groups are cheap to copy and share") {
  PermutationGroup g = symmetric_group(4);
  PermutationGroup copy = g;
  CHECK(copy.order() == 24);
  CHECK(copy.same_group(g));
}
