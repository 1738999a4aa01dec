#include "doctest.h"

#include <stdexcept>

#include <algorithm>

#include "oracles.hpp"
#include "sylowscope/catalog.hpp"
#include "sylowscope/errors.hpp"
#include "sylowscope/subgroup_ops.hpp"

using namespace sylowscope;

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(symmetric_group(4), 2).order() == 8);
  PermutationGroup p3 = sylow_subgroup(symmetric_group(3), 3);
  CHECK(p3.order() == 3);
  CHECK(p3.contains(Permutation::parse(3, "(1 2 3)")));
  // p not dividing the order: the trivial subgroup
  CHECK(sylow_subgroup(symmetric_group(4), 5).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(symmetric_group(4), 4), std::invalid_argument);
  CHECK(sylow_subgroup(symmetric_group(6), 2).order() == 16);
  CHECK(sylow_subgroup(symmetric_group(6), 3).order() == 9);
}

TEST_CASE("sylow count is 1 mod p and divides the rest") {
  for (const auto* name : {"gl2_3", "psl_3_2", "frobenius_42", "semidirect_c3sq_c4"}) {
    const CatalogEntry& e = catalog_entry(name);
    const PermutationGroup& g = e.ambient.group();
    const Universe& uni = e.ambient.universe();
    for (unsigned p : prime_divisors(g.order())) {
      const PermutationGroup syl = sylow_subgroup(g, p);
      CHECK(syl.order() == p_part(g.order(), p));
      const auto orbit = conjugation_orbit(uni, uni.generator_indices(),
                                           uni.to_indices(syl.elements()));
      CHECK(orbit.size() % p == 1);
      CHECK((g.order() / p_part(g.order(), p)) % orbit.size() == 0);
    }
  }
}

TEST_CASE("core") {
  PermutationGroup s3 = symmetric_group(3);
  Ambient amb = Ambient::group(s3, "s3");
  Subgroup point_stab(amb, {Permutation::parse(3, "(1 2)")});
  CHECK(core(point_stab).order() == 1);

  PermutationGroup s4 = symmetric_group(4);
  Ambient amb4 = Ambient::group(s4, "s4");
  Subgroup a4(amb4, alternating_group(4).generators());
  Subgroup core_a4 = core(a4);
  CHECK(core_a4.order() == 12);
  CHECK(core_a4.group().same_group(a4.group()));
}

TEST_CASE("core equals the coset action kernel") {
  for (const auto* name : {"gl2_3", "psl_3_2", "semidirect_c3sq_c4"}) {
    const CatalogEntry& e = catalog_entry(name);
    for (const auto& [label, sub] : e.marked) {
      const Universe& uni = e.ambient.universe();
      const IndexSet core_set = core_in(uni, uni.generator_indices(), sub.indices());
      const CosetActionResult act = coset_action(sub);
      CHECK(core_set == act.kernel);
    }
  }
}

TEST_CASE("coset action") {
  PermutationGroup s3 = symmetric_group(3);
  Ambient amb = Ambient::group(s3, "s3");
  Subgroup u(amb, {Permutation::parse(3, "(1 2)")});
  const CosetActionResult act = coset_action(u);
  CHECK(act.image.degree() == 3);
  CHECK(act.image.order() == 6);
  CHECK(act.image.is_transitive());
  CHECK(act.kernel.size() == 1);
  CHECK(act.generator_images.size() == s3.generators().size());
}

TEST_CASE("normalizer") {
  PermutationGroup s3 = symmetric_group(3);
  Ambient amb = Ambient::group(s3, "s3");
  Subgroup c3(amb, {Permutation::parse(3, "(1 2 3)")});
  CHECK(normalizer(c3).order() == 6);

  // N_{S7}(<7-cycle>) has order 42: cross-check against brute force
  PermutationGroup s7 = symmetric_group(7);
  Ambient amb7 = Ambient::group(s7, "s7");
  const Permutation sigma = Permutation::parse(7, "(1 2 3 4 5 6 7)");
  Subgroup c7(amb7, {sigma});
  Subgroup norm = normalizer(c7);
  CHECK(norm.order() == 42);
  // brute-force witness: <sigma, x -> 3x mod 7> also has order 42 and is
  // contained in the normalizer
  const Permutation tau = Permutation::from_images({3, 6, 2, 5, 1, 4, 7});
  CHECK(oracles::closure_order(7, {sigma, tau}) == 42);
  CHECK(norm.contains(tau));
}

TEST_CASE("conjugacy classes against the brute-force oracle") {
  {
    PermutationGroup s3 = symmetric_group(3);
    Universe uni(s3);
    const ConjugacyClasses& cls = uni.classes();
    std::vector<std::uint64_t> sizes = cls.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(sizes == oracles::conjugacy_class_sizes(3, s3.generators()));
  }
  {
    const CatalogEntry& e = catalog_entry("psl_3_2");
    const ConjugacyClasses& cls = e.ambient.universe().classes();
    std::vector<std::uint64_t> sizes = cls.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{1, 21, 24, 24, 42, 56});
    CHECK(sizes ==
          oracles::conjugacy_class_sizes(7, e.ambient.group().generators()));
    std::uint64_t total = 0;
    for (std::uint64_t s : cls.sizes) {
      total += s;
      CHECK(e.ambient.group().order() % s == 0);
    }
    CHECK(total == e.ambient.group().order());
  }
}

TEST_CASE("subgroup conjugator finds and refutes") {
  PermutationGroup s4 = symmetric_group(4);
  Universe uni(s4);
  // two point stabilizers are conjugate
  const IndexSet stab1 = uni.to_indices(s4.point_stabilizer(1).elements());
  const IndexSet stab2 = uni.to_indices(s4.point_stabilizer(2).elements());
  auto w = conjugator_in(uni, uni.generator_indices(), stab1, stab2);
  REQUIRE(w.has_value());
  IndexSet conj;
  for (std::uint32_t x : stab1) conj.push_back(uni.index_of(conjugated(uni.at(x), *w)));
  std::sort(conj.begin(), conj.end());
  CHECK(conj == stab2);

  // V4 (normal) is not conjugate to a cyclic C4
  const IndexSet v4 = uni.closure({uni.index_of(Permutation::parse(4, "(1 2)(3 4)")),
                                   uni.index_of(Permutation::parse(4, "(1 3)(2 4)"))});
  const IndexSet c4 = uni.closure({uni.index_of(Permutation::parse(4, "(1 2 3 4)"))});
  CHECK_FALSE(conjugator_in(uni, uni.generator_indices(), v4, c4).has_value());
}

TEST_CASE("quotients") {
  PermutationGroup s4 = symmetric_group(4);
  Ambient amb = Ambient::group(s4, "s4");
  Subgroup v4(amb, {Permutation::parse(4, "(1 2)(3 4)"), Permutation::parse(4, "(1 3)(2 4)")});
  const QuotientResult q = quotient_group(v4);
  CHECK(q.image.order() == 6);
  CHECK(q.image.degree() == 6);

  // quotient by the trivial subgroup is the regular image
  Subgroup triv(amb, {});
  CHECK(quotient_group(triv).image.order() == 24);
  CHECK(quotient_group(triv).image.degree() == 24);

  PermutationGroup c6 = cyclic_group(6);
  Ambient amb6 = Ambient::group(c6, "c6");
  Subgroup c2(amb6, {Permutation::parse(6, "(1 4)(2 5)(3 6)")});
  CHECK(quotient_group(c2).image.order() == 3);

  // non-normal subgroups are rejected
  Subgroup point_stab(amb, symmetric_group(4).point_stabilizer(1).generators());
  CHECK_THROWS_AS(quotient_group(point_stab), std::invalid_argument);
}

TEST_CASE("all_subgroups on S3 and S4") {
  {
    Universe uni(symmetric_group(3));
    const SubgroupLattice lat = all_subgroups(uni);
    CHECK(lat.count() == 6);
    CHECK(lat.classes.size() == 4);
  }
  {
    Universe uni(symmetric_group(4));
    const SubgroupLattice lat = all_subgroups(uni);
    CHECK(lat.count() == 30);
    CHECK(lat.count() ==
          oracles::join_closure_subgroup_count(4, symmetric_group(4).generators()));
    // Lagrange + closure under conjugation
    for (const IndexSet& s : lat.subgroups) CHECK(24 % s.size() == 0);
    std::uint64_t grouped = 0;
    for (const auto& cls : lat.classes) grouped += cls.size();
    CHECK(grouped == lat.count());
  }
}

TEST_CASE("all_subgroups on S5 matches the join-closure oracle") {
  Universe uni(symmetric_group(5));
  const SubgroupLattice lat = all_subgroups(uni);
  CHECK(lat.count() == 156);
  CHECK(lat.count() ==
        oracles::join_closure_subgroup_count(5, symmetric_group(5).generators()));
}

TEST_CASE("intersection, normality, index") {
  PermutationGroup s4 = symmetric_group(4);
  Ambient amb = Ambient::group(s4, "s4");
  Subgroup a4(amb, alternating_group(4).generators());
  Subgroup v4(amb, {Permutation::parse(4, "(1 2)(3 4)"), Permutation::parse(4, "(1 3)(2 4)")});
  Subgroup inter = intersection(a4, v4);
  CHECK(inter.order() == 4);
  CHECK(inter.group().same_group(v4.group()));
  CHECK(is_normal(a4));
  CHECK(is_normal(v4));
  CHECK_FALSE(is_normal(Subgroup(amb, {Permutation::parse(4, "(1 2)")})));
  CHECK(a4.index128() == 2);
  CHECK(v4.index_string() == "6");
}

TEST_CASE("solvability and nilpotency") {
  CHECK(is_solvable(symmetric_group(4)));
  CHECK_FALSE(is_solvable(alternating_group(5)));
  CHECK_FALSE(is_solvable(catalog_entry("psl_3_2").ambient.group()));
  CHECK(is_solvable(catalog_entry("gl2_3").ambient.group()));
  CHECK(is_solvable(catalog_entry("frobenius_42").ambient.group()));

  CHECK(is_nilpotent(cyclic_group(12)));
  CHECK(is_nilpotent(dihedral_group(8)));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK_FALSE(is_nilpotent(dihedral_group(12)));
}

TEST_CASE("semiregular and cyclic detection") {
  CHECK(is_semiregular(cyclic_group(6)));
  CHECK(is_semiregular(regular_embedding(GroupTable::dihedral(6)).group()));
  CHECK_FALSE(is_semiregular(symmetric_group(3)));
  CHECK(cyclic_generator(cyclic_group(12)).has_value());
  CHECK_FALSE(cyclic_generator(dihedral_group(8)).has_value());
}

TEST_CASE("direct products") {
  PermutationGroup g = direct_product(dihedral_group(8), cyclic_group(3));
  CHECK(g.order() == 24);
  CHECK(g.degree() == 7);
  CHECK(is_nilpotent(g));
}

TEST_CASE("caps refuse explicitly instead of truncating") {
  // explicit-mode machinery: |S8| = 40320 exceeds the default cap
  CHECK_THROWS_AS(Universe(symmetric_group(8)), CapExceeded);
  // abstract isomorphism search: orders above 1000
  CHECK_THROWS_AS(find_isomorphism(GroupTable::cyclic(1080), GroupTable::cyclic(1080)),
                  CapExceeded);
  // regular embeddings: order above 1000
  CHECK_THROWS_AS(regular_embedding(GroupTable::cyclic(1080)), CapExceeded);
}
