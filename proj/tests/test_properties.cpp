#include "doctest.h"

#include <future>
#include <set>

#include "oracles.hpp"
#include "sylowscope/catalog.hpp"
#include "sylowscope/classify.hpp"

using namespace sylowscope;

// Randomized cross-checks with a fixed seed schedule, plus a concurrency
// smoke test. Everything here is deterministic run to run.

TEST_CASE("random generated groups: chain order equals closure order") {
  const PermutationGroup s7 = symmetric_group(7);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SeededRng rng(seed);
    std::vector<Permutation> gens;
    const auto count = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < count; ++i) gens.push_back(s7.random_element(rng));
    const PermutationGroup g(7, gens);
    CHECK(g.order() == oracles::closure_order(7, gens));
    // membership agrees with the element list
    const auto& els = g.elements();
    CHECK(els.size() == g.order());
    const Permutation probe = s7.random_element(rng);
    CHECK(g.contains(probe) == std::binary_search(els.begin(), els.end(), probe));
  }
}

TEST_CASE("conjugator answers match brute force on S5") {
  const PermutationGroup s5 = symmetric_group(5);
  Ambient amb = Ambient::group(s5, "s5");
  const Universe& uni = amb.universe();
  const SubgroupLattice lat = all_subgroups(uni);

  SeededRng rng(7);
  auto brute_force_conjugate = [&](const IndexSet& a, const IndexSet& b) {
    for (std::uint32_t g = 0; g < uni.size(); ++g)
      if (uni.conjugate_set(a, g) == b) return true;
    return false;
  };
  for (int round = 0; round < 25; ++round) {
    const IndexSet& a = lat.subgroups[rng.below(lat.count())];
    const IndexSet& b = lat.subgroups[rng.below(lat.count())];
    const auto witness = conjugator_in(uni, uni.generator_indices(), a, b);
    CHECK(witness.has_value() == brute_force_conjugate(a, b));
    if (witness) {
      IndexSet image;
      for (std::uint32_t x : a) image.push_back(uni.index_of(conjugated(uni.at(x), *witness)));
      std::sort(image.begin(), image.end());
      CHECK(image == b);
    }
  }
}

TEST_CASE("conjugating a subgroup never changes the classification") {
  const CatalogEntry& e = catalog_entry("gl2_3");
  const PairReport base = classify_pair(e.sub("U"), e.sub("V"));
  SeededRng rng(11);
  for (int round = 0; round < 5; ++round) {
    const Permutation g = e.ambient.group().random_element(rng);
    std::vector<Permutation> moved;
    for (const Permutation& s : e.sub("V").group().generators())
      moved.push_back(conjugated(s, g));
    Subgroup vg(e.ambient, moved, "V^g");
    const PairReport r = classify_pair(e.sub("U"), vg);
    CHECK(r.conjugacy.value == base.conjugacy.value);
    CHECK(r.sylow.value == base.sylow.value);
    CHECK(r.gassmann.value == base.gassmann.value);
  }
}

TEST_CASE("lattice subgroups are closed under conjugation and join-reachable") {
  const PermutationGroup g = catalog_entry("frobenius_42").ambient.group();
  Ambient amb = Ambient::group(g, "f42");
  const Universe& uni = amb.universe();
  const SubgroupLattice lat = all_subgroups(uni);
  CHECK(lat.count() == oracles::join_closure_subgroup_count(7, g.generators()));
  std::set<IndexSet> all(lat.subgroups.begin(), lat.subgroups.end());
  for (const IndexSet& s : lat.subgroups)
    for (std::uint32_t c : uni.generator_indices())
      CHECK(all.count(uni.conjugate_set(s, c)) == 1);
}

TEST_CASE("groups and universes are safe to share across threads") {
  // classes(), elements(), and the catalog cache are built lazily; hammer
  // them from several threads at once
  const PermutationGroup g = catalog_entry("psl_3_2").ambient.group();
  PermutationGroup fresh(7, g.generators());
  std::vector<std::future<std::uint64_t>> futures;
  for (int t = 0; t < 8; ++t)
    futures.push_back(std::async(std::launch::async, [&fresh, t] {
      std::uint64_t acc = fresh.elements().size();
      acc += fresh.contains(fresh.random_element(static_cast<std::uint64_t>(t))) ? 1 : 0;
      const CatalogEntry& e = catalog_entry("psl_3_2");
      acc += e.ambient.universe().classes().reps.size();
      acc += is_gassmann(e.sub("U"), e.sub("V")).value ? 1 : 0;
      return acc;
    }));
  for (auto& f : futures) CHECK(f.get() == 168 + 1 + 6 + 1);
}
