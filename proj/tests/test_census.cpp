#include "doctest.h"

#include <fstream>
#include <sstream>

#include "sylowscope/catalog.hpp"
#include "sylowscope/census.hpp"
#include "sylowscope/classify.hpp"

using namespace sylowscope;

TEST_CASE("census of x^2+1 matches the quadratic-residue oracle") {
  const IntegerPolynomial f = IntegerPolynomial::make("x2p1", {1, 0, 1});
  const CensusReport r = census(f, 100);

  // oracle: for odd p, x^2+1 splits iff -1 is a square iff p = 1 mod 4
  std::uint64_t split = 0, inert = 0, odd_primes = 0;
  for (std::uint32_t p : primes_up_to(100)) {
    if (p == 2) continue;  // (x+1)^2 mod 2: ramified
    ++odd_primes;
    bool residue = false;
    for (std::uint32_t a = 1; a < p; ++a)
      if (a * a % p == p - 1) residue = true;
    (residue ? split : inert) += 1;
  }
  CHECK(r.usable_primes == odd_primes);
  CHECK(r.ramified_skipped == 1);
  CHECK(r.pattern_counts.at(DegreePattern({1, 1})) == split);
  CHECK(r.pattern_counts.at(DegreePattern({2})) == inert);
  CHECK(split == 11);
  CHECK(inert == 13);
  for (const auto& [pattern, count] : r.pattern_counts) {
    const double freq = static_cast<double>(count) / r.usable_primes;
    CHECK(freq > 0.5 - 0.15);
    CHECK(freq < 0.5 + 0.15);
  }
}

TEST_CASE("census with pmax 1 is empty") {
  const CensusReport r = census(bundled_polynomial("p7"), 1);
  CHECK(r.primes.empty());
  CHECK(r.usable_primes == 0);
}

TEST_CASE("compare_census basics") {
  CHECK(compare_census(bundled_polynomial("p7"), bundled_polynomial("p7"), 500).equal);

  const CensusComparison diff =
      compare_census(bundled_polynomial("p7"), bundled_polynomial("p8"), 100);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.first_disagreeing_prime.has_value());
  CHECK(*diff.first_disagreeing_prime <= 7);
}

TEST_CASE("trinks pair agrees at small primes") {
  const CensusComparison c =
      compare_census(bundled_polynomial("p7"), bundled_polynomial("q7"), 2000);
  CHECK(c.equal);
  CHECK(c.primes_compared > 250);
}

TEST_CASE("cycle type distribution of S3") {
  const auto dist = cycle_type_distribution(symmetric_group(3));
  CHECK(dist.at(CycleType({1, 1, 1})) == std::pair<std::uint64_t, std::uint64_t>{1, 6});
  CHECK(dist.at(CycleType({2, 1})) == std::pair<std::uint64_t, std::uint64_t>{3, 6});
  CHECK(dist.at(CycleType({3})) == std::pair<std::uint64_t, std::uint64_t>{2, 6});
}

TEST_CASE("cycle type distribution of PSL(3,2) from its class sizes") {
  const auto dist = cycle_type_distribution(catalog_entry("psl_3_2").ambient.group());
  CHECK(dist.at(CycleType({1, 1, 1, 1, 1, 1, 1})).first == 1);
  CHECK(dist.at(CycleType({2, 2, 1, 1, 1})).first == 21);
  CHECK(dist.at(CycleType({4, 2, 1})).first == 42);
  CHECK(dist.at(CycleType({3, 3, 1})).first == 56);
  CHECK(dist.at(CycleType({7})).first == 48);  // the two order-7 classes share a type
}

TEST_CASE("census of p7 matches PSL(3,2) and not C7") {
  const CensusReport r = census(bundled_polynomial("p7"), 10000);
  const auto psl_dist = cycle_type_distribution(catalog_entry("psl_3_2").ambient.group());
  const CensusMatch good = match_census_to_group(r, psl_dist, 0.05);
  CHECK(good.pass);
  CHECK(good.unsupported_patterns.empty());

  const auto c7_dist = cycle_type_distribution(cyclic_group(7));
  const CensusMatch bad = match_census_to_group(r, c7_dist, 0.05);
  CHECK_FALSE(bad.pass);
  bool found = false;
  for (const std::string& s : bad.unsupported_patterns)
    if (s == "[2,2,1,1,1]") found = true;
  CHECK(found);
}

TEST_CASE("the data file and the compiled-in polynomials agree") {
  std::ifstream in(std::string(SYLOWSCOPE_DATA_DIR) + "/polynomials.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto from_file = parse_polynomials_json(buf.str());
  REQUIRE(from_file.size() == bundled_polynomials().size());
  for (std::size_t i = 0; i < from_file.size(); ++i) {
    CHECK(from_file[i].name == bundled_polynomials()[i].name);
    CHECK(from_file[i].coeffs == bundled_polynomials()[i].coeffs);
  }
}

TEST_CASE("census json shape") {
  const CensusReport r = census(IntegerPolynomial::make("demo", {1, 0, 1}), 20);
  const auto j = census_report_json(r);
  CHECK(j["polynomial"] == "demo");
  CHECK(j["pmax"] == 20);
  CHECK(j["primes"].size() == 8);
  CHECK(j["primes"][0]["p"] == 2);
  CHECK(j["primes"][0]["skip"] == "ramified");
}
