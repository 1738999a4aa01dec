#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylowscope/perm_group.hpp"
#include "sylowscope/polynomial.hpp"

namespace sylowscope {

struct CensusEntry {
  std::uint32_t prime;
  enum class Status { pattern, ramified, leading_drop } status;
  DegreePattern pattern;  // meaningful only when status == pattern
};

/// Mod-p factor-degree patterns of one polynomial over all primes up to a
/// bound. Primes where the reduction is not squarefree ("ramified") or
/// where the leading coefficient drops are flagged and skipped, never
/// silently absorbed.
struct CensusReport {
  std::string poly_name;
  unsigned poly_degree = 0;
  std::uint32_t pmax = 0;
  std::vector<CensusEntry> primes;
  std::map<DegreePattern, std::uint64_t> pattern_counts;
  std::uint64_t usable_primes = 0;
  std::uint64_t ramified_skipped = 0;
  std::uint64_t leading_drop_skipped = 0;
};

CensusReport census(const IntegerPolynomial& f, std::uint32_t pmax);

struct CensusComparison {
  bool equal = false;
  std::optional<std::uint32_t> first_disagreeing_prime;
  std::uint64_t primes_compared = 0;  // primes unramified for both
};

/// Pattern equality at every prime that is usable for both polynomials.
CensusComparison compare_census(const IntegerPolynomial& f, const IntegerPolynomial& g,
                                std::uint32_t pmax);

/// Exact cycle-type distribution of a group in its given action:
/// type -> (element count, |G|).
std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>> cycle_type_distribution(
    const PermutationGroup& g);

struct CensusMatch {
  bool pass = false;
  double tol = 0.0;
  std::vector<std::string> unsupported_patterns;  // observed but not a cycle type
  struct Row {
    std::string pattern;
    std::uint64_t observed = 0;
    double frequency = 0.0;  // observed / usable primes
    double expected = 0.0;   // group proportion
  };
  std::vector<Row> rows;  // union of observed patterns and supported types
};

/// PASS iff every observed pattern is a cycle type of the group and every
/// frequency (over the union of observed patterns and supported types) is
/// within tol of the group proportion.
CensusMatch match_census_to_group(
    const CensusReport& report,
    const std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>>& dist, double tol);

/// The polynomials shipped with the tool, under their catalog names
/// (p7, q7, u7, v7, p8, q8, p11, q11, f11_t2).
const std::vector<IntegerPolynomial>& bundled_polynomials();
const IntegerPolynomial& bundled_polynomial(const std::string& name);

/// The degree-11 family member specialized at the given parameter value,
/// computed exactly in 64-bit integer arithmetic.
IntegerPolynomial f11_specialized(std::int64_t t);

/// Input format: JSON array of {"name": ..., "coefficients": [c0, c1, ...]}.
std::vector<IntegerPolynomial> parse_polynomials_json(const std::string& text);

nlohmann::ordered_json census_report_json(const CensusReport& report);

}  // namespace sylowscope
