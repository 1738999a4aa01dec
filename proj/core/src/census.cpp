#include "sylowscope/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

CensusReport census(const IntegerPolynomial& f, std::uint32_t pmax) {
  if (pmax > limits().census_pmax_cap)
    throw CapExceeded("census refused: pmax exceeds cap");
  CensusReport report;
  report.poly_name = f.name;
  report.poly_degree = f.degree();
  report.pmax = pmax;
  for (std::uint32_t p : primes_up_to(pmax)) {
    const Reduction red = reduce_mod_p(f, p);
    CensusEntry entry{p, CensusEntry::Status::pattern, {}};
    if (red.leading_dropped) {
      entry.status = CensusEntry::Status::leading_drop;
      ++report.leading_drop_skipped;
    } else if (!is_squarefree(red.poly)) {
      entry.status = CensusEntry::Status::ramified;
      ++report.ramified_skipped;
    } else {
      entry.pattern = degree_pattern(red.poly);
      ++report.pattern_counts[entry.pattern];
      ++report.usable_primes;
    }
    report.primes.push_back(std::move(entry));
  }
  return report;
}

CensusComparison compare_census(const IntegerPolynomial& f, const IntegerPolynomial& g,
                                std::uint32_t pmax) {
  if (pmax > limits().census_pmax_cap)
    throw CapExceeded("compare_census refused: pmax exceeds cap");
  CensusComparison out;
  out.equal = true;
  for (std::uint32_t p : primes_up_to(pmax)) {
    const Reduction rf = reduce_mod_p(f, p);
    const Reduction rg = reduce_mod_p(g, p);
    if (rf.leading_dropped || rg.leading_dropped) continue;
    if (!is_squarefree(rf.poly) || !is_squarefree(rg.poly)) continue;
    ++out.primes_compared;
    if (!(degree_pattern(rf.poly) == degree_pattern(rg.poly))) {
      out.equal = false;
      out.first_disagreeing_prime = p;
      return out;
    }
  }
  return out;
}

std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>> cycle_type_distribution(
    const PermutationGroup& g) {
  std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t total = g.order();
  for (const Permutation& x : g.elements()) {
    auto& slot = out[x.cycle_type()];
    slot.first += 1;
    slot.second = total;
  }
  return out;
}

CensusMatch match_census_to_group(
    const CensusReport& report,
    const std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>>& dist, double tol) {
  if (report.usable_primes == 0)
    throw std::invalid_argument("match_census_to_group: empty census");
  CensusMatch match;
  match.tol = tol;
  match.pass = true;

  // union of observed patterns and supported cycle types, keyed by parts
  std::map<std::vector<unsigned>, std::uint64_t> observed;
  for (const auto& [pattern, count] : report.pattern_counts)
    observed[pattern.parts()] = count;
  std::map<std::vector<unsigned>, double> expected;
  for (const auto& [type, frac] : dist)
    expected[type.parts()] =
        static_cast<double>(frac.first) / static_cast<double>(frac.second);

  for (const auto& [parts, count] : observed)
    if (!expected.count(parts)) {
      match.pass = false;
      match.unsupported_patterns.push_back(DegreePattern(parts).to_string());
    }
  std::map<std::vector<unsigned>, bool> keys;
  for (const auto& [parts, _] : observed) keys[parts] = true;
  for (const auto& [parts, _] : expected) keys[parts] = true;
  for (const auto& [parts, _] : keys) {
    CensusMatch::Row row;
    row.pattern = DegreePattern(parts).to_string();
    row.observed = observed.count(parts) ? observed.at(parts) : 0;
    row.frequency = static_cast<double>(row.observed) /
                    static_cast<double>(report.usable_primes);
    row.expected = expected.count(parts) ? expected.at(parts) : 0.0;
    if (std::abs(row.frequency - row.expected) > tol) match.pass = false;
    match.rows.push_back(std::move(row));
  }
  return match;
}

namespace {

IntegerPolynomial bundled(const std::string& name, std::vector<std::int64_t> coeffs) {
  return IntegerPolynomial::make(name, std::move(coeffs));
}

}  // namespace

IntegerPolynomial f11_specialized(std::int64_t t) {
  const IntegerPolynomial base = bundled(
      "f11_base",
      {303064483392, 355871173680, 180040201308, 50915146293, 8705450754, 900904653,
       51653448, 1026201, -45254, -2541, 0, 2});
  const IntegerPolynomial a = bundled("a", {396, 165, 22, 1});
  const IntegerPolynomial b = bundled("b", {-924, -319, -22, 1});
  IntegerPolynomial out = base - (a * a * b).scaled(2 * t);
  out.name = "f11_t" + std::to_string(t);
  return out;
}

const std::vector<IntegerPolynomial>& bundled_polynomials() {
  static const std::vector<IntegerPolynomial> polys = [] {
    std::vector<IntegerPolynomial> out;
    out.push_back(bundled("p7", {3, -7, 0, 0, 0, 0, 0, 1}));
    out.push_back(bundled("q7", {9, -21, -42, 0, 14, 0, 0, 1}));
    out.push_back(bundled("u7", {99, -154, 0, 0, 0, 0, 0, 1}));
    out.push_back(bundled("v7", {66, 77, -462, -231, 0, 0, 0, 1}));
    out.push_back(bundled("p8", {1, 31, 0, -52, 2, 26, -4, -4, 1}));
    out.push_back(bundled("q8", {-337, -687, 1256, 342, -402, -108, 30, 12, 1}));
    out.push_back(bundled(
        "p11", {-310931533135872, 182555783258112, -46178757504000, 6529632151680,
                -558216962688, 28884349472, -828043392, 8224744, 181368, -5090, 0, 1}));
    out.push_back(bundled(
        "q11", {-31953398556524544, 20030100743110656, -3610663124873728,
                151382377029664, -12244387399904, 230394820408, -3226512608, 44022852,
                586696, -15270, 0, 1}));
    out.push_back(f11_specialized(2));
    return out;
  }();
  return polys;
}

const IntegerPolynomial& bundled_polynomial(const std::string& name) {
  for (const IntegerPolynomial& p : bundled_polynomials())
    if (p.name == name) return p;
  throw std::invalid_argument("no bundled polynomial named '" + name + "'");
}

std::vector<IntegerPolynomial> parse_polynomials_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("polynomial file: expected a JSON array");
  std::vector<IntegerPolynomial> out;
  for (const auto& item : doc) {
    std::vector<std::int64_t> coeffs;
    for (const auto& c : item.at("coefficients")) {
      if (!c.is_number_integer())
        throw std::invalid_argument(
            "polynomial file: coefficients must be 64-bit integers");
      coeffs.push_back(c.get<std::int64_t>());
    }
    out.push_back(IntegerPolynomial::make(item.at("name").get<std::string>(),
                                          std::move(coeffs)));
  }
  return out;
}

nlohmann::ordered_json census_report_json(const CensusReport& report) {
  nlohmann::ordered_json j;
  j["polynomial"] = report.poly_name;
  j["degree"] = report.poly_degree;
  j["pmax"] = report.pmax;
  j["usable_primes"] = report.usable_primes;
  j["ramified_skipped"] = report.ramified_skipped;
  j["leading_drop_skipped"] = report.leading_drop_skipped;
  nlohmann::ordered_json freq;
  for (const auto& [pattern, count] : report.pattern_counts) {
    nlohmann::ordered_json row;
    row["pattern"] = pattern.parts();
    row["count"] = count;
    const double f = static_cast<double>(count) / static_cast<double>(report.usable_primes);
    row["frequency"] = std::round(f * 1e6) / 1e6;
    freq.push_back(row);
  }
  j["patterns"] = freq.is_null() ? nlohmann::ordered_json::array() : freq;
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  for (const CensusEntry& e : report.primes) {
    nlohmann::ordered_json row;
    row["p"] = e.prime;
    switch (e.status) {
      case CensusEntry::Status::pattern:
        row["pattern"] = e.pattern.parts();
        break;
      case CensusEntry::Status::ramified:
        row["skip"] = "ramified";
        break;
      case CensusEntry::Status::leading_drop:
        row["skip"] = "leading-drop";
        break;
    }
    primes.push_back(row);
  }
  j["primes"] = primes;
  return j;
}

}  // namespace sylowscope
