// sylowscope: classify subgroup pairs of the bundled group catalog
// (conjugacy / Sylow-conjugacy / Gassmann equivalence), search small degrees
// for Sylow-conjugate nonconjugate pairs, run mod-p factor-pattern censuses
// of the bundled polynomials, and verify the named claims.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 only skipped
// checks, 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylowscope/catalog.hpp"
#include "sylowscope/census.hpp"
#include "sylowscope/claims.hpp"
#include "sylowscope/classify.hpp"
#include "sylowscope/config.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sylowscope;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSkipped = 2;
constexpr int kExitUsage = 3;

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << j.dump(2) << '\n';
}

void apply_config_file(const std::string& path, VerifyConfig& cfg) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const json doc = json::parse(buf.str());
  if (doc.contains("pmax")) cfg.census_pmax = doc["pmax"].get<std::uint32_t>();
  if (doc.contains("tol")) cfg.census_tol = doc["tol"].get<double>();
  if (doc.contains("seed_base")) cfg.seed_base = doc["seed_base"].get<std::uint64_t>();
  if (doc.contains("discovery_attempts"))
    cfg.discovery_attempts = doc["discovery_attempts"].get<unsigned>();
  if (doc.contains("element_cap")) limits().element_cap = doc["element_cap"].get<std::uint64_t>();
  if (doc.contains("explicit_ambient_cap"))
    limits().explicit_ambient_cap = doc["explicit_ambient_cap"].get<std::uint64_t>();
  if (doc.contains("subgroup_enum_cap"))
    limits().subgroup_enum_cap = doc["subgroup_enum_cap"].get<std::uint64_t>();
}

int cmd_catalog_list() {
  auto pad = [](const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
  };
  std::cout << pad("id", 24) << pad("degree", 8) << pad("order", 32)
            << "marked subgroups\n";
  for (const std::string& id : catalog_ids()) {
    const CatalogEntry& e = catalog_entry(id);
    std::string marked;
    for (const auto& [name, sub] : e.marked) {
      if (!marked.empty()) marked += ", ";
      marked += name + " (order " + std::to_string(sub.order()) + ")";
    }
    std::cout << pad(id, 24) << pad(std::to_string(e.ambient.degree()), 8)
              << pad(e.ambient.order_string(), 32) << marked << '\n';
  }
  return kExitPass;
}

int cmd_classify(const std::string& group, const std::string& u_name,
                 const std::string& v_name, const std::string& json_path) {
  const CatalogEntry& e = catalog_entry(group);
  const PairReport r = classify_pair(e.sub(u_name), e.sub(v_name));
  const json j = pair_report_json(r);
  std::cout << j.dump(2) << '\n';
  write_json(json_path, j);
  return kExitPass;
}

int cmd_search(unsigned degree, const std::string& json_path) {
  const DegreeSearchResult r = degree_search(degree);
  json j;
  j["degree"] = r.degree;
  j["symmetric_subgroup_count"] = r.subgroup_count;
  j["transitive_classes"] = r.transitive_classes;
  j["transitive_subgroups"] = r.transitive_subgroups;
  j["faithful_index_d_classes"] = r.faithful_classes;
  j["pairs_checked"] = r.pairs_checked;
  j["sylow_conjugate_nonconjugate_pairs"] = json::array();
  for (const PairReport& v : r.violations)
    j["sylow_conjugate_nonconjugate_pairs"].push_back(pair_report_json(v));
  std::cout << j.dump(2) << '\n';
  write_json(json_path, j);
  return r.violations.empty() ? kExitPass : kExitFail;
}

int cmd_census(const std::string& poly, std::uint32_t pmax, const std::string& json_path) {
  std::vector<IntegerPolynomial> polys;
  try {
    polys.push_back(bundled_polynomial(poly));
  } catch (const std::invalid_argument&) {
    std::ifstream in(poly);
    if (!in) {
      std::cerr << "'" << poly << "' is neither a bundled polynomial name nor a readable file\n";
      std::cerr << "bundled names:";
      for (const IntegerPolynomial& f : bundled_polynomials()) std::cerr << ' ' << f.name;
      std::cerr << '\n';
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    polys = parse_polynomials_json(buf.str());
  }
  json out = json::array();
  for (const IntegerPolynomial& f : polys) {
    const CensusReport r = census(f, pmax);
    out.push_back(census_report_json(r));
  }
  const json j = out.size() == 1 ? out.front() : out;
  std::cout << j.dump(2) << '\n';
  write_json(json_path, j);
  return kExitPass;
}

int cmd_verify(const std::string& claim, const VerifyConfig& cfg, bool parallel,
               const std::string& json_path) {
  std::vector<ClaimResult> results;
  if (claim == "all") {
    results = run_all_claims(cfg, parallel);
  } else {
    if (!is_claim_id(claim)) {
      std::cerr << "unknown claim '" << claim << "'; known claims:\n";
      for (const std::string& id : claim_ids()) std::cerr << "  " << id << '\n';
      return kExitUsage;
    }
    results.push_back(run_claim(claim, cfg));
  }
  json j = json::array();
  bool any_fail = false, any_pass = false;
  for (const ClaimResult& r : results) {
    j.push_back(claim_result_json(r));
    const char* status = r.status == ClaimResult::Status::pass      ? "PASS"
                         : r.status == ClaimResult::Status::skipped ? "SKIPPED"
                                                                    : "FAIL";
    std::cout << status << "  " << r.id << "  (" << r.seconds << " s)";
    if (!r.skip_reason.empty()) std::cout << "  [" << r.skip_reason << "]";
    std::cout << '\n';
    any_fail |= r.status == ClaimResult::Status::fail;
    any_pass |= r.status == ClaimResult::Status::pass;
  }
  write_json(json_path, j);
  if (any_fail) return kExitFail;
  if (!any_pass) return kExitSkipped;
  return kExitPass;
}

int cmd_list_claims() {
  for (const std::string& id : claim_ids()) std::cout << id << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group Sylow-conjugacy and Gassmann-equivalence toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config (caps, pmax, tol, seeds)");

  auto* catalog_cmd = app.add_subcommand("catalog", "bundled groups");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "print ids, orders, degrees");

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a marked subgroup pair of a catalog group");
  std::string group, u_name = "U", v_name = "V", classify_json;
  classify_cmd->add_option("--group", group, "catalog id")->required();
  classify_cmd->add_option("--u", u_name, "first marked subgroup (default U)");
  classify_cmd->add_option("--v", v_name, "second marked subgroup (default V)");
  classify_cmd->add_option("--json", classify_json, "write the report to a file");

  auto* search_cmd = app.add_subcommand(
      "search", "exhaustive Sylow-conjugate/nonconjugate pair search at one degree");
  unsigned degree = 0;
  std::string search_json;
  search_cmd->add_option("--degree", degree, "degree d (2..6)")
      ->required()
      ->check(CLI::Range(2u, 6u));
  search_cmd->add_option("--json", search_json, "write the report to a file");

  auto* census_cmd =
      app.add_subcommand("census", "mod-p factor-degree census of a polynomial");
  std::string poly, census_json;
  std::uint32_t pmax = 100000;
  census_cmd->add_option("--poly", poly, "bundled name or JSON file")->required();
  census_cmd->add_option("--pmax", pmax, "prime bound (default 100000)");
  census_cmd->add_option("--json", census_json, "write the report to a file");

  auto* verify_cmd = app.add_subcommand("verify", "run a named claim (or all)");
  std::string claim;
  std::string verify_json;
  bool parallel = false;
  verify_cmd->add_option("--claim", claim, "claim id or 'all'")->required();
  verify_cmd->add_flag("--parallel", parallel, "fan independent claims out to threads");
  verify_cmd->add_option("--json", verify_json, "write the reports to a file");

  auto* claims_cmd = app.add_subcommand("claims", "list the claim registry");

  CLI11_PARSE(app, argc, argv);

  try {
    VerifyConfig cfg;
    apply_config_file(config_path, cfg);
    if (catalog_cmd->parsed()) return cmd_catalog_list();
    if (classify_cmd->parsed()) return cmd_classify(group, u_name, v_name, classify_json);
    if (search_cmd->parsed()) return cmd_search(degree, search_json);
    if (census_cmd->parsed()) return cmd_census(poly, pmax, census_json);
    if (verify_cmd->parsed()) return cmd_verify(claim, cfg, parallel, verify_json);
    if (claims_cmd->parsed()) return cmd_list_claims();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
