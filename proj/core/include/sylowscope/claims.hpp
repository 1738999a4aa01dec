#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sylowscope {

/// Knobs shared by the claim checks. Defaults match the documented
/// behavior of the verify harness; a config file can override them.
struct VerifyConfig {
  std::uint32_t census_pmax = 100'000;
  double census_tol = 0.02;
  std::uint64_t seed_base = 20110;      // base of the deterministic seed schedule
  unsigned discovery_attempts = 120;    // order-60 subgroup search attempts
};

struct ClaimResult {
  std::string id;
  std::string statement;  // what is being checked, in plain words
  enum class Status { pass, fail, skipped } status = Status::fail;
  std::string skip_reason;
  nlohmann::ordered_json evidence;  // deterministic for a fixed config
  double seconds = 0.0;

  bool passed() const { return status == Status::pass; }
};

const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);

/// Runs one claim. Unknown ids throw std::invalid_argument. A cap or mode
/// limitation inside a check yields SKIPPED (with the reason), never a
/// false PASS; a failed check yields FAIL with counterexample evidence.
ClaimResult run_claim(const std::string& id, const VerifyConfig& cfg = {});

/// All claims, in registry order. With parallel=true independent claims are
/// fanned out to threads; results are still reported in registry order.
std::vector<ClaimResult> run_all_claims(const VerifyConfig& cfg = {}, bool parallel = false);

nlohmann::ordered_json claim_result_json(const ClaimResult& r);

}  // namespace sylowscope
