#include "doctest.h"

#include "sylowscope/claims.hpp"

using namespace sylowscope;

TEST_CASE("claim registry") {
  CHECK(claim_ids().size() == 17);
  CHECK(is_claim_id("gl2_3-pair"));
  CHECK(is_claim_id("census-claim-1.2a"));
  CHECK_FALSE(is_claim_id("nonexistent"));
  CHECK_THROWS_AS(run_claim("nonexistent"), std::invalid_argument);
}

TEST_CASE("gl2_3-pair passes and is deterministic") {
  const ClaimResult a = run_claim("gl2_3-pair");
  CHECK(a.passed());
  CHECK(a.evidence["group_order"] == 48);
  CHECK(a.evidence["sylow3_normalizer_order"] == 12);
  const ClaimResult b = run_claim("gl2_3-pair");
  CHECK(a.evidence.dump() == b.evidence.dump());
}

TEST_CASE("fast claims pass") {
  for (const char* id : {"regular-a", "regular-b", "thm-3.1-instances"}) {
    const ClaimResult r = run_claim(id);
    INFO(id, ": ", r.evidence.dump());
    CHECK(r.passed());
  }
}

TEST_CASE("claim evidence is byte-identical across runs") {
  for (const char* id : {"degree-le-6", "psl2_11-a5", "order-lt-48"}) {
    const ClaimResult a = run_claim(id);
    const ClaimResult b = run_claim(id);
    REQUIRE(a.passed());
    CHECK(a.evidence.dump() == b.evidence.dump());
  }
}

TEST_CASE("claim json carries status and statement") {
  const ClaimResult r = run_claim("regular-b");
  const auto j = claim_result_json(r);
  CHECK(j["claim"] == "regular-b");
  CHECK(j["status"] == "PASS");
  CHECK(j["statement"].is_string());
  CHECK(j["evidence"]["pair"]["gassmann"] == true);
  CHECK(j["evidence"]["pair"]["sylow_conjugate"] == false);
  CHECK(j["evidence"]["pair"]["sylow_failing_prime"] == 3);
}
