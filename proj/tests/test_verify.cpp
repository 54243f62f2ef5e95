#include <gtest/gtest.h>

#include <algorithm>

#include "abelp/error.hpp"
#include "abelp/verify.hpp"

using namespace abelp;

namespace {

GroupSpec example() { return GroupSpec::make(2, {{2, 1}, {4, 1}}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Verify, ClaimIdsAreSortedAndUnique) {
  const auto& ids = claim_ids();
  EXPECT_EQ(ids.size(), 28u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Verify, UnknownClaimIsInvalidInput) {
  EXPECT_EQ(kind_of([] { run_claims(example(), {}, {"lemma-99"}); }), ErrorKind::InvalidInput);
}

TEST(Verify, EmbeddedAllowlistNamesKnownClaims) {
  const Allowlist allow = Allowlist::embedded();
  EXPECT_EQ(allow.reasons.size(), 13u);
  for (const auto& [id, reason] : allow.reasons) {
    EXPECT_TRUE(std::binary_search(claim_ids().begin(), claim_ids().end(), id)) << id;
    EXPECT_FALSE(reason.empty()) << id;
  }
}

TEST(Verify, AllowlistRejectsMalformedJson) {
  EXPECT_EQ(kind_of([] { Allowlist::from_json(nlohmann::json::object()); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { Allowlist::from_json(nlohmann::json::parse(R"([{"reason": "x"}])")); }),
            ErrorKind::InvalidInput);
  const auto a = Allowlist::from_json(nlohmann::json::parse(R"([{"claim_id": "prop-3.2"}])"));
  EXPECT_TRUE(a.covers("prop-3.2"));
  EXPECT_FALSE(a.covers("prop-8.6"));
}

TEST(Verify, HomocyclicGroupsVerifyEveryClaimOutsideTheAllowlist) {
  const auto allow = Allowlist::embedded();
  for (const auto& spec : {GroupSpec::make(2, {{2, 1}}), GroupSpec::make(3, {{3, 2}})}) {
    const auto reports = run_claims(spec, {});
    ASSERT_EQ(reports.size(), claim_ids().size());
    for (const auto& r : reports) {
      if (!allow.covers(r.claim_id)) EXPECT_FALSE(r.refuted()) << spec.to_string() << " " << r.claim_id;
    }
    // The join formula already fails in Z(4): M(1,0) + M(2,1) = M(2,1).
    EXPECT_TRUE(has_unexpected_refutation(reports, Allowlist{}));
  }
}

TEST(Verify, ExampleRefutationsAreAllowlisted) {
  const auto reports = run_claims(example(), {});
  EXPECT_FALSE(has_unexpected_refutation(reports, Allowlist::embedded()));
  EXPECT_TRUE(has_unexpected_refutation(reports, Allowlist{}));
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].claim_id, claim_ids()[i]);
}

TEST(Verify, FilterSelectsOneClaim) {
  const auto reports = run_claims(example(), {}, {"lemma-8.9"});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].claim_id, "lemma-8.9");
  EXPECT_TRUE(reports[0].refuted());
}

TEST(Verify, IdealClaimsSkippedAboveBudget) {
  // |E| = 2^14 for Z(2) + Z(4) + Z(8), above the 2^12 ideal budget.
  const auto spec = GroupSpec::make(2, {{1, 1}, {2, 1}, {3, 1}});
  const auto reports = run_claims(spec, {}, {"lemma-8.9", "sec-6.9"});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].claim_id, "lemma-8.9");
  EXPECT_EQ(reports[0].status, ClaimStatus::skipped);
  EXPECT_EQ(reports[1].status, ClaimStatus::verified);
}

TEST(Verify, DocumentIsDeterministic) {
  const auto allow = Allowlist::embedded();
  const auto a = verify_document(example(), run_claims(example(), {}), allow).dump();
  const auto b = verify_document(example(), run_claims(example(), {}), allow).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  for (const auto& r : j.at("reports")) {
    EXPECT_EQ(r.contains("allowlisted"), r.at("status") == "refuted");
    EXPECT_FALSE(r.contains("seconds"));
  }
}
