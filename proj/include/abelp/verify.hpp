#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelp/budget.hpp"
#include "abelp/claim_report.hpp"
#include "abelp/group.hpp"

namespace abelp {

/// Claims whose refutation is an established property of the statement
/// rather than a defect, keyed by claim id.
struct Allowlist {
  std::map<std::string, std::string> reasons;

  /// The list compiled into the library.
  static Allowlist embedded();
  /// [{"claim_id": ..., "reason": ...}, ...]; throws InvalidInput.
  static Allowlist from_json(const nlohmann::json& j);
  bool covers(const std::string& claim_id) const { return reasons.count(claim_id) > 0; }
};

/// Every claim id the suite knows, sorted.
const std::vector<std::string>& claim_ids();

/// Runs the selected claims (all when only is empty) in claim id order.
/// Throws InvalidInput for an unknown id, GroupTooLarge or RingTooLarge when
/// a needed structure exceeds the budget. Claims needing the ideal lattice are
/// skipped with a reason when |E| exceeds max_ideal_ring.
std::vector<ClaimReport> run_claims(const GroupSpec& spec, const Budget& budget,
                                    const std::vector<std::string>& only = {});

bool has_unexpected_refutation(const std::vector<ClaimReport>& reports, const Allowlist& allow);

/// {"group": ..., "reports": [...]}, each refuted report marked "allowlisted".
nlohmann::json verify_document(const GroupSpec& spec, const std::vector<ClaimReport>& reports,
                               const Allowlist& allow, bool include_timing = false);

}  // namespace abelp
