#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace abelp {

enum class ClaimStatus { verified, refuted, skipped };

std::string_view to_string(ClaimStatus s);

/// Outcome of checking one mathematical claim on one group. Refuted reports
/// carry at least one witness; verified reports state how much was checked.
struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::verified;
  std::string group;
  std::string statement;
  std::vector<nlohmann::json> witnesses;
  /// Computed values shown alongside the verdict, independent of status.
  std::vector<nlohmann::json> evidence;
  std::uint64_t failures = 0;
  std::uint64_t checked = 0;
  std::string bound;
  std::string note;
  double seconds = 0.0;

  bool refuted() const noexcept { return status == ClaimStatus::refuted; }
  bool verified() const noexcept { return status == ClaimStatus::verified; }

  /// Deterministic unless include_timing is set.
  nlohmann::json to_json(bool include_timing = false) const;
};

/// Accumulates checks for one claim; at most max_witnesses are kept but every
/// failure is counted.
class ReportBuilder {
 public:
  ReportBuilder(std::string claim_id, std::string group, std::string statement,
                std::size_t max_witnesses = 8);

  /// Records one check; on failure the witness producer is invoked.
  template <class WitnessFn>
  bool check(bool ok, WitnessFn&& witness) {
    ++report_.checked;
    if (!ok) {
      ++report_.failures;
      if (report_.witnesses.size() < max_witnesses_) report_.witnesses.push_back(witness());
    }
    return ok;
  }

  void set_bound(std::string bound) { report_.bound = std::move(bound); }
  void add_note(const std::string& note);
  void add_evidence(nlohmann::json value) { report_.evidence.push_back(std::move(value)); }

  ClaimReport skip(std::string reason);
  ClaimReport finish();

 private:
  ClaimReport report_;
  std::size_t max_witnesses_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace abelp
