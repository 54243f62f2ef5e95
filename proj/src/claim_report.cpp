#include "abelp/claim_report.hpp"

namespace abelp {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified:
      return "verified";
    case ClaimStatus::refuted:
      return "refuted";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

nlohmann::json ClaimReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["claim_id"] = claim_id;
  j["status"] = std::string(to_string(status));
  j["group"] = group;
  j["statement"] = statement;
  j["checked"] = checked;
  j["failures"] = failures;
  if (!bound.empty()) j["bound"] = bound;
  if (!note.empty()) j["note"] = note;
  j["witnesses"] = witnesses;
  if (!evidence.empty()) j["evidence"] = evidence;
  if (include_timing) j["seconds"] = seconds;
  return j;
}

ReportBuilder::ReportBuilder(std::string claim_id, std::string group, std::string statement,
                             std::size_t max_witnesses)
    : max_witnesses_(max_witnesses), start_(std::chrono::steady_clock::now()) {
  report_.claim_id = std::move(claim_id);
  report_.group = std::move(group);
  report_.statement = std::move(statement);
}

void ReportBuilder::add_note(const std::string& note) {
  if (!report_.note.empty()) report_.note += "; ";
  report_.note += note;
}

ClaimReport ReportBuilder::skip(std::string reason) {
  report_.status = ClaimStatus::skipped;
  add_note(reason);
  report_.witnesses.clear();
  report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return report_;
}

ClaimReport ReportBuilder::finish() {
  report_.status = report_.failures == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return report_;
}

}  // namespace abelp
