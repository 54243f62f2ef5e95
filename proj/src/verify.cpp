#include "abelp/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "abelp/dagger_suite.hpp"
#include "abelp/error.hpp"
#include "abelp/fi_lattice.hpp"
#include "abelp/fundamental_matrix.hpp"
#include "abelp/io/json_io.hpp"
#include "abelp/ulm/ulm.hpp"

namespace abelp {

extern const char* const kKnownDiscrepanciesJson;

namespace {

// Structures shared between claims, built on first use.
class Suite {
 public:
  Suite(const GroupSpec& spec, const Budget& budget) : spec_(spec), budget_(budget) {}

  const GroupSpec& spec() const { return spec_; }
  const GroupPtr& group() {
    if (!group_) group_ = Group::create(spec_, budget_);
    return group_;
  }
  const FundMatrix& matrix() {
    if (!matrix_) matrix_.emplace(group());
    return *matrix_;
  }
  const RingPtr& ring() {
    if (!ring_) ring_ = make_ring(group());
    return ring_;
  }
  const FILattice& lattice() {
    if (!lattice_) lattice_ = enumerate_fi_subgroups(ring());
    return *lattice_;
  }
  bool ideals_fit() { return ring()->size() <= budget_.max_ideal_ring; }
  const DaggerContext& dagger() {
    if (!dagger_) dagger_ = std::make_unique<DaggerContext>(DaggerContext::build(ring()));
    return *dagger_;
  }

 private:
  GroupSpec spec_;
  Budget budget_;
  GroupPtr group_;
  std::optional<FundMatrix> matrix_;
  RingPtr ring_;
  std::optional<FILattice> lattice_;
  std::unique_ptr<DaggerContext> dagger_;
};

using Runner = std::function<ClaimReport(Suite&)>;

struct Entry {
  std::string id;
  Runner run;
};

Runner dagger_claim(const char* id, ClaimReport (*fn)(const DaggerContext&)) {
  return [id, fn](Suite& s) {
    if (!s.ideals_fit()) {
      return ReportBuilder(id, s.spec().to_string(), "needs the full ideal lattice")
          .skip("|E| = " + std::to_string(s.ring()->size()) + " exceeds the ideal-lattice budget");
    }
    return fn(s.dagger());
  };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e{
        {"sec-6.8", [](Suite& s) { return check_endo_monotone(s.group()); }},
        {"sec-6.9", [](Suite& s) { return check_transitivity(*s.ring()); }},
        {"prop-3.2", [](Suite& s) {
           ClaimReport rep = check_ulm_criterion(UlmSequence::from_group(s.spec()));
           rep.group = s.spec().to_string();
           return rep;
         }},
        {"lemma-7.4", [](Suite& s) { return check_fundamental_order(s.matrix()); }},
        {"lemma-7.5.1", [](Suite& s) { return check_distinct(s.matrix()); }},
        {"lemma-7.5.2", [](Suite& s) { return check_join_meet(s.matrix()); }},
        {"cor-7.6", [](Suite& s) { return check_quartering(s.matrix()); }},
        {"prop-7.8", [](Suite& s) { return check_alias(s.matrix()); }},
        {"lemma-7.10", [](Suite& s) { return check_path_correspondence(s.matrix()); }},
        {"prop-7.12", [](Suite& s) { return check_path_chain(s.matrix()); }},
        {"thm-7.2-sum", [](Suite& s) { return verify_sigma_sum(s.matrix()); }},
        {"cor-7.15", [](Suite& s) { return verify_indicator_coverage(s.lattice()); }},
        {"cor-7.16", [](Suite& s) { return check_fundamental_containment(s.lattice()); }},
        {"lemma-8.2", dagger_claim("lemma-8.2", check_dagger_codomains)},
        {"prop-8.4.1", dagger_claim("prop-8.4.1", check_dagger_lattice_maps)},
        {"prop-8.4.2a", dagger_claim("prop-8.4.2a", check_dagger_deflation)},
        {"prop-8.4.2b", dagger_claim("prop-8.4.2b", check_triple_dagger)},
        {"prop-8.6", dagger_claim("prop-8.6", check_closed_preimages)},
        {"prop-8.8.4", dagger_claim("prop-8.8.4", check_closed_isomorphism)},
        {"lemma-8.9", dagger_claim("lemma-8.9", check_special_ideals)},
        {"prop-8.10", dagger_claim("prop-8.10", check_power_daggers)},
        {"cor-8.11", dagger_claim("cor-8.11", check_fundamental_closed)},
        {"cor-8.12", dagger_claim("cor-8.12", check_all_closed)},
        {"lemma-8.13", dagger_claim("lemma-8.13", check_inverse_classes)},
        {"remark-8.3", dagger_claim("remark-8.3", check_socle_pair)},
        {"sec-8.3.3", dagger_claim("sec-8.3.3", check_collision)},
        {"lemma-9.1", dagger_claim("lemma-9.1", check_rank_collapse)},
        {"thm-9.4.4", dagger_claim("thm-9.4.4", verify_descriptor_rule)},
    };
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    return e;
  }();
  return entries;
}

}  // namespace

Allowlist Allowlist::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "allowlist must be an array");
  Allowlist a;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("claim_id") || !e.at("claim_id").is_string()) {
      throw Error(ErrorKind::InvalidInput, "allowlist entries need a string \"claim_id\"");
    }
    a.reasons[e.at("claim_id").get<std::string>()] = e.value("reason", "");
  }
  return a;
}

Allowlist Allowlist::embedded() { return from_json(nlohmann::json::parse(kKnownDiscrepanciesJson)); }

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::vector<ClaimReport> run_claims(const GroupSpec& spec, const Budget& budget, const std::vector<std::string>& only) {
  for (const auto& id : only) {
    if (!std::binary_search(claim_ids().begin(), claim_ids().end(), id)) {
      throw Error(ErrorKind::InvalidInput, "unknown claim id \"" + id + "\"");
    }
  }
  Suite suite(spec, budget);
  std::vector<ClaimReport> out;
  for (const auto& e : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    out.push_back(e.run(suite));
  }
  return out;
}

bool has_unexpected_refutation(const std::vector<ClaimReport>& reports, const Allowlist& allow) {
  return std::any_of(reports.begin(), reports.end(),
                     [&](const ClaimReport& r) { return r.refuted() && !allow.covers(r.claim_id); });
}

nlohmann::json verify_document(const GroupSpec& spec, const std::vector<ClaimReport>& reports, const Allowlist& allow,
                               bool include_timing) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j = r.to_json(include_timing);
    if (r.refuted()) j["allowlisted"] = allow.covers(r.claim_id);
    list.push_back(std::move(j));
  }
  return {{"group", group_spec_to_json(spec)}, {"reports", list}};
}

}  // namespace abelp
