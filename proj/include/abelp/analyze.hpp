#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelp/budget.hpp"
#include "abelp/endo.hpp"
#include "abelp/indicator.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// "0", "G", "p^2G", "G[p^3]" or "pG[p^2]" for p^kappa G[p^n].
std::string fundamental_name(std::uint32_t kappa, std::uint32_t n, std::uint32_t exponent);

/// Name of the fully invariant subgroup with canonical form alpha: "0", then
/// p^k G, then G[p^n], then p^k G[p^n]; empty when none of these fits.
std::string fi_subgroup_name(const GroupSpec& g, std::span<const std::uint32_t> alpha);

/// fi_form_string, with "G" for the whole group.
std::string decomposition_string(const GroupSpec& g, std::span<const std::uint32_t> alpha);

struct TableRow {
  Indicator sigma;
  std::string fi_name;
  std::vector<std::uint32_t> alpha;
  std::string decomposition;
};

/// One row per admissible indicator under the rule, in canonical order.
std::vector<TableRow> indicator_table(const RingPtr& ring, GapRule rule = GapRule::terminal);

/// A stated row for Z(p^2) + Z(p^4) next to the computed G(sigma).
struct StatedRow {
  Indicator sigma;
  std::string stated_name;
  std::vector<std::uint32_t> stated_alpha;
  std::string stated_decomposition;
  std::vector<std::uint32_t> computed_alpha;
  std::string computed_decomposition;
  bool match = false;
};

/// Number of fully invariant subgroups given for Z(p^2) + Z(p^4).
inline constexpr std::uint32_t kStatedExampleCount = 11;

bool is_example_shape(const GroupSpec& g);
/// The eleven stated rows compared with G(sigma); nullopt for other shapes.
std::optional<std::vector<StatedRow>> stated_example_table(const RingPtr& ring);

struct Analysis {
  std::string group;
  std::uint32_t p = 0;
  std::uint64_t order = 0;
  std::uint32_t rank = 0;
  std::uint32_t exponent = 0;
  std::vector<std::uint32_t> ulm;
  std::size_t admissible_internal = 0;
  std::size_t admissible_terminal = 0;
  std::uint64_t ring_order = 0;
  std::size_t fi_subgroups = 0;
  std::uint32_t longest_chain = 0;
  std::uint32_t widest_antichain = 0;
  std::size_t hasse_edges = 0;
  std::string matrix_text;
  nlohmann::json matrix_json;
  std::vector<TableRow> table;
  std::optional<std::vector<StatedRow>> stated;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Throws GroupTooLarge or RingTooLarge.
Analysis analyze(const GroupSpec& spec, const Budget& budget = {});

}  // namespace abelp
