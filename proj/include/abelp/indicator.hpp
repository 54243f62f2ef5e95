#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "abelp/claim_report.hpp"
#include "abelp/group.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// Strictly increasing finite sequence of heights with an implicit terminal
/// infinity. The empty indicator (inf) is the top of the order.
class Indicator {
 public:
  Indicator() = default;
  /// Throws NotStrictlyIncreasing.
  explicit Indicator(std::vector<std::uint32_t> entries);

  std::size_t length() const noexcept { return entries_.size(); }
  bool is_top() const noexcept { return entries_.empty(); }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
  /// Entry i, or kInf past the end.
  std::uint32_t at(std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : kInf; }

  /// Rendered as "(1,3,inf)" with the unicode infinity sign when unicode is set.
  std::string to_string(bool unicode = true) const;

  friend bool operator==(const Indicator&, const Indicator&) = default;
  /// Canonical listing order: by length, then lexicographically.
  friend std::strong_ordering operator<=>(const Indicator& a, const Indicator& b);

 private:
  std::vector<std::uint32_t> entries_;
};

/// (height(a), height(pa), ..., height(p^n a), inf) where exponent(a) = n + 1.
Indicator ind_of(const Element& a);
Indicator ind_of(const Group& g, std::uint32_t idx);

/// sigma precedes tau: length(sigma) >= length(tau) and sigma_i <= tau_i for i < length(tau).
bool precedes(const Indicator& sigma, const Indicator& tau) noexcept;

/// Greatest lower bound among all indicators: pointwise minimum, padded with inf.
Indicator ind_min(const Indicator& sigma, const Indicator& tau);
/// Least upper bound among all indicators: pointwise maximum, truncated.
Indicator ind_max(const Indicator& sigma, const Indicator& tau);

/// Bounds inside a given set of indicators (for instance the admissible ones
/// of a group). Throws NotNormalizable when no unique bound exists.
Indicator ind_min_within(const std::vector<Indicator>& universe, const Indicator& sigma,
                         const Indicator& tau);
Indicator ind_max_within(const std::vector<Indicator>& universe, const Indicator& sigma,
                         const Indicator& tau);

/// sigma_i + 1 < sigma_{i+1}; needs i + 1 < length, else IndexOutOfRange.
bool has_gap_at(const Indicator& sigma, std::size_t i);

enum class GapRule {
  /// Only gaps between two finite entries need a nonzero Ulm invariant.
  internal,
  /// The step from the last finite entry to inf also counts as a gap, which
  /// characterizes the indicators of actual elements of a bounded group.
  terminal,
};

/// Kaplansky's gap condition under the chosen rule, plus entries < exp(G)
/// and length <= exp(G).
bool is_admissible(const GroupSpec& g, const Indicator& sigma, GapRule rule = GapRule::internal);

/// All admissible indicators in canonical order, (inf) included.
/// Throws GroupTooLarge when exp(G) > 24.
std::vector<Indicator> enumerate_admissible(const GroupSpec& g, GapRule rule = GapRule::internal);

/// (0, 1, ..., exp(G) - 1, inf).
Indicator min_admissible(const GroupSpec& g);

/// G(sigma) = { a : sigma precedes ind(a) }.
Subgroup indicator_subgroup(const GroupPtr& g, const Indicator& sigma);

/// ind(a) precedes ind(af) for every a and every endomorphism f.
ClaimReport check_endo_monotone(const GroupPtr& g);

}  // namespace abelp
