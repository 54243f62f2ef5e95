#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelp/bitset.hpp"
#include "abelp/group.hpp"

namespace abelp {

/// An explicitly enumerated subgroup of a materialized group, optionally
/// carrying the form  (+)_i p^{alpha_i} B_i  when it is of that shape.
class Subgroup {
 public:
  Subgroup() = default;
  /// members must be a subgroup; its order is checked against max_subgroup.
  Subgroup(GroupPtr group, Bitset members, std::optional<std::vector<std::uint32_t>> fi_form = {});

  static Subgroup zero(GroupPtr group);
  static Subgroup whole(GroupPtr group);
  /// Subgroup generated by the given element indices.
  static Subgroup generated(GroupPtr group, std::span<const std::uint32_t> generators);
  /// (+)_i p^{alpha_i} B_i, one alpha per component, 0 <= alpha_i <= n_i.
  static Subgroup from_fi_form(GroupPtr group, std::vector<std::uint32_t> alpha);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Bitset& members() const noexcept { return members_; }
  const std::optional<std::vector<std::uint32_t>>& fi_form() const noexcept { return fi_form_; }

  std::uint32_t order() const { return static_cast<std::uint32_t>(members_.count()); }
  bool contains(std::uint32_t idx) const noexcept { return members_.test(idx); }
  bool contains(const Element& a) const { return members_.test(group_->index_of(a)); }
  /// Member indices in increasing (lexicographic) order.
  std::vector<std::uint32_t> indices() const;
  std::vector<Element> elements() const;

  /// Closed under addition and containing 0.
  bool is_closed() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GroupPtr group_;
  Bitset members_;
  std::optional<std::vector<std::uint32_t>> fi_form_;
};

Subgroup subgroup_sum(const Subgroup& h, const Subgroup& k);
Subgroup subgroup_meet(const Subgroup& h, const Subgroup& k);
bool subgroup_leq(const Subgroup& h, const Subgroup& k);

/// alpha_i of p^kappa G[p^n]:  min(n_i, max(kappa, n_i - n)).
std::vector<std::uint32_t> fundamental_fi_form(const GroupSpec& g, std::uint32_t kappa, std::uint32_t n);

/// p^kappa G[p^n] = { a : exponent(a) <= n, height(a) >= kappa }.
Subgroup fundamental_subgroup(const GroupPtr& group, std::uint32_t kappa, std::uint32_t n);

/// Generators (+)_i p^{alpha_i} B_i written out, e.g. "<pa> + <p^3b>" style
/// using letters a, b, c, ... per component.
std::string fi_form_string(const GroupSpec& g, std::span<const std::uint32_t> alpha);

}  // namespace abelp
