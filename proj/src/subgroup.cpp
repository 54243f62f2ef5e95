#include "abelp/subgroup.hpp"

#include <algorithm>
#include <sstream>

#include "abelp/error.hpp"

namespace abelp {
namespace {

void check_parent(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h.group().spec(), k.group().spec());
}

void check_budget(const Group& g, std::size_t order) {
  if (order > g.budget().max_subgroup) {
    throw Error(ErrorKind::GroupTooLarge, "subgroup of order " + std::to_string(order) +
                                              " exceeds the subgroup budget of " +
                                              std::to_string(g.budget().max_subgroup));
  }
}

}  // namespace

Subgroup::Subgroup(GroupPtr group, Bitset members, std::optional<std::vector<std::uint32_t>> fi_form)
    : group_(std::move(group)), members_(std::move(members)), fi_form_(std::move(fi_form)) {
  check_budget(*group_, members_.count());
}

Subgroup Subgroup::zero(GroupPtr group) {
  Bitset b(group->order());
  b.set(0);
  std::vector<std::uint32_t> alpha;
  for (const auto& c : group->spec().components()) alpha.push_back(c.exponent);
  return Subgroup(std::move(group), std::move(b), std::move(alpha));
}

Subgroup Subgroup::whole(GroupPtr group) {
  check_budget(*group, group->order());
  Bitset b(group->order());
  for (std::uint32_t i = 0; i < group->order(); ++i) b.set(i);
  std::vector<std::uint32_t> alpha(group->spec().num_components(), 0);
  return Subgroup(std::move(group), std::move(b), std::move(alpha));
}

Subgroup Subgroup::generated(GroupPtr group, std::span<const std::uint32_t> generators) {
  SpanBuilder sb(group->index(), group->budget().max_subgroup);
  for (auto g : generators) sb.add_generator(g);
  Bitset m = std::move(sb).take_members();
  return Subgroup(std::move(group), std::move(m));
}

Subgroup Subgroup::from_fi_form(GroupPtr group, std::vector<std::uint32_t> alpha) {
  const auto& spec = group->spec();
  if (alpha.size() != spec.num_components()) {
    throw Error(ErrorKind::InvalidInput, "fi form needs one entry per component");
  }
  std::vector<std::uint32_t> gens;
  for (std::size_t t = 0; t < spec.rank(); ++t) {
    const std::size_t i = spec.component_of(t);
    if (alpha[i] > spec.components()[i].exponent) {
      throw Error(ErrorKind::InvalidInput, "fi form entry exceeds the component exponent");
    }
    gens.push_back(group->scaled_unit(t, alpha[i]));
  }
  Subgroup h = generated(group, gens);
  h.fi_form_ = std::move(alpha);
  return h;
}

std::vector<std::uint32_t> Subgroup::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(order());
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  members_.for_each([&](std::size_t i) { out.push_back(group_->element(static_cast<std::uint32_t>(i))); });
  return out;
}

bool Subgroup::is_closed() const {
  if (!members_.test(0)) return false;
  const auto idx = indices();
  for (auto a : idx) {
    for (auto b : idx) {
      if (!members_.test(group_->add(a, b))) return false;
    }
  }
  return true;
}

Subgroup subgroup_sum(const Subgroup& h, const Subgroup& k) {
  check_parent(h, k);
  const Group& g = h.group();
  SpanBuilder sb(g.index(), h.members(), g.budget().max_subgroup);
  k.members().for_each([&](std::size_t x) { sb.add_generator(static_cast<std::uint32_t>(x)); });
  std::optional<std::vector<std::uint32_t>> form;
  if (h.fi_form() && k.fi_form()) {
    form = *h.fi_form();
    for (std::size_t i = 0; i < form->size(); ++i) (*form)[i] = std::min((*form)[i], (*k.fi_form())[i]);
  }
  Bitset m = std::move(sb).take_members();
  return Subgroup(h.group_ptr(), std::move(m), std::move(form));
}

Subgroup subgroup_meet(const Subgroup& h, const Subgroup& k) {
  check_parent(h, k);
  Bitset m = h.members();
  m &= k.members();
  std::optional<std::vector<std::uint32_t>> form;
  if (h.fi_form() && k.fi_form()) {
    form = *h.fi_form();
    for (std::size_t i = 0; i < form->size(); ++i) (*form)[i] = std::max((*form)[i], (*k.fi_form())[i]);
  }
  return Subgroup(h.group_ptr(), std::move(m), std::move(form));
}

bool subgroup_leq(const Subgroup& h, const Subgroup& k) {
  check_parent(h, k);
  return h.members().is_subset_of(k.members());
}

std::vector<std::uint32_t> fundamental_fi_form(const GroupSpec& g, std::uint32_t kappa, std::uint32_t n) {
  std::vector<std::uint32_t> alpha;
  for (const auto& c : g.components()) {
    const std::uint32_t lower = c.exponent > n ? c.exponent - n : 0;
    alpha.push_back(std::min(c.exponent, std::max(kappa, lower)));
  }
  return alpha;
}

Subgroup fundamental_subgroup(const GroupPtr& group, std::uint32_t kappa, std::uint32_t n) {
  Bitset m(group->order());
  for (std::uint32_t i = 0; i < group->order(); ++i) {
    if (group->elem_exponent(i) <= n && group->height(i) >= kappa) m.set(i);
  }
  return Subgroup(group, std::move(m), fundamental_fi_form(group->spec(), kappa, n));
}

std::string fi_form_string(const GroupSpec& g, std::span<const std::uint32_t> alpha) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto& c = g.components()[i];
    if (alpha[i] >= c.exponent) continue;
    if (any) os << " + ";
    any = true;
    const char letter = static_cast<char>('a' + i);
    os << '<';
    if (alpha[i] == 1) os << 'p';
    if (alpha[i] > 1) os << "p^" << alpha[i];
    os << letter << '>';
    if (c.multiplicity > 1) os << '^' << c.multiplicity;
  }
  if (!any) os << '0';
  return os.str();
}

}  // namespace abelp
