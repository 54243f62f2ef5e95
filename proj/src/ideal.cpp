#include "abelp/ideal.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "abelp/error.hpp"

namespace abelp {
namespace {

struct Span {
  Bitset members;
  std::vector<std::uint32_t> gens;
};

Span additive_span(const EndoRing& ring, std::span<const std::uint32_t> gens) {
  SpanBuilder sb(ring.additive(), ring.size(), true);
  for (auto g : gens) sb.add_generator(g);
  std::vector<std::uint32_t> kept = sb.generators();
  return {std::move(sb).take_members(), std::move(kept)};
}

}  // namespace

Ideal::Ideal(RingPtr ring, Bitset members, std::vector<std::uint32_t> additive_generators,
             std::vector<std::uint32_t> generators)
    : ring_(std::move(ring)),
      members_(std::move(members)),
      additive_gens_(std::move(additive_generators)),
      gens_(std::move(generators)) {}

std::vector<std::uint32_t> Ideal::indices() const {
  std::vector<std::uint32_t> out;
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

bool Ideal::is_two_sided() const {
  if (!members_.test(0)) return false;
  for (auto x : additive_gens_) {
    if (!members_.test(x)) return false;
  }
  // The member set must equal the span of the stated generators.
  if (!(additive_span(*ring_, additive_gens_).members == members_)) return false;
  for (auto x : additive_gens_) {
    for (auto b : ring_->basis()) {
      if (!members_.test(ring_->compose(b, x)) || !members_.test(ring_->compose(x, b))) return false;
    }
  }
  return true;
}

Ideal zero_ideal(const RingPtr& ring) {
  Bitset m(ring->size());
  m.set(0);
  return Ideal(ring, std::move(m), {});
}

Ideal whole_ring(const RingPtr& ring) { return ideal_generated(ring, std::vector<std::uint32_t>{ring->identity()}); }

Ideal ideal_generated(const RingPtr& ring, std::span<const std::uint32_t> s) {
  std::vector<std::uint32_t> products;
  for (auto x : s) {
    for (auto b : ring->basis()) {
      const std::uint32_t bx = ring->compose(b, x);
      if (bx == 0) continue;
      for (auto c : ring->basis()) products.push_back(ring->compose(bx, c));
    }
  }
  Span sp = additive_span(*ring, products);
  return Ideal(ring, std::move(sp.members), std::move(sp.gens), std::vector<std::uint32_t>(s.begin(), s.end()));
}

Ideal ideal_from_members(const RingPtr& ring, Bitset members) {
  std::vector<std::uint32_t> all;
  members.for_each([&](std::size_t i) { all.push_back(static_cast<std::uint32_t>(i)); });
  Span sp = additive_span(*ring, all);
  if (!(sp.members == members)) throw Error(ErrorKind::InvalidInput, "member set is not an additive subgroup");
  return Ideal(ring, std::move(members), std::move(sp.gens));
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_parent(i.ring().group().spec(), j.ring().group().spec());
  SpanBuilder sb(i.ring().additive(), i.members(), i.ring().size(), true);
  for (auto g : j.additive_generators()) sb.add_generator(g);
  std::vector<std::uint32_t> gens = i.additive_generators();
  gens.insert(gens.end(), sb.generators().begin(), sb.generators().end());
  return Ideal(i.ring_ptr(), std::move(sb).take_members(), std::move(gens));
}

Ideal ideal_meet(const Ideal& i, const Ideal& j) {
  require_same_parent(i.ring().group().spec(), j.ring().group().spec());
  Bitset m = i.members();
  m &= j.members();
  return ideal_from_members(i.ring_ptr(), std::move(m));
}

bool ideal_leq(const Ideal& i, const Ideal& j) {
  require_same_parent(i.ring().group().spec(), j.ring().group().spec());
  return i.members().is_subset_of(j.members());
}

Ideal p_power_ideal(const RingPtr& ring, std::uint32_t n) {
  const std::uint64_t pn = ring->group().spec().pow(std::min(n, ring->group().exponent()));
  std::vector<std::uint32_t> gens;
  for (auto b : ring->basis()) gens.push_back(ring->smul(pn, b));
  Span sp = additive_span(*ring, gens);
  return Ideal(ring, std::move(sp.members), std::move(sp.gens));
}

Ideal torsion_ideal(const RingPtr& ring, std::uint32_t n) {
  const std::uint64_t pn = ring->group().spec().pow(std::min(n, ring->group().exponent()));
  Bitset m(ring->size());
  for (std::uint32_t f = 0; f < ring->size(); ++f) {
    if (ring->smul(pn, f) == 0) m.set(f);
  }
  return ideal_from_members(ring, std::move(m));
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
  const std::uint64_t limit = ring->group().budget().max_ideal_ring;
  if (ring->size() > limit) {
    throw Error(ErrorKind::RingTooLarge, "|E| = " + std::to_string(ring->size()) +
                                             " exceeds the ideal-lattice budget of " + std::to_string(limit));
  }
  std::vector<Ideal> ideals;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::uint32_t f = 0; f < ring->size(); ++f) {
    const std::uint32_t gen[] = {f};
    Ideal i = ideal_generated(ring, gen);
    if (seen.insert(i.members()).second) ideals.push_back(std::move(i));
  }
  // Every ideal is a sum of principal ideals; close under pairwise sums.
  for (std::size_t next = 0; next < ideals.size(); ++next) {
    for (std::size_t k = 0; k < next; ++k) {
      Ideal s = ideal_sum(ideals[next], ideals[k]);
      if (seen.insert(s.members()).second) ideals.push_back(std::move(s));
    }
  }
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
    const auto oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.members() < b.members();
  });
  return ideals;
}

}  // namespace abelp
