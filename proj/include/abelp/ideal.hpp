#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abelp/bitset.hpp"
#include "abelp/endo.hpp"

namespace abelp {

/// A two-sided ideal of E(G), stored as its explicit member set together with
/// an additive generating set.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, Bitset members, std::vector<std::uint32_t> additive_generators,
        std::vector<std::uint32_t> generators = {});

  const EndoRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Bitset& members() const noexcept { return members_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(members_.count()); }
  bool contains(std::uint32_t f) const noexcept { return members_.test(f); }
  std::vector<std::uint32_t> indices() const;
  const std::vector<std::uint32_t>& additive_generators() const noexcept { return additive_gens_; }
  /// The set the ideal was generated from, when known.
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

  /// Additive closure and closure under left and right multiplication.
  bool is_two_sided() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

 private:
  RingPtr ring_;
  Bitset members_;
  std::vector<std::uint32_t> additive_gens_;
  std::vector<std::uint32_t> gens_;
};

Ideal zero_ideal(const RingPtr& ring);
Ideal whole_ring(const RingPtr& ring);

/// Least two-sided ideal containing s: the additive span of b s b' over
/// elementary b, b'.
Ideal ideal_generated(const RingPtr& ring, std::span<const std::uint32_t> s);

/// Ideal from an arbitrary member set known to be an ideal.
Ideal ideal_from_members(const RingPtr& ring, Bitset members);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_meet(const Ideal& i, const Ideal& j);
bool ideal_leq(const Ideal& i, const Ideal& j);

/// p^n E.
Ideal p_power_ideal(const RingPtr& ring, std::uint32_t n);
/// E[p^n] = { f : p^n f = 0 }.
Ideal torsion_ideal(const RingPtr& ring, std::uint32_t n);

/// Every two-sided ideal, sorted by order then member set. Throws
/// RingTooLarge when |E| exceeds max_ideal_ring.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring);

}  // namespace abelp
