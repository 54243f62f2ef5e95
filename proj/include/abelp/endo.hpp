#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "abelp/abelian_index.hpp"
#include "abelp/group.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// An endomorphism acting on the right of row vectors: (af)_t = sum_s a_s f[s][t].
/// Entry (s, t) lives modulo p^{e_t} and is divisible by p^{max(0, e_t - e_s)}.
class Endo {
 public:
  Endo() = default;
  /// Throws InvalidInput when the shape or a divisibility constraint is wrong.
  Endo(SpecPtr parent, std::vector<std::vector<std::uint64_t>> matrix);
  static Endo identity(SpecPtr parent);
  static Endo zero(SpecPtr parent);

  const SpecPtr& parent() const noexcept { return parent_; }
  const std::vector<std::vector<std::uint64_t>>& matrix() const noexcept { return m_; }

  friend bool operator==(const Endo& a, const Endo& b) {
    return *a.parent_ == *b.parent_ && a.m_ == b.m_;
  }

 private:
  SpecPtr parent_;
  std::vector<std::vector<std::uint64_t>> m_;
};

/// af.
Element apply(const Element& a, const Endo& f);
/// fg, acting as f then g.
Endo compose(const Endo& f, const Endo& g);

/// The ring E(G), additively  (+)_{s,t} Z(p^{min(e_s, e_t)}), with every
/// endomorphism addressed by a mixed-radix index over the entries
/// f[s][t] / p^{max(0, e_t - e_s)} in row-major order.
class EndoRing {
 public:
  /// Throws RingTooLarge when |E| exceeds the group's max_ring budget.
  explicit EndoRing(GroupPtr group);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const AbelianIndex& additive() const noexcept { return additive_; }
  std::uint32_t size() const noexcept { return additive_.size(); }
  std::uint32_t rank() const noexcept { return r_; }

  /// |E| = prod p^{min(e_s, e_t)}, or 0 if it does not fit in 64 bits.
  static std::uint64_t ring_order(const GroupSpec& g) noexcept;

  std::uint32_t entry(std::uint32_t f, std::size_t s, std::size_t t) const noexcept;
  Endo endo(std::uint32_t f) const;
  /// Throws MismatchedParent.
  std::uint32_t index_of(const Endo& f) const;

  /// Image of coordinate generator s, as a group element index.
  std::uint32_t row(std::uint32_t f, std::size_t s) const noexcept;
  std::uint32_t apply(std::uint32_t f, std::uint32_t a) const noexcept;
  /// out[a] = af for every a in G (vectorized over elements).
  void apply_all(std::uint32_t f, std::span<std::uint32_t> out) const;

  std::uint32_t compose(std::uint32_t f, std::uint32_t g) const noexcept;
  std::uint32_t add(std::uint32_t f, std::uint32_t g) const noexcept { return additive_.add(f, g); }
  std::uint32_t neg(std::uint32_t f) const noexcept { return additive_.neg(f); }
  std::uint32_t smul(std::uint64_t k, std::uint32_t f) const noexcept { return additive_.smul(k, f); }

  std::uint32_t identity() const noexcept { return identity_; }
  /// Endomorphism with the single entry p^{max(0, e_t - e_s)} at (s, t).
  std::uint32_t elementary(std::size_t s, std::size_t t) const noexcept;
  /// The elementary endomorphisms; they generate E additively.
  const std::vector<std::uint32_t>& basis() const noexcept { return basis_; }

  /// Gf.
  Subgroup image(std::uint32_t f) const;
  /// rank(Gf) = dim (Gf)[p].
  std::uint32_t endo_rank(std::uint32_t f) const;

 private:
  std::uint32_t shift(std::size_t s, std::size_t t) const noexcept { return shift_[s * r_ + t]; }

  GroupPtr group_;
  std::uint32_t r_ = 0;
  AbelianIndex additive_;
  std::vector<std::uint32_t> shift_;
  std::vector<std::uint32_t> scale_;  // p^shift
  std::vector<std::uint32_t> mod_;    // p^{e_t} per target t
  std::vector<std::uint32_t> basis_;
  std::uint32_t identity_ = 0;
};

using RingPtr = std::shared_ptr<const EndoRing>;

RingPtr make_ring(const GroupPtr& group);

/// Subgroup closed under every endomorphism (checked on the additive basis).
bool is_fully_invariant(const EndoRing& ring, const Subgroup& h);

}  // namespace abelp
