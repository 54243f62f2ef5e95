#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abelp/bitset.hpp"

namespace abelp {

/// Index arithmetic on a finite abelian group  Z/m_0 + ... + Z/m_{r-1}.
/// An element with coordinates (c_0, ..., c_{r-1}) has index
/// sum_t c_t * stride_t, coordinate 0 being the most significant digit, so
/// index order is lexicographic order of coordinate tuples.
class AbelianIndex {
 public:
  AbelianIndex() = default;
  /// The caller guarantees prod(moduli) <= max_size (checked, else throws).
  AbelianIndex(std::vector<std::uint32_t> moduli, std::uint64_t max_size);

  std::size_t rank() const noexcept { return moduli_.size(); }
  std::uint32_t size() const noexcept { return size_; }
  std::span<const std::uint32_t> moduli() const noexcept { return moduli_; }
  std::span<const std::uint32_t> strides() const noexcept { return strides_; }

  std::uint32_t coordinate(std::uint32_t idx, std::size_t t) const noexcept {
    if (!table_.empty()) return table_[t * size_ + idx];
    return (idx / strides_[t]) % moduli_[t];
  }
  /// Column of coordinate t over all indices (empty if no table was built).
  std::span<const std::uint32_t> coordinate_column(std::size_t t) const noexcept {
    if (table_.empty()) return {};
    return std::span<const std::uint32_t>(table_).subspan(t * size_, size_);
  }

  void decode(std::uint32_t idx, std::span<std::uint32_t> out) const noexcept;
  std::uint32_t encode(std::span<const std::uint32_t> coords) const noexcept;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t smul(std::uint64_t k, std::uint32_t a) const noexcept;

 private:
  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t size_ = 1;
  std::vector<std::uint32_t> table_;  // SoA coordinates, only for small groups
};

/// Incrementally grows the subgroup generated by a set of indices.
class SpanBuilder {
 public:
  /// limit: largest permitted subgroup order; exceeding it throws the given
  /// error kind (GroupTooLarge or RingTooLarge).
  SpanBuilder(const AbelianIndex& index, std::uint64_t limit, bool ring_context = false);
  /// Starts from an existing subgroup instead of {0}.
  SpanBuilder(const AbelianIndex& index, const Bitset& seed, std::uint64_t limit,
              bool ring_context = false);

  /// Returns true when g enlarged the subgroup.
  bool add_generator(std::uint32_t g);

  const Bitset& members() const noexcept { return members_; }
  const std::vector<std::uint32_t>& elements() const noexcept { return list_; }
  /// Generators that actually enlarged the span, in insertion order.
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

  Bitset take_members() && { return std::move(members_); }

 private:
  const AbelianIndex* index_;
  std::uint64_t limit_;
  bool ring_context_;
  Bitset members_;
  std::vector<std::uint32_t> list_;
  std::vector<std::uint32_t> gens_;
};

}  // namespace abelp
