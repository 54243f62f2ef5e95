#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelp/simd/kernels.hpp"

namespace abelp {

/// Fixed-size dynamic bitset; membership sets of subgroups and ideals.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_bits_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const { return simd::popcount(words_); }

  Bitset& operator|=(const Bitset& o) {
    simd::or_into(words_, o.words_);
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    simd::and_into(words_, o.words_);
    return *this;
  }

  bool is_subset_of(const Bitset& o) const { return simd::is_subset(words_, o.words_); }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_bits_ == b.n_bits_ && simd::equal(a.words_, b.words_);
  }

  /// Total order for canonical sorting: by word sequence, most significant
  /// word last.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.n_bits_ <=> b.n_bits_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// Calls fn(i) for each set bit in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = n_bits_;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace abelp
