#include "abelp/abelian_index.hpp"

#include <string>

#include "abelp/error.hpp"

namespace abelp {
namespace {
constexpr std::uint64_t kTableEntries = std::uint64_t{1} << 22;
}

AbelianIndex::AbelianIndex(std::vector<std::uint32_t> moduli, std::uint64_t max_size)
    : moduli_(std::move(moduli)), strides_(moduli_.size(), 1) {
  std::uint64_t size = 1;
  for (std::size_t t = moduli_.size(); t-- > 0;) {
    strides_[t] = static_cast<std::uint32_t>(size);
    size *= moduli_[t];
    if (size > max_size || size > 0xffffffffull) {
      throw Error(ErrorKind::GroupTooLarge,
                  "index space exceeds the enumeration budget of " + std::to_string(max_size));
    }
  }
  size_ = static_cast<std::uint32_t>(size);
  if (size * moduli_.size() <= kTableEntries) {
    table_.resize(size * moduli_.size());
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
      std::uint32_t* col = table_.data() + t * size_;
      for (std::uint32_t i = 0; i < size_; ++i) col[i] = (i / strides_[t]) % moduli_[t];
    }
  }
}

void AbelianIndex::decode(std::uint32_t idx, std::span<std::uint32_t> out) const noexcept {
  for (std::size_t t = 0; t < moduli_.size(); ++t) out[t] = coordinate(idx, t);
}

std::uint32_t AbelianIndex::encode(std::span<const std::uint32_t> coords) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < moduli_.size(); ++t) idx += (coords[t] % moduli_[t]) * strides_[t];
  return idx;
}

std::uint32_t AbelianIndex::add(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    std::uint32_t c = coordinate(a, t) + coordinate(b, t);
    if (c >= moduli_[t]) c -= moduli_[t];
    idx += c * strides_[t];
  }
  return idx;
}

std::uint32_t AbelianIndex::neg(std::uint32_t a) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    const std::uint32_t c = coordinate(a, t);
    idx += (c == 0 ? 0 : moduli_[t] - c) * strides_[t];
  }
  return idx;
}

std::uint32_t AbelianIndex::smul(std::uint64_t k, std::uint32_t a) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    const std::uint64_t c = (k % moduli_[t]) * coordinate(a, t) % moduli_[t];
    idx += static_cast<std::uint32_t>(c) * strides_[t];
  }
  return idx;
}

SpanBuilder::SpanBuilder(const AbelianIndex& index, std::uint64_t limit, bool ring_context)
    : index_(&index), limit_(limit), ring_context_(ring_context), members_(index.size()) {
  members_.set(0);
  list_.push_back(0);
}

SpanBuilder::SpanBuilder(const AbelianIndex& index, const Bitset& seed, std::uint64_t limit,
                         bool ring_context)
    : index_(&index), limit_(limit), ring_context_(ring_context), members_(seed) {
  members_.for_each([&](std::size_t i) { list_.push_back(static_cast<std::uint32_t>(i)); });
}

bool SpanBuilder::add_generator(std::uint32_t g) {
  if (members_.test(g)) return false;
  const std::size_t base = list_.size();
  std::uint32_t kg = g;
  while (!members_.test(kg)) {
    if (list_.size() + base > limit_) {
      throw Error(ring_context_ ? ErrorKind::RingTooLarge : ErrorKind::GroupTooLarge,
                  "generated set exceeds the budget of " + std::to_string(limit_));
    }
    for (std::size_t i = 0; i < base; ++i) {
      const std::uint32_t x = index_->add(list_[i], kg);
      members_.set(x);
      list_.push_back(x);
    }
    kg = index_->add(kg, g);
  }
  gens_.push_back(g);
  return true;
}

}  // namespace abelp
