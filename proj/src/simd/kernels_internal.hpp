#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace abelp::simd::detail {

struct KernelTable {
  void (*or_into)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  void (*and_into)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  bool (*is_subset)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
  bool (*equal)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
  std::size_t (*popcount)(std::span<const std::uint64_t>);
  void (*mulmod_accumulate)(std::span<const std::uint32_t>, std::uint32_t, std::uint32_t,
                            std::span<std::uint32_t>);
  void (*mul_add)(std::span<const std::uint32_t>, std::uint32_t, std::span<std::uint32_t>);
};

const KernelTable& scalar_table();

// Null when the build has no AVX2 variant.
const KernelTable* avx2_table();

}  // namespace abelp::simd::detail
