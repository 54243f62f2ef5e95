#include <bit>

#include "abelp/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace abelp::simd::ref {

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::size_t popcount(std::span<const std::uint64_t> a) {
  std::size_t n = 0;
  for (auto w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void mulmod_accumulate(std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t m,
                       std::span<std::uint32_t> acc) {
  const std::uint64_t cm = c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc[i] = static_cast<std::uint32_t>((acc[i] + x[i] * cm) % m);
  }
}

void mul_add(std::span<const std::uint32_t> x, std::uint32_t c, std::span<std::uint32_t> acc) {
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += x[i] * c;
}

}  // namespace abelp::simd::ref

namespace abelp::simd::detail {

const KernelTable& scalar_table() {
  static const KernelTable table{
      &ref::or_into, &ref::and_into,           &ref::is_subset, &ref::equal,
      &ref::popcount, &ref::mulmod_accumulate, &ref::mul_add,
  };
  return table;
}

}  // namespace abelp::simd::detail
