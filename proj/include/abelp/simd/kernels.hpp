#pragma once
// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version selected at runtime. The reference versions are
// exported so tests can check the two paths agree.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace abelp::simd {

enum class Level { scalar, avx2 };

std::string_view to_string(Level level);

/// Best level supported by the running CPU.
Level detected_level();

/// Level currently used by the dispatching entry points. Defaults to
/// detected_level(), overridable with ABELP_SIMD=scalar|avx2.
Level active_level();

/// Force a level (tests). Requesting avx2 on a CPU without it falls back to
/// scalar; the returned value is the level actually installed.
Level set_level(Level level);

// ---------------------------------------------------------------------------
// Bitset kernels over 64-bit words. Spans must have equal length.

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
bool equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::size_t popcount(std::span<const std::uint64_t> a);

// ---------------------------------------------------------------------------
// Modular kernels over 32-bit lanes.

/// acc[i] = (acc[i] + x[i] * c) mod m, with acc[i] < m < 2^26 and x[i] * c < 2^52.
void mulmod_accumulate(std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t m,
                       std::span<std::uint32_t> acc);

/// acc[i] += x[i] * c (wrapping).
void mul_add(std::span<const std::uint32_t> x, std::uint32_t c, std::span<std::uint32_t> acc);

// Scalar reference implementations.
namespace ref {
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
bool equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::size_t popcount(std::span<const std::uint64_t> a);
void mulmod_accumulate(std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t m,
                       std::span<std::uint32_t> acc);
void mul_add(std::span<const std::uint32_t> x, std::uint32_t c, std::span<std::uint32_t> acc);
}  // namespace ref

}  // namespace abelp::simd
