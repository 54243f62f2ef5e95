// This file is compiled with -mavx2 -mfma. Runtime CPU detection ensures the
// table it exports is only installed on CPUs with AVX2 and FMA support.

#include "kernels_internal.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <bit>

namespace abelp::simd::avx2 {
namespace {

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    // a & ~b must vanish
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    const __m256i x = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// Nibble lookup popcount (Mula), summed per 64-bit lane with SAD.
std::size_t popcount(std::span<const std::uint64_t> a) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::size_t n_bits = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < n; ++i) n_bits += static_cast<std::size_t>(std::popcount(a[i]));
  return n_bits;
}

// Products stay below 2^52, so the double-precision quotient estimate is off by
// at most one and a single correction step gives the exact residue.
inline __m128i mulmod4(__m128i x, __m128i acc, __m256d c, __m256d m, __m256d inv_m) {
  const __m256d prod = _mm256_mul_pd(_mm256_cvtepi32_pd(x), c);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv_m));
  __m256d r = _mm256_fnmadd_pd(q, m, prod);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), m));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, m, _CMP_GE_OQ), m));
  r = _mm256_add_pd(r, _mm256_cvtepi32_pd(acc));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, m, _CMP_GE_OQ), m));
  return _mm256_cvtpd_epi32(r);
}

void mulmod_accumulate(std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t m,
                       std::span<std::uint32_t> acc) {
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i vx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i));
    auto* pa = reinterpret_cast<__m128i*>(acc.data() + i);
    _mm_storeu_si128(pa, mulmod4(vx, _mm_loadu_si128(pa), vc, vm, vinv));
  }
  const std::uint64_t cm = c;
  for (; i < n; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + x[i] * cm) % m);
}

void mul_add(std::span<const std::uint32_t> x, std::uint32_t c, std::span<std::uint32_t> acc) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    auto* pa = reinterpret_cast<__m256i*>(acc.data() + i);
    _mm256_storeu_si256(pa, _mm256_add_epi32(_mm256_loadu_si256(pa), _mm256_mullo_epi32(vx, vc)));
  }
  for (; i < n; ++i) acc[i] += x[i] * c;
}

}  // namespace
}  // namespace abelp::simd::avx2

namespace abelp::simd::detail {

const KernelTable* avx2_table() {
  static const KernelTable table{
      &avx2::or_into,  &avx2::and_into,           &avx2::is_subset, &avx2::equal,
      &avx2::popcount, &avx2::mulmod_accumulate, &avx2::mul_add,
  };
  return &table;
}

}  // namespace abelp::simd::detail

#else

namespace abelp::simd::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace abelp::simd::detail

#endif
