#include <atomic>
#include <cstdlib>
#include <string>

#include "abelp/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace abelp::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::KernelTable* table_for(Level level) {
  if (level == Level::avx2 && cpu_has_avx2() && detail::avx2_table() != nullptr) {
    return detail::avx2_table();
  }
  return &detail::scalar_table();
}

Level initial_level() {
  if (const char* env = std::getenv("ABELP_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Level::scalar;
  }
  return detected_level();
}

struct State {
  std::atomic<const detail::KernelTable*> table;
  std::atomic<Level> level;
  State() {
    const Level l = initial_level();
    table.store(table_for(l));
    level.store(table.load() == &detail::scalar_table() ? Level::scalar : Level::avx2);
  }
};

State& state() {
  static State s;
  return s;
}

const detail::KernelTable& kernels() { return *state().table.load(std::memory_order_relaxed); }

}  // namespace

std::string_view to_string(Level level) {
  return level == Level::avx2 ? "avx2" : "scalar";
}

Level detected_level() {
  return (cpu_has_avx2() && detail::avx2_table() != nullptr) ? Level::avx2 : Level::scalar;
}

Level active_level() { return state().level.load(); }

Level set_level(Level level) {
  const auto* t = table_for(level);
  state().table.store(t);
  const Level actual = t == &detail::scalar_table() ? Level::scalar : Level::avx2;
  state().level.store(actual);
  return actual;
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  kernels().or_into(dst, src);
}
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  kernels().and_into(dst, src);
}
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return kernels().is_subset(a, b);
}
bool equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return kernels().equal(a, b);
}
std::size_t popcount(std::span<const std::uint64_t> a) { return kernels().popcount(a); }
void mulmod_accumulate(std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t m,
                       std::span<std::uint32_t> acc) {
  kernels().mulmod_accumulate(x, c, m, acc);
}
void mul_add(std::span<const std::uint32_t> x, std::uint32_t c, std::span<std::uint32_t> acc) {
  kernels().mul_add(x, c, acc);
}

}  // namespace abelp::simd
