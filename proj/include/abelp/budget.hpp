#pragma once

#include <cstdint>

namespace abelp {

/// Enumeration limits. Every operation that would exceed one of these fails
/// with GroupTooLarge or RingTooLarge instead of approximating.
struct Budget {
  /// Largest |G| whose elements may be enumerated.
  std::uint64_t max_elements = std::uint64_t{1} << 20;
  /// Largest |G| for which explicit subgroups (and lattices of them) are built.
  std::uint64_t max_subgroup = std::uint64_t{1} << 16;
  /// Largest |E| that may be enumerated element by element.
  std::uint64_t max_ring = std::uint64_t{1} << 20;
  /// Largest |E| for which the full ideal lattice is enumerated.
  std::uint64_t max_ideal_ring = std::uint64_t{1} << 12;
};

}  // namespace abelp
