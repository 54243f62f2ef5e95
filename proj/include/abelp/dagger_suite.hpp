#pragma once

#include <cstddef>
#include <vector>

#include "abelp/claim_report.hpp"
#include "abelp/dagger.hpp"
#include "abelp/fi_lattice.hpp"
#include "abelp/ideal.hpp"

namespace abelp {

/// Both lattices of a group and the dagger maps between them, computed once.
struct DaggerContext {
  RingPtr ring;
  FILattice lattice;
  std::vector<Ideal> ideals;
  /// H-dagger of each lattice node, as an index into ideals.
  std::vector<std::size_t> node_dagger;
  /// I-dagger of each ideal, as a node index (lattice.size() if it is not a node).
  std::vector<std::size_t> ideal_dagger;

  /// Throws GroupTooLarge or RingTooLarge.
  static DaggerContext build(const RingPtr& ring);

  /// Index of i in ideals, or ideals.size().
  std::size_t find_ideal(const Ideal& i) const;
  std::string group_name() const;
};

/// H-dagger is an ideal and I-dagger is fully invariant.
ClaimReport check_dagger_codomains(const DaggerContext& ctx);
/// Both maps preserve order, meets and joins.
ClaimReport check_dagger_lattice_maps(const DaggerContext& ctx);
/// H-dagger-dagger <= H and I-dagger-dagger <= I.
ClaimReport check_dagger_deflation(const DaggerContext& ctx);
/// Triple dagger equals single dagger on both sides.
ClaimReport check_triple_dagger(const DaggerContext& ctx);
/// Closedness, being a dagger image and having a unique closed preimage
/// coincide on both sides.
ClaimReport check_closed_preimages(const DaggerContext& ctx);
/// Dagger restricted to closed objects is a pair of inverse order isomorphisms.
ClaimReport check_closed_isomorphism(const DaggerContext& ctx);
/// (p^n E)+ = p^n G, (p^n G)+ = p^n E, E[p^n]+ = G[p^n], G[p^n]+ = E[p^n].
ClaimReport check_special_ideals(const DaggerContext& ctx);
/// (p^k G)+ = p^k E for every finite k, including k past the exponent.
ClaimReport check_power_daggers(const DaggerContext& ctx);
/// Fundamental and indicator subgroups are dagger closed.
ClaimReport check_fundamental_closed(const DaggerContext& ctx);
/// Every fully invariant subgroup is dagger closed.
ClaimReport check_all_closed(const DaggerContext& ctx);
/// Each dagger-inverse class is closed under sums, its sum is H-dagger, and
/// that sum is its only closed member.
ClaimReport check_inverse_classes(const DaggerContext& ctx);
/// I = ideal of p^{m-1}, J = ideal of a -> p^{n_a - 1} a per coordinate:
/// I != J and both daggers equal G[p].
ClaimReport check_socle_pair(const DaggerContext& ctx);
/// find_dagger_collision produces distinct ideals with equal daggers.
ClaimReport check_collision(const DaggerContext& ctx);
/// At finite rank rho every ideal equals its rank-rho part.
ClaimReport check_rank_collapse(const DaggerContext& ctx);

/// The diagonal endomorphism sending each generator to its socle multiple.
std::uint32_t socle_endo(const EndoRing& ring);

}  // namespace abelp
