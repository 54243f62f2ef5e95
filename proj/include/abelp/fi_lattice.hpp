#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelp/claim_report.hpp"
#include "abelp/endo.hpp"
#include "abelp/indicator.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// Smallest fully invariant subgroup containing a, i.e. {af : f in E}.
Subgroup fi_closure(const EndoRing& ring, std::uint32_t a);
Subgroup fi_closure(const EndoRing& ring, const Element& a);

/// All fully invariant subgroups of a group, ordered by order and then by
/// member set, with the covering relation and indicator labels.
struct FILattice {
  GroupPtr group;
  std::vector<Subgroup> nodes;
  /// Canonical form (+) p^{alpha_i} B_i of each node.
  std::vector<std::vector<std::uint32_t>> alpha;
  /// Admissible sigma with G(sigma) equal to the node.
  std::vector<std::vector<Indicator>> sigma_labels;
  /// Admissible sigma whose G(sigma) is not among the nodes.
  std::vector<Indicator> unplaced_sigmas;
  /// (lower, upper) node ids of each covering pair, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Node id of h, or size() when h is not a node.
  std::size_t find(const Subgroup& h) const;
};

/// Element closures, then sums of pairs until nothing new appears. Throws
/// GroupTooLarge or RingTooLarge.
FILattice enumerate_fi_subgroups(const RingPtr& ring);

/// Nodes equal the indicator subgroups.
ClaimReport verify_indicator_coverage(const FILattice& lattice);
/// fi_closure(a) = G(ind(a)) for every a.
ClaimReport check_transitivity(const EndoRing& ring);

/// alpha_i = least height of the projection of h to component i, checked by
/// regenerating h. Throws NotFullyInvariant or CanonicalFormMismatch.
std::vector<std::uint32_t> canonical_fi_form(const EndoRing& ring, const Subgroup& h);

/// Every indicator subgroup G(sigma) lies in p^{sigma_0} G[p^m], m = length;
/// every node lies in some proper fundamental subgroup or is G.
ClaimReport check_fundamental_containment(const FILattice& lattice);

/// "dot" or "json"; throws UnknownFormat.
std::string hasse_export(const FILattice& lattice, std::string_view format);

struct LatticeStats {
  /// Nodes on a longest chain.
  std::uint32_t longest_chain = 0;
  /// Nodes in a largest antichain.
  std::uint32_t widest_antichain = 0;
};

LatticeStats lattice_stats(const FILattice& lattice);

}  // namespace abelp
