#include "abelp/fi_lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "abelp/error.hpp"
#include "abelp/io/json_io.hpp"

namespace abelp {
namespace {

bool node_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

std::string sigma_list(const std::vector<Indicator>& sigmas) {
  std::string out;
  for (const auto& s : sigmas) {
    if (!out.empty()) out += " ";
    out += s.to_string(false);
  }
  return out;
}

// Hopcroft-Karp is overkill at this size; augmenting paths suffice.
std::uint32_t max_matching(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t right_size) {
  std::vector<int> match(right_size, -1);
  std::uint32_t total = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    std::vector<char> seen(right_size, 0);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (auto v : adj[x]) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (match[v] < 0 || augment(static_cast<std::size_t>(match[v]))) {
          match[v] = static_cast<int>(x);
          return true;
        }
      }
      return false;
    };
    total += augment(u);
  }
  return total;
}

}  // namespace

Subgroup fi_closure(const EndoRing& ring, std::uint32_t a) {
  std::vector<std::uint32_t> images;
  for (auto b : ring.basis()) images.push_back(ring.apply(b, a));
  return Subgroup::generated(ring.group_ptr(), images);
}

Subgroup fi_closure(const EndoRing& ring, const Element& a) { return fi_closure(ring, ring.group().index_of(a)); }

std::size_t FILattice::find(const Subgroup& h) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), h, node_less);
  if (it != nodes.end() && *it == h) return static_cast<std::size_t>(it - nodes.begin());
  return nodes.size();
}

FILattice enumerate_fi_subgroups(const RingPtr& ring) {
  const GroupPtr& g = ring->group_ptr();
  if (g->order() > g->budget().max_subgroup) {
    throw Error(ErrorKind::GroupTooLarge, "lattice enumeration needs |G| <= " + std::to_string(g->budget().max_subgroup));
  }
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  std::vector<Subgroup> nodes;
  auto insert = [&](Subgroup h) {
    if (seen.emplace(h.members(), nodes.size()).second) nodes.push_back(std::move(h));
  };
  for (std::uint32_t a = 0; a < g->order(); ++a) insert(fi_closure(*ring, a));
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) insert(subgroup_sum(nodes[x], nodes[y]));
  }
  std::sort(nodes.begin(), nodes.end(), node_less);

  FILattice lat;
  lat.group = g;
  lat.nodes = std::move(nodes);
  lat.sigma_labels.resize(lat.nodes.size());
  for (const auto& h : lat.nodes) lat.alpha.push_back(canonical_fi_form(*ring, h));
  for (const auto& sigma : enumerate_admissible(g->spec())) {
    const std::size_t id = lat.find(indicator_subgroup(g, sigma));
    if (id < lat.size()) {
      lat.sigma_labels[id].push_back(sigma);
    } else {
      lat.unplaced_sigmas.push_back(sigma);
    }
  }
  const std::size_t n = lat.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      below[x][y] = x != y && lat.nodes[x].order() < lat.nodes[y].order() && subgroup_leq(lat.nodes[x], lat.nodes[y]);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!below[x][y]) continue;
      bool covers = true;
      for (std::size_t z = 0; z < n && covers; ++z) covers = !(below[x][z] && below[z][y]);
      if (covers) lat.hasse_edges.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    }
  }
  return lat;
}

ClaimReport verify_indicator_coverage(const FILattice& lat) {
  ReportBuilder rb("cor-7.15", lat.group->spec().to_string(),
                   "the fully invariant subgroups are exactly the G(sigma), sigma admissible");
  for (std::size_t id = 0; id < lat.size(); ++id) {
    rb.check(!lat.sigma_labels[id].empty(), [&] {
      return nlohmann::json{{"unlabeled_node", subgroup_to_json(lat.nodes[id])},
                            {"alpha", lat.alpha[id]}};
    });
  }
  for (const auto& sigma : lat.unplaced_sigmas) {
    rb.check(false, [&] { return nlohmann::json{{"sigma_without_node", indicator_to_json(sigma)}}; });
  }
  rb.add_evidence({{"nodes", lat.size()}});
  rb.set_bound(std::to_string(lat.size()) + " fully invariant subgroups");
  return rb.finish();
}

ClaimReport check_transitivity(const EndoRing& ring) {
  const Group& g = ring.group();
  ReportBuilder rb("sec-6.9", g.spec().to_string(), "the fully invariant closure of a is G(ind(a)) for every a");
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    const Subgroup c = fi_closure(ring, a);
    const Indicator sigma = ind_of(g, a);
    rb.check(c == indicator_subgroup(ring.group_ptr(), sigma), [&] {
      return nlohmann::json{{"a", element_to_json(g.element(a))}, {"ind_a", indicator_to_json(sigma)},
                            {"closure_order", c.order()}};
    });
  }
  rb.set_bound("all " + std::to_string(g.order()) + " elements");
  return rb.finish();
}

std::vector<std::uint32_t> canonical_fi_form(const EndoRing& ring, const Subgroup& h) {
  if (!is_fully_invariant(ring, h)) throw Error(ErrorKind::NotFullyInvariant, "subgroup is not fully invariant");
  const Group& g = ring.group();
  const GroupSpec& spec = g.spec();
  std::vector<std::uint32_t> alpha;
  for (const auto& c : spec.components()) alpha.push_back(c.exponent);
  h.members().for_each([&](std::size_t a) {
    for (std::size_t t = 0; t < spec.rank(); ++t) {
      const std::uint64_t x = g.index().coordinate(static_cast<std::uint32_t>(a), t);
      if (x == 0) continue;
      const std::size_t i = spec.component_of(t);
      alpha[i] = std::min(alpha[i], valuation(x, spec.p()));
    }
  });
  const Subgroup regenerated = Subgroup::from_fi_form(ring.group_ptr(), alpha);
  if (!(regenerated == h)) {
    throw Error(ErrorKind::CanonicalFormMismatch,
                "subgroup of order " + std::to_string(h.order()) + " is not " + fi_form_string(spec, alpha));
  }
  return alpha;
}

ClaimReport check_fundamental_containment(const FILattice& lat) {
  const GroupPtr& g = lat.group;
  ReportBuilder rb("cor-7.16", g->spec().to_string(),
                   "every indicator subgroup G(sigma) lies in the fundamental subgroup p^{sigma_0} G[p^m]");
  const std::uint32_t e = g->exponent();
  for (std::size_t id = 0; id < lat.size(); ++id) {
    for (const auto& sigma : lat.sigma_labels[id]) {
      const std::uint32_t kappa = sigma.is_top() ? e : sigma.entries()[0];
      const auto m = static_cast<std::uint32_t>(sigma.length());
      rb.check(subgroup_leq(lat.nodes[id], fundamental_subgroup(g, kappa, m)), [&] {
        return nlohmann::json{{"sigma", indicator_to_json(sigma)}, {"kappa", kappa}, {"n", m}};
      });
    }
    // Smallest fundamental subgroup above the node, as evidence.
    std::uint32_t best_k = 0, best_n = e, best_order = g->order();
    for (std::uint32_t n = 0; n <= e; ++n) {
      for (std::uint32_t k = 0; k <= e; ++k) {
        const Subgroup f = fundamental_subgroup(g, k, n);
        if (subgroup_leq(lat.nodes[id], f) && f.order() < best_order) {
          best_k = k, best_n = n, best_order = f.order();
        }
      }
    }
    rb.add_evidence({{"node", id}, {"kappa", best_k}, {"n", best_n}, {"fundamental_order", best_order}});
  }
  rb.set_bound("every label of every node");
  return rb.finish();
}

std::string hasse_export(const FILattice& lat, std::string_view format) {
  const GroupSpec& spec = lat.group->spec();
  if (format == "json") {
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t id = 0; id < lat.size(); ++id) {
      nlohmann::json sigmas = nlohmann::json::array();
      for (const auto& s : lat.sigma_labels[id]) sigmas.push_back(s.entries());
      nodes.push_back({{"id", id},
                       {"alpha", lat.alpha[id]},
                       {"form", fi_form_string(spec, lat.alpha[id])},
                       {"sigmas", sigmas},
                       {"order", lat.nodes[id].order()}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [x, y] : lat.hasse_edges) edges.push_back({x, y});
    return nlohmann::json{{"group", group_spec_to_json(spec)}, {"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
  }
  if (format == "dot") {
    std::ostringstream out;
    out << "digraph fi_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t id = 0; id < lat.size(); ++id) {
      out << "  n" << id << " [label=\"" << fi_form_string(spec, lat.alpha[id]) << "\\n"
          << sigma_list(lat.sigma_labels[id]) << "\"];\n";
    }
    for (auto [x, y] : lat.hasse_edges) out << "  n" << x << " -> n" << y << ";\n";
    out << "}\n";
    return out.str();
  }
  throw Error(ErrorKind::UnknownFormat, "unknown lattice format \"" + std::string(format) + "\"");
}

LatticeStats lattice_stats(const FILattice& lat) {
  const std::size_t n = lat.size();
  LatticeStats st;
  if (n == 0) return st;
  // Nodes are sorted by order, so every edge goes forward.
  std::vector<std::uint32_t> chain(n, 1);
  std::vector<std::vector<std::uint32_t>> up(n);
  for (auto [x, y] : lat.hasse_edges) up[x].push_back(y);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : up[x]) chain[y] = std::max(chain[y], chain[x] + 1);
  }
  st.longest_chain = *std::max_element(chain.begin(), chain.end());
  // Dilworth: width = n minus a maximum matching in the strict order.
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && lat.nodes[x].order() < lat.nodes[y].order() && subgroup_leq(lat.nodes[x], lat.nodes[y])) {
        adj[x].push_back(static_cast<std::uint32_t>(y));
      }
    }
  }
  st.widest_antichain = static_cast<std::uint32_t>(n - max_matching(adj, n));
  return st;
}

}  // namespace abelp
