#include <gtest/gtest.h>

#include <set>

#include "abelp/error.hpp"
#include "abelp/fi_lattice.hpp"

using namespace abelp;

namespace {

GroupPtr make(std::uint32_t p, std::vector<Component> c) { return Group::create(GroupSpec::make(p, std::move(c))); }
Indicator I(std::vector<std::uint32_t> e) { return Indicator(std::move(e)); }

using Set = std::set<std::uint32_t>;

Set as_set(const Subgroup& h) {
  auto v = h.indices();
  return {v.begin(), v.end()};
}

Set closure_oracle(const Group& g, Set s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= s.insert(g.add(a, b)).second;
    }
  }
  return s;
}

// Every subgroup by breadth-first extension with single elements, then the
// fully invariant ones by testing every endomorphism on every member.
std::set<Set> fi_oracle(const EndoRing& ring) {
  const Group& g = ring.group();
  std::set<Set> all{{0}};
  std::vector<Set> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier) {
      for (std::uint32_t a = 0; a < g.order(); ++a) {
        if (h.count(a)) continue;
        Set k = h;
        k.insert(a);
        k = closure_oracle(g, k);
        if (all.insert(k).second) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::set<Set> out;
  for (const auto& h : all) {
    bool inv = true;
    for (std::uint32_t f = 0; f < ring.size() && inv; ++f) {
      for (auto a : h) {
        if (!h.count(ring.apply(f, a))) {
          inv = false;
          break;
        }
      }
    }
    if (inv) out.insert(h);
  }
  return out;
}

std::set<Set> node_sets(const FILattice& lat) {
  std::set<Set> out;
  for (const auto& h : lat.nodes) out.insert(as_set(h));
  return out;
}

bool leq(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST(FILattice, ClosureIsTheOrbit) {
  auto g = make(2, {{2, 1}, {4, 1}});
  EndoRing ring(g);
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    Set orbit;
    for (std::uint32_t f = 0; f < ring.size(); ++f) orbit.insert(ring.apply(f, a));
    EXPECT_EQ(as_set(fi_closure(ring, a)), orbit);
  }
  const auto spec = g->spec_ptr();
  EXPECT_EQ(fi_closure(ring, 0u).order(), 1u);
  EXPECT_EQ(fi_closure(ring, Element::unit(spec, 0)), Subgroup::from_fi_form(g, {0, 2}));
  EXPECT_EQ(fi_closure(ring, smul(8, Element::unit(spec, 1))), Subgroup::from_fi_form(g, {2, 3}));
}

TEST(FILattice, MatchesSubgroupOracle) {
  for (auto g : {make(2, {{1, 1}, {2, 1}}), make(2, {{1, 1}, {3, 1}}), make(3, {{1, 1}, {2, 1}}),
                 make(2, {{1, 2}, {2, 1}}), make(2, {{2, 1}, {4, 1}}), make(2, {{1, 2}})}) {
    auto ring = make_ring(g);
    const FILattice lat = enumerate_fi_subgroups(ring);
    EXPECT_EQ(node_sets(lat), fi_oracle(*ring)) << g->spec().to_string();
    for (std::size_t x = 0; x < lat.size(); ++x) {
      EXPECT_EQ(lat.find(lat.nodes[x]), x);
      for (std::size_t y = 0; y < lat.size(); ++y) {
        EXPECT_LT(lat.find(subgroup_sum(lat.nodes[x], lat.nodes[y])), lat.size());
        EXPECT_LT(lat.find(subgroup_meet(lat.nodes[x], lat.nodes[y])), lat.size());
      }
    }
  }
}

TEST(FILattice, HomocyclicChains) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const FILattice lat = enumerate_fi_subgroups(make_ring(make(2, {{n, 1}})));
    ASSERT_EQ(lat.size(), n + 1);
    for (std::uint32_t k = 0; k <= n; ++k) EXPECT_EQ(lat.nodes[k].order(), 1u << k);
    const LatticeStats st = lattice_stats(lat);
    EXPECT_EQ(st.longest_chain, n + 1);
    EXPECT_EQ(st.widest_antichain, 1u);
  }
  const LatticeStats sq = lattice_stats(enumerate_fi_subgroups(make_ring(make(2, {{1, 2}}))));
  EXPECT_EQ(sq.longest_chain, 2u);
  EXPECT_EQ(sq.widest_antichain, 1u);
}

TEST(FILattice, HasseEdgesAreTheTransitiveReduction) {
  auto lat = enumerate_fi_subgroups(make_ring(make(2, {{2, 1}, {4, 1}})));
  using Edges = std::set<std::pair<std::uint32_t, std::uint32_t>>;
  Edges expect;
  std::vector<Set> s;
  for (const auto& h : lat.nodes) s.push_back(as_set(h));
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    for (std::uint32_t y = 0; y < s.size(); ++y) {
      if (x == y || !leq(s[x], s[y])) continue;
      bool cover = true;
      for (std::uint32_t z = 0; z < s.size(); ++z) {
        if (z != x && z != y && leq(s[x], s[z]) && leq(s[z], s[y])) cover = false;
      }
      if (cover) expect.insert({x, y});
    }
  }
  EXPECT_EQ(Edges(lat.hasse_edges.begin(), lat.hasse_edges.end()), expect);
}

TEST(FILattice, StatsAgainstSubsetSearch) {
  for (auto g : {make(2, {{2, 1}, {4, 1}}), make(2, {{1, 1}, {2, 1}, {3, 1}})}) {
    const auto lat = enumerate_fi_subgroups(make_ring(g));
    const std::size_t n = lat.size();
    ASSERT_LE(n, 20u);
    std::vector<Set> s;
    for (const auto& h : lat.nodes) s.push_back(as_set(h));
    std::uint32_t chain = 0, anti = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool is_chain = true, is_anti = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
          if (!(mask >> y & 1)) continue;
          const bool cmp = leq(s[x], s[y]) || leq(s[y], s[x]);
          is_chain = is_chain && cmp;
          is_anti = is_anti && !cmp;
        }
      }
      const auto size = static_cast<std::uint32_t>(std::popcount(mask));
      if (is_chain) chain = std::max(chain, size);
      if (is_anti) anti = std::max(anti, size);
    }
    const LatticeStats st = lattice_stats(lat);
    EXPECT_EQ(st.longest_chain, chain) << g->spec().to_string();
    EXPECT_EQ(st.widest_antichain, anti) << g->spec().to_string();
  }
}

TEST(FILattice, CoverageOnCriterionGroups) {
  for (auto g : {make(2, {{1, 1}, {2, 1}}), make(2, {{1, 1}, {3, 1}}), make(3, {{1, 1}, {2, 1}}),
                 make(2, {{1, 2}, {2, 1}}), make(2, {{1, 1}, {2, 1}, {3, 1}}), make(2, {{2, 1}, {4, 1}}),
                 make(3, {{2, 1}, {4, 1}}), make(5, {{1, 1}})}) {
    const auto lat = enumerate_fi_subgroups(make_ring(g));
    const ClaimReport rep = verify_indicator_coverage(lat);
    EXPECT_TRUE(rep.verified()) << rep.to_json().dump();
    std::set<Set> indicator_sets;
    for (const auto& sigma : enumerate_admissible(g->spec())) indicator_sets.insert(as_set(indicator_subgroup(g, sigma)));
    EXPECT_EQ(indicator_sets, node_sets(lat));
    for (const auto& labels : lat.sigma_labels) EXPECT_FALSE(labels.empty());
  }
}

TEST(FILattice, Transitivity) {
  for (auto g : {make(2, {{2, 1}, {4, 1}}), make(3, {{1, 1}, {3, 1}}), make(2, {{1, 2}, {2, 1}})}) {
    EXPECT_TRUE(check_transitivity(EndoRing(g)).verified());
  }
}

TEST(FILattice, CanonicalForms) {
  auto g = make(2, {{2, 1}, {4, 1}});
  EndoRing ring(g);
  EXPECT_EQ(canonical_fi_form(ring, Subgroup::whole(g)), (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(canonical_fi_form(ring, indicator_subgroup(g, I({1, 3}))), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(canonical_fi_form(ring, fundamental_subgroup(g, 0, 1)), (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(canonical_fi_form(ring, Subgroup::zero(g)), (std::vector<std::uint32_t>{2, 4}));
  const std::uint32_t a = g->index_of(Element::unit(g->spec_ptr(), 0));
  try {
    canonical_fi_form(ring, Subgroup::generated(g, std::span<const std::uint32_t>(&a, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFullyInvariant);
  }
  const auto lat = enumerate_fi_subgroups(make_ring(g));
  for (std::size_t id = 0; id < lat.size(); ++id) {
    EXPECT_EQ(Subgroup::from_fi_form(g, lat.alpha[id]), lat.nodes[id]);
  }
}

TEST(FILattice, FundamentalContainment) {
  for (auto g : {make(2, {{1, 1}, {3, 1}}), make(2, {{2, 1}, {4, 1}})}) {
    const auto lat = enumerate_fi_subgroups(make_ring(g));
    EXPECT_TRUE(check_fundamental_containment(lat).verified());
  }
  auto g = make(2, {{2, 1}, {4, 1}});
  EXPECT_TRUE(subgroup_leq(indicator_subgroup(g, I({1, 3})), fundamental_subgroup(g, 1, 2)));
}

TEST(FILattice, Export) {
  const auto chain = enumerate_fi_subgroups(make_ring(make(3, {{3, 1}})));
  const std::string dot = hasse_export(chain, "dot");
  std::size_t arrows = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++arrows;
  EXPECT_EQ(arrows, 3u);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n3;"), std::string::npos);
  const auto j = nlohmann::json::parse(hasse_export(chain, "json"));
  EXPECT_EQ(j["nodes"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 3u);
  for (const auto& node : j["nodes"]) EXPECT_FALSE(node["form"].get<std::string>().empty());
  try {
    hasse_export(chain, "svg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFormat);
  }
  auto g = make(2, {{2, 1}, {4, 1}});
  EXPECT_EQ(hasse_export(enumerate_fi_subgroups(make_ring(g)), "dot"),
            hasse_export(enumerate_fi_subgroups(make_ring(g)), "dot"));
}
