#include <gtest/gtest.h>

#include <set>

#include "abelp/dagger_suite.hpp"

using namespace abelp;

namespace {

GroupPtr make(std::uint32_t p, std::vector<Component> c) { return Group::create(GroupSpec::make(p, std::move(c))); }

using Set = std::set<std::uint32_t>;

Set as_set(const Subgroup& h) {
  auto v = h.indices();
  return {v.begin(), v.end()};
}
Set as_set(const Ideal& i) {
  auto v = i.indices();
  return {v.begin(), v.end()};
}

// {f : af in H for every a}.
Set dagger_oracle(const EndoRing& ring, const Set& h) {
  Set out;
  for (std::uint32_t f = 0; f < ring.size(); ++f) {
    bool inside = true;
    for (std::uint32_t a = 0; a < ring.group().order() && inside; ++a) inside = h.count(ring.apply(f, a)) > 0;
    if (inside) out.insert(f);
  }
  return out;
}

// Closure under addition of every af, f in I.
Set image_oracle(const EndoRing& ring, const Set& ideal) {
  const Group& g = ring.group();
  Set s{0};
  for (auto f : ideal) {
    for (std::uint32_t a = 0; a < g.order(); ++a) s.insert(ring.apply(f, a));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto x : cur) {
      for (auto y : cur) grew |= s.insert(g.add(x, y)).second;
    }
  }
  return s;
}

Set multiples(const EndoRing& ring, std::uint64_t k) {
  Set s;
  for (std::uint32_t f = 0; f < ring.size(); ++f) s.insert(ring.smul(k, f));
  return s;
}

Set killed_by(const EndoRing& ring, std::uint64_t k) {
  Set s;
  for (std::uint32_t f = 0; f < ring.size(); ++f) {
    if (ring.smul(k, f) == 0) s.insert(f);
  }
  return s;
}

Set group_where(const Group& g, auto pred) {
  Set s;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (pred(g.element(a))) s.insert(a);
  }
  return s;
}

// Verdict of the four identities by the oracles above.
bool special_identities_hold(const EndoRing& ring) {
  const Group& g = ring.group();
  const GroupSpec& spec = g.spec();
  for (std::uint32_t n = 0; n <= g.exponent(); ++n) {
    const std::uint64_t pn = spec.pow(n);
    const Set pe = multiples(ring, pn), te = killed_by(ring, pn);
    const Set pg = group_where(g, [&](const Element& a) { return height(a) >= n; });
    const Set tg = group_where(g, [&](const Element& a) { return exponent(a) <= n; });
    if (image_oracle(ring, pe) != pg || dagger_oracle(ring, pg) != pe) return false;
    if (image_oracle(ring, te) != tg || dagger_oracle(ring, tg) != te) return false;
  }
  return true;
}

}  // namespace

TEST(DaggerSuite, ContextMapsAgreeWithOracle) {
  auto g = make(2, {{1, 1}, {2, 1}});
  const auto ctx = DaggerContext::build(make_ring(g));
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    ASSERT_LT(ctx.node_dagger[x], ctx.ideals.size());
    EXPECT_EQ(as_set(ctx.ideals[ctx.node_dagger[x]]), dagger_oracle(*ctx.ring, as_set(ctx.lattice.nodes[x])));
  }
  for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
    ASSERT_LT(ctx.ideal_dagger[k], ctx.lattice.size());
    EXPECT_EQ(as_set(ctx.lattice.nodes[ctx.ideal_dagger[k]]), image_oracle(*ctx.ring, as_set(ctx.ideals[k])));
    EXPECT_EQ(ctx.find_ideal(ctx.ideals[k]), k);
  }
}

TEST(DaggerSuite, HomocyclicGroupsVerifyEverything) {
  for (auto g : {make(2, {{2, 1}}), make(3, {{2, 1}}), make(2, {{1, 2}}), make(2, {{2, 2}})}) {
    const auto ctx = DaggerContext::build(make_ring(g));
    for (auto check : {check_dagger_codomains, check_dagger_lattice_maps, check_dagger_deflation, check_triple_dagger,
                       check_closed_preimages, check_closed_isomorphism, check_special_ideals, check_power_daggers,
                       check_fundamental_closed, check_all_closed, check_inverse_classes, check_rank_collapse}) {
      const ClaimReport rep = check(ctx);
      EXPECT_TRUE(rep.verified()) << rep.to_json().dump();
    }
    EXPECT_EQ(check_collision(ctx).status, ClaimStatus::skipped);
    // Every ideal is closed here, so the classes are singletons.
    for (std::size_t k = 0; k < ctx.ideals.size(); ++k) EXPECT_EQ(ctx.node_dagger[ctx.ideal_dagger[k]], k);
  }
}

TEST(DaggerSuite, GaloisLawsOnMixedGroups) {
  for (auto g : {make(2, {{1, 1}, {2, 1}}), make(2, {{1, 1}, {3, 1}}), make(3, {{1, 1}, {2, 1}}),
                 make(2, {{1, 2}, {2, 1}}), make(2, {{2, 1}, {4, 1}})}) {
    const auto ctx = DaggerContext::build(make_ring(g));
    for (auto check : {check_dagger_codomains, check_dagger_lattice_maps, check_triple_dagger, check_closed_preimages,
                       check_closed_isomorphism, check_fundamental_closed, check_all_closed, check_inverse_classes,
                       check_rank_collapse, check_collision}) {
      const ClaimReport rep = check(ctx);
      EXPECT_TRUE(rep.verified()) << rep.to_json().dump();
    }
  }
}

TEST(DaggerSuite, SpecialIdentitiesMatchOracle) {
  for (auto g : {make(2, {{2, 1}}), make(2, {{1, 1}, {2, 1}}), make(3, {{1, 1}, {2, 1}}), make(2, {{1, 2}, {2, 1}}),
                 make(2, {{2, 1}, {4, 1}})}) {
    const auto ctx = DaggerContext::build(make_ring(g));
    const bool holds = special_identities_hold(*ctx.ring);
    const ClaimReport rep = check_special_ideals(ctx);
    EXPECT_EQ(rep.verified(), holds) << rep.to_json().dump();
    EXPECT_EQ(rep.refuted(), !holds);
    if (rep.refuted()) EXPECT_FALSE(rep.witnesses.empty());
  }
  // A concrete failure: a -> p^2 b sends G into pG but is not p times anything.
  auto g = make(2, {{2, 1}, {4, 1}});
  auto ring = make_ring(g);
  const Set pg = group_where(*g, [](const Element& a) { return height(a) >= 1; });
  EXPECT_NE(dagger_oracle(*ring, pg), multiples(*ring, 2));
}

TEST(DaggerSuite, DeflationOfIdealsRunsUpward) {
  auto g = make(2, {{2, 1}, {4, 1}});
  const auto ctx = DaggerContext::build(make_ring(g));
  std::size_t strictly_below = 0;
  for (const auto& i : ctx.ideals) {
    const Set idd = dagger_oracle(*ctx.ring, image_oracle(*ctx.ring, as_set(i)));
    const Set is = as_set(i);
    EXPECT_TRUE(std::includes(idd.begin(), idd.end(), is.begin(), is.end()));
    strictly_below += idd != is;
  }
  const ClaimReport rep = check_dagger_deflation(ctx);
  EXPECT_EQ(rep.refuted(), strictly_below > 0);
  EXPECT_EQ(rep.failures, strictly_below);
}

TEST(DaggerSuite, SocleEndomorphism) {
  auto g = make(2, {{2, 1}, {4, 1}});
  EndoRing ring(g);
  const std::uint32_t f = socle_endo(ring);
  EXPECT_EQ(ring.endo_rank(f), 2u);
  EXPECT_EQ(as_set(ring.image(f)), group_where(*g, [](const Element& a) { return exponent(a) <= 1; }));
}

TEST(DaggerSuite, SoclePairOnExample) {
  auto g = make(2, {{2, 1}, {4, 1}});
  const auto ctx = DaggerContext::build(make_ring(g));
  const ClaimReport rep = check_socle_pair(ctx);
  // I is p^3 E; its image is p^3 G = <p^3 b>, which is smaller than G[p].
  const Set p3g = group_where(*g, [](const Element& a) { return height(a) >= 3; });
  const Set socle = group_where(*g, [](const Element& a) { return exponent(a) <= 1; });
  EXPECT_EQ(image_oracle(*ctx.ring, multiples(*ctx.ring, 8)), p3g);
  EXPECT_NE(p3g, socle);
  EXPECT_TRUE(rep.refuted());
  EXPECT_EQ(rep.failures, 1u);
  EXPECT_EQ(rep.evidence.at(0)["I_dagger"]["order"], 2);
  EXPECT_EQ(rep.evidence.at(0)["J_dagger"]["order"], 4);
}

TEST(DaggerSuite, CollisionOnSmallMixedGroup) {
  auto g = make(2, {{1, 1}, {2, 1}});
  const auto ctx = DaggerContext::build(make_ring(g));
  ASSERT_EQ(ctx.ring->size(), 32u);
  const auto pair = find_dagger_collision(ctx.ring);
  ASSERT_TRUE(pair.has_value());
  EXPECT_NE(as_set(pair->first), as_set(pair->second));
  EXPECT_EQ(image_oracle(*ctx.ring, as_set(pair->first)), image_oracle(*ctx.ring, as_set(pair->second)));
  EXPECT_TRUE(check_collision(ctx).verified());
}
