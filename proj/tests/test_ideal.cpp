#include <gtest/gtest.h>

#include <set>

#include "abelp/dagger.hpp"
#include "abelp/error.hpp"
#include "abelp/ideal.hpp"

using namespace abelp;

namespace {

RingPtr ring_of(std::uint32_t p, std::vector<Component> c) {
  return make_ring(Group::create(GroupSpec::make(p, std::move(c))));
}

// All additive subgroups of E by breadth-first extension, then filtered for
// closure under composition with every ring element on both sides.
std::set<std::vector<std::uint32_t>> ideals_oracle(const EndoRing& ring) {
  const std::uint32_t n = ring.size();
  auto close = [&](std::set<std::uint32_t> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> v(s.begin(), s.end());
      for (auto x : v) {
        for (auto y : v) grew |= s.insert(ring.add(x, y)).second;
      }
    }
    return s;
  };
  std::set<std::set<std::uint32_t>> subgroups{{0}};
  std::vector<std::set<std::uint32_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::set<std::uint32_t>> next;
    for (const auto& h : frontier) {
      for (std::uint32_t f = 0; f < n; ++f) {
        if (h.count(f)) continue;
        auto s = h;
        s.insert(f);
        auto c = close(s);
        if (subgroups.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& h : subgroups) {
    bool ideal = true;
    for (auto x : h) {
      for (std::uint32_t u = 0; u < n && ideal; ++u) ideal = h.count(ring.compose(u, x)) && h.count(ring.compose(x, u));
      if (!ideal) break;
    }
    if (ideal) out.insert(std::vector<std::uint32_t>(h.begin(), h.end()));
  }
  return out;
}

// Two-sided ideal generated by s, by saturating with u * x * v over the whole ring.
std::vector<std::uint32_t> generated_oracle(const EndoRing& ring, std::vector<std::uint32_t> s) {
  std::set<std::uint32_t> cur(s.begin(), s.end());
  cur.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> v(cur.begin(), cur.end());
    for (auto x : v) {
      for (auto y : v) grew |= cur.insert(ring.add(x, y)).second;
      for (std::uint32_t u = 0; u < ring.size(); ++u) {
        grew |= cur.insert(ring.compose(u, x)).second;
        grew |= cur.insert(ring.compose(x, u)).second;
      }
    }
  }
  return {cur.begin(), cur.end()};
}

}  // namespace

TEST(Ideal, GeneratedSmallCases) {
  auto ring = ring_of(2, {{2, 1}, {4, 1}});
  const std::uint32_t zero[] = {0};
  EXPECT_EQ(ideal_generated(ring, zero), zero_ideal(ring));
  EXPECT_EQ(whole_ring(ring).order(), ring->size());
  const std::uint32_t p3[] = {ring->smul(8, ring->identity())};
  const Ideal i = ideal_generated(ring, p3);
  std::set<std::uint32_t> multiples;
  for (std::uint32_t f = 0; f < ring->size(); ++f) multiples.insert(ring->smul(8, f));
  EXPECT_EQ(i.indices(), std::vector<std::uint32_t>(multiples.begin(), multiples.end()));
  EXPECT_EQ(i, p_power_ideal(ring, 3));
  EXPECT_TRUE(i.is_two_sided());
}

TEST(Ideal, GeneratedMatchesSaturationOracle) {
  auto ring = ring_of(2, {{1, 1}, {2, 1}});
  for (std::uint32_t f = 0; f < ring->size(); ++f) {
    const std::uint32_t gen[] = {f};
    EXPECT_EQ(ideal_generated(ring, gen).indices(), generated_oracle(*ring, {f}));
  }
  auto ring3 = ring_of(3, {{1, 1}, {2, 1}});
  for (std::uint32_t f = 0; f < ring3->size(); f += 5) {
    const std::uint32_t gen[] = {f};
    EXPECT_EQ(ideal_generated(ring3, gen).indices(), generated_oracle(*ring3, {f}));
  }
}

TEST(Ideal, EnumerationMatchesSubgroupOracle) {
  for (auto ring : {ring_of(2, {{1, 1}, {2, 1}}), ring_of(2, {{1, 2}}), ring_of(2, {{3, 1}}), ring_of(3, {{1, 1}, {2, 1}})}) {
    if (ring->size() > 64) continue;
    const auto ideals = enumerate_ideals(ring);
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& i : ideals) {
      EXPECT_TRUE(i.is_two_sided());
      got.insert(i.indices());
    }
    EXPECT_EQ(got.size(), ideals.size());
    EXPECT_EQ(got, ideals_oracle(*ring));
  }
}

TEST(Ideal, HomocyclicRankOneIsChain) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto ring = ring_of(2, {{n, 1}});
    const auto ideals = enumerate_ideals(ring);
    ASSERT_EQ(ideals.size(), n + 1);
    for (std::uint32_t k = 0; k <= n; ++k) EXPECT_EQ(ideals[n - k], p_power_ideal(ring, k));
  }
}

TEST(Ideal, MatrixRingOverTwoElementFieldIsSimple) {
  auto ring = ring_of(2, {{1, 2}});
  EXPECT_EQ(ring->size(), 16u);
  EXPECT_EQ(enumerate_ideals(ring).size(), 2u);
}

TEST(Ideal, BudgetEnforced) {
  auto ring = ring_of(2, {{2, 1}, {4, 1}});
  EXPECT_NO_THROW(enumerate_ideals(ring));
  Budget b;
  b.max_ideal_ring = 512;
  auto small = make_ring(Group::create(GroupSpec::make(2, {{2, 1}, {4, 1}}), b));
  try {
    enumerate_ideals(small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingTooLarge);
  }
}

TEST(Ideal, SumMeetAndSpecialIdeals) {
  auto ring = ring_of(2, {{1, 1}, {2, 1}});
  const auto ideals = enumerate_ideals(ring);
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      const Ideal s = ideal_sum(i, j), m = ideal_meet(i, j);
      EXPECT_TRUE(s.is_two_sided());
      EXPECT_TRUE(m.is_two_sided());
      EXPECT_TRUE(ideal_leq(i, s) && ideal_leq(j, s));
      EXPECT_TRUE(ideal_leq(m, i) && ideal_leq(m, j));
    }
  }
  for (std::uint32_t n = 0; n <= 2; ++n) {
    const Ideal t = torsion_ideal(ring, n);
    EXPECT_TRUE(t.is_two_sided());
    for (std::uint32_t f = 0; f < ring->size(); ++f) {
      std::uint32_t x = f;
      for (std::uint32_t k = 0; k < n; ++k) x = ring->smul(2, x);
      EXPECT_EQ(t.contains(f), x == 0);
    }
  }
}

TEST(Dagger, SubgroupDaggerMatchesImageOracle) {
  for (auto ring : {ring_of(2, {{1, 1}, {2, 1}}), ring_of(2, {{2, 1}, {4, 1}})}) {
    const Group& g = ring->group();
    std::vector<std::uint32_t> img(g.order());
    for (std::uint32_t k = 0; k <= g.exponent(); ++k) {
      for (std::uint32_t n = 0; n <= g.exponent(); ++n) {
        const Subgroup h = fundamental_subgroup(ring->group_ptr(), k, n);
        const Ideal hd = dagger_subgroup(ring, h);
        EXPECT_TRUE(hd.is_two_sided());
        for (std::uint32_t f = 0; f < ring->size(); ++f) {
          ring->apply_all(f, img);
          bool inside = true;
          for (auto x : img) inside = inside && h.contains(x);
          ASSERT_EQ(hd.contains(f), inside);
        }
        // I-dagger as the subgroup generated by every image of every member.
        std::vector<std::uint32_t> all_images;
        for (auto f : hd.indices()) {
          ring->apply_all(f, img);
          all_images.insert(all_images.end(), img.begin(), img.end());
        }
        EXPECT_EQ(dagger_ideal(hd), Subgroup::generated(ring->group_ptr(), all_images));
      }
    }
  }
}

TEST(Dagger, TrivialCasesAndErrors) {
  auto ring = ring_of(2, {{2, 1}, {4, 1}});
  const auto g = ring->group_ptr();
  EXPECT_EQ(dagger_subgroup(ring, Subgroup::whole(g)).order(), ring->size());
  EXPECT_EQ(dagger_subgroup(ring, Subgroup::zero(g)), zero_ideal(ring));
  EXPECT_EQ(dagger_ideal(zero_ideal(ring)), Subgroup::zero(g));
  EXPECT_EQ(dagger_ideal(whole_ring(ring)), Subgroup::whole(g));
  const std::uint32_t a[] = {g->index_of(Element::unit(g->spec_ptr(), 0))};
  try {
    dagger_subgroup(ring, Subgroup::generated(g, a));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFullyInvariant);
  }
}

TEST(Dagger, PowerIdealOfExample) {
  auto ring = ring_of(2, {{2, 1}, {4, 1}});
  const auto g = ring->group_ptr();
  const Subgroup img = dagger_ideal(p_power_ideal(ring, 3));
  const std::uint32_t p3b[] = {g->index_of(smul(8, Element::unit(g->spec_ptr(), 1)))};
  EXPECT_EQ(img, Subgroup::generated(g, p3b));
  EXPECT_NE(img, fundamental_subgroup(g, 0, 1));
}

TEST(Dagger, SocleOfCyclicGroup) {
  auto ring = ring_of(2, {{2, 1}});
  const auto g = ring->group_ptr();
  EXPECT_EQ(dagger_ideal(torsion_ideal(ring, 1)), fundamental_subgroup(g, 0, 1));
  EXPECT_EQ(dagger_subgroup(ring, fundamental_subgroup(g, 0, 1)), torsion_ideal(ring, 1));
  EXPECT_TRUE(is_dagger_closed(torsion_ideal(ring, 1)).closed);
  EXPECT_TRUE(is_dagger_closed(ring, fundamental_subgroup(g, 0, 1)).closed);
}

TEST(Dagger, CollisionRecipeOnSmallGroup) {
  auto ring = ring_of(2, {{1, 1}, {2, 1}});
  const auto recipe = collision_recipe(*ring);
  ASSERT_TRUE(recipe.has_value());
  const auto& g = ring->group();
  const std::uint32_t a = g.index_of(Element::unit(g.spec_ptr(), 0));
  const std::uint32_t b = g.index_of(Element::unit(g.spec_ptr(), 1));
  EXPECT_EQ(ring->apply(recipe->first, a), g.smul(2, b));
  EXPECT_EQ(ring->apply(recipe->first, b), g.smul(2, b));
  EXPECT_EQ(ring->apply(recipe->second, a), 0u);
  EXPECT_EQ(ring->apply(recipe->second, b), g.smul(2, b));

  const auto c = find_dagger_collision(ring);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->method, "recipe");
  EXPECT_NE(c->first, c->second);
  EXPECT_EQ(dagger_ideal(c->first), dagger_ideal(c->second));
  // Every member of the ideal generated by g kills a; f does not.
  for (auto x : c->second.indices()) EXPECT_EQ(ring->apply(x, a), 0u);
  EXPECT_FALSE(c->second.contains(recipe->first));
}

TEST(Dagger, HomocyclicSearchAgreesWithOracle) {
  auto ring = ring_of(2, {{2, 2}});
  const auto ideals = enumerate_ideals(ring);
  bool collision = false;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) collision |= dagger_ideal(ideals[i]) == dagger_ideal(ideals[j]);
  }
  EXPECT_EQ(find_dagger_collision(ring).has_value(), collision);
  EXPECT_FALSE(collision);
  EXPECT_EQ(ideals.size(), 3u);
}
