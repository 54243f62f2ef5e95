#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "abelp/error.hpp"
#include "abelp/fundamental_matrix.hpp"

using namespace abelp;

namespace {

GroupPtr make(std::uint32_t p, std::vector<Component> c) { return Group::create(GroupSpec::make(p, std::move(c))); }
GroupPtr example(std::uint32_t p = 2) { return make(p, {{2, 1}, {4, 1}}); }
Indicator I(std::vector<std::uint32_t> e) { return Indicator(std::move(e)); }

std::set<std::uint32_t> as_set(const Subgroup& h) {
  auto v = h.indices();
  return {v.begin(), v.end()};
}

// p^j G[p^i] straight from heights and exponents of elements.
std::set<std::uint32_t> fundamental_oracle(const Group& g, std::uint32_t i, std::uint32_t j) {
  std::set<std::uint32_t> out;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (g.elem_exponent(a) <= i && (a == 0 || g.height(a) >= j)) out.insert(a);
  }
  return out;
}

// Closure of a union under addition.
std::set<std::uint32_t> sum_oracle(const Group& g, const std::set<std::uint32_t>& x, const std::set<std::uint32_t>& y) {
  std::set<std::uint32_t> out(x.begin(), x.end());
  out.insert(y.begin(), y.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> cur(out.begin(), out.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= out.insert(g.add(a, b)).second;
    }
  }
  return out;
}

// G(sigma) from the definition of the order on indicators.
std::set<std::uint32_t> indicator_oracle(const Group& g, const Indicator& sigma) {
  std::set<std::uint32_t> out;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::vector<std::uint32_t> ind;
    for (std::uint32_t x = a; x != 0; x = g.times_p(x)) ind.push_back(g.height(x));
    bool ok = ind.size() <= sigma.length();
    for (std::size_t k = 0; k < ind.size() && ok; ++k) ok = sigma.entries()[k] <= ind[k];
    if (ok) out.insert(a);
  }
  return out;
}

// Every cell sequence of length 1..e, filtered by the rising path rules.
std::vector<RisingPath> paths_oracle(const GroupSpec& g) {
  const std::uint32_t e = g.exponent();
  std::vector<RisingPath> out;
  std::vector<Cell> cur;
  std::function<void()> grow = [&] {
    if (!cur.empty()) {
      bool ok = true;
      for (std::size_t k = 1; k < cur.size() && ok; ++k) {
        ok = cur[k].row == cur[k - 1].row + 1 && cur[k].col > cur[k - 1].col &&
             (cur[k].col == cur[k - 1].col + 1 || ulm_invariant(g, cur[k - 1].col) != 0);
      }
      if (!ok) return;
      out.push_back({cur});
    }
    if (cur.size() == e) return;
    for (std::uint32_t i = 1; i <= e; ++i) {
      for (std::uint32_t j = 0; j < e; ++j) {
        cur.push_back({i, j});
        grow();
        cur.pop_back();
      }
    }
  };
  grow();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FundMatrix, EntriesMatchDefinition) {
  for (auto g : {example(), example(3), make(2, {{1, 1}, {3, 2}}), make(5, {{2, 2}})}) {
    FundMatrix m(g);
    ASSERT_EQ(m.rows(), g->exponent());
    for (std::uint32_t i = 1; i <= m.rows(); ++i) {
      for (std::uint32_t j = 0; j < m.cols(); ++j) {
        EXPECT_EQ(as_set(m.entry(i, j)), fundamental_oracle(*g, i, j));
        if (j + 1 < m.cols()) EXPECT_TRUE(subgroup_leq(m.entry(i, j + 1), m.entry(i, j)));
        if (i + 1 <= m.rows()) EXPECT_TRUE(subgroup_leq(m.entry(i, j), m.entry(i + 1, j)));
      }
    }
  }
  EXPECT_THROW(FundMatrix(example()).entry(0, 0), Error);
}

TEST(FundMatrix, ExampleDisplayEntries) {
  auto g = example();
  FundMatrix m(g);
  EXPECT_EQ(m.homocyclic_cols(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(m.entry(3, 0), Subgroup::from_fi_form(g, {0, 1}));
  EXPECT_EQ(m.entry(4, 0), Subgroup::whole(g));
  EXPECT_EQ(m.entry(4, 1), Subgroup::from_fi_form(g, {1, 1}));
  EXPECT_EQ(m.entry(3, 1), Subgroup::from_fi_form(g, {1, 1}));
  EXPECT_EQ(m.entry(2, 1), Subgroup::from_fi_form(g, {1, 2}));
  EXPECT_EQ(m.entry(1, 1), Subgroup::from_fi_form(g, {1, 3}));
  // The displayed M(2,0) and M(1,0) disagree with p^0 G[p^2] and G[p].
  EXPECT_EQ(m.entry(2, 0), Subgroup::from_fi_form(g, {0, 2}));
  EXPECT_EQ(m.entry(1, 0), Subgroup::from_fi_form(g, {1, 3}));
  const std::string text = m.render_text(true);
  EXPECT_NE(text.find("<a> + <pb>"), std::string::npos) << text;
}

TEST(FundMatrix, SingleCellAndHomocyclicColumn) {
  FundMatrix zp(make(3, {{1, 1}}));
  EXPECT_EQ(zp.rows(), 1u);
  EXPECT_EQ(zp.entry(1, 0), Subgroup::whole(zp.group_ptr()));
  auto h = make(2, {{3, 2}});
  FundMatrix m(h);
  EXPECT_EQ(m.homocyclic_cols(), (std::vector<std::uint32_t>{0}));
  for (std::uint32_t i = 1; i <= 3; ++i) EXPECT_EQ(m.entry(i, 0).order(), 1u << (2 * i));
  EXPECT_TRUE(check_distinct(m).verified());
}

TEST(FundMatrix, JoinMeetFormulas) {
  EXPECT_EQ(entry_join({1, 1}, {1, 1}), (Cell{1, 1}));
  EXPECT_EQ(entry_join({1, 1}, {2, 0}), (Cell{2, 0}));
  EXPECT_EQ(entry_meet({1, 1}, {2, 0}), (Cell{1, 1}));
  auto g = example();
  FundMatrix m(g);
  EXPECT_EQ(subgroup_sum(m.entry(2, 1), m.entry(3, 0)), m.entry(entry_join({2, 1}, {3, 0})));
  EXPECT_EQ(as_set(subgroup_sum(m.entry(2, 1), m.entry(3, 0))),
            sum_oracle(*g, as_set(m.entry(2, 1)), as_set(m.entry(3, 0))));

  // Meets of fundamental subgroups are fundamental; joins need not be.
  const ClaimReport rep = check_join_meet(m);
  EXPECT_EQ(rep.checked, 2u * 16 * 16);
  std::uint64_t join_failures = 0;
  for (std::uint32_t i = 1; i <= 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) {
      for (std::uint32_t k = 1; k <= 4; ++k) {
        for (std::uint32_t l = 0; l < 4; ++l) {
          const auto a = fundamental_oracle(*g, i, j);
          const auto b = fundamental_oracle(*g, k, l);
          std::set<std::uint32_t> meet;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(meet, meet.end()));
          EXPECT_EQ(meet, fundamental_oracle(*g, std::min(i, k), std::max(j, l)));
          join_failures += sum_oracle(*g, a, b) != fundamental_oracle(*g, std::max(i, k), std::min(j, l));
        }
      }
    }
  }
  EXPECT_EQ(rep.failures, join_failures);
  EXPECT_GT(join_failures, 0u);
  EXPECT_NE(as_set(subgroup_sum(m.entry(2, 1), m.entry(1, 0))), fundamental_oracle(*g, 2, 0));
}

TEST(FundMatrix, DistinctnessReport) {
  FundMatrix m(example());
  const ClaimReport rep = check_distinct(m);
  EXPECT_EQ(rep.checked, 28u);
  EXPECT_TRUE(rep.refuted());
  EXPECT_EQ(m.entry(4, 1), m.entry(3, 1));
  EXPECT_TRUE(check_distinct(FundMatrix(make(7, {{1, 1}}))).verified());
}

TEST(FundMatrix, QuarteringPartitionsAndContains) {
  for (auto g : {example(), make(3, {{1, 1}, {2, 1}})}) {
    FundMatrix m(g);
    for (std::uint32_t i = 1; i <= m.rows(); ++i) {
      for (std::uint32_t j = 0; j < m.cols(); ++j) {
        const Quartering q = quartering(m, {i, j});
        std::set<Cell> seen;
        for (const auto* part : {&q.south_east, &q.north_west, &q.other}) {
          for (Cell c : *part) EXPECT_TRUE(seen.insert(c).second);
        }
        EXPECT_EQ(seen.size(), std::size_t{m.rows()} * m.cols());
        for (Cell c : q.south_east) EXPECT_TRUE(subgroup_leq(m.entry(c), m.entry(i, j)));
        for (Cell c : q.north_west) EXPECT_TRUE(subgroup_leq(m.entry(i, j), m.entry(c)));
      }
    }
  }
  FundMatrix m(example());
  EXPECT_EQ(quartering(m, {4, 0}).south_east.size(), 16u);
  EXPECT_TRUE(quartering(m, {4, 0}).north_west.empty());
  EXPECT_EQ(quartering(m, {1, 3}).south_east, (std::vector<Cell>{{1, 3}}));
  const auto q = quartering(m, {2, 1});
  EXPECT_NE(std::find(q.south_east.begin(), q.south_east.end(), Cell{1, 1}), q.south_east.end());
}

TEST(FundMatrix, Alias) {
  FundMatrix m(example());
  EXPECT_EQ(alias(m, 3, 1), 1u);
  EXPECT_EQ(alias(m, 4, 0), 0u);
  try {
    alias(m, 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoAlias);
  }
  // p^2 G[p] = <p^3 b> is nonzero but equals no marked entry of row 1.
  EXPECT_EQ(as_set(m.entry(1, 2)), fundamental_oracle(m.group(), 1, 3));
  EXPECT_NE(m.entry(1, 2), m.entry(1, 0));
  EXPECT_NE(m.entry(1, 2), m.entry(1, 1));
  EXPECT_THROW(alias(m, 1, 2), Error);
  EXPECT_TRUE(check_alias(m).refuted());
  EXPECT_TRUE(check_alias(FundMatrix(make(2, {{3, 1}}))).checked > 0);
}

TEST(FundMatrix, RisingPathsAgainstBruteForce) {
  for (auto g : {make(2, {{2, 1}}), make(2, {{1, 1}, {2, 1}}), example(), make(3, {{1, 1}, {3, 1}})}) {
    FundMatrix m(g);
    const auto paths = enumerate_rising_paths(m);
    EXPECT_EQ(paths, paths_oracle(g->spec())) << g->spec().to_string();
    for (const auto& p : paths) EXPECT_TRUE(is_admissible_path(g->spec(), p));
  }
  EXPECT_EQ(enumerate_rising_paths(FundMatrix(make(2, {{1, 1}}))).size(), 1u);
}

TEST(FundMatrix, PathIndicatorRoundTrip) {
  auto g = example();
  const RisingPath p = indicator_to_path(g->spec(), I({1, 3}));
  EXPECT_EQ(p.cells, (std::vector<Cell>{{1, 1}, {2, 3}}));
  EXPECT_EQ(path_to_indicator(g->spec(), {{{1, 2}}}), I({2}));
  for (auto grp : {example(), example(3), make(2, {{1, 1}, {3, 1}}), make(2, {{1, 2}, {2, 1}, {4, 1}})}) {
    for (const auto& sigma : enumerate_admissible(grp->spec())) {
      EXPECT_EQ(path_to_indicator(grp->spec(), indicator_to_path(grp->spec(), sigma)), sigma);
    }
  }
  EXPECT_THROW(indicator_to_path(g->spec(), I({0, 2})), Error);
  EXPECT_THROW(path_to_indicator(g->spec(), {{{1, 0}, {2, 2}}}), Error);
}

TEST(FundMatrix, PathCorrespondenceReport) {
  FundMatrix m(example());
  const ClaimReport rep = check_path_correspondence(m);
  // (0) is an admissible path, yet no element has height 0 and exponent 1.
  EXPECT_TRUE(rep.refuted());
  const auto paths = enumerate_rising_paths(m);
  EXPECT_NE(std::find(paths.begin(), paths.end(), RisingPath{{{1, 0}}}), paths.end());
  for (std::uint32_t a = 0; a < m.group().order(); ++a) EXPECT_NE(ind_of(m.group(), a), I({0}));
}

TEST(FundMatrix, PathChain) {
  auto g = example();
  FundMatrix m(g);
  EXPECT_TRUE(path_chain_check(m, Indicator()).verified());
  const ClaimReport rep = path_chain_check(m, I({1, 3}));
  const auto gs = indicator_oracle(*g, I({1, 3}));
  const auto m11 = fundamental_oracle(*g, 1, 1);
  const bool contained = std::includes(m11.begin(), m11.end(), gs.begin(), gs.end());
  EXPECT_EQ(rep.verified(), contained && std::includes(fundamental_oracle(*g, 2, 3).begin(),
                                                       fundamental_oracle(*g, 2, 3).end(), gs.begin(), gs.end()));
  EXPECT_EQ(check_path_chain(m).checked, 0u + [&] {
    std::uint64_t n = 0;
    for (const auto& s : enumerate_admissible(g->spec())) n += s.length();
    return n;
  }());
}

TEST(FundMatrix, SigmaSumAgainstSetOracle) {
  for (std::uint32_t p : {2u, 3u}) {
    auto g = example(p);
    FundMatrix m(g);
    EXPECT_EQ(sigma_sum(m, Indicator()).order(), 1u);
    EXPECT_EQ(indicator_subgroup(g, min_admissible(g->spec())), Subgroup::whole(g));
    const ClaimReport rep = verify_sigma_sum(m);
    const auto adm = enumerate_admissible(g->spec());
    EXPECT_EQ(rep.evidence.size(), adm.size());
    std::uint64_t differ = 0;
    for (std::size_t k = 0; k < adm.size(); ++k) {
      std::set<std::uint32_t> sum = {0};
      for (std::size_t i = 0; i < adm[k].length(); ++i) {
        sum = sum_oracle(*g, sum, fundamental_oracle(*g, static_cast<std::uint32_t>(i + 1), adm[k].entries()[i]));
      }
      const bool equal = sum == indicator_oracle(*g, adm[k]);
      differ += !equal;
      EXPECT_EQ(rep.evidence[k]["verdict"].get<std::string>(), equal ? "equal" : "different")
          << adm[k].to_string() << rep.evidence[k].dump();
      if (adm[k] == I({1, 3})) {
        const std::uint32_t p2b = g->index_of(smul(p * p, Element::unit(g->spec_ptr(), 1)));
        EXPECT_EQ(sum.count(p2b) > 0, as_set(sigma_sum(m, adm[k])).count(p2b) > 0);
        EXPECT_EQ(indicator_oracle(*g, adm[k]).count(p2b) > 0, true);
      }
    }
    EXPECT_EQ(rep.failures, differ);
  }
}
