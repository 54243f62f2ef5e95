#include "abelp/dagger_suite.hpp"

#include <algorithm>

#include "abelp/io/json_io.hpp"

namespace abelp {
namespace {

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

nlohmann::json node_json(const DaggerContext& ctx, std::size_t x) {
  return {{"form", fi_form_string(ctx.lattice.group->spec(), ctx.lattice.alpha[x])},
          {"order", ctx.lattice.nodes[x].order()}};
}

nlohmann::json sub_json(const DaggerContext& ctx, const Subgroup& h) {
  const std::size_t x = ctx.lattice.find(h);
  return x < ctx.lattice.size() ? node_json(ctx, x) : subgroup_to_json(h, 16);
}

nlohmann::json ideal_json(const Ideal& i) { return ideal_to_json(i); }

bool is_closed(const DaggerContext& ctx, const Subgroup& h) { return dagger_ideal(dagger_subgroup(ctx.ring, h)) == h; }
bool is_closed(const DaggerContext& ctx, const Ideal& i) { return dagger_subgroup(ctx.ring, dagger_ideal(i)) == i; }

Subgroup socle_subgroup(const DaggerContext& ctx) { return fundamental_subgroup(ctx.lattice.group, 0, 1); }

}  // namespace

DaggerContext DaggerContext::build(const RingPtr& ring) {
  DaggerContext ctx;
  ctx.ring = ring;
  ctx.lattice = enumerate_fi_subgroups(ring);
  ctx.ideals = enumerate_ideals(ring);
  for (const auto& h : ctx.lattice.nodes) ctx.node_dagger.push_back(ctx.find_ideal(dagger_subgroup(ring, h)));
  for (const auto& i : ctx.ideals) ctx.ideal_dagger.push_back(ctx.lattice.find(dagger_ideal(i)));
  return ctx;
}

std::size_t DaggerContext::find_ideal(const Ideal& i) const {
  const auto it = std::lower_bound(ideals.begin(), ideals.end(), i, ideal_less);
  if (it != ideals.end() && *it == i) return static_cast<std::size_t>(it - ideals.begin());
  return ideals.size();
}

std::string DaggerContext::group_name() const { return lattice.group->spec().to_string(); }

ClaimReport check_dagger_codomains(const DaggerContext& ctx) {
  ReportBuilder rb("lemma-8.2", ctx.group_name(), "H-dagger is a two-sided ideal and I-dagger is fully invariant");
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    const Ideal d = dagger_subgroup(ctx.ring, ctx.lattice.nodes[x]);
    rb.check(d.is_two_sided() && ctx.node_dagger[x] < ctx.ideals.size(),
             [&] { return nlohmann::json{{"subgroup", node_json(ctx, x)}, {"dagger_order", d.order()}}; });
  }
  for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
    rb.check(ctx.ideal_dagger[k] < ctx.lattice.size(), [&] {
      return nlohmann::json{{"ideal", ideal_json(ctx.ideals[k])},
                            {"dagger", subgroup_to_json(dagger_ideal(ctx.ideals[k]), 16)}};
    });
  }
  rb.set_bound(std::to_string(ctx.lattice.size()) + " subgroups, " + std::to_string(ctx.ideals.size()) + " ideals");
  return rb.finish();
}

ClaimReport check_dagger_lattice_maps(const DaggerContext& ctx) {
  ReportBuilder rb("prop-8.4.1", ctx.group_name(), "both dagger maps preserve order, meets and joins");
  const auto& nodes = ctx.lattice.nodes;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    for (std::size_t y = 0; y < nodes.size(); ++y) {
      const Ideal& hx = ctx.ideals[ctx.node_dagger[x]];
      const Ideal& hy = ctx.ideals[ctx.node_dagger[y]];
      auto pair = [&](const char* what) {
        return nlohmann::json{{"law", what}, {"H", node_json(ctx, x)}, {"K", node_json(ctx, y)}};
      };
      if (subgroup_leq(nodes[x], nodes[y])) rb.check(ideal_leq(hx, hy), [&] { return pair("order"); });
      rb.check(dagger_subgroup(ctx.ring, subgroup_meet(nodes[x], nodes[y])) == ideal_meet(hx, hy),
               [&] { return pair("meet"); });
      rb.check(dagger_subgroup(ctx.ring, subgroup_sum(nodes[x], nodes[y])) == ideal_sum(hx, hy),
               [&] { return pair("join"); });
    }
  }
  for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
    for (std::size_t j = 0; j < ctx.ideals.size(); ++j) {
      const Ideal& a = ctx.ideals[i];
      const Ideal& b = ctx.ideals[j];
      const Subgroup da = dagger_ideal(a), db = dagger_ideal(b);
      auto pair = [&](const char* what) {
        return nlohmann::json{{"law", what}, {"I", ideal_json(a)}, {"J", ideal_json(b)}};
      };
      if (ideal_leq(a, b)) rb.check(subgroup_leq(da, db), [&] { return pair("order"); });
      rb.check(dagger_ideal(ideal_meet(a, b)) == subgroup_meet(da, db), [&] { return pair("meet"); });
      rb.check(dagger_ideal(ideal_sum(a, b)) == subgroup_sum(da, db), [&] { return pair("join"); });
    }
  }
  rb.set_bound("all ordered pairs of subgroups and of ideals");
  return rb.finish();
}

ClaimReport check_dagger_deflation(const DaggerContext& ctx) {
  ReportBuilder rb("prop-8.4.2a", ctx.group_name(), "H-dagger-dagger <= H and I-dagger-dagger <= I");
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    const Subgroup hdd = dagger_ideal(ctx.ideals[ctx.node_dagger[x]]);
    rb.check(subgroup_leq(hdd, ctx.lattice.nodes[x]), [&] {
      return nlohmann::json{{"H", node_json(ctx, x)}, {"H_dd", sub_json(ctx, hdd)}};
    });
  }
  std::uint32_t inflating = 0;
  for (const auto& i : ctx.ideals) {
    const Ideal idd = dagger_subgroup(ctx.ring, dagger_ideal(i));
    inflating += ideal_leq(i, idd);
    rb.check(ideal_leq(idd, i), [&] {
      return nlohmann::json{{"I", ideal_json(i)}, {"I_dd_order", idd.order()}};
    });
  }
  rb.add_evidence({{"ideals", ctx.ideals.size()}, {"ideals_with_I_le_I_dd", inflating}});
  rb.set_bound("every fully invariant subgroup and every ideal");
  return rb.finish();
}

ClaimReport check_triple_dagger(const DaggerContext& ctx) {
  ReportBuilder rb("prop-8.4.2b", ctx.group_name(), "H-ddd = H-d and I-ddd = I-d");
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    const Ideal& hd = ctx.ideals[ctx.node_dagger[x]];
    rb.check(dagger_subgroup(ctx.ring, dagger_ideal(hd)) == hd, [&] { return nlohmann::json{{"H", node_json(ctx, x)}}; });
  }
  for (const auto& i : ctx.ideals) {
    const Subgroup id = dagger_ideal(i);
    rb.check(dagger_ideal(dagger_subgroup(ctx.ring, id)) == id, [&] { return nlohmann::json{{"I", ideal_json(i)}}; });
  }
  rb.set_bound("every fully invariant subgroup and every ideal");
  return rb.finish();
}

ClaimReport check_closed_preimages(const DaggerContext& ctx) {
  ReportBuilder rb("prop-8.6", ctx.group_name(),
                   "closed, a dagger image, and having a unique closed dagger preimage are equivalent");
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    const bool closed = is_closed(ctx, ctx.lattice.nodes[x]);
    bool image = false;
    std::uint32_t closed_preimages = 0;
    for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
      if (ctx.ideal_dagger[k] != x) continue;
      image = true;
      closed_preimages += is_closed(ctx, ctx.ideals[k]);
    }
    rb.check(closed == image && image == (closed_preimages == 1), [&] {
      return nlohmann::json{{"H", node_json(ctx, x)}, {"closed", closed}, {"image", image},
                            {"closed_preimages", closed_preimages}};
    });
  }
  for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
    const bool closed = is_closed(ctx, ctx.ideals[k]);
    bool image = false;
    std::uint32_t closed_preimages = 0;
    for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
      if (ctx.node_dagger[x] != k) continue;
      image = true;
      closed_preimages += is_closed(ctx, ctx.lattice.nodes[x]);
    }
    rb.check(closed == image && image == (closed_preimages == 1), [&] {
      return nlohmann::json{{"I", ideal_json(ctx.ideals[k])}, {"closed", closed}, {"image", image},
                            {"closed_preimages", closed_preimages}};
    });
  }
  rb.set_bound("every fully invariant subgroup and every ideal");
  return rb.finish();
}

ClaimReport check_closed_isomorphism(const DaggerContext& ctx) {
  ReportBuilder rb("prop-8.8.4", ctx.group_name(),
                   "dagger restricted to closed objects is a pair of inverse lattice isomorphisms");
  std::vector<std::size_t> closed_nodes, closed_ideals;
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    if (is_closed(ctx, ctx.lattice.nodes[x])) closed_nodes.push_back(x);
  }
  for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
    if (is_closed(ctx, ctx.ideals[k])) closed_ideals.push_back(k);
  }
  for (auto x : closed_nodes) {
    const std::size_t k = ctx.node_dagger[x];
    rb.check(std::binary_search(closed_ideals.begin(), closed_ideals.end(), k) && ctx.ideal_dagger[k] == x,
             [&] { return nlohmann::json{{"H", node_json(ctx, x)}}; });
    for (auto y : closed_nodes) {
      const bool below = subgroup_leq(ctx.lattice.nodes[x], ctx.lattice.nodes[y]);
      rb.check(below == ideal_leq(ctx.ideals[k], ctx.ideals[ctx.node_dagger[y]]), [&] {
        return nlohmann::json{{"H", node_json(ctx, x)}, {"K", node_json(ctx, y)}, {"H_le_K", below}};
      });
    }
  }
  for (auto k : closed_ideals) {
    const std::size_t x = ctx.ideal_dagger[k];
    rb.check(std::binary_search(closed_nodes.begin(), closed_nodes.end(), x) && ctx.node_dagger[x] == k,
             [&] { return nlohmann::json{{"I", ideal_json(ctx.ideals[k])}}; });
  }
  rb.add_evidence({{"closed_subgroups", closed_nodes.size()}, {"closed_ideals", closed_ideals.size()}});
  rb.set_bound("all closed subgroups and ideals");
  return rb.finish();
}

ClaimReport check_special_ideals(const DaggerContext& ctx) {
  const GroupPtr& g = ctx.lattice.group;
  ReportBuilder rb("lemma-8.9", ctx.group_name(),
                   "(p^n E)+ = p^n G, (p^n G)+ = p^n E, E[p^n]+ = G[p^n], G[p^n]+ = E[p^n]");
  const std::uint32_t e = g->exponent();
  for (std::uint32_t n = 0; n <= e; ++n) {
    const Ideal pe = p_power_ideal(ctx.ring, n), te = torsion_ideal(ctx.ring, n);
    const Subgroup pg = fundamental_subgroup(g, n, e), tg = fundamental_subgroup(g, 0, n);
    const Subgroup pe_d = dagger_ideal(pe), te_d = dagger_ideal(te);
    const Ideal pg_d = dagger_subgroup(ctx.ring, pg), tg_d = dagger_subgroup(ctx.ring, tg);
    rb.check(pe_d == pg, [&] {
      return nlohmann::json{{"identity", "(p^n E)+ = p^n G"}, {"n", n}, {"got", sub_json(ctx, pe_d)}};
    });
    rb.check(pg_d == pe, [&] {
      return nlohmann::json{{"identity", "(p^n G)+ = p^n E"}, {"n", n}, {"got_order", pg_d.order()},
                            {"expected_order", pe.order()}};
    });
    rb.check(te_d == tg, [&] {
      return nlohmann::json{{"identity", "E[p^n]+ = G[p^n]"}, {"n", n}, {"got", sub_json(ctx, te_d)}};
    });
    rb.check(tg_d == te, [&] {
      return nlohmann::json{{"identity", "G[p^n]+ = E[p^n]"}, {"n", n}, {"got_order", tg_d.order()},
                            {"expected_order", te.order()}};
    });
  }
  rb.set_bound("n = 0.." + std::to_string(e));
  return rb.finish();
}

ClaimReport check_power_daggers(const DaggerContext& ctx) {
  const GroupPtr& g = ctx.lattice.group;
  ReportBuilder rb("prop-8.10", ctx.group_name(), "(p^k G)+ = p^k E and (p^k E)+ = p^k G for finite k");
  const std::uint32_t e = g->exponent();
  for (std::uint32_t k = 0; k <= e + 1; ++k) {
    const Ideal pe = p_power_ideal(ctx.ring, k);
    const Subgroup pg = fundamental_subgroup(g, std::min(k, e), e);
    const Ideal pg_d = dagger_subgroup(ctx.ring, pg);
    rb.check(pg_d == pe, [&] {
      return nlohmann::json{{"identity", "(p^k G)+ = p^k E"}, {"k", k}, {"got_order", pg_d.order()},
                            {"expected_order", pe.order()}};
    });
    rb.check(dagger_ideal(pe) == pg, [&] { return nlohmann::json{{"identity", "(p^k E)+ = p^k G"}, {"k", k}}; });
  }
  rb.set_bound("k = 0.." + std::to_string(e + 1));
  return rb.finish();
}

ClaimReport check_fundamental_closed(const DaggerContext& ctx) {
  const GroupPtr& g = ctx.lattice.group;
  ReportBuilder rb("cor-8.11", ctx.group_name(), "fundamental and indicator subgroups are dagger closed");
  const std::uint32_t e = g->exponent();
  for (std::uint32_t k = 0; k <= e; ++k) {
    for (std::uint32_t n = 0; n <= e; ++n) {
      rb.check(is_closed(ctx, fundamental_subgroup(g, k, n)),
               [&] { return nlohmann::json{{"kappa", k}, {"n", n}}; });
    }
  }
  std::size_t sigmas = 0;
  for (const auto& sigma : enumerate_admissible(g->spec())) {
    ++sigmas;
    rb.check(is_closed(ctx, indicator_subgroup(g, sigma)), [&] { return nlohmann::json{{"sigma", indicator_to_json(sigma)}}; });
  }
  rb.set_bound(std::to_string((e + 1) * (e + 1)) + " fundamental subgroups, " + std::to_string(sigmas) +
               " indicator subgroups");
  return rb.finish();
}

ClaimReport check_all_closed(const DaggerContext& ctx) {
  ReportBuilder rb("cor-8.12", ctx.group_name(), "every fully invariant subgroup is dagger closed");
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    const Subgroup hdd = dagger_ideal(ctx.ideals[ctx.node_dagger[x]]);
    rb.check(hdd == ctx.lattice.nodes[x], [&] {
      return nlohmann::json{{"H", node_json(ctx, x)}, {"H_dd", sub_json(ctx, hdd)}};
    });
  }
  rb.set_bound("all " + std::to_string(ctx.lattice.size()) + " fully invariant subgroups");
  return rb.finish();
}

ClaimReport check_inverse_classes(const DaggerContext& ctx) {
  ReportBuilder rb("lemma-8.13", ctx.group_name(),
                   "each dagger-inverse class is closed under sums and H-dagger is its only closed member");
  nlohmann::json sizes = nlohmann::json::array();
  for (std::size_t x = 0; x < ctx.lattice.size(); ++x) {
    std::vector<std::size_t> cls;
    for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
      if (ctx.ideal_dagger[k] == x) cls.push_back(k);
    }
    sizes.push_back({{"H", node_json(ctx, x)}, {"class_size", cls.size()}});
    for (auto i : cls) {
      for (auto j : cls) {
        const std::size_t s = ctx.find_ideal(ideal_sum(ctx.ideals[i], ctx.ideals[j]));
        rb.check(s < ctx.ideals.size() && ctx.ideal_dagger[s] == x, [&] {
          return nlohmann::json{{"H", node_json(ctx, x)}, {"I", ideal_json(ctx.ideals[i])},
                                {"J", ideal_json(ctx.ideals[j])}, {"law", "sum leaves the class"}};
        });
      }
    }
    Ideal total = zero_ideal(ctx.ring);
    std::vector<std::size_t> closed;
    for (auto k : cls) {
      total = ideal_sum(total, ctx.ideals[k]);
      if (is_closed(ctx, ctx.ideals[k])) closed.push_back(k);
    }
    const std::size_t hd = ctx.node_dagger[x];
    rb.check(!cls.empty() && total == ctx.ideals[hd], [&] {
      return nlohmann::json{{"H", node_json(ctx, x)}, {"class_size", cls.size()}, {"sum_order", total.order()},
                            {"law", "class sum is H-dagger"}};
    });
    rb.check(closed.size() == 1 && closed.front() == hd, [&] {
      return nlohmann::json{{"H", node_json(ctx, x)}, {"closed_members", closed.size()},
                            {"law", "H-dagger is the only closed member"}};
    });
  }
  rb.add_evidence({{"classes", sizes}});
  rb.set_bound("every class over " + std::to_string(ctx.ideals.size()) + " ideals");
  return rb.finish();
}

std::uint32_t socle_endo(const EndoRing& ring) {
  const GroupSpec& spec = ring.group().spec();
  const std::size_t r = spec.rank();
  std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t t = 0; t < r; ++t) m[t][t] = spec.pow(spec.coordinate_exponents()[t] - 1);
  return ring.index_of(Endo(ring.group().spec_ptr(), std::move(m)));
}

ClaimReport check_socle_pair(const DaggerContext& ctx) {
  const GroupSpec& spec = ctx.lattice.group->spec();
  ReportBuilder rb("remark-8.3", ctx.group_name(),
                   "I = ideal of p^{m-1} and J = ideal of the socle map differ and both have dagger G[p]");
  if (spec.is_homocyclic()) return rb.skip("homocyclic group; the two generators coincide");
  const std::uint32_t pm[] = {ctx.ring->smul(spec.pow(spec.exponent() - 1), ctx.ring->identity())};
  const std::uint32_t soc[] = {socle_endo(*ctx.ring)};
  const Ideal i = ideal_generated(ctx.ring, pm);
  const Ideal j = ideal_generated(ctx.ring, soc);
  const Subgroup di = dagger_ideal(i), dj = dagger_ideal(j), socle = socle_subgroup(ctx);
  rb.check(!(i == j), [&] { return nlohmann::json{{"law", "I != J"}, {"order", i.order()}}; });
  rb.check(di == socle, [&] { return nlohmann::json{{"law", "I-dagger = G[p]"}, {"I_dagger", sub_json(ctx, di)}}; });
  rb.check(dj == socle, [&] { return nlohmann::json{{"law", "J-dagger = G[p]"}, {"J_dagger", sub_json(ctx, dj)}}; });
  rb.add_evidence({{"I_order", i.order()}, {"J_order", j.order()}, {"I_dagger", sub_json(ctx, di)},
                   {"J_dagger", sub_json(ctx, dj)}, {"socle", sub_json(ctx, socle)}});
  rb.set_bound("the single pair");
  return rb.finish();
}

ClaimReport check_collision(const DaggerContext& ctx) {
  ReportBuilder rb("sec-8.3.3", ctx.group_name(),
                   "a non-homocyclic group has distinct ideals with equal dagger images");
  const auto found = find_dagger_collision(ctx.ring);
  if (ctx.lattice.group->spec().is_homocyclic()) {
    rb.add_evidence({{"search_found_pair", found.has_value()}});
    return rb.skip("homocyclic group; the construction needs two components");
  }
  rb.check(found.has_value(), [] { return nlohmann::json{{"law", "no pair found"}}; });
  if (found) {
    const Subgroup d1 = dagger_ideal(found->first), d2 = dagger_ideal(found->second);
    rb.check(!(found->first == found->second) && d1 == d2, [&] {
      return nlohmann::json{{"law", "pair is not a collision"}, {"method", found->method}};
    });
    rb.add_evidence({{"method", found->method}, {"I", ideal_json(found->first)}, {"J", ideal_json(found->second)},
                     {"dagger", sub_json(ctx, d1)}});
  }
  rb.set_bound("recipe, then every pair of ideals");
  return rb.finish();
}

ClaimReport check_rank_collapse(const DaggerContext& ctx) {
  const std::uint32_t rho = ctx.ring->rank();
  ReportBuilder rb("lemma-9.1", ctx.group_name(), "at finite rank every ideal equals its rank-bounded part I_{<=rank G}");
  std::vector<std::uint32_t> ranks(ctx.ring->size());
  for (std::uint32_t f = 0; f < ctx.ring->size(); ++f) ranks[f] = ctx.ring->endo_rank(f);
  for (const auto& i : ctx.ideals) {
    std::uint32_t bounded = 0;
    i.members().for_each([&](std::size_t f) { bounded += ranks[f] <= rho; });
    rb.check(bounded == i.order(), [&] { return nlohmann::json{{"I", ideal_json(i)}, {"rank_bounded", bounded}}; });
  }
  rb.add_evidence({{"rank", rho}, {"max_endo_rank", *std::max_element(ranks.begin(), ranks.end())}});
  rb.set_bound("every ideal");
  return rb.finish();
}

}  // namespace abelp
