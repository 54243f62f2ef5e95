#include "abelp/dagger_suite.hpp"
#include "abelp/ulm/ulm.hpp"

namespace abelp {

ClaimReport verify_descriptor_rule(const DaggerContext& ctx) {
  ReportBuilder rb("thm-9.4.4", ctx.group_name(),
                   "at finite rank, H+ <= H'+ if and only if H >= H'");
  const auto& nodes = ctx.lattice.nodes;
  const GroupSpec& spec = ctx.lattice.group->spec();
  std::uint64_t order_preserving_agrees = 0, pairs = 0;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    for (std::size_t y = 0; y < nodes.size(); ++y) {
      ++pairs;
      const bool dagger_le = ideal_leq(ctx.ideals[ctx.node_dagger[x]], ctx.ideals[ctx.node_dagger[y]]);
      const bool h_le = subgroup_leq(nodes[x], nodes[y]);
      const bool h_ge = subgroup_leq(nodes[y], nodes[x]);
      order_preserving_agrees += dagger_le == h_le;
      rb.check(dagger_le == h_ge, [&] {
        return nlohmann::json{{"H", fi_form_string(spec, ctx.lattice.alpha[x])},
                              {"H_prime", fi_form_string(spec, ctx.lattice.alpha[y])},
                              {"dagger_le", dagger_le},
                              {"H_ge_H_prime", h_ge}};
      });
    }
  }
  rb.add_evidence({{"pairs", pairs}, {"order_preserving_agreements", order_preserving_agrees},
                   {"rank_collapse", "I_{<=mu} = I for mu >= rank G"}});
  rb.set_bound("all ordered pairs of fully invariant subgroups");
  return rb.finish();
}

}  // namespace abelp
