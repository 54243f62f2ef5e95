#include "abelp/analyze.hpp"

#include <algorithm>
#include <sstream>

#include "abelp/fi_lattice.hpp"
#include "abelp/fundamental_matrix.hpp"
#include "abelp/io/json_io.hpp"

namespace abelp {

namespace {

std::string power_prefix(std::uint32_t k) {
  if (k == 0) return "";
  if (k == 1) return "p";
  return "p^" + std::to_string(k);
}

bool same_alpha(const GroupSpec& g, std::uint32_t kappa, std::uint32_t n, std::span<const std::uint32_t> alpha) {
  const auto f = fundamental_fi_form(g, kappa, n);
  return std::equal(f.begin(), f.end(), alpha.begin(), alpha.end());
}

std::string alpha_string(const std::vector<std::uint32_t>& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s + ")";
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) line += (c ? " | " : "") + pad(r[c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

struct StatedEntry {
  std::vector<std::uint32_t> sigma;
  const char* name;
  std::vector<std::uint32_t> alpha;
  const char* decomposition;
};

const std::vector<StatedEntry>& stated_entries() {
  static const std::vector<StatedEntry> rows{
      {{}, "0", {2, 4}, "0"},
      {{1}, "G[p]", {1, 3}, "<pa> + <p^3b>"},
      {{2}, "p^2G", {2, 2}, "<p^2b>"},
      {{3}, "p^3G", {2, 3}, "<p^3b>"},
      {{0, 1}, "G[p^2]", {0, 2}, "<a> + <p^2b>"},
      {{1, 2}, "pG", {1, 1}, "<pa> + <pb>"},
      {{1, 3}, "pG[p^2]", {1, 2}, "<pa> + <p^2b>"},
      {{2, 3}, "p^2G", {2, 2}, "<p^2b>"},
      {{0, 1, 2}, "G[p^3]", {0, 1}, "<a> + <pb>"},
      {{1, 2, 3}, "pG", {1, 1}, "<pa> + <pb>"},
      {{0, 1, 2, 3}, "G[p^4]", {0, 0}, "G"},
  };
  return rows;
}

}  // namespace

std::string fundamental_name(std::uint32_t kappa, std::uint32_t n, std::uint32_t exponent) {
  if (kappa >= exponent || n == 0) return "0";
  std::string s = power_prefix(kappa) + "G";
  if (n < exponent) s += n == 1 ? "[p]" : "[p^" + std::to_string(n) + "]";
  return s;
}

std::string fi_subgroup_name(const GroupSpec& g, std::span<const std::uint32_t> alpha) {
  const std::uint32_t e = g.exponent();
  if (same_alpha(g, e, e, alpha)) return "0";
  for (std::uint32_t k = 0; k < e; ++k) {
    if (same_alpha(g, k, e, alpha)) return fundamental_name(k, e, e);
  }
  for (std::uint32_t n = 1; n < e; ++n) {
    if (same_alpha(g, 0, n, alpha)) return fundamental_name(0, n, e);
  }
  for (std::uint32_t k = 1; k < e; ++k) {
    for (std::uint32_t n = 1; n < e; ++n) {
      if (same_alpha(g, k, n, alpha)) return fundamental_name(k, n, e);
    }
  }
  return "";
}

std::string decomposition_string(const GroupSpec& g, std::span<const std::uint32_t> alpha) {
  if (std::all_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a == 0; })) return "G";
  return fi_form_string(g, alpha);
}

std::vector<TableRow> indicator_table(const RingPtr& ring, GapRule rule) {
  const GroupPtr& g = ring->group_ptr();
  std::vector<TableRow> out;
  for (const auto& sigma : enumerate_admissible(g->spec(), rule)) {
    TableRow row;
    row.sigma = sigma;
    row.alpha = canonical_fi_form(*ring, indicator_subgroup(g, sigma));
    row.fi_name = fi_subgroup_name(g->spec(), row.alpha);
    row.decomposition = decomposition_string(g->spec(), row.alpha);
    out.push_back(std::move(row));
  }
  return out;
}

bool is_example_shape(const GroupSpec& g) {
  const auto& c = g.components();
  return c.size() == 2 && c[0] == Component{2, 1} && c[1] == Component{4, 1};
}

std::optional<std::vector<StatedRow>> stated_example_table(const RingPtr& ring) {
  const GroupPtr& g = ring->group_ptr();
  if (!is_example_shape(g->spec())) return std::nullopt;
  std::vector<StatedRow> out;
  for (const auto& e : stated_entries()) {
    StatedRow row;
    row.sigma = Indicator(e.sigma);
    row.stated_name = e.name;
    row.stated_alpha = e.alpha;
    row.stated_decomposition = e.decomposition;
    row.computed_alpha = canonical_fi_form(*ring, indicator_subgroup(g, row.sigma));
    row.computed_decomposition = decomposition_string(g->spec(), row.computed_alpha);
    row.match = row.computed_alpha == row.stated_alpha;
    out.push_back(std::move(row));
  }
  return out;
}

Analysis analyze(const GroupSpec& spec, const Budget& budget) {
  Analysis a;
  a.group = spec.to_string();
  a.p = spec.p();
  a.order = spec.order();
  a.rank = spec.rank();
  a.exponent = spec.exponent();
  for (std::uint32_t k = 0; k < spec.exponent(); ++k) a.ulm.push_back(ulm_invariant(spec, k));
  a.admissible_internal = enumerate_admissible(spec, GapRule::internal).size();
  a.admissible_terminal = enumerate_admissible(spec, GapRule::terminal).size();

  const GroupPtr g = Group::create(spec, budget);
  const FundMatrix m(g);
  a.matrix_text = m.render_text();
  a.matrix_json = m.to_json();

  const RingPtr ring = make_ring(g);
  a.ring_order = ring->size();
  const FILattice lattice = enumerate_fi_subgroups(ring);
  a.fi_subgroups = lattice.size();
  const LatticeStats stats = lattice_stats(lattice);
  a.longest_chain = stats.longest_chain;
  a.widest_antichain = stats.widest_antichain;
  a.hasse_edges = lattice.hasse_edges.size();

  a.table = indicator_table(ring);
  a.stated = stated_example_table(ring);
  return a;
}

nlohmann::json Analysis::to_json() const {
  nlohmann::json table_j = nlohmann::json::array();
  for (const auto& r : table) {
    table_j.push_back({{"indicator", indicator_to_json(r.sigma)},
                       {"fi_subgroup", r.fi_name},
                       {"alpha", r.alpha},
                       {"decomposition", r.decomposition}});
  }
  nlohmann::json j{{"group", group},
                   {"p", p},
                   {"order", order},
                   {"rank", rank},
                   {"exponent", exponent},
                   {"ulm_invariants", ulm},
                   {"admissible_indicators", {{"internal_gaps", admissible_internal}, {"terminal_gap", admissible_terminal}}},
                   {"endomorphism_ring_order", ring_order},
                   {"fi_lattice",
                    {{"size", fi_subgroups},
                     {"longest_chain", longest_chain},
                     {"widest_antichain", widest_antichain},
                     {"hasse_edges", hasse_edges}}},
                   {"fundamental_matrix", matrix_json},
                   {"indicator_table", table_j}};
  if (stated) {
    nlohmann::json rows = nlohmann::json::array();
    std::size_t mismatches = 0;
    for (const auto& r : *stated) {
      if (!r.match) ++mismatches;
      rows.push_back({{"indicator", indicator_to_json(r.sigma)},
                      {"stated_fi_subgroup", r.stated_name},
                      {"stated_alpha", r.stated_alpha},
                      {"stated_decomposition", r.stated_decomposition},
                      {"computed_alpha", r.computed_alpha},
                      {"computed_decomposition", r.computed_decomposition},
                      {"match", r.match}});
    }
    j["stated_table"] = {{"stated_fi_count", kStatedExampleCount},
                         {"computed_fi_count", fi_subgroups},
                         {"mismatches", mismatches},
                         {"rows", rows}};
  }
  return j;
}

std::string Analysis::to_text() const {
  std::ostringstream os;
  os << "group            " << group << '\n'
     << "order            " << order << '\n'
     << "rank             " << rank << '\n'
     << "exponent         " << exponent << '\n'
     << "ulm invariants   " << alpha_string(ulm) << '\n'
     << "admissible       " << admissible_internal << " (internal gaps), " << admissible_terminal
     << " (terminal gap)\n"
     << "|E|              " << ring_order << '\n'
     << "fi subgroups     " << fi_subgroups << " (longest chain " << longest_chain << ", widest antichain "
     << widest_antichain << ", " << hasse_edges << " covering pairs)\n\n"
     << "fundamental matrix\n"
     << matrix_text << '\n';

  std::vector<std::vector<std::string>> rows{{"Indicator", "FI Subgroup", "Ind. Decomp"}};
  for (const auto& r : table) {
    rows.push_back({r.sigma.to_string(false), r.fi_name.empty() ? "-" : r.fi_name, r.decomposition});
  }
  os << render_rows(rows);

  if (stated) {
    std::size_t mismatches = 0;
    std::vector<std::vector<std::string>> srows{{"Indicator", "Stated", "Stated Decomp", "Computed Decomp", ""}};
    for (const auto& r : *stated) {
      if (!r.match) ++mismatches;
      srows.push_back({r.sigma.to_string(false), r.stated_name, r.stated_decomposition, r.computed_decomposition,
                       r.match ? "ok" : "MISMATCH"});
    }
    os << "\nstated table (count " << kStatedExampleCount << " stated, " << fi_subgroups
       << " computed, " << mismatches << " rows differ)\n"
       << render_rows(srows);
  }
  return os.str();
}

}  // namespace abelp
