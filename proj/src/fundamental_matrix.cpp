#include "abelp/fundamental_matrix.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "abelp/error.hpp"
#include "abelp/io/json_io.hpp"

namespace abelp {
namespace {

nlohmann::json cell_json(Cell c) { return nlohmann::json::array({c.row, c.col}); }

std::string cell_name(Cell c) { return "M(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

// An element in exactly one of the two subgroups, if any.
std::optional<std::uint32_t> difference(const Subgroup& h, const Subgroup& k) {
  for (std::uint32_t a = 0; a < h.group().order(); ++a) {
    if (h.contains(a) != k.contains(a)) return a;
  }
  return std::nullopt;
}

nlohmann::json describe(const Subgroup& h) { return subgroup_to_json(h, 0); }

std::vector<Cell> all_cells(const FundMatrix& m) {
  std::vector<Cell> out;
  for (std::uint32_t i = 1; i <= m.rows(); ++i) {
    for (std::uint32_t j = 0; j < m.cols(); ++j) out.push_back({i, j});
  }
  return out;
}

void chain_checks(const FundMatrix& m, const Indicator& sigma, ReportBuilder& rb) {
  const Subgroup gs = indicator_subgroup(m.group_ptr(), sigma);
  for (const Cell c : indicator_to_path(m.group().spec(), sigma).cells) {
    rb.check(subgroup_leq(gs, m.entry(c)), [&] {
      const auto a = difference(gs, subgroup_meet(gs, m.entry(c)));
      return nlohmann::json{{"sigma", indicator_to_json(sigma)},
                            {"cell", cell_json(c)},
                            {"element", element_to_json(m.group().element(*a))}};
    });
  }
}

}  // namespace

FundMatrix::FundMatrix(GroupPtr group) : group_(std::move(group)), e_(group_->exponent()) {
  for (std::uint32_t j = 0; j < group_->spec().num_components() && j < e_; ++j) marked_.push_back(j);
  cells_.reserve(static_cast<std::size_t>(e_) * e_);
  for (std::uint32_t i = 1; i <= e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) cells_.push_back(fundamental_subgroup(group_, j, i));
  }
}

const Subgroup& FundMatrix::entry(std::uint32_t i, std::uint32_t j) const {
  if (!valid({i, j})) {
    throw Error(ErrorKind::IndexOutOfRange, "no cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return cells_[static_cast<std::size_t>(i - 1) * e_ + j];
}

std::string FundMatrix::render_text(bool narrow) const {
  const std::uint32_t ncols = narrow ? static_cast<std::uint32_t>(marked_.size()) : e_;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::size_t> width(ncols + 1, 0);
  for (std::uint32_t i = e_; i >= 1; --i) {
    std::vector<std::string> row{"i=" + std::to_string(i)};
    for (std::uint32_t j = 0; j < ncols; ++j) {
      const auto& h = entry(i, j);
      row.push_back(fi_form_string(group_->spec(), *h.fi_form()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    grid.push_back(std::move(row));
  }
  std::ostringstream out;
  out << std::string(width[0], ' ');
  for (std::uint32_t j = 0; j < ncols; ++j) {
    const std::string head = "j=" + std::to_string(j);
    out << " | " << head << std::string(width[j + 1] > head.size() ? width[j + 1] - head.size() : 0, ' ');
  }
  out << '\n';
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << " | ";
      out << row[c] << std::string(std::max(width[c], row[c].size()) - row[c].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json FundMatrix::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (std::uint32_t i = e_; i >= 1; --i) {
    for (std::uint32_t j = 0; j < e_; ++j) {
      const auto& h = entry(i, j);
      cells.push_back({{"row", i},
                       {"col", j},
                       {"order", h.order()},
                       {"alpha", *h.fi_form()},
                       {"form", fi_form_string(group_->spec(), *h.fi_form())}});
    }
  }
  return {{"group", group_spec_to_json(group_->spec())},
          {"rows", e_},
          {"cols", e_},
          {"homocyclic_cols", marked_},
          {"cells", cells}};
}

Cell entry_join(Cell a, Cell b) noexcept { return {std::max(a.row, b.row), std::min(a.col, b.col)}; }

Cell entry_meet(Cell a, Cell b) noexcept { return {std::min(a.row, b.row), std::max(a.col, b.col)}; }

ClaimReport check_join_meet(const FundMatrix& m) {
  ReportBuilder rb("lemma-7.5.2", m.group().spec().to_string(),
                   "M(i,j) v M(k,l) = M(max(i,k), min(j,l)) and M(i,j) ^ M(k,l) = M(min(i,k), max(j,l))");
  const auto cells = all_cells(m);
  for (const Cell a : cells) {
    for (const Cell b : cells) {
      const Subgroup sum = subgroup_sum(m.entry(a), m.entry(b));
      const Subgroup meet = subgroup_meet(m.entry(a), m.entry(b));
      rb.check(sum == m.entry(entry_join(a, b)), [&] {
        return nlohmann::json{{"operation", "join"},
                              {"cells", {cell_json(a), cell_json(b)}},
                              {"formula_cell", cell_json(entry_join(a, b))},
                              {"sum", describe(sum)},
                              {"formula_entry", describe(m.entry(entry_join(a, b)))}};
      });
      rb.check(meet == m.entry(entry_meet(a, b)), [&] {
        return nlohmann::json{{"operation", "meet"},
                              {"cells", {cell_json(a), cell_json(b)}},
                              {"formula_cell", cell_json(entry_meet(a, b))},
                              {"intersection", describe(meet)},
                              {"formula_entry", describe(m.entry(entry_meet(a, b)))}};
      });
    }
  }
  rb.set_bound("all ordered pairs of the " + std::to_string(cells.size()) + " cells");
  return rb.finish();
}

ClaimReport check_distinct(const FundMatrix& m) {
  ReportBuilder rb("lemma-7.5.1", m.group().spec().to_string(),
                   "the entries M(i,j), j over homocyclic columns, are pairwise distinct");
  std::vector<Cell> cells;
  for (std::uint32_t i = 1; i <= m.rows(); ++i) {
    for (auto j : m.homocyclic_cols()) cells.push_back({i, j});
  }
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = x + 1; y < cells.size(); ++y) {
      rb.check(!(m.entry(cells[x]) == m.entry(cells[y])), [&] {
        return nlohmann::json{{"cells", {cell_json(cells[x]), cell_json(cells[y])}},
                              {"entry", describe(m.entry(cells[x]))}};
      });
    }
  }
  rb.set_bound(std::to_string(cells.size()) + " marked cells, all unordered pairs");
  return rb.finish();
}

ClaimReport check_fundamental_order(const FundMatrix& m) {
  ReportBuilder rb("lemma-7.4", m.group().spec().to_string(),
                   "p^k G[p^n] <= p^l G[p^m] iff n <= m and k >= l");
  const GroupPtr& g = m.group_ptr();
  const std::uint32_t e = m.rows();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> params;
  for (std::uint32_t n = 0; n <= e; ++n) {
    for (std::uint32_t k = 0; k <= e; ++k) params.emplace_back(k, n);
  }
  std::vector<Subgroup> subs;
  for (auto [k, n] : params) subs.push_back(fundamental_subgroup(g, k, n));
  for (std::size_t x = 0; x < params.size(); ++x) {
    for (std::size_t y = 0; y < params.size(); ++y) {
      const auto [k, n] = params[x];
      const auto [l, mm] = params[y];
      const bool leq = subgroup_leq(subs[x], subs[y]);
      const bool formula = n <= mm && k >= l;
      rb.check(leq == formula, [&] {
        return nlohmann::json{{"left", {{"kappa", k}, {"n", n}}},
                              {"right", {{"kappa", l}, {"n", mm}}},
                              {"contained", leq},
                              {"formula", formula},
                              {"left_subgroup", describe(subs[x])},
                              {"right_subgroup", describe(subs[y])}};
      });
    }
  }
  rb.set_bound("kappa, n in [0, " + std::to_string(e) + "], all ordered pairs");
  return rb.finish();
}

Quartering quartering(const FundMatrix& m, Cell c) {
  if (!m.valid(c)) throw Error(ErrorKind::IndexOutOfRange, "no cell " + cell_name(c));
  Quartering q;
  for (const Cell x : all_cells(m)) {
    if (x.row <= c.row && x.col >= c.col) {
      q.south_east.push_back(x);
    } else if (x.row >= c.row && x.col <= c.col) {
      q.north_west.push_back(x);
    } else {
      q.other.push_back(x);
    }
  }
  return q;
}

ClaimReport check_quartering(const FundMatrix& m) {
  ReportBuilder rb("cor-7.6", m.group().spec().to_string(),
                   "south-east entries lie in M(i,j), north-west entries contain it, the rest are incomparable");
  for (const Cell c : all_cells(m)) {
    const Quartering q = quartering(m, c);
    const Subgroup& h = m.entry(c);
    auto witness = [&](Cell x, const char* part) {
      return nlohmann::json{{"cell", cell_json(c)}, {"other", cell_json(x)}, {"quadrant", part},
                            {"entry", describe(h)}, {"other_entry", describe(m.entry(x))}};
    };
    for (const Cell x : q.south_east) rb.check(subgroup_leq(m.entry(x), h), [&] { return witness(x, "south_east"); });
    for (const Cell x : q.north_west) rb.check(subgroup_leq(h, m.entry(x)), [&] { return witness(x, "north_west"); });
    for (const Cell x : q.other) {
      const bool incomparable = !subgroup_leq(h, m.entry(x)) && !subgroup_leq(m.entry(x), h);
      rb.check(incomparable, [&] { return witness(x, "other"); });
    }
  }
  rb.set_bound("every cell against every cell");
  return rb.finish();
}

std::uint32_t alias(const FundMatrix& m, std::uint32_t i, std::uint32_t j) {
  const Subgroup& h = m.entry(i, j);
  if (h.order() == 1) throw Error(ErrorKind::NoAlias, cell_name({i, j}) + " is zero");
  if (m.is_homocyclic_col(j)) return j;
  for (auto l : m.homocyclic_cols()) {
    if (l > j && m.entry(i, l) == h) return l;
  }
  throw Error(ErrorKind::NoAlias, "no homocyclic column l > " + std::to_string(j) + " carries " + cell_name({i, j}));
}

ClaimReport check_alias(const FundMatrix& m) {
  ReportBuilder rb("prop-7.8", m.group().spec().to_string(),
                   "every nonzero p^j G[p^i] with j unmarked equals p^l G[p^i] for some marked column l");
  for (std::uint32_t i = 1; i <= m.rows(); ++i) {
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
      if (m.is_homocyclic_col(j) || m.entry(i, j).order() == 1) continue;
      bool found = false;
      for (auto l : m.homocyclic_cols()) found = found || m.entry(i, l) == m.entry(i, j);
      rb.check(found, [&] { return nlohmann::json{{"cell", cell_json({i, j})}, {"entry", describe(m.entry(i, j))}}; });
    }
  }
  rb.set_bound("all nonzero cells outside the marked columns");
  return rb.finish();
}

bool is_rising(const FundMatrix& m, const RisingPath& path) {
  for (std::size_t k = 0; k < path.cells.size(); ++k) {
    if (!m.valid(path.cells[k])) return false;
    if (k > 0) {
      if (path.cells[k].row != path.cells[k - 1].row + 1) return false;
      if (path.cells[k].col <= path.cells[k - 1].col) return false;
    }
  }
  return true;
}

bool is_admissible_path(const GroupSpec& g, const RisingPath& path) {
  const std::uint32_t e = g.exponent();
  for (std::size_t k = 0; k < path.cells.size(); ++k) {
    const Cell c = path.cells[k];
    if (c.row < 1 || c.row > e || c.col >= e) return false;
    if (k + 1 < path.cells.size()) {
      const Cell d = path.cells[k + 1];
      if (d.row != c.row + 1 || d.col <= c.col) return false;
      if (d.col > c.col + 1 && ulm_invariant(g, c.col) == 0) return false;
    }
  }
  return true;
}

std::vector<RisingPath> enumerate_rising_paths(const FundMatrix& m) {
  const std::uint32_t e = m.rows();
  if (e > 12) throw Error(ErrorKind::GroupTooLarge, "rising paths are enumerated only for exp(G) <= 12");
  const GroupSpec& g = m.group().spec();
  std::vector<RisingPath> out;
  std::vector<Cell> stack;
  auto extend = [&](auto&& self) -> void {
    out.push_back({stack});
    const Cell last = stack.back();
    if (last.row == e) return;
    for (std::uint32_t j = last.col + 1; j < e; ++j) {
      if (j > last.col + 1 && ulm_invariant(g, last.col) == 0) break;
      stack.push_back({last.row + 1, j});
      self(self);
      stack.pop_back();
    }
  };
  for (std::uint32_t i = 1; i <= e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      stack = {{i, j}};
      extend(extend);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Indicator path_to_indicator(const GroupSpec& g, const RisingPath& path) {
  if (!is_admissible_path(g, path)) throw Error(ErrorKind::NotAdmissible, "path is not an admissible rising path");
  std::vector<std::uint32_t> cols;
  for (const Cell c : path.cells) cols.push_back(c.col);
  return Indicator(std::move(cols));
}

RisingPath indicator_to_path(const GroupSpec& g, const Indicator& sigma, std::uint32_t start_row) {
  if (!is_admissible(g, sigma)) throw Error(ErrorKind::NotAdmissible, sigma.to_string(false) + " is not admissible");
  RisingPath path;
  for (std::size_t k = 0; k < sigma.length(); ++k) {
    path.cells.push_back({start_row + static_cast<std::uint32_t>(k), sigma.entries()[k]});
  }
  if (!is_admissible_path(g, path)) {
    throw Error(ErrorKind::NotAdmissible, sigma.to_string(false) + " does not fit from row " + std::to_string(start_row));
  }
  return path;
}

ClaimReport check_path_correspondence(const FundMatrix& m) {
  ReportBuilder rb("lemma-7.10", m.group().spec().to_string(),
                   "ind(a) = sigma gives a rising path with p^k a in M(i+k, sigma_k); every rising path's "
                   "columns are the indicator of some element");
  const Group& g = m.group();
  const std::uint32_t e = m.rows();
  std::set<Indicator> realized;
  for (std::uint32_t a = 1; a < g.order(); ++a) {
    const Indicator sigma = ind_of(g, a);
    realized.insert(sigma);
    const std::size_t n = sigma.length();
    bool found = false;
    for (std::uint32_t i = 1; i + n - 1 <= e && !found; ++i) {
      bool ok = true;
      std::uint32_t x = a;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = m.entry(i + static_cast<std::uint32_t>(k), sigma.entries()[k]).contains(x);
        x = g.times_p(x);
      }
      found = ok;
    }
    rb.check(found, [&] {
      return nlohmann::json{{"direction", "element to path"}, {"a", element_to_json(g.element(a))},
                            {"ind_a", indicator_to_json(sigma)}};
    });
  }
  for (const auto& path : enumerate_rising_paths(m)) {
    const Indicator sigma = path_to_indicator(g.spec(), path);
    rb.check(realized.count(sigma) > 0, [&] {
      nlohmann::json cells = nlohmann::json::array();
      for (const Cell c : path.cells) cells.push_back(cell_json(c));
      return nlohmann::json{{"direction", "path to element"}, {"path", cells}, {"sigma", indicator_to_json(sigma)}};
    });
  }
  rb.set_bound("all nonzero elements and all admissible rising paths");
  return rb.finish();
}

ClaimReport path_chain_check(const FundMatrix& m, const Indicator& sigma) {
  ReportBuilder rb("prop-7.12", m.group().spec().to_string(),
                   "G(sigma) lies in every entry of the rising path of sigma");
  chain_checks(m, sigma, rb);
  return rb.finish();
}

ClaimReport check_path_chain(const FundMatrix& m) {
  ReportBuilder rb("prop-7.12", m.group().spec().to_string(),
                   "G(sigma) lies in every entry of the rising path of sigma, for every admissible sigma");
  const auto adm = enumerate_admissible(m.group().spec());
  for (const auto& sigma : adm) chain_checks(m, sigma, rb);
  rb.set_bound(std::to_string(adm.size()) + " admissible indicators, paths from row 1");
  return rb.finish();
}

Subgroup sigma_sum(const FundMatrix& m, const Indicator& sigma) {
  Subgroup acc = Subgroup::zero(m.group_ptr());
  for (std::size_t k = 0; k < sigma.length() && k < m.rows(); ++k) {
    const std::uint32_t j = sigma.entries()[k];
    if (j >= m.cols()) continue;
    acc = subgroup_sum(acc, m.entry(static_cast<std::uint32_t>(k + 1), j));
  }
  return acc;
}

ClaimReport verify_sigma_sum(const FundMatrix& m) {
  ReportBuilder rb("thm-7.2-sum", m.group().spec().to_string(),
                   "G(sigma) = sum over i of M(i, sigma_i) for every admissible sigma", 16);
  const auto adm = enumerate_admissible(m.group().spec());
  for (const auto& sigma : adm) {
    const Subgroup sum = sigma_sum(m, sigma);
    const Subgroup gs = indicator_subgroup(m.group_ptr(), sigma);
    const bool equal = sum == gs;
    rb.add_evidence({{"sigma", indicator_to_json(sigma)},
                     {"verdict", equal ? "equal" : "different"},
                     {"sum_order", sum.order()},
                     {"indicator_subgroup_order", gs.order()}});
    rb.check(equal, [&] {
      const std::uint32_t a = *difference(sum, gs);
      return nlohmann::json{{"sigma", indicator_to_json(sigma)},
                            {"element", element_to_json(m.group().element(a))},
                            {"in_sum", sum.contains(a)},
                            {"in_indicator_subgroup", gs.contains(a)}};
    });
  }
  rb.set_bound(std::to_string(adm.size()) + " admissible indicators");
  return rb.finish();
}

}  // namespace abelp
