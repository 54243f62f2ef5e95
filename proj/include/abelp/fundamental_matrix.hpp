#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelp/claim_report.hpp"
#include "abelp/indicator.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// (row, col) addresses p^col G[p^row]; rows run 1..e, columns 0..e-1.
struct Cell {
  std::uint32_t row = 1;
  std::uint32_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The grid M(i, j) = p^j G[p^i] over the full e x e range. Columns
/// 0..k-1 (one per homocyclic component) are marked as the narrow matrix.
class FundMatrix {
 public:
  /// Throws GroupTooLarge when the group exceeds the subgroup budget.
  explicit FundMatrix(GroupPtr group);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::uint32_t rows() const noexcept { return e_; }
  std::uint32_t cols() const noexcept { return e_; }
  const std::vector<std::uint32_t>& homocyclic_cols() const noexcept { return marked_; }
  bool is_homocyclic_col(std::uint32_t j) const noexcept { return j < marked_.size(); }
  bool valid(Cell c) const noexcept { return c.row >= 1 && c.row <= e_ && c.col < e_; }

  /// Throws IndexOutOfRange.
  const Subgroup& entry(std::uint32_t i, std::uint32_t j) const;
  const Subgroup& entry(Cell c) const { return entry(c.row, c.col); }

  /// Top row first; narrow restricts to the marked columns.
  std::string render_text(bool narrow = false) const;
  nlohmann::json to_json() const;

 private:
  GroupPtr group_;
  std::uint32_t e_ = 0;
  std::vector<std::uint32_t> marked_;
  std::vector<Subgroup> cells_;
};

/// (max rows, min cols) and (min rows, max cols).
Cell entry_join(Cell a, Cell b) noexcept;
Cell entry_meet(Cell a, Cell b) noexcept;

/// Index formulas against explicit sum and intersection, over all cell pairs.
ClaimReport check_join_meet(const FundMatrix& m);
/// Pairwise distinctness of the marked entries.
ClaimReport check_distinct(const FundMatrix& m);
/// p^k G[p^n] <= p^l G[p^m] iff n <= m and k >= l, for all fundamental pairs.
ClaimReport check_fundamental_order(const FundMatrix& m);

struct Quartering {
  /// Rows <= i, columns >= j, the cell itself included.
  std::vector<Cell> south_east;
  /// Rows >= i, columns <= j, the cell itself excluded.
  std::vector<Cell> north_west;
  std::vector<Cell> other;
};

Quartering quartering(const FundMatrix& m, Cell c);
/// SE entries are contained in the cell, NW entries contain it, and the
/// remaining entries are incomparable with it.
ClaimReport check_quartering(const FundMatrix& m);

/// Least marked column l > j with p^j G[p^i] = p^l G[p^i]; j itself when
/// marked. Throws NoAlias for a zero entry or when no marked column matches.
std::uint32_t alias(const FundMatrix& m, std::uint32_t i, std::uint32_t j);
/// Every nonzero entry outside the marked columns has an alias.
ClaimReport check_alias(const FundMatrix& m);

/// Cells (i, j_0), (i+1, j_1), ... with j_0 < j_1 < ...
struct RisingPath {
  std::vector<Cell> cells;
  friend auto operator<=>(const RisingPath&, const RisingPath&) = default;
};

/// Shape only: rows step by one, columns strictly increase, all cells valid.
bool is_rising(const FundMatrix& m, const RisingPath& path);
/// Rising, and every column jump of more than one leaves a column j with u_j != 0.
bool is_admissible_path(const GroupSpec& g, const RisingPath& path);

/// All nonempty rising paths of the full grid, sorted. Throws GroupTooLarge
/// for exp(G) > 12.
std::vector<RisingPath> enumerate_rising_paths(const FundMatrix& m);

/// Column sequence as an indicator. Throws NotAdmissible.
Indicator path_to_indicator(const GroupSpec& g, const RisingPath& path);
/// Cells (start_row + k, sigma_k). Throws NotAdmissible.
RisingPath indicator_to_path(const GroupSpec& g, const Indicator& sigma, std::uint32_t start_row = 1);

/// Every element lies on the path of its indicator, and every admissible path
/// is the indicator of some element.
ClaimReport check_path_correspondence(const FundMatrix& m);

/// G(sigma) is contained in each entry of the path of sigma from row 1.
ClaimReport path_chain_check(const FundMatrix& m, const Indicator& sigma);
/// path_chain_check over every admissible sigma.
ClaimReport check_path_chain(const FundMatrix& m);

/// Sum of M(k + 1, sigma_k) over finite entries below e.
Subgroup sigma_sum(const FundMatrix& m, const Indicator& sigma);
/// sigma_sum(sigma) = G(sigma) for every admissible sigma; one evidence row per sigma.
ClaimReport verify_sigma_sum(const FundMatrix& m);

}  // namespace abelp
