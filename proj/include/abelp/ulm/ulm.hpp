#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abelp/claim_report.hpp"
#include "abelp/group.hpp"

namespace abelp {

struct DaggerContext;

/// omega * q + r, every ordinal below omega^2.
struct Ordinal {
  std::uint32_t q = 0;
  std::uint32_t r = 0;

  static constexpr Ordinal finite(std::uint32_t n) { return {0, n}; }
  static constexpr Ordinal omega(std::uint32_t times = 1) { return {times, 0}; }

  bool is_limit() const noexcept { return r == 0; }
  std::string to_string() const;

  friend auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

std::strong_ordering ord_cmp(const Ordinal& x, const Ordinal& y) noexcept;
/// Left summands are absorbed by a right summand of positive omega part.
Ordinal ord_add(const Ordinal& x, const Ordinal& y) noexcept;
inline bool is_limit(const Ordinal& x) noexcept { return x.is_limit(); }

/// A finite cardinal or aleph_k; every finite value lies below every aleph.
struct Cardinal {
  enum class Kind { finite, aleph };
  Kind kind = Kind::finite;
  std::uint64_t value = 0;

  static constexpr Cardinal finite(std::uint64_t n) { return {Kind::finite, n}; }
  static constexpr Cardinal aleph(std::uint64_t k) { return {Kind::aleph, k}; }

  bool is_zero() const noexcept { return kind == Kind::finite && value == 0; }
  bool is_infinite() const noexcept { return kind == Kind::aleph; }
  std::string to_string() const;

  friend auto operator<=>(const Cardinal&, const Cardinal&) = default;
};

/// The entries after an explicit head: all zero, or one repeated cardinal.
struct Tail {
  enum class Kind { all_zero, constant };
  Kind kind = Kind::all_zero;
  Cardinal value;

  static Tail zero() { return {}; }
  static Tail constant(Cardinal c) { return c.is_zero() ? Tail{} : Tail{Kind::constant, c}; }
  bool is_zero() const noexcept { return kind == Kind::all_zero || value.is_zero(); }

  friend bool operator==(const Tail&, const Tail&) = default;
};

/// Sum of head followed by infinitely many copies of the tail value: the
/// integer sum when finitely many entries are nonzero and all finite,
/// otherwise max(aleph_0, largest entry).
Cardinal cardinal_sum(std::span<const Cardinal> head, const Tail& tail = Tail::zero());

/// u_{xi+n} for n < omega: head[n] while n < head.size(), then the tail.
struct UlmBlock {
  Ordinal xi;
  std::vector<Cardinal> head;
  Tail tail;

  Cardinal at(std::uint64_t n) const;
  /// Sum over n >= from.
  Cardinal sum_from(std::uint64_t from) const;

  friend bool operator==(const UlmBlock&, const UlmBlock&) = default;
};

/// Ulm invariants (u_kappa : kappa < lambda), grouped by limit ordinal.
struct UlmSequence {
  Ordinal lambda;
  /// Limit xi < lambda, strictly increasing; absent blocks are zero.
  std::vector<UlmBlock> blocks;

  /// Throws InvalidInput on unsorted or non-limit block indices, or nonzero
  /// entries at or beyond lambda.
  void validate() const;
  /// Trailing zero head entries before a zero tail are dropped, as are empty blocks.
  UlmSequence canonical() const;
  Cardinal at(const Ordinal& kappa) const;

  static UlmSequence from_group(const GroupSpec& g);
  static UlmSequence from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const UlmSequence&, const UlmSequence&) = default;
};

/// Checks sum_{rho >= kappa+omega} u_rho <= sum_{n<omega} u_{kappa+n} for every
/// kappa with kappa + omega < lambda. A refuted report's first witness is the
/// least failing kappa.
ClaimReport check_ulm_criterion(const UlmSequence& u);

/// B(n, m): summands Z(p^n)^{m_n} for the listed n, then, when unbounded,
/// every n >= tail_from with multiplicity tail.
struct BasicGroupSpec {
  std::vector<std::pair<std::uint32_t, Cardinal>> summands;
  std::optional<Cardinal> tail;
  std::uint32_t tail_from = 0;

  bool bounded() const noexcept { return !tail.has_value(); }
  Cardinal rank() const;
  /// Throws InvalidInput on non-increasing exponents, zero multiplicities or
  /// a tail that starts too early.
  void validate() const;

  friend bool operator==(const BasicGroupSpec&, const BasicGroupSpec&) = default;
};

/// Derived basic subgroups B^(xi) for the limit xi below lambda.
struct BasicSequence {
  Ordinal lambda;
  std::vector<std::pair<Ordinal, BasicGroupSpec>> blocks;

  void validate() const;
  static BasicSequence from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const BasicSequence&, const BasicSequence&) = default;
};

/// rank(B^(xi)) >= sum of the later ranks at every xi. A rank failure is
/// reported as a refutation; when the ranks pass, a block that is bounded
/// where xi + omega <= lambda (or unbounded where it is not) throws
/// ShapeViolation.
ClaimReport check_basic_sequence_admissible(const BasicSequence& seq);

/// u_{xi+n-1} = m_n inside each block. Throws NotAdmissible.
UlmSequence basic_seq_to_ulm(const BasicSequence& seq);
/// Inverse of the above on canonical sequences. Throws NotAdmissible.
BasicSequence ulm_to_basic_seq(const UlmSequence& u);

/// The sequence derived from an admissible basic sequence satisfies the sum
/// criterion at every kappa. Throws NotAdmissible.
ClaimReport check_derived_ulm(const BasicSequence& seq);

/// I(kappa, n, mu) = { f : Gf <= p^kappa G[p^n], rank(Gf) <= mu }.
struct SymbolicIdealDescriptor {
  Ordinal kappa;
  std::uint32_t n = 0;
  Cardinal mu = Cardinal::aleph(0);
  /// Descriptors are only comparable inside one group.
  std::string context;

  friend bool operator==(const SymbolicIdealDescriptor&, const SymbolicIdealDescriptor&) = default;
};

enum class DescriptorRule {
  /// d1 <= d2 iff H1 >= H2 and mu1 <= mu2, as stated.
  verbatim,
  /// d1 <= d2 iff H1 <= H2 and mu1 <= mu2.
  order_preserving,
};

/// H parts are compared symbolically: p^k G[p^n] <= p^k' G[p^n'] iff n <= n'
/// and k >= k'. Throws IncomparableContext.
bool descriptor_leq(const SymbolicIdealDescriptor& d1, const SymbolicIdealDescriptor& d2,
                    DescriptorRule rule = DescriptorRule::verbatim);

/// On a finite group the filtration collapses, so the stated rule reads
/// H+ <= H'+ iff H >= H'. Checked over every pair of fully invariant
/// subgroups; the order-preserving reading is reported as evidence.
ClaimReport verify_descriptor_rule(const DaggerContext& ctx);

nlohmann::json ordinal_to_json(const Ordinal& x);
Ordinal ordinal_from_json(const nlohmann::json& j);
nlohmann::json cardinal_to_json(const Cardinal& c);
/// Accepts {"finite": n}, {"aleph": k} or a bare integer.
Cardinal cardinal_from_json(const nlohmann::json& j);

}  // namespace abelp
