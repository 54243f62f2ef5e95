#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelp/abelian_index.hpp"
#include "abelp/budget.hpp"

namespace abelp {

/// Height of the zero element; compares above every finite height.
inline constexpr std::uint32_t kInf = 0xffffffffu;

struct Component {
  std::uint32_t exponent;
  std::uint32_t multiplicity;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Bounded abelian p-group  Z(p^{n_1})^{m_1} + ... + Z(p^{n_k})^{m_k}, n_i increasing.
class GroupSpec {
 public:
  /// Throws NonPrime, NonIncreasingExponents or ZeroMultiplicity.
  static GroupSpec make(std::uint32_t p, std::vector<Component> components);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t num_components() const noexcept { return components_.size(); }

  /// exp(G) = n_k.
  std::uint32_t exponent() const noexcept { return components_.back().exponent; }
  /// r = sum of multiplicities.
  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(flat_.size()); }
  /// log_p |G| = sum n_i m_i.
  std::uint64_t log_order() const noexcept;
  /// |G|, or 0 when it does not fit in 64 bits.
  std::uint64_t order() const noexcept;

  /// Exponent of each cyclic coordinate, components expanded by multiplicity.
  const std::vector<std::uint32_t>& coordinate_exponents() const noexcept { return flat_; }
  /// Component that coordinate t belongs to.
  std::size_t component_of(std::size_t t) const noexcept { return comp_of_[t]; }
  /// First coordinate of component i.
  std::size_t first_coordinate(std::size_t i) const noexcept { return first_[i]; }

  bool is_homocyclic() const noexcept { return components_.size() == 1; }

  /// p^k as a 64-bit value (k <= 63 / log2 p is the caller's concern).
  std::uint64_t pow(std::uint32_t k) const noexcept;

  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.p_ == b.p_ && a.components_ == b.components_;
  }

 private:
  std::uint32_t p_ = 0;
  std::vector<Component> components_;
  std::vector<std::uint32_t> flat_;
  std::vector<std::size_t> comp_of_;
  std::vector<std::size_t> first_;
};

using SpecPtr = std::shared_ptr<const GroupSpec>;

bool is_prime(std::uint64_t n) noexcept;

/// p-adic valuation of a nonzero value.
std::uint32_t valuation(std::uint64_t value, std::uint32_t p) noexcept;

/// A group element: reduced residues, coordinate t modulo p^{e_t}.
class Element {
 public:
  Element() = default;
  /// Coordinates are reduced; the count must equal the rank.
  Element(SpecPtr parent, std::vector<std::uint64_t> coordinates);
  static Element zero(SpecPtr parent);
  /// The generator of cyclic coordinate t.
  static Element unit(SpecPtr parent, std::size_t t);

  const SpecPtr& parent() const noexcept { return parent_; }
  const std::vector<std::uint64_t>& coordinates() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Element& a, const Element& b);
  std::string to_string() const;

 private:
  SpecPtr parent_;
  std::vector<std::uint64_t> coords_;
};

/// Throw MismatchedParent unless both belong to equal groups.
void require_same_parent(const GroupSpec& a, const GroupSpec& b);

Element add(const Element& a, const Element& b);
Element neg(const Element& a);
Element smul(std::int64_t c, const Element& a);

/// Least k with p^k a = 0.
std::uint32_t exponent(const Element& a);
/// Largest h with a in p^h G; kInf for 0.
std::uint32_t height(const Element& a);

/// u_kappa = dim p^kappa G[p] / p^{kappa+1} G[p]: the number of cyclic
/// coordinates of exponent kappa + 1.
std::uint32_t ulm_invariant(const GroupSpec& g, std::uint32_t kappa) noexcept;

/// Alternative reading in which u_j counts the summands of exponent j.
std::uint32_t ulm_invariant_literal(const GroupSpec& g, std::uint32_t j) noexcept;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A group whose elements are materialized. Elements are addressed by their
/// mixed-radix index; per-element height, exponent and p-multiple tables are
/// precomputed.
class Group {
 public:
  /// Throws GroupTooLarge when |G| exceeds budget.max_elements.
  static GroupPtr create(const GroupSpec& spec, const Budget& budget = {});

  const GroupSpec& spec() const noexcept { return *spec_; }
  const SpecPtr& spec_ptr() const noexcept { return spec_; }
  const Budget& budget() const noexcept { return budget_; }
  const AbelianIndex& index() const noexcept { return index_; }

  std::uint32_t order() const noexcept { return index_.size(); }
  std::uint32_t p() const noexcept { return spec_->p(); }
  std::uint32_t exponent() const noexcept { return spec_->exponent(); }
  std::uint32_t rank() const noexcept { return spec_->rank(); }

  std::uint32_t height(std::uint32_t idx) const noexcept { return height_[idx]; }
  std::uint32_t elem_exponent(std::uint32_t idx) const noexcept { return exp_[idx]; }
  /// Index of p * a.
  std::uint32_t times_p(std::uint32_t idx) const noexcept { return times_p_[idx]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return index_.add(a, b); }
  std::uint32_t neg(std::uint32_t a) const noexcept { return index_.neg(a); }
  std::uint32_t smul(std::uint64_t k, std::uint32_t a) const noexcept { return index_.smul(k, a); }

  /// Index of p^k times the generator of coordinate t.
  std::uint32_t scaled_unit(std::size_t t, std::uint32_t k) const noexcept;

  Element element(std::uint32_t idx) const;
  /// Throws MismatchedParent for elements of another group.
  std::uint32_t index_of(const Element& a) const;

  /// All elements in index (lexicographic) order.
  std::vector<Element> enumerate_elements() const;

 private:
  Group() = default;

  SpecPtr spec_;
  Budget budget_;
  AbelianIndex index_;
  std::vector<std::uint32_t> height_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> times_p_;
};

}  // namespace abelp
