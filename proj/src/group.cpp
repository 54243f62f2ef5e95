#include "abelp/group.hpp"

#include <algorithm>
#include <sstream>

#include "abelp/error.hpp"

namespace abelp {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t valuation(std::uint64_t value, std::uint32_t p) noexcept {
  std::uint32_t v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

GroupSpec GroupSpec::make(std::uint32_t p, std::vector<Component> components) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (components.empty()) throw Error(ErrorKind::InvalidInput, "a group needs at least one component");
  std::uint32_t prev = 0;
  for (const auto& c : components) {
    if (c.exponent <= prev) {
      throw Error(ErrorKind::NonIncreasingExponents,
                  "component exponents must be positive and strictly increasing");
    }
    if (c.multiplicity == 0) throw Error(ErrorKind::ZeroMultiplicity, "multiplicity must be >= 1");
    prev = c.exponent;
  }
  // p^{n_k} must fit comfortably in 64-bit residues.
  std::uint64_t bound = 1;
  for (std::uint32_t k = 0; k < prev; ++k) {
    if (bound > (std::uint64_t{1} << 62) / p) {
      throw Error(ErrorKind::GroupTooLarge, "p^exp(G) does not fit in 62 bits");
    }
    bound *= p;
  }
  GroupSpec g;
  g.p_ = p;
  g.components_ = std::move(components);
  for (std::size_t i = 0; i < g.components_.size(); ++i) {
    g.first_.push_back(g.flat_.size());
    for (std::uint32_t j = 0; j < g.components_[i].multiplicity; ++j) {
      g.flat_.push_back(g.components_[i].exponent);
      g.comp_of_.push_back(i);
    }
  }
  return g;
}

std::uint64_t GroupSpec::log_order() const noexcept {
  std::uint64_t s = 0;
  for (const auto& c : components_) s += std::uint64_t{c.exponent} * c.multiplicity;
  return s;
}

std::uint64_t GroupSpec::order() const noexcept {
  std::uint64_t n = 1;
  for (std::uint64_t k = log_order(); k > 0; --k) {
    if (n > ~std::uint64_t{0} / p_) return 0;
    n *= p_;
  }
  return n;
}

std::uint64_t GroupSpec::pow(std::uint32_t k) const noexcept {
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < k; ++i) x *= p_;
  return x;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << " + ";
    os << "Z(" << p_ << '^' << components_[i].exponent << ')';
    if (components_[i].multiplicity > 1) os << '^' << components_[i].multiplicity;
  }
  return os.str();
}

Element::Element(SpecPtr parent, std::vector<std::uint64_t> coordinates)
    : parent_(std::move(parent)), coords_(std::move(coordinates)) {
  const auto& e = parent_->coordinate_exponents();
  if (coords_.size() != e.size()) {
    throw Error(ErrorKind::InvalidInput, "element needs " + std::to_string(e.size()) + " coordinates");
  }
  for (std::size_t t = 0; t < e.size(); ++t) coords_[t] %= parent_->pow(e[t]);
}

Element Element::zero(SpecPtr parent) {
  const std::size_t r = parent->rank();
  return Element(std::move(parent), std::vector<std::uint64_t>(r, 0));
}

Element Element::unit(SpecPtr parent, std::size_t t) {
  std::vector<std::uint64_t> c(parent->rank(), 0);
  if (t >= c.size()) throw Error(ErrorKind::IndexOutOfRange, "no coordinate " + std::to_string(t));
  c[t] = 1;
  return Element(std::move(parent), std::move(c));
}

bool Element::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::uint64_t c) { return c == 0; });
}

bool operator==(const Element& a, const Element& b) {
  if (a.parent_ != b.parent_ && !(a.parent_ && b.parent_ && *a.parent_ == *b.parent_)) return false;
  return a.coords_ == b.coords_;
}

std::string Element::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < coords_.size(); ++t) os << (t ? "," : "") << coords_[t];
  os << ')';
  return os.str();
}

void require_same_parent(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::MismatchedParent, a.to_string() + " vs " + b.to_string());
  }
}

Element add(const Element& a, const Element& b) {
  require_same_parent(*a.parent(), *b.parent());
  const auto& e = a.parent()->coordinate_exponents();
  std::vector<std::uint64_t> c(e.size());
  for (std::size_t t = 0; t < e.size(); ++t) {
    const std::uint64_t m = a.parent()->pow(e[t]);
    c[t] = (a.coordinates()[t] + b.coordinates()[t]) % m;
  }
  return Element(a.parent(), std::move(c));
}

Element neg(const Element& a) {
  const auto& e = a.parent()->coordinate_exponents();
  std::vector<std::uint64_t> c(e.size());
  for (std::size_t t = 0; t < e.size(); ++t) {
    const std::uint64_t m = a.parent()->pow(e[t]);
    c[t] = a.coordinates()[t] == 0 ? 0 : m - a.coordinates()[t];
  }
  return Element(a.parent(), std::move(c));
}

Element smul(std::int64_t k, const Element& a) {
  const auto& e = a.parent()->coordinate_exponents();
  std::vector<std::uint64_t> c(e.size());
  for (std::size_t t = 0; t < e.size(); ++t) {
    const auto m = static_cast<__int128>(a.parent()->pow(e[t]));
    __int128 v = static_cast<__int128>(k) % m;
    if (v < 0) v += m;
    c[t] = static_cast<std::uint64_t>(v * a.coordinates()[t] % m);
  }
  return Element(a.parent(), std::move(c));
}

std::uint32_t exponent(const Element& a) {
  const auto& g = *a.parent();
  std::uint32_t x = 0;
  for (std::size_t t = 0; t < a.coordinates().size(); ++t) {
    const std::uint64_t c = a.coordinates()[t];
    if (c != 0) x = std::max(x, g.coordinate_exponents()[t] - valuation(c, g.p()));
  }
  return x;
}

std::uint32_t height(const Element& a) {
  const auto& g = *a.parent();
  std::uint32_t h = kInf;
  for (const std::uint64_t c : a.coordinates()) {
    if (c != 0) h = std::min(h, valuation(c, g.p()));
  }
  return h;
}

std::uint32_t ulm_invariant(const GroupSpec& g, std::uint32_t kappa) noexcept {
  for (const auto& c : g.components()) {
    if (c.exponent == kappa + 1) return c.multiplicity;
  }
  return 0;
}

std::uint32_t ulm_invariant_literal(const GroupSpec& g, std::uint32_t j) noexcept {
  for (const auto& c : g.components()) {
    if (c.exponent == j) return c.multiplicity;
  }
  return 0;
}

GroupPtr Group::create(const GroupSpec& spec, const Budget& budget) {
  const std::uint64_t n = spec.order();
  if (n == 0 || n > budget.max_elements) {
    throw Error(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(spec.p()) + "^" +
                                              std::to_string(spec.log_order()) +
                                              " exceeds the element budget of " +
                                              std::to_string(budget.max_elements));
  }
  std::shared_ptr<Group> g(new Group());
  g->spec_ = std::make_shared<const GroupSpec>(spec);
  g->budget_ = budget;
  std::vector<std::uint32_t> moduli;
  for (auto e : spec.coordinate_exponents()) moduli.push_back(static_cast<std::uint32_t>(spec.pow(e)));
  g->index_ = AbelianIndex(std::move(moduli), budget.max_elements);

  const std::uint32_t size = g->index_.size();
  const std::size_t r = spec.rank();
  const std::uint32_t p = spec.p();
  g->height_.assign(size, kInf);
  g->exp_.assign(size, 0);
  g->times_p_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) g->times_p_[i] = g->index_.smul(p, i);
  for (std::size_t t = 0; t < r; ++t) {
    const std::uint32_t e = spec.coordinate_exponents()[t];
    for (std::uint32_t i = 0; i < size; ++i) {
      const std::uint32_t c = g->index_.coordinate(i, t);
      if (c == 0) continue;
      const std::uint32_t v = valuation(c, p);
      g->height_[i] = std::min(g->height_[i], v);
      g->exp_[i] = std::max(g->exp_[i], e - v);
    }
  }
  return g;
}

std::uint32_t Group::scaled_unit(std::size_t t, std::uint32_t k) const noexcept {
  const std::uint32_t e = spec_->coordinate_exponents()[t];
  if (k >= e) return 0;
  return static_cast<std::uint32_t>(spec_->pow(k)) * index_.strides()[t];
}

Element Group::element(std::uint32_t idx) const {
  std::vector<std::uint64_t> c(rank());
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = index_.coordinate(idx, t);
  return Element(spec_, std::move(c));
}

std::uint32_t Group::index_of(const Element& a) const {
  require_same_parent(*spec_, *a.parent());
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < rank(); ++t) {
    idx += static_cast<std::uint32_t>(a.coordinates()[t]) * index_.strides()[t];
  }
  return idx;
}

std::vector<Element> Group::enumerate_elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

}  // namespace abelp
