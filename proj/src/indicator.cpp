#include "abelp/indicator.hpp"

#include <algorithm>
#include <sstream>

#include "abelp/endo.hpp"
#include "abelp/error.hpp"
#include "abelp/io/json_io.hpp"

namespace abelp {

Indicator::Indicator(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] >= entries_[i + 1]) {
      throw Error(ErrorKind::NotStrictlyIncreasing, "indicator entries must strictly increase");
    }
  }
  if (!entries_.empty() && entries_.back() == kInf) {
    throw Error(ErrorKind::InvalidInput, "the terminal infinity is implicit");
  }
}

std::string Indicator::to_string(bool unicode) const {
  std::ostringstream os;
  os << '(';
  for (auto e : entries_) os << e << ',';
  os << (unicode ? "∞" : "inf") << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Indicator& a, const Indicator& b) {
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

Indicator ind_of(const Element& a) {
  std::vector<std::uint32_t> e;
  Element x = a;
  const auto p = static_cast<std::int64_t>(a.parent()->p());
  while (!x.is_zero()) {
    e.push_back(height(x));
    x = smul(p, x);
  }
  return Indicator(std::move(e));
}

Indicator ind_of(const Group& g, std::uint32_t idx) {
  std::vector<std::uint32_t> e;
  for (std::uint32_t x = idx; x != 0; x = g.times_p(x)) e.push_back(g.height(x));
  return Indicator(std::move(e));
}

bool precedes(const Indicator& sigma, const Indicator& tau) noexcept {
  if (sigma.length() < tau.length()) return false;
  for (std::size_t i = 0; i < tau.length(); ++i) {
    if (sigma.entries()[i] > tau.entries()[i]) return false;
  }
  return true;
}

Indicator ind_min(const Indicator& sigma, const Indicator& tau) {
  const std::size_t n = std::max(sigma.length(), tau.length());
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = std::min(sigma.at(i), tau.at(i));
  return Indicator(std::move(e));
}

Indicator ind_max(const Indicator& sigma, const Indicator& tau) {
  const std::size_t n = std::min(sigma.length(), tau.length());
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = std::max(sigma.at(i), tau.at(i));
  return Indicator(std::move(e));
}

namespace {

template <class Below>
Indicator extremal_bound(const std::vector<Indicator>& universe, Below below, const char* what) {
  std::vector<const Indicator*> bounds;
  for (const auto& rho : universe) {
    if (below(rho)) bounds.push_back(&rho);
  }
  for (const Indicator* cand : bounds) {
    bool extremal = true;
    for (const Indicator* other : bounds) {
      if (!below.dominated(*other, *cand)) {
        extremal = false;
        break;
      }
    }
    if (extremal) return *cand;
  }
  throw Error(ErrorKind::NotNormalizable, std::string("no unique ") + what + " in the given set");
}

}  // namespace

Indicator ind_min_within(const std::vector<Indicator>& universe, const Indicator& sigma,
                         const Indicator& tau) {
  struct {
    const Indicator& s;
    const Indicator& t;
    bool operator()(const Indicator& rho) const { return precedes(rho, s) && precedes(rho, t); }
    bool dominated(const Indicator& other, const Indicator& cand) const { return precedes(other, cand); }
  } lower{sigma, tau};
  return extremal_bound(universe, lower, "greatest lower bound");
}

Indicator ind_max_within(const std::vector<Indicator>& universe, const Indicator& sigma,
                         const Indicator& tau) {
  struct {
    const Indicator& s;
    const Indicator& t;
    bool operator()(const Indicator& rho) const { return precedes(s, rho) && precedes(t, rho); }
    bool dominated(const Indicator& other, const Indicator& cand) const { return precedes(cand, other); }
  } upper{sigma, tau};
  return extremal_bound(universe, upper, "least upper bound");
}

bool has_gap_at(const Indicator& sigma, std::size_t i) {
  if (i + 1 >= sigma.length()) {
    throw Error(ErrorKind::IndexOutOfRange, "gap position " + std::to_string(i) + " needs a following finite entry");
  }
  return sigma.entries()[i] + 1 < sigma.entries()[i + 1];
}

bool is_admissible(const GroupSpec& g, const Indicator& sigma, GapRule rule) {
  const std::uint32_t e = g.exponent();
  if (sigma.length() > e) return false;
  for (auto x : sigma.entries()) {
    if (x >= e) return false;
  }
  for (std::size_t i = 0; i + 1 < sigma.length(); ++i) {
    if (has_gap_at(sigma, i) && ulm_invariant(g, sigma.entries()[i]) == 0) return false;
  }
  if (rule == GapRule::terminal && !sigma.is_top() && ulm_invariant(g, sigma.entries().back()) == 0) {
    return false;
  }
  return true;
}

std::vector<Indicator> enumerate_admissible(const GroupSpec& g, GapRule rule) {
  const std::uint32_t e = g.exponent();
  if (e > 24) throw Error(ErrorKind::GroupTooLarge, "exp(G) too large to enumerate indicators");
  std::vector<Indicator> out;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    std::vector<std::uint32_t> entries;
    for (std::uint32_t k = 0; k < e; ++k) {
      if (mask & (1u << k)) entries.push_back(k);
    }
    Indicator sigma(std::move(entries));
    if (is_admissible(g, sigma, rule)) out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Indicator min_admissible(const GroupSpec& g) {
  std::vector<std::uint32_t> e(g.exponent());
  for (std::uint32_t k = 0; k < e.size(); ++k) e[k] = k;
  return Indicator(std::move(e));
}

Subgroup indicator_subgroup(const GroupPtr& g, const Indicator& sigma) {
  Bitset m(g->order());
  const std::size_t n = sigma.length();
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    std::uint32_t x = a;
    bool ok = true;
    for (std::size_t i = 0; i < n && x != 0; ++i) {
      if (g->height(x) < sigma.entries()[i]) {
        ok = false;
        break;
      }
      x = g->times_p(x);
    }
    if (ok && x == 0) m.set(a);
  }
  return Subgroup(g, std::move(m));
}

ClaimReport check_endo_monotone(const GroupPtr& g) {
  ReportBuilder rb("sec-6.8", g->spec().to_string(), "ind(a) precedes ind(af) for all a in G, f in E");
  const EndoRing ring(g);
  const std::uint32_t n = g->order();
  std::vector<Indicator> ind(n);
  for (std::uint32_t a = 0; a < n; ++a) ind[a] = ind_of(*g, a);
  std::vector<std::uint32_t> image(n);
  for (std::uint32_t f = 0; f < ring.size(); ++f) {
    ring.apply_all(f, image);
    for (std::uint32_t a = 0; a < n; ++a) {
      rb.check(precedes(ind[a], ind[image[a]]), [&] {
        return nlohmann::json{{"a", element_to_json(g->element(a))},
                              {"f", endo_to_json(ring.endo(f))},
                              {"ind_a", indicator_to_json(ind[a])},
                              {"ind_af", indicator_to_json(ind[image[a]])}};
      });
    }
  }
  rb.set_bound(std::to_string(n) + " elements x " + std::to_string(ring.size()) + " endomorphisms");
  return rb.finish();
}

}  // namespace abelp
