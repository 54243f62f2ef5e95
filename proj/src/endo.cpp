#include "abelp/endo.hpp"

#include <algorithm>
#include <string>

#include "abelp/error.hpp"
#include "abelp/simd/kernels.hpp"

namespace abelp {
namespace {

std::uint32_t shift_of(const GroupSpec& g, std::size_t s, std::size_t t) {
  const auto& e = g.coordinate_exponents();
  return e[t] > e[s] ? e[t] - e[s] : 0;
}

}  // namespace

Endo::Endo(SpecPtr parent, std::vector<std::vector<std::uint64_t>> matrix)
    : parent_(std::move(parent)), m_(std::move(matrix)) {
  const auto& e = parent_->coordinate_exponents();
  const std::size_t r = e.size();
  if (m_.size() != r) throw Error(ErrorKind::InvalidInput, "endomorphism matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  for (std::size_t s = 0; s < r; ++s) {
    if (m_[s].size() != r) throw Error(ErrorKind::InvalidInput, "endomorphism matrix rows must have length " + std::to_string(r));
    for (std::size_t t = 0; t < r; ++t) {
      m_[s][t] %= parent_->pow(e[t]);
      if (m_[s][t] % parent_->pow(shift_of(*parent_, s, t)) != 0) {
        throw Error(ErrorKind::InvalidInput, "entry (" + std::to_string(s) + "," + std::to_string(t) +
                                                 ") must be divisible by p^" +
                                                 std::to_string(shift_of(*parent_, s, t)));
      }
    }
  }
}

Endo Endo::identity(SpecPtr parent) {
  const std::size_t r = parent->rank();
  std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t s = 0; s < r; ++s) m[s][s] = 1;
  return Endo(std::move(parent), std::move(m));
}

Endo Endo::zero(SpecPtr parent) {
  const std::size_t r = parent->rank();
  return Endo(std::move(parent), std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
}

Element apply(const Element& a, const Endo& f) {
  require_same_parent(*a.parent(), *f.parent());
  const auto& g = *a.parent();
  const std::size_t r = g.rank();
  std::vector<std::uint64_t> out(r, 0);
  for (std::size_t t = 0; t < r; ++t) {
    const auto m = static_cast<unsigned __int128>(g.pow(g.coordinate_exponents()[t]));
    unsigned __int128 acc = 0;
    for (std::size_t s = 0; s < r; ++s) acc = (acc + static_cast<unsigned __int128>(a.coordinates()[s]) * f.matrix()[s][t]) % m;
    out[t] = static_cast<std::uint64_t>(acc);
  }
  return Element(a.parent(), std::move(out));
}

Endo compose(const Endo& f, const Endo& g) {
  require_same_parent(*f.parent(), *g.parent());
  const auto& spec = *f.parent();
  const std::size_t r = spec.rank();
  std::vector<std::vector<std::uint64_t>> h(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t u = 0; u < r; ++u) {
      const auto m = static_cast<unsigned __int128>(spec.pow(spec.coordinate_exponents()[u]));
      unsigned __int128 acc = 0;
      for (std::size_t t = 0; t < r; ++t) acc = (acc + static_cast<unsigned __int128>(f.matrix()[s][t]) * g.matrix()[t][u]) % m;
      h[s][u] = static_cast<std::uint64_t>(acc);
    }
  }
  return Endo(f.parent(), std::move(h));
}

std::uint64_t EndoRing::ring_order(const GroupSpec& g) noexcept {
  const auto& e = g.coordinate_exponents();
  std::uint64_t log = 0;
  for (auto es : e) {
    for (auto et : e) log += std::min(es, et);
  }
  std::uint64_t n = 1;
  for (; log > 0; --log) {
    if (n > ~std::uint64_t{0} / g.p()) return 0;
    n *= g.p();
  }
  return n;
}

EndoRing::EndoRing(GroupPtr group) : group_(std::move(group)) {
  const auto& spec = group_->spec();
  const auto& e = spec.coordinate_exponents();
  r_ = spec.rank();
  const std::uint64_t n = ring_order(spec);
  const std::uint64_t limit = group_->budget().max_ring;
  if (n == 0 || n > limit) {
    throw Error(ErrorKind::RingTooLarge, "|E(" + spec.to_string() + ")| exceeds the ring budget of " + std::to_string(limit));
  }
  std::vector<std::uint32_t> moduli;
  for (std::size_t s = 0; s < r_; ++s) {
    for (std::size_t t = 0; t < r_; ++t) {
      moduli.push_back(static_cast<std::uint32_t>(spec.pow(std::min(e[s], e[t]))));
      shift_.push_back(shift_of(spec, s, t));
      scale_.push_back(static_cast<std::uint32_t>(spec.pow(shift_.back())));
    }
  }
  for (std::size_t t = 0; t < r_; ++t) mod_.push_back(static_cast<std::uint32_t>(spec.pow(e[t])));
  additive_ = AbelianIndex(std::move(moduli), limit);
  for (std::size_t s = 0; s < r_; ++s) {
    for (std::size_t t = 0; t < r_; ++t) basis_.push_back(elementary(s, t));
  }
  for (std::size_t s = 0; s < r_; ++s) identity_ += additive_.strides()[s * r_ + s];
}

std::uint32_t EndoRing::entry(std::uint32_t f, std::size_t s, std::size_t t) const noexcept {
  return additive_.coordinate(f, s * r_ + t) * scale_[s * r_ + t];
}

std::uint32_t EndoRing::elementary(std::size_t s, std::size_t t) const noexcept {
  return additive_.strides()[s * r_ + t];
}

Endo EndoRing::endo(std::uint32_t f) const {
  std::vector<std::vector<std::uint64_t>> m(r_, std::vector<std::uint64_t>(r_));
  for (std::size_t s = 0; s < r_; ++s) {
    for (std::size_t t = 0; t < r_; ++t) m[s][t] = entry(f, s, t);
  }
  return Endo(group_->spec_ptr(), std::move(m));
}

std::uint32_t EndoRing::index_of(const Endo& f) const {
  require_same_parent(group_->spec(), *f.parent());
  std::uint32_t idx = 0;
  for (std::size_t s = 0; s < r_; ++s) {
    for (std::size_t t = 0; t < r_; ++t) {
      const std::size_t k = s * r_ + t;
      idx += static_cast<std::uint32_t>(f.matrix()[s][t] / scale_[k]) * additive_.strides()[k];
    }
  }
  return idx;
}

std::uint32_t EndoRing::row(std::uint32_t f, std::size_t s) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < r_; ++t) idx += entry(f, s, t) * group_->index().strides()[t];
  return idx;
}

std::uint32_t EndoRing::apply(std::uint32_t f, std::uint32_t a) const noexcept {
  const auto& gi = group_->index();
  std::uint32_t idx = 0;
  for (std::size_t t = 0; t < r_; ++t) {
    std::uint64_t acc = 0;
    for (std::size_t s = 0; s < r_; ++s) acc += std::uint64_t{gi.coordinate(a, s)} * entry(f, s, t);
    idx += static_cast<std::uint32_t>(acc % mod_[t]) * gi.strides()[t];
  }
  return idx;
}

void EndoRing::apply_all(std::uint32_t f, std::span<std::uint32_t> out) const {
  const auto& gi = group_->index();
  const std::uint32_t n = gi.size();
  if (gi.coordinate_column(0).empty()) {
    for (std::uint32_t a = 0; a < n; ++a) out[a] = apply(f, a);
    return;
  }
  std::fill(out.begin(), out.begin() + n, 0u);
  std::vector<std::uint32_t> y(n);
  for (std::size_t t = 0; t < r_; ++t) {
    std::fill(y.begin(), y.end(), 0u);
    for (std::size_t s = 0; s < r_; ++s) {
      const std::uint32_t c = entry(f, s, t);
      if (c != 0) simd::mulmod_accumulate(gi.coordinate_column(s), c, mod_[t], y);
    }
    simd::mul_add(y, gi.strides()[t], out.first(n));
  }
}

std::uint32_t EndoRing::compose(std::uint32_t f, std::uint32_t g) const noexcept {
  std::uint32_t idx = 0;
  for (std::size_t s = 0; s < r_; ++s) {
    for (std::size_t u = 0; u < r_; ++u) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < r_; ++t) acc += std::uint64_t{entry(f, s, t)} * entry(g, t, u);
      const std::size_t k = s * r_ + u;
      idx += static_cast<std::uint32_t>(acc % mod_[u] / scale_[k]) * additive_.strides()[k];
    }
  }
  return idx;
}

Subgroup EndoRing::image(std::uint32_t f) const {
  std::vector<std::uint32_t> rows;
  for (std::size_t s = 0; s < r_; ++s) rows.push_back(row(f, s));
  return Subgroup::generated(group_, rows);
}

std::uint32_t EndoRing::endo_rank(std::uint32_t f) const {
  const Subgroup im = image(f);
  std::size_t socle = 0;
  im.members().for_each([&](std::size_t x) {
    if (group_->times_p(static_cast<std::uint32_t>(x)) == 0) ++socle;
  });
  std::uint32_t k = 0;
  for (; socle > 1; socle /= group_->p()) ++k;
  return k;
}

RingPtr make_ring(const GroupPtr& group) { return std::make_shared<const EndoRing>(group); }

bool is_fully_invariant(const EndoRing& ring, const Subgroup& h) {
  bool ok = true;
  h.members().for_each([&](std::size_t x) {
    if (!ok) return;
    for (auto b : ring.basis()) {
      if (!h.contains(ring.apply(b, static_cast<std::uint32_t>(x)))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace abelp
