#include "abelp/dagger.hpp"

#include <map>

#include "abelp/error.hpp"
#include "abelp/io/json_io.hpp"

namespace abelp {

Ideal dagger_subgroup(const RingPtr& ring, const Subgroup& h) {
  if (!is_fully_invariant(*ring, h)) {
    throw Error(ErrorKind::NotFullyInvariant, "the dagger of a subgroup needs a fully invariant subgroup");
  }
  const std::uint32_t r = ring->rank();
  Bitset m(ring->size());
  for (std::uint32_t f = 0; f < ring->size(); ++f) {
    bool inside = true;
    for (std::uint32_t s = 0; s < r && inside; ++s) inside = h.contains(ring->row(f, s));
    if (inside) m.set(f);
  }
  return ideal_from_members(ring, std::move(m));
}

Subgroup dagger_ideal(const Ideal& i) {
  const EndoRing& ring = i.ring();
  std::vector<std::uint32_t> rows;
  for (auto f : i.additive_generators()) {
    for (std::uint32_t s = 0; s < ring.rank(); ++s) rows.push_back(ring.row(f, s));
  }
  return Subgroup::generated(ring.group_ptr(), rows);
}

nlohmann::json DaggerReport::to_json() const {
  return {{"subject", subject},
          {"status", closed ? "closed" : "not_closed"},
          {"order", subject_order},
          {"dagger_order", dagger_order},
          {"double_dagger_order", double_dagger_order},
          {"witnesses", witnesses}};
}

DaggerReport is_dagger_closed(const RingPtr& ring, const Subgroup& h) {
  DaggerReport rep;
  rep.subject = "subgroup";
  const Ideal hd = dagger_subgroup(ring, h);
  const Subgroup hdd = dagger_ideal(hd);
  rep.subject_order = h.order();
  rep.dagger_order = hd.order();
  rep.double_dagger_order = hdd.order();
  rep.closed = hdd == h;
  if (!rep.closed) {
    for (std::uint32_t a = 0; a < h.group().order() && rep.witnesses.size() < 4; ++a) {
      if (h.contains(a) != hdd.contains(a)) {
        rep.witnesses.push_back({{"element", element_to_json(h.group().element(a))},
                                 {"in_subject", h.contains(a)}});
      }
    }
  }
  return rep;
}

DaggerReport is_dagger_closed(const Ideal& i) {
  DaggerReport rep;
  rep.subject = "ideal";
  const Subgroup id = dagger_ideal(i);
  const Ideal idd = dagger_subgroup(i.ring_ptr(), id);
  rep.subject_order = i.order();
  rep.dagger_order = id.order();
  rep.double_dagger_order = idd.order();
  rep.closed = idd == i;
  if (!rep.closed) {
    for (std::uint32_t f = 0; f < i.ring().size() && rep.witnesses.size() < 4; ++f) {
      if (i.contains(f) != idd.contains(f)) {
        rep.witnesses.push_back({{"endo", endo_to_json(i.ring().endo(f))}, {"in_subject", i.contains(f)}});
      }
    }
  }
  return rep;
}

std::vector<Ideal> dagger_inv_class(const std::vector<Ideal>& ideals, const Subgroup& h) {
  std::vector<Ideal> out;
  for (const auto& i : ideals) {
    if (dagger_ideal(i) == h) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> collision_recipe(const EndoRing& ring) {
  const GroupSpec& spec = ring.group().spec();
  if (spec.is_homocyclic()) return std::nullopt;
  const std::size_t a = 0;
  const std::size_t b = spec.first_coordinate(spec.num_components() - 1);
  const std::uint64_t top = spec.pow(spec.exponent() - 1);
  const std::size_t r = spec.rank();
  std::vector<std::vector<std::uint64_t>> fm(r, std::vector<std::uint64_t>(r, 0)), gm = fm;
  fm[a][b] = top;
  fm[b][b] = top;
  gm[b][b] = top;
  return std::make_pair(ring.index_of(Endo(ring.group().spec_ptr(), std::move(fm))),
                        ring.index_of(Endo(ring.group().spec_ptr(), std::move(gm))));
}

std::optional<DaggerCollision> find_dagger_collision(const RingPtr& ring) {
  if (auto recipe = collision_recipe(*ring)) {
    const std::uint32_t f[] = {recipe->first};
    const std::uint32_t g[] = {recipe->second};
    Ideal i = ideal_generated(ring, f);
    Ideal j = ideal_generated(ring, g);
    if (!(i == j) && dagger_ideal(i) == dagger_ideal(j)) return DaggerCollision{std::move(i), std::move(j), "recipe"};
  }
  const std::vector<Ideal> ideals = enumerate_ideals(ring);
  std::map<std::vector<std::uint32_t>, std::size_t> first_with_image;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    auto [it, fresh] = first_with_image.emplace(dagger_ideal(ideals[k]).indices(), k);
    if (!fresh) return DaggerCollision{ideals[it->second], ideals[k], "search"};
  }
  return std::nullopt;
}

}  // namespace abelp
