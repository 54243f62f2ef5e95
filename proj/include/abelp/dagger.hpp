#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abelp/ideal.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// H-dagger = { f in E : Gf <= H }. Throws NotFullyInvariant.
Ideal dagger_subgroup(const RingPtr& ring, const Subgroup& h);

/// I-dagger = sum of the images Gf over f in I.
Subgroup dagger_ideal(const Ideal& i);

struct DaggerReport {
  std::string subject;
  bool closed = true;
  std::uint32_t subject_order = 0;
  std::uint32_t dagger_order = 0;
  std::uint32_t double_dagger_order = 0;
  /// Members of the symmetric difference between x and x-dagger-dagger.
  std::vector<nlohmann::json> witnesses;

  nlohmann::json to_json() const;
};

DaggerReport is_dagger_closed(const RingPtr& ring, const Subgroup& h);
DaggerReport is_dagger_closed(const Ideal& i);

/// All ideals among `ideals` whose dagger is h.
std::vector<Ideal> dagger_inv_class(const std::vector<Ideal>& ideals, const Subgroup& h);

struct DaggerCollision {
  Ideal first;
  Ideal second;
  /// "recipe" for the two-generator construction, "search" for exhaustive.
  std::string method;
};

/// Distinct ideals with equal dagger images. Tries the construction
/// f: a -> p^{m-1} b, b -> p^{m-1} b and g: a -> 0, b -> p^{m-1} b first (a, b
/// generators of the lowest and highest components, m = exp(G)), then every
/// pair of enumerated ideals.
std::optional<DaggerCollision> find_dagger_collision(const RingPtr& ring);

/// The two endomorphisms of the construction above (empty for homocyclic G).
std::optional<std::pair<std::uint32_t, std::uint32_t>> collision_recipe(const EndoRing& ring);

}  // namespace abelp
