#pragma once

#include <json.hpp>

#include "abelp/endo.hpp"
#include "abelp/group.hpp"
#include "abelp/ideal.hpp"
#include "abelp/indicator.hpp"
#include "abelp/subgroup.hpp"

namespace abelp {

/// {"p": 2, "components": [{"exponent": 2, "multiplicity": 1}, ...]}.
/// Throws InvalidInput (or the GroupSpec validation errors).
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json group_spec_to_json(const GroupSpec& g);

nlohmann::json element_to_json(const Element& a);

/// {"entries": [1, 3]}.
nlohmann::json indicator_to_json(const Indicator& sigma);
Indicator indicator_from_json(const nlohmann::json& j);

/// {"matrix": [[..], ..]} with row = source coordinate.
nlohmann::json endo_to_json(const Endo& f);
Endo endo_from_json(const SpecPtr& parent, const nlohmann::json& j);

/// Order, fi form when known, and (up to a limit) the sorted elements.
nlohmann::json subgroup_to_json(const Subgroup& h, std::size_t max_elements = 0);

/// Order and additive generators as matrices.
nlohmann::json ideal_to_json(const Ideal& i);

}  // namespace abelp
