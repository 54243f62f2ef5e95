#include "abelp/io/json_io.hpp"

#include "abelp/error.hpp"

namespace abelp {
namespace {

std::uint64_t as_natural(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  const std::uint64_t p = as_natural(field(j, "p"), "p");
  const auto& comps = field(j, "components");
  if (!comps.is_array()) throw Error(ErrorKind::InvalidInput, "components must be an array");
  std::vector<Component> out;
  for (const auto& c : comps) {
    const std::uint64_t n = as_natural(field(c, "exponent"), "exponent");
    const std::uint64_t m = as_natural(field(c, "multiplicity"), "multiplicity");
    if (n > 64 || m > 64) throw Error(ErrorKind::GroupTooLarge, "component too large");
    out.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)});
  }
  if (p > 0xffffffffull) throw Error(ErrorKind::InvalidInput, "p too large");
  return GroupSpec::make(static_cast<std::uint32_t>(p), std::move(out));
}

nlohmann::json group_spec_to_json(const GroupSpec& g) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : g.components()) comps.push_back({{"exponent", c.exponent}, {"multiplicity", c.multiplicity}});
  return {{"p", g.p()}, {"components", comps}};
}

nlohmann::json element_to_json(const Element& a) { return a.coordinates(); }

nlohmann::json indicator_to_json(const Indicator& sigma) { return {{"entries", sigma.entries()}}; }

Indicator indicator_from_json(const nlohmann::json& j) {
  const auto& e = field(j, "entries");
  if (!e.is_array()) throw Error(ErrorKind::InvalidInput, "entries must be an array");
  std::vector<std::uint32_t> v;
  for (const auto& x : e) {
    const std::uint64_t n = as_natural(x, "indicator entry");
    if (n >= kInf) throw Error(ErrorKind::InvalidInput, "indicator entry too large");
    v.push_back(static_cast<std::uint32_t>(n));
  }
  return Indicator(std::move(v));
}

nlohmann::json endo_to_json(const Endo& f) { return {{"matrix", f.matrix()}}; }

Endo endo_from_json(const SpecPtr& parent, const nlohmann::json& j) {
  const auto& m = field(j, "matrix");
  if (!m.is_array()) throw Error(ErrorKind::InvalidInput, "matrix must be an array");
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : m) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidInput, "matrix rows must be arrays");
    std::vector<std::uint64_t> r;
    for (const auto& x : row) r.push_back(as_natural(x, "matrix entry"));
    rows.push_back(std::move(r));
  }
  return Endo(parent, std::move(rows));
}

nlohmann::json subgroup_to_json(const Subgroup& h, std::size_t max_elements) {
  nlohmann::json j;
  j["order"] = h.order();
  if (h.fi_form()) {
    j["alpha"] = *h.fi_form();
    j["form"] = fi_form_string(h.group().spec(), *h.fi_form());
  }
  if (max_elements > 0 && h.order() <= max_elements) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& a : h.elements()) elems.push_back(element_to_json(a));
    j["elements"] = elems;
  }
  return j;
}

nlohmann::json ideal_to_json(const Ideal& i) {
  nlohmann::json gens = nlohmann::json::array();
  for (auto f : i.additive_generators()) gens.push_back(i.ring().endo(f).matrix());
  return {{"order", i.order()}, {"generators", gens}};
}

}  // namespace abelp
