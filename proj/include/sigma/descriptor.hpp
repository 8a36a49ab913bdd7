#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma/families.hpp"
#include "sigma/semidirect.hpp"

namespace sigma {

using json = nlohmann::json;

/// A named group construction, as read from a descriptor file:
///   {"name": "D7", "construction": {"kind": "dihedral", "n": 7}}
/// Optional top-level fields: "two_generated": false marks entries kept to
/// exercise the error paths; "subgroup_order_bound" raises the lattice bound.
struct GroupDescriptor {
  std::string name;
  json construction;
  bool two_generated = true;
  std::optional<std::size_t> subgroup_order_bound;

  json to_json() const {
    json j{{"name", name}, {"construction", construction}};
    if (!two_generated) j["two_generated"] = false;
    if (subgroup_order_bound) j["subgroup_order_bound"] = *subgroup_order_bound;
    return j;
  }

  static GroupDescriptor from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("descriptor must be an object");
    if (!j.contains("name") || !j["name"].is_string()) throw ValidationError("descriptor needs a string \"name\"");
    if (!j.contains("construction") || !j["construction"].is_object())
      throw ValidationError("descriptor needs a \"construction\" object");
    GroupDescriptor d;
    d.name = j["name"].get<std::string>();
    d.construction = j["construction"];
    if (j.contains("two_generated")) d.two_generated = j["two_generated"].get<bool>();
    if (j.contains("subgroup_order_bound")) d.subgroup_order_bound = j["subgroup_order_bound"].get<std::size_t>();
    return d;
  }

  /// Limits for this entry: `base`, with the lattice bound raised if requested.
  Limits limits(Limits base = {}) const {
    if (subgroup_order_bound && *subgroup_order_bound > base.subgroup_order_bound)
      base.subgroup_order_bound = *subgroup_order_bound;
    return base;
  }
};

namespace detail {

inline std::size_t get_size(const json& c, const char* key) {
  if (!c.contains(key) || !c[key].is_number_integer() || c[key].get<long long>() < 0)
    throw ValidationError(std::string("construction needs a non-negative integer \"") + key + "\"");
  return c[key].get<std::size_t>();
}

inline std::vector<std::size_t> get_sizes(const json& c, const char* key) {
  if (!c.contains(key) || !c[key].is_array())
    throw ValidationError(std::string("construction needs an integer array \"") + key + "\"");
  std::vector<std::size_t> out;
  for (const auto& x : c[key]) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw ValidationError(std::string("\"") + key + "\" must hold non-negative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace detail

inline ScalarSemidirectSpec semidirect_spec_from_json(const json& c) {
  ScalarSemidirectSpec s;
  s.h_orders = detail::get_sizes(c, "h_orders");
  s.field_sizes = detail::get_sizes(c, "field_sizes");
  if (!c.contains("scalars") || !c["scalars"].is_array()) throw ValidationError("semidirect needs \"scalars\"");
  for (const auto& row : c["scalars"]) {
    if (!row.is_array()) throw ValidationError("each scalar entry must be an array");
    s.scalars.push_back(row.get<std::vector<std::size_t>>());
  }
  if (c.contains("require_distinct_modules")) s.require_distinct_modules = c["require_distinct_modules"].get<bool>();
  return s;
}

inline json semidirect_spec_to_json(const ScalarSemidirectSpec& s) {
  json j{{"kind", "semidirect"}, {"h_orders", s.h_orders}, {"field_sizes", s.field_sizes}, {"scalars", s.scalars}};
  if (!s.require_distinct_modules) j["require_distinct_modules"] = false;
  return j;
}

/// Builds the group described by a construction object.
inline GroupTable build_construction(const json& c, const Limits& limits = {}) {
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
    throw ValidationError("construction needs a string \"kind\"");
  const std::string kind = c["kind"].get<std::string>();
  if (kind == "cyclic") return cyclic(detail::get_size(c, "n"), limits);
  if (kind == "dihedral") return dihedral(detail::get_size(c, "n"), limits);
  if (kind == "dicyclic") return dicyclic(detail::get_size(c, "n"), limits);
  if (kind == "abelian") return abelian(detail::get_sizes(c, "factors"), limits);
  if (kind == "quaternion8") return quaternion8(limits);
  if (kind == "sym") return sym(detail::get_size(c, "n"), limits);
  if (kind == "alt") return alt(detail::get_size(c, "n"), limits);
  if (kind == "sl2") return special_linear2(detail::get_size(c, "q"), false, limits);
  if (kind == "psl2") return special_linear2(detail::get_size(c, "q"), true, limits);
  if (kind == "semidirect") return scalar_semidirect(semidirect_spec_from_json(c), limits).table;
  if (kind == "perm") {
    PermSpec spec{detail::get_size(c, "degree"), {}};
    if (!c.contains("generators") || !c["generators"].is_array())
      throw ValidationError("perm needs a \"generators\" array of image arrays");
    for (const auto& g : c["generators"]) spec.generators.push_back(g.get<std::vector<std::size_t>>());
    return build_from_permutations(spec, limits, "perm");
  }
  if (kind == "table") {
    if (!c.contains("rows") || !c["rows"].is_array()) throw ValidationError("table needs \"rows\"");
    const auto rows = c["rows"].get<std::vector<std::vector<Element>>>();
    std::vector<std::string> labels;
    if (c.contains("labels")) labels = c["labels"].get<std::vector<std::string>>();
    return GroupTable::from_rows(rows, std::move(labels), "table", limits);
  }
  if (kind == "direct_product") {
    if (!c.contains("factors") || !c["factors"].is_array() || c["factors"].empty())
      throw ValidationError("direct_product needs a non-empty \"factors\" array");
    GroupTable g = build_construction(c["factors"][0], limits);
    for (std::size_t i = 1; i < c["factors"].size(); ++i)
      g = direct_product(g, build_construction(c["factors"][i], limits), limits);
    return g;
  }
  throw ValidationError("unknown construction kind \"" + kind + "\"");
}

inline GroupTable build(const GroupDescriptor& d, const Limits& limits = {}) {
  try {
    return build_construction(d.construction, d.limits(limits));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(d.name + ": malformed construction: " + e.what());
  }
}

inline GroupDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SigmaError("cannot open descriptor " + path);
  try {
    return GroupDescriptor::from_json(json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// A JSON array of descriptors.
inline std::vector<GroupDescriptor> load_descriptor_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SigmaError("cannot open corpus " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  if (!j.is_array()) throw ValidationError(path + ": corpus must be a JSON array");
  std::vector<GroupDescriptor> out;
  for (const auto& e : j) out.push_back(GroupDescriptor::from_json(e));
  return out;
}

}  // namespace sigma
