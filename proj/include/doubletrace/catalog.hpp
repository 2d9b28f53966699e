#pragma once

// Built-in group catalog and the group-spec string grammar:
//   cyclic:n, dihedral:m, quaternion:m (order 4m), symmetric:n,
//   product:(spec,spec), table:path, or a catalog name such as Q8, G1, F1.
// The catalog carries the named order-16 groups from the screening examples
// alongside small standard families.

#include "doubletrace/group.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace doubletrace {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

namespace detail {

inline FiniteGroup make_g2() {
  // Z4 x| Z4 where odd elements of the acting factor negate the normal one
  const FiniteGroup z4 = build_cyclic(4);
  std::vector<std::vector<int>> action(4, std::vector<int>(4));
  for (int h = 0; h < 4; ++h)
    for (int c = 0; c < 4; ++c) action[static_cast<std::size_t>(h)][static_cast<std::size_t>(c)] = (h % 2 == 0) ? c : (4 - c) % 4;
  FiniteGroup g = build_semidirect(z4, z4, action, "G2");
  return g;
}

// F = Z4 x Z2 with (a, b) indexed as 2a + b; the two order-16 extensions by
// C2 act by f1(a,b) = (a+2b, b) and f2(a,b) = (a, a+b). In generator terms,
// with x = (1,0) and y = (0,1): f1 fixes x and sends y to x^2 y, while f2
// sends x to x y and fixes y.
inline FiniteGroup make_f(int which) {
  const FiniteGroup f = build_direct_product(build_cyclic(4), build_cyclic(2));
  std::vector<int> id8(8), twist(8);
  for (int i = 0; i < 8; ++i) id8[static_cast<std::size_t>(i)] = i;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b) {
      const int src = 2 * a + b;
      twist[static_cast<std::size_t>(src)] =
          which == 1 ? 2 * ((a + 2 * b) % 4) + b : 2 * a + (a + b) % 2;
    }
  return build_semidirect(f, build_cyclic(2), {id8, twist}, which == 1 ? "F1" : "F2");
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const auto add = [&out](std::string name, FiniteGroup g) {
    g.label = name;
    out.push_back({std::move(name), std::move(g)});
  };
  add("Z1", build_cyclic(1));
  add("Z2", build_cyclic(2));
  add("Z3", build_cyclic(3));
  add("Z4", build_cyclic(4));
  add("Z2xZ2", build_direct_product(build_cyclic(2), build_cyclic(2)));
  add("Z5", build_cyclic(5));
  add("Z6", build_cyclic(6));
  add("S3", build_symmetric(3));
  add("Z8", build_cyclic(8));
  add("Z2xZ4", build_direct_product(build_cyclic(2), build_cyclic(4)));
  add("D4", build_dihedral(4));
  add("Q8", build_generalized_quaternion(2));
  add("Z12", build_cyclic(12));
  add("D6", build_dihedral(6));
  add("Q12", build_generalized_quaternion(3));
  add("Z16", build_cyclic(16));
  add("G1", build_direct_product(build_generalized_quaternion(2), build_cyclic(2)));
  add("G2", make_g2());
  add("F1", make_f(1));
  add("F2", make_f(2));
  add("Q16", build_generalized_quaternion(4));
  add("S4", build_symmetric(4));
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> catalog = detail::build_catalog();
  return catalog;
}

inline FiniteGroup catalog_group(const std::string& name) {
  for (const CatalogEntry& e : standard_catalog())
    if (e.name == name) return e.group;
  throw parse_error("unknown catalog group '" + name + "'");
}

inline FiniteGroup group_from_table_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw parse_error("Cayley table JSON needs \"order\" and \"table\" fields");
  const int order = j.at("order").get<int>();
  const auto rows = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != order)
    throw parse_error("Cayley table row count does not match \"order\"");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return from_cayley_table(rows, std::move(names));
}

inline FiniteGroup parse_group_spec(const std::string& spec);

namespace detail {

inline FiniteGroup parse_product_spec(const std::string& inner) {
  // split "(a,b)" at the top-level comma
  if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
    throw parse_error("product spec must look like product:(spec,spec)");
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i + 1 < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ',' && depth == 0) {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) throw parse_error("product spec needs two comma-separated parts");
  const FiniteGroup a = parse_group_spec(inner.substr(1, split - 1));
  const FiniteGroup b = parse_group_spec(inner.substr(split + 1, inner.size() - split - 2));
  return build_direct_product(a, b);
}

inline int parse_spec_int(const std::string& head, const std::string& arg) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
    return v;
  } catch (const std::exception&) {
    throw parse_error("bad numeric parameter '" + arg + "' in " + head + " spec");
  }
}

}  // namespace detail

inline FiniteGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog_group(spec);
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (head == "cyclic") return build_cyclic(detail::parse_spec_int(head, arg));
  if (head == "dihedral") return build_dihedral(detail::parse_spec_int(head, arg));
  if (head == "quaternion") return build_generalized_quaternion(detail::parse_spec_int(head, arg));
  if (head == "symmetric") return build_symmetric(detail::parse_spec_int(head, arg));
  if (head == "product") return detail::parse_product_spec(arg);
  if (head == "table") {
    std::ifstream in(arg);
    if (!in) throw parse_error("cannot open Cayley table file '" + arg + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("bad JSON in '" + arg + "': " + e.what());
    }
    FiniteGroup g = group_from_table_json(j);
    g.label = spec;
    return g;
  }
  throw parse_error("unknown group spec '" + spec + "'");
}

}  // namespace doubletrace
