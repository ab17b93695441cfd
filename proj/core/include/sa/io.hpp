#pragma once

#include <string>
#include <variant>

#include "sa/lattice.hpp"
#include "sa/module.hpp"

#include "json.hpp"

namespace sa {

using Json = nlohmann::ordered_json;

// File schemas:
//   semiring: {"name", "size", "zero", "one", "add", "mul"}
//   module:   {"semiring": <path or inline object>, "size", "zero", "add", "act"}
//   monoid:   {"size", "identity": int|null, "zero": int|null, "op"}

Json semiring_to_json(const Semiring& r);
Json module_to_json(const Module& v, const std::string& semiring_ref = "");
Json monoid_to_json(const FiniteMonoid& m);

Semiring semiring_from_json(const Json& j);
FiniteMonoid monoid_from_json(const Json& j);
// base_dir resolves a path-valued "semiring" field.
Module module_from_json(const Json& j, const std::string& base_dir);

using Structure = std::variant<Semiring, Module, FiniteMonoid>;

// Detects the structure kind by its keys ("mul" = semiring, "act" = module,
// "op" = monoid) and validates on load.
Structure load_structure(const std::string& path);
Semiring load_semiring(const std::string& path);
Module load_module(const std::string& path);
FiniteMonoid load_monoid(const std::string& path);

// "1,4,7" -> bit-set; empty string -> empty set.
Bitset parse_index_set(const std::string& csv, int universe);

Json halo_to_json(const HaloResult& h, bool with_witnesses);
Json lattice_to_json(const SALattice& l);

}  // namespace sa
