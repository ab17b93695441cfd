#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sa/builtins.hpp"
#include "sa/module.hpp"

namespace sa {

// Extra structure carried by instances built as matrix semirings, enabling
// the diagonal-spine construction check.
struct MatrixInfo {
  MatrixSemiring mat;
  SemiringPtr base;
  Bitset base_spine;  // N, an additive spine of the base semiring
};

// Extra structure for monoid-semiring instances.
struct MonoidSemiringInfo {
  MonoidSemiring msr;
  FiniteMonoid monoid;
  SemiringPtr base;
  Bitset base_spine;    // N over the base
  Bitset monoid_spine;  // T over the monoid
};

// A curated module instance with its declared spine data, validated on
// construction: spine passes the spine check, generators generate,
// ring_spine is a spine of the regular module.
struct ZooInstance {
  std::string name;
  SemiringPtr ring;
  Module module;
  Bitset spine;       // T, additive spine of V
  Bitset generators;  // S, generates V
  Bitset ring_spine;  // M, additive spine of R

  std::optional<FreeModule> free_info;
  std::optional<MatrixInfo> matrix_info;
  std::optional<MonoidSemiringInfo> monoid_info;
  // For permuted-spine variants: the unit u with spine = base_spine·u,
  // paired with the unpermuted spine.
  std::optional<int> translation_unit;
  std::optional<Bitset> untranslated_spine;
};

ZooInstance make_zoo_instance(std::string name, SemiringPtr ring, Module module,
                              Bitset spine, Bitset generators,
                              Bitset ring_spine);

// The curated instance list driving the theorem checks.
std::vector<ZooInstance> zoo();

}  // namespace sa
