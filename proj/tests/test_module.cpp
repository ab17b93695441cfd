#include "doctest.h"

#include <memory>

#include "sa/builtins.hpp"
#include "sa/module.hpp"

using namespace sa;

namespace {

SemiringPtr boolean_ptr() {
  static SemiringPtr b = std::make_shared<Semiring>(boolean_semifield());
  return b;
}

SemiringPtr nat2_ptr() {
  static SemiringPtr n = std::make_shared<Semiring>(truncated_naturals(2));
  return n;
}

}  // namespace

TEST_CASE("regular module of the booleans") {
  Module reg = regular_module(boolean_ptr());
  CHECK(reg.size() == 2);
  CHECK(reg.add(1, 1) == 1);
  CHECK(reg.act(1, 1) == 1);
  CHECK(reg.add_table().t == boolean_ptr()->add_table().t);
}

TEST_CASE("unit-action violations are reported") {
  FreeModule f = free_module(boolean_ptr(), 2);
  OpTable act = f.mod.act_table();
  act.at(1, 1) = 2;  // 1·e1 must stay e1
  auto why = Module::check_axioms(*boolean_ptr(), f.mod.size(), f.mod.zero(),
                                  f.mod.add_table(), act);
  REQUIRE(why.has_value());
  CHECK(why->find("1·v") != std::string::npos);
}

TEST_CASE("rank-one free module is the regular module") {
  FreeModule f = free_module(nat2_ptr(), 1);
  Module reg = regular_module(nat2_ptr());
  CHECK(f.mod.size() == reg.size());
  CHECK(f.mod.add_table().t == reg.add_table().t);
  CHECK(f.mod.act_table().t == reg.act_table().t);
}

TEST_CASE("free module over the booleans, rank two") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(f.mod.size() == 4);
  CHECK(f.basis(0) == 1);
  CHECK(f.basis(1) == 2);
  for (int v = 0; v < 4; ++v) CHECK(f.mod.act(1, v) == v);
  CHECK(f.coordinate(3, 0) == 1);
  CHECK(f.coordinate(3, 1) == 1);
  int coords[2] = {1, 1};
  CHECK(f.encode(coords) == 3);
}

TEST_CASE("additive closure") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(additive_closure(f.mod, Bitset(4)) == Bitset::singleton(4, 0));
  CHECK(additive_closure(f.mod, Bitset::of(4, {1, 2})) == Bitset::full(4));

  Module n2 = regular_module(nat2_ptr());
  CHECK(additive_closure(n2, Bitset::singleton(3, 1)) == Bitset::full(3));
}

TEST_CASE("generated submodules") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(generated_submodule(f.mod, Bitset::singleton(4, 3)).members() ==
        Bitset::of(4, {0, 3}));
  CHECK(generated_submodule(f.mod, Bitset(4)).members() ==
        Bitset::singleton(4, 0));

  auto m2 = std::make_shared<Semiring>(
      matrix_semiring(boolean_semifield(), 2).ring);
  Module reg = regular_module(m2);
  // R·e11: matrices with zero second column
  CHECK(generated_submodule(reg, Bitset::singleton(16, 1)).members() ==
        Bitset::of(16, {0, 1, 4, 5}));
}

TEST_CASE("zero sums") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(is_lzs(f.mod));
  CHECK(is_lzs(regular_module(nat2_ptr())));

  // the two-element field as a module over itself: 1 + 1 = 0
  OpTable add = OpTable::from_rows({{0, 1}, {1, 0}});
  OpTable mul = OpTable::from_rows({{0, 0}, {0, 1}});
  auto f2 = std::make_shared<Semiring>(Semiring::make("F2", 2, 0, 1, add, mul));
  Module z2 = regular_module(f2);
  auto cex = lzs_counterexample(z2);
  REQUIRE(cex.has_value());
  CHECK(*cex == std::pair<int, int>{1, 1});
}

TEST_CASE("product modules") {
  Module reg = regular_module(boolean_ptr());
  Module prod = product_module(reg, reg);
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(prod.size() == 4);
  CHECK(prod.add_table().t == f.mod.add_table().t);
  CHECK(prod.act_table().t == f.mod.act_table().t);
  CHECK(product_encode(reg, 1, 1) == 3);

  Module other = regular_module(nat2_ptr());
  CHECK_THROWS_AS(product_module(reg, other), Error);
}

TEST_CASE("submodule validation") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(!Submodule::why_not(f.mod, Bitset::of(4, {0, 1})));
  CHECK(Submodule::why_not(f.mod, Bitset::singleton(4, 1)).has_value());
  CHECK(Submodule::why_not(f.mod, Bitset::of(4, {0, 1, 2})).has_value());
  CHECK_THROWS_AS(Submodule::make(f.mod, Bitset::singleton(4, 1)), Error);
}

TEST_CASE("linear maps") {
  FreeModule f = free_module(boolean_ptr(), 2);
  Module reg = regular_module(boolean_ptr());

  std::vector<int> sum(4), swap(4), ident(4);
  for (int x = 0; x < 4; ++x) {
    sum[x] = boolean_ptr()->add(f.coordinate(x, 0), f.coordinate(x, 1));
    int rev[2] = {f.coordinate(x, 1), f.coordinate(x, 0)};
    swap[x] = f.encode(rev);
    ident[x] = x;
  }
  LinearMap phi = LinearMap::make(f.mod, reg, std::move(sum));
  CHECK(image(phi, f.mod, reg).members() == Bitset::full(2));

  LinearMap sigma = LinearMap::make(f.mod, f.mod, std::move(swap));
  CHECK(sigma(1) == 2);
  CHECK(sigma(3) == 3);
  CHECK(image(sigma, f.mod, f.mod).members() == Bitset::full(4));

  LinearMap id = LinearMap::make(f.mod, f.mod, std::move(ident));
  CHECK(image(id, f.mod, f.mod).members() == Bitset::full(4));

  // constant map breaks zero preservation
  CHECK_THROWS_AS(LinearMap::make(f.mod, f.mod, std::vector<int>{1, 1, 1, 1}),
                  Error);
}

TEST_CASE("submodule views round-trip") {
  FreeModule f = free_module(boolean_ptr(), 2);
  Bitset w = Bitset::of(4, {0, 1});
  SubmoduleView view = restrict_module(f.mod, w);
  CHECK(view.mod.size() == 2);
  CHECK(view.mod.zero() == view.from_parent[0]);
  Bitset inside = view.restrict_set(Bitset::of(4, {0, 1}));
  CHECK(inside.count() == 2);
  CHECK(view.extend_set(inside, 4) == w);
}
