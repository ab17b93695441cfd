#include "doctest.h"

#include <memory>

#include "sa/halo.hpp"
#include "sa/zoo.hpp"

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

SemiringPtr m2b_ptr() {
  static SemiringPtr m = std::make_shared<Semiring>(
      matrix_semiring(boolean_semifield(), 2).ring);
  return m;
}

}  // namespace

TEST_CASE("halo of the zero singleton is the zero singleton") {
  for (const ZooInstance& z : zoo()) {
    Bitset zero = Bitset::singleton(z.module.size(), z.module.zero());
    CHECK(halo(z.module, zero).members == zero);
  }
}

TEST_CASE("halo of the diagonal units covers all matrix units") {
  Module reg = regular_module(m2b_ptr());
  // e11=1, e12=2, e21=4, e22=8
  Bitset h = halo(reg, Bitset::of(16, {1, 8})).members;
  for (int unit : {1, 2, 4, 8}) CHECK(h.test(unit));
}

TEST_CASE("halo of the unit in truncated naturals") {
  Module reg = regular_module(nat2_ptr());
  CHECK(halo(reg, Bitset::singleton(3, 1)).members == Bitset::singleton(3, 1));
}

TEST_CASE("halo witnesses certify membership") {
  Module reg = regular_module(m2b_ptr());
  Bitset s = Bitset::of(16, {1, 8});
  HaloResult h = halo(reg, s);
  h.members.for_each([&](int x) {
    HaloWitness w = h.witness_for(x);
    int lx = reg.act(w.lambda, x);
    CHECK(s.test(lx));
    CHECK(reg.act(w.mu, lx) == x);
  });
  CHECK_THROWS_AS(halo(reg, Bitset(16)).witness_for(1), Error);
}

TEST_CASE("spine checks") {
  Module breg = regular_module(boolean_ptr());
  CHECK(check_additive_spine(breg, Bitset::singleton(2, 1)).ok);

  Module m2reg = regular_module(m2b_ptr());
  CHECK(check_additive_spine(m2reg, Bitset::of(16, {1, 8})).ok);

  FreeModule f = free_module(boolean_ptr(), 2);
  SpineCheck sc = check_additive_spine(f.mod, Bitset::singleton(4, 3));
  CHECK(!sc.ok);
  CHECK(sc.uncovered == 1);
}

TEST_CASE("von Neumann regular elements") {
  CHECK(von_neumann_regulars(*boolean_ptr()) == Bitset::of(2, {0, 1}));
  CHECK(von_neumann_regulars(*nat2_ptr()) == Bitset::of(3, {0, 1, 2}));
  for (const ZooInstance& z : zoo()) {
    Module reg = regular_module(z.ring);
    CHECK(halo(reg, idempotents(*z.ring)).members ==
          von_neumann_regulars(*z.ring));
  }
}

TEST_CASE("halo decomposition along the idempotents") {
  Module breg = regular_module(boolean_ptr());
  HaloDecomposition d = halo_decompose(breg, Bitset::of(2, {0, 1}));
  CHECK(d.regular_part == Bitset::of(2, {0, 1}));
  CHECK(d.irregular_part.empty());

  HaloDecomposition empty = halo_decompose(breg, Bitset(2));
  CHECK(empty.regular_part.empty());
  CHECK(empty.irregular_part.empty());

  Module m2reg = regular_module(m2b_ptr());
  Bitset m = Bitset::of(16, {1, 2});  // e11, e12
  HaloDecomposition dm = halo_decompose(m2reg, m);
  CHECK(!dm.regular_part.intersects(dm.irregular_part));
  CHECK((dm.regular_part | dm.irregular_part) == halo(m2reg, m).members);
}

TEST_CASE("diagonal spine of a matrix semiring") {
  MatrixSemiring m = matrix_semiring(boolean_semifield(), 2);
  Module base_reg = regular_module(boolean_ptr());
  Bitset n = Bitset::singleton(2, 1);
  Bitset diag = matrix_diagonal_spine(m, base_reg, n);
  CHECK(diag == Bitset::of(16, {1, 8}));
  Module reg = regular_module(m2b_ptr());
  CHECK(check_additive_spine(reg, diag).ok);

  MatrixSemiring mn = matrix_semiring(truncated_naturals(2), 2);
  auto mn_ptr = std::make_shared<Semiring>(mn.ring);
  Bitset diag_n = matrix_diagonal_spine(mn, regular_module(nat2_ptr()),
                                        Bitset::singleton(3, 1));
  CHECK(check_additive_spine(regular_module(mn_ptr), diag_n).ok);

  MatrixSemiring m1 = matrix_semiring(truncated_naturals(2), 1);
  auto m1_ptr = std::make_shared<Semiring>(m1.ring);
  CHECK(matrix_diagonal_spine(m1, regular_module(nat2_ptr()),
                              Bitset::singleton(3, 1)) ==
        Bitset::singleton(3, 1));

  // a non-spine N is rejected
  CHECK_THROWS_AS(matrix_diagonal_spine(m, base_reg, Bitset(2)), Error);
}

TEST_CASE("monoid spine checks") {
  FiniteMonoid s = FiniteMonoid::make(2, 0, std::nullopt,
                                      OpTable::from_rows({{0, 1}, {1, 1}}));
  CHECK(check_monoid_spine(s, Bitset::of(2, {0, 1})).ok);
  MonoidSpineCheck bad = check_monoid_spine(s, Bitset::singleton(2, 1));
  CHECK(!bad.ok);
  CHECK(bad.unwitnessed == 0);  // nothing maps back onto the identity

  FiniteMonoid mu = matrix_unit_monoid(2);
  Bitset diag = Bitset::of(mu.size(), {0, matrix_unit_monoid_index(2, 0, 0),
                                       matrix_unit_monoid_index(2, 1, 1)});
  CHECK(check_monoid_spine(mu, diag).ok);
}

TEST_CASE("monoid semiring spines") {
  Module base_reg = regular_module(boolean_ptr());
  Bitset n = Bitset::singleton(2, 1);

  FiniteMonoid s = FiniteMonoid::make(2, 0, std::nullopt,
                                      OpTable::from_rows({{0, 1}, {1, 1}}));
  MonoidSemiring r = monoid_semiring(boolean_semifield(), s);
  Bitset spine = monoid_semiring_spine(r, base_reg, n, s, Bitset::of(2, {0, 1}));
  CHECK(spine == Bitset::of(4, {1, 2}));
  auto rp = std::make_shared<Semiring>(r.ring);
  CHECK(check_additive_spine(regular_module(rp), spine).ok);

  FiniteMonoid mu = matrix_unit_monoid(2);
  MonoidSemiring rmu = monoid_semiring(boolean_semifield(), mu);
  Bitset diag_t = Bitset::of(mu.size(), {0, matrix_unit_monoid_index(2, 0, 0),
                                         matrix_unit_monoid_index(2, 1, 1)});
  Bitset nt = monoid_semiring_spine(rmu, base_reg, n, mu, diag_t);
  // recovers the diagonal matrix units (plus the zero from the pointed monoid)
  CHECK(nt == Bitset::of(16, {0, 1, 8}));

  FiniteMonoid trivial =
      FiniteMonoid::make(1, 0, std::nullopt, OpTable::from_rows({{0}}));
  MonoidSemiring rt = monoid_semiring(boolean_semifield(), trivial);
  CHECK(monoid_semiring_spine(rt, base_reg, n, trivial,
                              Bitset::singleton(1, 0)) == n);

  CHECK_THROWS_AS(
      monoid_semiring_spine(r, base_reg, n, s, Bitset::singleton(2, 1)), Error);
}

TEST_CASE("spine translation by a unit") {
  Module reg = regular_module(m2b_ptr());
  Bitset diag = Bitset::of(16, {1, 8});
  int swap = 6, identity = 9;
  Bitset permuted = translate_spine_by_unit(reg, diag, swap);
  CHECK(permuted == Bitset::of(16, {2, 4}));
  CHECK(check_additive_spine(reg, permuted).ok);
  CHECK(translate_spine_by_unit(reg, diag, identity) == diag);
  CHECK_THROWS_AS(translate_spine_by_unit(reg, diag, 1), Error);
}

TEST_CASE("bullet products of spines") {
  // scalar action instance: R x V -> V
  Module breg = regular_module(boolean_ptr());
  FreeModule f = free_module(boolean_ptr(), 2);
  SpineProductContext ctx;
  ctx.v1 = &breg;
  ctx.v2 = &f.mod;
  ctx.target = &f.mod;
  ctx.compose = f.mod.act_table();
  ctx.r1 = Bitset::full(2);
  ctx.r2 = Bitset::full(2);
  Bitset prod =
      spine_product(ctx, Bitset::singleton(2, 1), Bitset::of(4, {1, 2}));
  CHECK(prod == Bitset::of(4, {1, 2}));
  CHECK(check_additive_spine(f.mod, prod).ok);

  CHECK(spine_product(ctx, Bitset(2), Bitset::of(4, {1, 2})).empty());
  CHECK(!check_additive_spine(f.mod, Bitset(4)).ok);

  // subsemiring decomposition of M2(B): unit span times B·I
  Module m2reg = regular_module(m2b_ptr());
  SpineProductContext mc;
  mc.v1 = &m2reg;
  mc.v2 = &m2reg;
  mc.target = &m2reg;
  mc.compose = m2b_ptr()->mul_table();
  mc.carrier1 = additive_closure(m2reg, Bitset::of(16, {1, 2, 4, 8}));
  mc.r1 = mc.carrier1;
  mc.carrier2 = Bitset::of(16, {0, 9});  // 0 and I
  mc.r2 = mc.carrier2;
  Bitset mprod = spine_product(mc, Bitset::of(16, {1, 8}), Bitset::of(16, {9}));
  CHECK(mprod == Bitset::of(16, {1, 8}));
  CHECK(check_additive_spine(m2reg, mprod).ok);
}
