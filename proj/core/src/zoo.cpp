#include "sa/zoo.hpp"

#include "sa/halo.hpp"

namespace sa {

ZooInstance make_zoo_instance(std::string name, SemiringPtr ring, Module module,
                              Bitset spine, Bitset generators,
                              Bitset ring_spine) {
  ZooInstance z;
  z.name = std::move(name);
  z.ring = std::move(ring);
  z.module = std::move(module);
  z.spine = std::move(spine);
  z.generators = std::move(generators);
  z.ring_spine = std::move(ring_spine);

  SpineCheck sc = check_additive_spine(z.module, z.spine);
  if (!sc.ok)
    throw Error("zoo instance " + z.name + ": declared spine misses element " +
                std::to_string(sc.uncovered));
  if (generated_submodule(z.module, z.generators).members().count() !=
      z.module.size())
    throw Error("zoo instance " + z.name +
                ": declared generators do not generate V");
  Module reg = regular_module(z.ring);
  SpineCheck rc = check_additive_spine(reg, z.ring_spine);
  if (!rc.ok)
    throw Error("zoo instance " + z.name +
                ": declared semiring spine misses element " +
                std::to_string(rc.uncovered));
  return z;
}

namespace {

ZooInstance boolean_square() {
  auto b = std::make_shared<Semiring>(boolean_semifield());
  FreeModule f = free_module(b, 2);
  Bitset basis = Bitset::of(f.mod.size(), {f.basis(0), f.basis(1)});
  ZooInstance z = make_zoo_instance(
      "B^2", b, f.mod, basis, basis, Bitset::singleton(b->size(), b->one()));
  z.free_info = std::move(f);
  return z;
}

ZooInstance regular_of(const std::string& name, SemiringPtr r,
                       Bitset ring_spine) {
  Module reg = regular_module(r);
  Bitset one = Bitset::singleton(r->size(), r->one());
  ZooInstance z = make_zoo_instance(name, r, std::move(reg), ring_spine, one,
                                    ring_spine);
  // a regular module is free of rank one
  FreeModule f;
  f.n = 1;
  f.base = r->size();
  f.basis_elems = {r->one()};
  f.mod = z.module;
  z.free_info = std::move(f);
  return z;
}

ZooInstance nat2_square() {
  auto n2 = std::make_shared<Semiring>(truncated_naturals(2));
  FreeModule f = free_module(n2, 2);
  Bitset basis = Bitset::of(f.mod.size(), {f.basis(0), f.basis(1)});
  ZooInstance z = make_zoo_instance("N2^2", n2, f.mod, basis, basis,
                                    Bitset::singleton(n2->size(), n2->one()));
  z.free_info = std::move(f);
  return z;
}

ZooInstance matrix_instance(const std::string& name, const Semiring& base,
                            std::optional<int> permutation_swap) {
  auto base_ptr = std::make_shared<Semiring>(base);
  MatrixSemiring ms = matrix_semiring(base, 2);
  auto r = std::make_shared<Semiring>(ms.ring);
  Bitset diag = Bitset::of(r->size(), {ms.unit(0, 0), ms.unit(1, 1)});
  Bitset spine = diag;
  std::optional<int> unit;
  if (permutation_swap) {
    unit = r->add(ms.unit(0, 1), ms.unit(1, 0));  // the swap matrix
    Bitset permuted(r->size());
    diag.for_each([&](int e) { permuted.set(r->mul(e, *unit)); });
    spine = permuted;
  }
  Module reg = regular_module(r);
  Bitset one = Bitset::singleton(r->size(), r->one());
  ZooInstance z =
      make_zoo_instance(name, r, std::move(reg), spine, one, spine);
  z.matrix_info = MatrixInfo{
      std::move(ms), base_ptr,
      Bitset::singleton(base.size(), base.one())};
  if (unit) {
    z.translation_unit = unit;
    z.untranslated_spine = diag;
  }
  FreeModule f;
  f.n = 1;
  f.base = r->size();
  f.basis_elems = {r->one()};
  f.mod = z.module;
  z.free_info = std::move(f);
  return z;
}

FiniteMonoid two_element_idempotent_monoid() {
  // {1, a} with a² = a
  return FiniteMonoid::make(2, 0, std::nullopt,
                            OpTable::from_rows({{0, 1}, {1, 1}}));
}

ZooInstance monoid_instance(const std::string& name, const Semiring& base,
                            FiniteMonoid monoid, Bitset monoid_spine) {
  auto base_ptr = std::make_shared<Semiring>(base);
  MonoidSemiring msr = monoid_semiring(base, monoid);
  auto r = std::make_shared<Semiring>(msr.ring);
  Module a_reg = regular_module(base_ptr);
  Bitset n = Bitset::singleton(base.size(), base.one());
  Bitset spine = monoid_semiring_spine(msr, a_reg, n, monoid, monoid_spine);
  spine.reset(r->zero());  // halo(M ∖ {0}) = halo(M)
  Module reg = regular_module(r);
  Bitset one = Bitset::singleton(r->size(), r->one());
  ZooInstance z = make_zoo_instance(name, r, std::move(reg), spine, one, spine);
  z.monoid_info = MonoidSemiringInfo{std::move(msr), std::move(monoid),
                                     base_ptr, n, std::move(monoid_spine)};
  FreeModule f;
  f.n = 1;
  f.base = r->size();
  f.basis_elems = {r->one()};
  f.mod = z.module;
  z.free_info = std::move(f);
  return z;
}

}  // namespace

std::vector<ZooInstance> zoo() {
  std::vector<ZooInstance> out;
  out.push_back(boolean_square());

  auto b = std::make_shared<Semiring>(boolean_semifield());
  out.push_back(
      regular_of("B-regular", b, Bitset::singleton(b->size(), b->one())));

  auto n2 = std::make_shared<Semiring>(truncated_naturals(2));
  out.push_back(
      regular_of("N2-regular", n2, Bitset::singleton(n2->size(), n2->one())));

  out.push_back(nat2_square());

  // truncated max-plus has no small spine: the only left invertible element
  // is 1 and its additive closure stops at {0, 1}; all nonzero elements
  // together do form a spine.
  auto t2 = std::make_shared<Semiring>(truncated_maxplus(2));
  Bitset t2_spine = Bitset::full(t2->size());
  t2_spine.reset(t2->zero());
  out.push_back(regular_of("T2-regular", t2, t2_spine));

  out.push_back(matrix_instance("M2(B)-regular", boolean_semifield(),
                                std::nullopt));
  out.push_back(matrix_instance("M2(N2)-regular", truncated_naturals(2),
                                std::nullopt));
  out.push_back(matrix_instance("M2(B)-permuted-spine", boolean_semifield(),
                                1));

  out.push_back(monoid_instance("B[1,a]-regular", boolean_semifield(),
                                two_element_idempotent_monoid(),
                                Bitset::full(2)));

  FiniteMonoid mu = matrix_unit_monoid(2);
  Bitset mu_spine = Bitset::of(mu.size(), {0, matrix_unit_monoid_index(2, 0, 0),
                                           matrix_unit_monoid_index(2, 1, 1)});
  out.push_back(monoid_instance("B[matrix-units-2]-regular",
                                boolean_semifield(), std::move(mu),
                                std::move(mu_spine)));
  return out;
}

}  // namespace sa
