#include "doctest.h"

#include "sa/builtins.hpp"

using namespace sa;

TEST_CASE("boolean semifield tables") {
  Semiring b = boolean_semifield();
  CHECK(b.size() == 2);
  CHECK(b.zero() == 0);
  CHECK(b.one() == 1);
  CHECK(b.add(1, 1) == 1);
  CHECK(b.mul(1, 1) == 1);
  CHECK(b.mul(0, 1) == 0);
  CHECK(b.verify_mode() == VerifyMode::exhaustive);
  CHECK(idempotents(b) == Bitset::of(2, {0, 1}));
  CHECK(left_invertibles(b) == Bitset::singleton(2, 1));
}

TEST_CASE("mutated boolean addition is rejected with a witness") {
  Semiring b = boolean_semifield();
  OpTable add = b.add_table();
  add.at(0, 1) = 0;  // breaks commutativity and the additive identity
  auto why = Semiring::check_axioms(2, 0, 1, add, b.mul_table());
  REQUIRE(why.has_value());
  CHECK(why->find("at") != std::string::npos);  // names a witness
  CHECK_THROWS_AS(Semiring::make("bad", 2, 0, 1, add, b.mul_table()), Error);

  // flipping 1+1 to 0 instead yields the two-element field, which satisfies
  // every semiring law; only the zero-sum scan can tell it apart
  OpTable f2_add = b.add_table();
  f2_add.at(1, 1) = 0;
  CHECK(!Semiring::check_axioms(2, 0, 1, f2_add, b.mul_table()));
}

TEST_CASE("truncated naturals") {
  Semiring n2 = truncated_naturals(2);
  CHECK(n2.size() == 3);
  CHECK(n2.add(1, 2) == 2);
  CHECK(n2.add(1, 1) == 2);
  CHECK(n2.mul(2, 2) == 2);
  CHECK(idempotents(n2) == Bitset::of(3, {0, 1, 2}));
  CHECK(left_invertibles(n2) == Bitset::singleton(3, 1));
}

TEST_CASE("truncated max-plus") {
  Semiring t1 = truncated_maxplus(1);
  // index 0 is -inf (the zero), index v+1 carries the value v
  CHECK(t1.size() == 3);
  CHECK(t1.zero() == 0);
  CHECK(t1.one() == 1);
  for (int x = 0; x < t1.size(); ++x) CHECK(t1.add(x, x) == x);
  // 1 + 1 saturates to the cap 1
  CHECK(t1.mul(2, 2) == 2);

  Semiring t2 = truncated_maxplus(2);
  CHECK(t2.size() == 4);
  CHECK(t2.mul(2, 2) == 3);   // 1 + 1 = 2
  CHECK(t2.mul(3, 2) == 3);   // saturation at 2
  CHECK(t2.add(2, 3) == 3);   // max(1, 2) = 2
}

TEST_CASE("matrix semiring over the booleans") {
  MatrixSemiring m = matrix_semiring(boolean_semifield(), 2);
  CHECK(m.ring.size() == 16);
  int e11 = m.unit(0, 0), e12 = m.unit(0, 1), e21 = m.unit(1, 0),
      e22 = m.unit(1, 1);
  CHECK(m.ring.mul(e12, e21) == e11);
  CHECK(m.ring.mul(e21, e12) == e22);
  CHECK(m.ring.mul(e11, e22) == m.ring.zero());
  CHECK(m.identity == m.ring.add(e11, e22));
  CHECK(m.ring.one() == m.identity);

  Bitset ids = idempotents(m.ring);
  CHECK(ids.test(m.ring.zero()));
  CHECK(ids.test(e11));
  CHECK(ids.test(e22));
  CHECK(ids.test(m.identity));

  int swap = m.ring.add(e12, e21);
  Bitset li = left_invertibles(m.ring);
  CHECK(li.test(m.identity));
  CHECK(li.test(swap));
  CHECK(two_sided_inverse(m.ring, swap) == swap);
  CHECK(!two_sided_inverse(m.ring, e11));
}

TEST_CASE("matrix semiring over truncated naturals verifies") {
  MatrixSemiring m = matrix_semiring(truncated_naturals(2), 2);
  CHECK(m.ring.size() == 81);
  CHECK(m.ring.mul(m.unit(0, 1), m.unit(1, 0)) == m.unit(0, 0));
}

TEST_CASE("matrix semiring respects the carrier cap") {
  CHECK_THROWS_AS(matrix_semiring(boolean_semifield(), 5), Error);
}

TEST_CASE("monoid semiring over a two-element idempotent monoid") {
  FiniteMonoid s = FiniteMonoid::make(2, 0, std::nullopt,
                                      OpTable::from_rows({{0, 1}, {1, 1}}));
  MonoidSemiring r = monoid_semiring(boolean_semifield(), s);
  // elements: 0, 1, a, 1+a
  CHECK(r.ring.size() == 4);
  int one = r.ring.one(), a = r.embed_monoid(1);
  CHECK(r.ring.mul(a, a) == a);
  CHECK(r.ring.mul(one, a) == a);
  CHECK(r.ring.add(one, a) == 3);
}

TEST_CASE("monoid semiring over matrix units matches the matrix semiring") {
  FiniteMonoid mu = matrix_unit_monoid(2);
  MonoidSemiring r = monoid_semiring(boolean_semifield(), mu);
  MatrixSemiring m = matrix_semiring(boolean_semifield(), 2);
  REQUIRE(r.ring.size() == m.ring.size());
  CHECK(r.ring.zero() == m.ring.zero());
  CHECK(r.ring.one() == m.ring.one());
  CHECK(r.ring.add_table().t == m.ring.add_table().t);
  CHECK(r.ring.mul_table().t == m.ring.mul_table().t);
}

TEST_CASE("monoid semiring over the trivial monoid is the base") {
  FiniteMonoid trivial =
      FiniteMonoid::make(1, 0, std::nullopt, OpTable::from_rows({{0}}));
  Semiring n2 = truncated_naturals(2);
  MonoidSemiring r = monoid_semiring(n2, trivial);
  CHECK(r.ring.size() == n2.size());
  CHECK(r.ring.add_table().t == n2.add_table().t);
  CHECK(r.ring.mul_table().t == n2.mul_table().t);
}

TEST_CASE("monoid law violations are rejected") {
  // non-associative op
  CHECK_THROWS_AS(FiniteMonoid::make(2, 0, std::nullopt,
                                     OpTable::from_rows({{1, 1}, {0, 0}})),
                  Error);
  // claimed identity that is not one
  CHECK_THROWS_AS(FiniteMonoid::make(2, 1, std::nullopt,
                                     OpTable::from_rows({{0, 0}, {0, 0}})),
                  Error);
}
