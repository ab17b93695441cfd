#include "doctest.h"

#include <algorithm>
#include <memory>

#include "sa/lattice.hpp"
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

bool contains(const SALattice& l, const Bitset& w) { return l.find(w) >= 0; }

}  // namespace

TEST_CASE("summand absorption predicate") {
  FreeModule f = free_module(boolean_ptr(), 2);
  auto v = sa_violation(f.mod, Bitset::of(4, {0, 3}));
  REQUIRE(v.has_value());
  CHECK(*v == std::pair<int, int>{1, 2});
  CHECK(is_sa(f.mod, Bitset::of(4, {0, 1})));
  CHECK(is_sa(f.mod, Bitset::full(4)));
  CHECK(is_sa(f.mod, Bitset::singleton(4, 0)));

  // {0,2} in truncated naturals absorbs 1+1 = 2 but misses 1
  Module n2 = regular_module(nat2_ptr());
  auto vn = sa_violation(n2, Bitset::of(3, {0, 2}));
  REQUIRE(vn.has_value());
  CHECK(*vn == std::pair<int, int>{1, 1});
}

TEST_CASE("SA closure") {
  FreeModule f = free_module(boolean_ptr(), 2);
  CHECK(sa_closure(f.mod, Bitset::singleton(4, 3)).members() == Bitset::full(4));
  CHECK(sa_closure(f.mod, Bitset(4)).members() == Bitset::singleton(4, 0));
  CHECK(sa_closure(f.mod, Bitset::singleton(4, 1)).members() ==
        Bitset::of(4, {0, 1}));
}

TEST_CASE("SA closure is the least SA superset") {
  for (const ZooInstance& z : zoo()) {
    if (z.module.size() > 16) continue;
    SALattice oracle = enumerate_sa_bruteforce(z.module);
    for (int seed = 0; seed < z.module.size(); ++seed) {
      Bitset x = Bitset::singleton(z.module.size(), seed);
      Bitset closed = sa_closure(z.module, x).members();
      Bitset meet = Bitset::full(z.module.size());
      for (const Bitset& w : oracle.members)
        if (x.subset_of(w)) meet &= w;
      CHECK(closed == meet);
    }
  }
}

TEST_CASE("SA lattice of the boolean plane") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice l = enumerate_sa(f.mod, Bitset::of(4, {1, 2}));
  REQUIRE(l.members.size() == 4);
  CHECK(contains(l, Bitset::singleton(4, 0)));
  CHECK(contains(l, Bitset::of(4, {0, 1})));
  CHECK(contains(l, Bitset::of(4, {0, 2})));
  CHECK(contains(l, Bitset::full(4)));
  // four cover edges, none jumping from bottom to top
  CHECK(l.hasse.size() == 4);
  int bottom = l.find(Bitset::singleton(4, 0));
  int top = l.find(Bitset::full(4));
  for (auto [a, b] : l.hasse) CHECK(!(a == bottom && b == top));
}

TEST_CASE("SA lattice of regular truncated naturals") {
  Module n2 = regular_module(nat2_ptr());
  SALattice l = enumerate_sa(n2, Bitset::singleton(3, 1));
  REQUIRE(l.members.size() == 2);
  CHECK(contains(l, Bitset::singleton(3, 0)));
  CHECK(contains(l, Bitset::full(3)));
  CHECK(!contains(l, Bitset::of(3, {0, 2})));
}

TEST_CASE("SA lattice of regular boolean matrices") {
  Module reg = regular_module(m2b_ptr());
  SALattice l = enumerate_sa(reg, Bitset::of(16, {1, 8}));
  REQUIRE(l.members.size() == 4);
  CHECK(contains(l, Bitset::singleton(16, 0)));
  CHECK(contains(l, Bitset::of(16, {0, 1, 4, 5})));    // zero second column
  CHECK(contains(l, Bitset::of(16, {0, 2, 8, 10})));   // zero first column
  CHECK(contains(l, Bitset::full(16)));
}

TEST_CASE("spine route agrees with brute force") {
  for (const ZooInstance& z : zoo()) {
    if (z.module.size() > 16) continue;
    SALattice fast = enumerate_sa(z.module, z.spine);
    SALattice oracle = enumerate_sa_bruteforce(z.module);
    REQUIRE(fast.members.size() == oracle.members.size());
    for (size_t i = 0; i < fast.members.size(); ++i)
      CHECK(fast.members[i] == oracle.members[i]);
    CHECK(fast.hasse == oracle.hasse);
  }
}

TEST_CASE("generator route agrees as well") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice a = enumerate_sa_from_generators(f.mod, Bitset::singleton(2, 1),
                                             Bitset::of(4, {1, 2}));
  SALattice b = enumerate_sa_bruteforce(f.mod);
  CHECK(a.members.size() == b.members.size());
}

TEST_CASE("one-element module has a one-element lattice") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SubmoduleView zero = restrict_module(f.mod, Bitset::singleton(4, 0));
  SALattice l = enumerate_sa_bruteforce(zero.mod);
  CHECK(l.members.size() == 1);
  CHECK(longest_chain(l).length == 0);
}

TEST_CASE("sums of SA submodules") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice sa_l = enumerate_sa_bruteforce(f.mod);
  SALattice sigma = enumerate_sigma_sa(f.mod, sa_l);
  CHECK(sigma.members.size() == 4);

  Module n2 = regular_module(nat2_ptr());
  SALattice n2sa = enumerate_sa_bruteforce(n2);
  SALattice n2sigma = enumerate_sigma_sa(n2, n2sa);
  CHECK(n2sigma.members.size() == 2);

  for (const ZooInstance& z : zoo()) {
    if (z.module.size() > 16) continue;
    SALattice s = enumerate_sa_bruteforce(z.module);
    SALattice sg = enumerate_sigma_sa(z.module, s);
    for (const Bitset& w : s.members) CHECK(sg.find(w) >= 0);
  }
}

TEST_CASE("longest chains") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice l = enumerate_sa_bruteforce(f.mod);
  ChainReport ch = longest_chain(l);
  CHECK(ch.length == 2);
  REQUIRE(ch.chain.size() == 3);
  for (size_t i = 0; i + 1 < ch.chain.size(); ++i)
    CHECK(l.members[ch.chain[i]].proper_subset_of(l.members[ch.chain[i + 1]]));
  CHECK(descending_chain_report(l).length == 2);

  Module n2 = regular_module(nat2_ptr());
  CHECK(longest_chain(enumerate_sa_bruteforce(n2)).length == 1);
}

TEST_CASE("SA submodules between two fixed ones") {
  FreeModule f = free_module(boolean_ptr(), 2);
  Bitset v0 = Bitset::of(4, {0, 1});
  Bitset m = Bitset::singleton(2, 1);

  BetweenResult b = sa_between(f.mod, v0, Bitset::singleton(4, 0),
                               Bitset::singleton(4, 2), m);
  REQUIRE(b.members.size() == 2);
  CHECK(b.members[0] == Bitset::singleton(4, 0));
  CHECK(b.members[1] == Bitset::of(4, {0, 2}));
  CHECK(b.chain.length == 1);
  CHECK(b.m == 1);
  CHECK(b.s == 1);

  BetweenResult b2 = sa_between(f.mod, v0, v0, Bitset::singleton(4, 2), m);
  REQUIRE(b2.members.size() == 2);
  CHECK(b2.members[0] == v0);
  CHECK(b2.members[1] == Bitset::full(4));

  // W0 must absorb summands
  CHECK_THROWS_AS(sa_between(f.mod, Bitset::full(4), Bitset::of(4, {0, 3}),
                             Bitset::of(4, {1, 2}), m),
                  Error);
}

TEST_CASE("SA-adapted generating sets") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice l = enumerate_sa_bruteforce(f.mod);
  CHECK(is_sa_adapted(f.mod, Bitset::of(4, {1, 2}), l));
  CHECK(is_sa_adapted(f.mod, Bitset::of(4, {1, 2, 3}), l));
  CHECK_THROWS_AS(is_sa_adapted(f.mod, Bitset::singleton(4, 3), l), Error);
}

TEST_CASE("scalar products") {
  FreeModule f = free_module(boolean_ptr(), 2);
  Bitset ms = scalar_products(f.mod, Bitset::singleton(2, 1),
                              Bitset::of(4, {1, 2}));
  CHECK(ms == Bitset::of(4, {1, 2}));
  CHECK(scalar_products(f.mod, Bitset::full(2), Bitset::of(4, {1, 2})) ==
        Bitset::of(4, {0, 1, 2}));
}

TEST_CASE("DOT rendering") {
  FreeModule f = free_module(boolean_ptr(), 2);
  SALattice l = enumerate_sa_bruteforce(f.mod);
  std::string dot = lattice_to_dot(l);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') >= 4);
}
