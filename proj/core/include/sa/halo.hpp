#pragma once

#include "sa/builtins.hpp"
#include "sa/module.hpp"

namespace sa {

// Scalar pair certifying halo membership of v: λv ∈ S and μλv = v.
// A (y,z)-witness in the semiring sense maps to (λ,μ) = (y, zy).
struct HaloWitness {
  int lambda = 0;
  int mu = 0;
};

struct HaloResult {
  Bitset members;
  // Lexicographically least (λ,μ) per member, indexed like members.indices().
  std::vector<HaloWitness> witnesses;

  HaloWitness witness_for(int element) const;
};

// Halo of S in V: all v with λv ∈ S and μλv = v for some scalars λ, μ.
// `within` restricts the scanned carrier to a submodule (halo computed in W);
// `scalars` restricts λ and μ to a subset of R.
HaloResult halo(const Module& v, const Bitset& s,
                const Bitset* within = nullptr,
                const Bitset* scalars = nullptr);

struct SpineCheck {
  bool ok = false;
  int uncovered = -1;  // element not reached when !ok
  Bitset halo_members;
};

// S is an additive spine of V iff the halo of S additively generates V.
SpineCheck check_additive_spine(const Module& v, const Bitset& s);

// Same check inside the submodule W (carrier restricted to W).
SpineCheck check_additive_spine_in(const Module& v, const Bitset& w_members,
                                   const Bitset& s);

// {x : ∃y, xyx = x}; equals the halo of the idempotent set.
Bitset von_neumann_regulars(const Semiring& r);

// Split of the halo of M in the regular module along Id(R): the halo of
// M ∩ Id(R) and, disjointly, the rest of the halo of M ∖ Id(R). The parts
// are verified to cover the halo of M; a violation throws.
struct HaloDecomposition {
  Bitset regular_part;
  Bitset irregular_part;
};
HaloDecomposition halo_decompose(const Module& regular, const Bitset& m);

// Monoid spine: every s factors as t = s1·s ∈ T, s2·t = s.
struct MonoidSpineCheck {
  bool ok = false;
  int unwitnessed = -1;
};
MonoidSpineCheck check_monoid_spine(const FiniteMonoid& s, const Bitset& t);

// Diagonal spine of a matrix semiring from a spine N of the base: the set
// of matrices ν·e_ii with ν ∈ N. Throws if N is not a spine of the base.
Bitset matrix_diagonal_spine(const MatrixSemiring& m, const Module& base_regular,
                             const Bitset& n_over_base);

// Spine N·T of A[S] from a spine N of A and a monoid spine T of S.
// Throws if either precondition fails.
Bitset monoid_semiring_spine(const MonoidSemiring& r, const Module& a_regular,
                             const Bitset& n_over_a, const FiniteMonoid& s,
                             const Bitset& t);

// S·u for a two-sided unit u of R; the translation identity
// halo(S)·u = halo(S·u) is verified. Throws if u has no two-sided inverse.
Bitset translate_spine_by_unit(const Module& regular, const Bitset& s, int u);

// Bullet product of subsets along a composition V1 × V2 -> V that is
// compatible with scalars from the commuting subsemiring subsets r1, r2.
// carrier1/carrier2 cut the factors down to sub-carriers (e.g. a subsemiring
// of R viewed inside the regular module); empty means the full carrier.
struct SpineProductContext {
  const Module* v1 = nullptr;
  const Module* v2 = nullptr;
  const Module* target = nullptr;
  OpTable compose;  // v1.size x v2.size, entries in target
  Bitset r1, r2;    // scalar subsets of the common semiring
  Bitset carrier1, carrier2;
};

// Validates the compatibility law and the coverage V = Σ^∞ V1•V2, returns
// S1•S2, and asserts halo(S1)•halo(S2) ⊆ halo(S1•S2) (halos of the factors
// taken with scalars restricted to r1, r2).
Bitset spine_product(const SpineProductContext& ctx, const Bitset& s1,
                     const Bitset& s2);

}  // namespace sa
