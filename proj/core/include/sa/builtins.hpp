#pragma once

#include <span>
#include <vector>

#include "sa/semiring.hpp"

namespace sa {

// The two-element idempotent semifield {0,1} with 1+1 = 1.
Semiring boolean_semifield();

// Naturals saturating at k: carrier {0,...,k}, a+b and a·b capped at k.
// The homomorphic image of the naturals under truncation. Requires k >= 1.
Semiring truncated_naturals(int k);

// Max-plus with values {-inf, 0, ..., k}: index 0 is -inf (the zero),
// index v+1 holds value v; add = max, mul = saturating plus; one is value 0.
Semiring truncated_maxplus(int k);

// n×n matrices over a base semiring. Carrier encoded in mixed radix,
// row-major: entry (i,j) of matrix x is digit floor(x / B^(i·n+j)) mod B
// with B = |A|.
struct MatrixSemiring {
  Semiring ring;
  int n = 0;
  int base = 0;      // |A|
  int identity = 0;  // index of I (same as ring.one())
  int zero_entry = 0, one_entry = 0;  // A's zero/one indices

  // Matrix unit e_ij (entry 1_A at (i,j), zeros elsewhere).
  int unit(int i, int j) const;
  // Entry (i,j) of the matrix with carrier index x, as an A-index.
  int entry(int x, int i, int j) const;
  // Carrier index of the matrix with the given row-major entries.
  int encode(std::span<const int> entries) const;
};

MatrixSemiring matrix_semiring(const Semiring& a, int n);

// The multiplicative structure {0} ∪ {e_ij} with e_ij·e_kl = δ_jk·e_il.
// Index 0 is the zero; e_ij sits at index 1 + i·n + j. Has no identity
// element for n >= 2.
FiniteMonoid matrix_unit_monoid(int n);
int matrix_unit_monoid_index(int n, int i, int j);

// Monoid semiring A[S]: the free A-module on the (nonzero) monoid elements
// with convolution product. Basis order is ascending monoid index, skipping
// the zero element when S is pointed; the element with coefficients (c_k)
// has carrier index Σ c_k · |A|^k.
struct MonoidSemiring {
  Semiring ring;
  std::vector<int> basis;  // monoid indices, in digit order
  int base = 0;            // |A|
  int a_zero = 0, a_one = 0;

  int embed_scalar(int a) const;  // a ↦ a·1_S (requires S to have identity)
  int embed_monoid(int s) const;  // s ↦ 1_A·s (zero element ↦ 0 of A[S])
  int coefficient(int x, int basis_pos) const;
  bool has_monoid_identity = false;
  int monoid_identity_pos = -1;  // position of 1_S in `basis`
};

MonoidSemiring monoid_semiring(const Semiring& a, const FiniteMonoid& s);

}  // namespace sa
