#pragma once

#include "sa/halo.hpp"
#include "sa/module.hpp"

namespace sa {

// Poset of submodules under inclusion. Members are canonical bit-sets in
// lexicographic order; hasse edges (i,j) are the cover pairs members[i] ⊊
// members[j] with nothing strictly between.
struct SALattice {
  std::vector<Bitset> members;
  std::vector<std::pair<int, int>> hasse;

  int find(const Bitset& w) const;  // index or -1
};

// Longest strict-inclusion chain; length counts steps, not nodes.
struct ChainReport {
  int length = 0;
  std::vector<int> chain;  // member indices, increasing
};

// First pair (x,y) over V×V with x+y ∈ W but {x,y} ⊄ W, if any.
std::optional<std::pair<int, int>> sa_violation(const Module& v,
                                                const Bitset& w);
inline bool is_sa(const Module& v, const Bitset& w) {
  return !sa_violation(v, w);
}

// Least SA-submodule containing X: alternate submodule generation with the
// absorption step (x+y ∈ W forces x,y ∈ W) to a fixpoint.
Submodule sa_closure(const Module& v, const Bitset& x);

// Enumerates SA(V) from subsets of a verified additive spine: candidates
// are the submodules generated by G ⊆ T, kept when SA. Throws if T fails
// the spine check or |T| exceeds the cap.
SALattice enumerate_sa(const Module& v, const Bitset& spine,
                       int spine_cap = 20);

// Same enumeration with T = M·S for a spine M of R and a generating set S
// of V (both verified).
SALattice enumerate_sa_from_generators(const Module& v, const Bitset& m,
                                       const Bitset& s, int spine_cap = 20);

// Scalar products M·S inside V.
Bitset scalar_products(const Module& v, const Bitset& m, const Bitset& s);

// Ground truth: filter all 2^|V| subsets by the submodule and SA predicates.
// Requires |V| <= max_size.
SALattice enumerate_sa_bruteforce(const Module& v, int max_size = 16);

// Closure of SA(V) under pairwise submodule sum, to a fixpoint. Members
// need not be SA themselves.
SALattice enumerate_sigma_sa(const Module& v, const SALattice& sa);

ChainReport longest_chain(const SALattice& poset);

// Longest descending chain; equal to the ascending one on a finite poset.
ChainReport descending_chain_report(const SALattice& poset);

// SA(V; W0, V0) = {W ∈ SA(V) : W ∩ V0 = W0}, for V generated over V0 by S,
// with the Thm-4.1-style bounds asserted: at most 2^(ms) members and chains
// of length at most ms, m = |M|, s = |S|.
struct BetweenResult {
  std::vector<Bitset> members;
  ChainReport chain;
  int m = 0, s = 0;
};

BetweenResult sa_between(const Module& v, const Bitset& v0, const Bitset& w0,
                         const Bitset& s, const Bitset& ring_spine,
                         int spine_cap = 20);

// Every W in SA(V) is generated by W ∩ T (T must generate V).
bool is_sa_adapted(const Module& v, const Bitset& t, const SALattice& sa);

std::string lattice_to_dot(const SALattice& l);

}  // namespace sa
