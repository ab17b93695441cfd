#include "sa/lattice.hpp"

#include <algorithm>

namespace sa {

namespace {

// Sort members, dedupe, and compute Hasse edges by transitive reduction of
// strict inclusion.
SALattice finalize(std::vector<Bitset> members) {
  std::sort(members.begin(), members.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SALattice out;
  out.members = std::move(members);
  int n = static_cast<int>(out.members.size());
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) lt[i][j] = out.members[i].proper_subset_of(out.members[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n; ++k)
        if (lt[i][k] && lt[k][j]) {
          cover = false;
          break;
        }
      if (cover) out.hasse.emplace_back(i, j);
    }
  return out;
}

}  // namespace

int SALattice::find(const Bitset& w) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == w) return static_cast<int>(i);
  return -1;
}

std::optional<std::pair<int, int>> sa_violation(const Module& v,
                                                const Bitset& w) {
  for (int x = 0; x < v.size(); ++x)
    for (int y = 0; y < v.size(); ++y)
      if (w.test(v.add(x, y)) && (!w.test(x) || !w.test(y)))
        return std::make_pair(x, y);
  return std::nullopt;
}

Submodule sa_closure(const Module& v, const Bitset& x) {
  Bitset cur = generated_submodule(v, x).members();
  for (;;) {
    Bitset next = cur;
    for (int a = 0; a < v.size(); ++a)
      for (int b = 0; b < v.size(); ++b)
        if (cur.test(v.add(a, b))) {
          next.set(a);
          next.set(b);
        }
    if (next == cur) break;
    cur = generated_submodule(v, next).members();
  }
  return Submodule::trusted(cur);
}

Bitset scalar_products(const Module& v, const Bitset& m, const Bitset& s) {
  Bitset out(v.size());
  m.for_each([&](int r) {
    s.for_each([&](int x) { out.set(v.act(r, x)); });
  });
  return out;
}

namespace {

SALattice enumerate_from_candidate_set(const Module& v, const Bitset& t,
                                       int spine_cap) {
  std::vector<int> elems = t.indices();
  int n = static_cast<int>(elems.size());
  if (n > spine_cap)
    throw Error("enumerate_sa: candidate set of size " + std::to_string(n) +
                " exceeds cap " + std::to_string(spine_cap));
  std::vector<Bitset> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Bitset g(v.size());
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) g.set(elems[i]);
    Bitset w = generated_submodule(v, g).members();
    if (is_sa(v, w)) found.push_back(std::move(w));
  }
  return finalize(std::move(found));
}

}  // namespace

SALattice enumerate_sa(const Module& v, const Bitset& spine, int spine_cap) {
  SpineCheck sc = check_additive_spine(v, spine);
  if (!sc.ok)
    throw Error("enumerate_sa: T is not an additive spine (misses " +
                std::to_string(sc.uncovered) + ")");
  return enumerate_from_candidate_set(v, spine, spine_cap);
}

SALattice enumerate_sa_from_generators(const Module& v, const Bitset& m,
                                       const Bitset& s, int spine_cap) {
  Module reg = regular_module(v.ring_ptr());
  SpineCheck sc = check_additive_spine(reg, m);
  if (!sc.ok)
    throw Error("enumerate_sa: M is not an additive spine of R (misses " +
                std::to_string(sc.uncovered) + ")");
  if (generated_submodule(v, s).members().count() != v.size())
    throw Error("enumerate_sa: S does not generate V");
  return enumerate_from_candidate_set(v, scalar_products(v, m, s), spine_cap);
}

SALattice enumerate_sa_bruteforce(const Module& v, int max_size) {
  if (v.size() > max_size)
    throw Error("enumerate_sa_bruteforce: carrier " + std::to_string(v.size()) +
                " exceeds cap " + std::to_string(max_size));
  std::vector<Bitset> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << v.size()); ++mask) {
    Bitset w(v.size());
    for (int i = 0; i < v.size(); ++i)
      if ((mask >> i) & 1) w.set(i);
    if (Submodule::why_not(v, w)) continue;
    if (is_sa(v, w)) found.push_back(std::move(w));
  }
  return finalize(std::move(found));
}

SALattice enumerate_sigma_sa(const Module& v, const SALattice& sa) {
  std::vector<Bitset> members = sa.members;
  auto known = [&](const Bitset& w) {
    return std::find(members.begin(), members.end(), w) != members.end();
  };
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (j <= i) continue;
      Bitset sum = submodule_sum(v, members[i], members[j]);
      if (!known(sum)) members.push_back(std::move(sum));
    }
  return finalize(std::move(members));
}

ChainReport longest_chain(const SALattice& poset) {
  int n = static_cast<int>(poset.members.size());
  ChainReport out;
  if (n == 0) return out;
  // members sorted by lex order are not topological; order by cardinality
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poset.members[a].count() < poset.members[b].count();
  });
  std::vector<int> depth(n, 0), pred(n, -1);
  for (int u : order)
    for (auto [a, b] : poset.hasse)
      if (a == u && depth[u] + 1 > depth[b]) {
        depth[b] = depth[u] + 1;
        pred[b] = u;
      }
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (depth[i] > depth[best]) best = i;
  out.length = depth[best];
  for (int cur = best; cur != -1; cur = pred[cur]) out.chain.push_back(cur);
  std::reverse(out.chain.begin(), out.chain.end());
  return out;
}

ChainReport descending_chain_report(const SALattice& poset) {
  ChainReport up = longest_chain(poset);
  std::reverse(up.chain.begin(), up.chain.end());
  return up;
}

BetweenResult sa_between(const Module& v, const Bitset& v0, const Bitset& w0,
                         const Bitset& s, const Bitset& ring_spine,
                         int spine_cap) {
  if (auto err = Submodule::why_not(v, v0))
    throw Error("sa_between: V0 is not a submodule: " + *err);
  if (auto err = Submodule::why_not(v, w0))
    throw Error("sa_between: W0 is not a submodule: " + *err);
  if (auto viol = sa_violation(v, w0))
    throw Error("sa_between: W0 is not SA, witness (" +
                std::to_string(viol->first) + "," +
                std::to_string(viol->second) + ")");
  if (!w0.subset_of(v0)) throw Error("sa_between: W0 is not contained in V0");
  Bitset span = submodule_sum(v, v0, generated_submodule(v, s).members());
  if (span.count() != v.size())
    throw Error("sa_between: V0 + <S> does not cover V (misses " +
                std::to_string(span.first_missing()) + ")");
  Module reg = regular_module(v.ring_ptr());
  SpineCheck sc = check_additive_spine(reg, ring_spine);
  if (!sc.ok)
    throw Error("sa_between: M is not an additive spine of R (misses " +
                std::to_string(sc.uncovered) + ")");

  // SA(V) from the generating set V0 ∪ S via M (complete by the generation
  // theorem), then filter on W ∩ V0 = W0.
  SALattice sa = enumerate_from_candidate_set(
      v, scalar_products(v, ring_spine, v0 | s), spine_cap);

  BetweenResult out;
  out.m = ring_spine.count();
  out.s = s.count();
  for (const Bitset& w : sa.members)
    if ((w & v0) == w0) out.members.push_back(w);
  std::sort(out.members.begin(), out.members.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });

  SALattice sub;
  sub.members = out.members;
  int n = static_cast<int>(sub.members.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !sub.members[i].proper_subset_of(sub.members[j])) continue;
      bool cover = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && sub.members[i].proper_subset_of(sub.members[k]) &&
            sub.members[k].proper_subset_of(sub.members[j])) {
          cover = false;
          break;
        }
      if (cover) sub.hasse.emplace_back(i, j);
    }
  out.chain = longest_chain(sub);

  long bound = 1;
  for (int i = 0; i < out.m * out.s && bound <= (1L << 40); ++i) bound *= 2;
  if (static_cast<long>(out.members.size()) > bound)
    throw Error("sa_between: |SA(V;W0,V0)| exceeds 2^(ms)");
  if (out.chain.length > out.m * out.s)
    throw Error("sa_between: chain length exceeds ms");
  return out;
}

bool is_sa_adapted(const Module& v, const Bitset& t, const SALattice& sa) {
  if (generated_submodule(v, t).members().count() != v.size())
    throw Error("is_sa_adapted: T does not generate V");
  for (const Bitset& w : sa.members)
    if (generated_submodule(v, w & t).members() != w) return false;
  return true;
}

std::string lattice_to_dot(const SALattice& l) {
  std::string out = "digraph sa {\n  rankdir=BT;\n";
  for (size_t i = 0; i < l.members.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + l.members[i].to_string() +
           "\"];\n";
  }
  for (auto [a, b] : l.hasse)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace sa
