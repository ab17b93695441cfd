#include "sa/halo.hpp"

namespace sa {

HaloWitness HaloResult::witness_for(int element) const {
  int pos = 0;
  HaloWitness out;
  bool found = false;
  members.for_each([&](int e) {
    if (e == element) {
      out = witnesses[pos];
      found = true;
    }
    ++pos;
  });
  if (!found) throw Error("witness_for: element not in halo");
  return out;
}

HaloResult halo(const Module& v, const Bitset& s, const Bitset* within,
                const Bitset* scalars) {
  const int nr = v.ring().size();
  HaloResult out;
  out.members = Bitset(v.size());
  std::vector<int> lam;
  if (scalars)
    lam = scalars->indices();
  else {
    lam.resize(nr);
    for (int i = 0; i < nr; ++i) lam[i] = i;
  }
  for (int x = 0; x < v.size(); ++x) {
    if (within && !within->test(x)) continue;
    bool found = false;
    for (int l : lam) {
      int lx = v.act(l, x);
      if (!s.test(lx)) continue;
      for (int m : lam) {
        if (v.act(m, lx) == x) {
          out.members.set(x);
          out.witnesses.push_back({l, m});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return out;
}

SpineCheck check_additive_spine(const Module& v, const Bitset& s) {
  SpineCheck out;
  out.halo_members = halo(v, s).members;
  Bitset closed = additive_closure(v, out.halo_members);
  out.ok = closed.count() == v.size();
  if (!out.ok) out.uncovered = closed.first_missing();
  return out;
}

SpineCheck check_additive_spine_in(const Module& v, const Bitset& w_members,
                                   const Bitset& s) {
  SpineCheck out;
  out.halo_members = halo(v, s, &w_members).members;
  // the halo lies inside W, so its closure does too; coverage of W is the test
  Bitset closed = additive_closure(v, out.halo_members);
  out.ok = w_members.subset_of(closed) && closed.subset_of(w_members);
  if (!out.ok) {
    Bitset missing = w_members - closed;
    out.uncovered = missing.empty() ? closed.first_missing() : missing.indices().front();
  }
  return out;
}

Bitset von_neumann_regulars(const Semiring& r) {
  Bitset out(r.size());
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.mul(r.mul(x, y), x) == x) {
        out.set(x);
        break;
      }
  return out;
}

HaloDecomposition halo_decompose(const Module& regular, const Bitset& m) {
  const Semiring& r = regular.ring();
  Bitset id = idempotents(r);
  HaloDecomposition out;
  out.regular_part = halo(regular, m & id).members;
  // the two halos can overlap (a regular element may also arise from a
  // non-idempotent witness), so the split is taken relative to the easy part
  out.irregular_part = halo(regular, m - id).members - out.regular_part;
  Bitset whole = halo(regular, m).members;
  if ((out.regular_part | out.irregular_part) != whole)
    throw Error("halo_decompose: parts do not cover the halo");
  return out;
}

MonoidSpineCheck check_monoid_spine(const FiniteMonoid& s, const Bitset& t) {
  MonoidSpineCheck out;
  for (int x = 0; x < s.size(); ++x) {
    bool found = false;
    for (int s1 = 0; s1 < s.size() && !found; ++s1) {
      int tx = s.op(s1, x);
      if (!t.test(tx)) continue;
      for (int s2 = 0; s2 < s.size(); ++s2)
        if (s.op(s2, tx) == x) {
          found = true;
          break;
        }
    }
    if (!found) {
      out.unwitnessed = x;
      return out;
    }
  }
  out.ok = true;
  return out;
}

Bitset matrix_diagonal_spine(const MatrixSemiring& m,
                             const Module& base_regular,
                             const Bitset& n_over_base) {
  SpineCheck base = check_additive_spine(base_regular, n_over_base);
  if (!base.ok)
    throw Error("matrix_diagonal_spine: N is not a spine of the base (misses " +
                std::to_string(base.uncovered) + ")");
  Bitset out(m.ring.size());
  std::vector<int> entries(static_cast<size_t>(m.n) * m.n, m.zero_entry);
  n_over_base.for_each([&](int nu) {
    for (int i = 0; i < m.n; ++i) {
      std::fill(entries.begin(), entries.end(), m.zero_entry);
      entries[static_cast<size_t>(i) * m.n + i] = nu;
      out.set(m.encode(entries));
    }
  });
  return out;
}

Bitset monoid_semiring_spine(const MonoidSemiring& r, const Module& a_regular,
                             const Bitset& n_over_a, const FiniteMonoid& s,
                             const Bitset& t) {
  SpineCheck base = check_additive_spine(a_regular, n_over_a);
  if (!base.ok)
    throw Error("monoid_semiring_spine: N is not a spine of A (misses " +
                std::to_string(base.uncovered) + ")");
  MonoidSpineCheck ms = check_monoid_spine(s, t);
  if (!ms.ok)
    throw Error("monoid_semiring_spine: T is not a monoid spine (no witness for " +
                std::to_string(ms.unwitnessed) + ")");
  Bitset out(r.ring.size());
  n_over_a.for_each([&](int nu) {
    t.for_each([&](int elem) {
      if (s.zero_element() && *s.zero_element() == elem) {
        out.set(r.ring.zero());
        return;
      }
      // ν·t: coefficient ν on basis element t
      long p = 1;
      long x = 0;
      for (size_t k = 0; k < r.basis.size(); ++k) {
        x += static_cast<long>(r.basis[k] == elem ? nu : r.a_zero) * p;
        p *= r.base;
      }
      out.set(static_cast<int>(x));
    });
  });
  return out;
}

Bitset translate_spine_by_unit(const Module& regular, const Bitset& s, int u) {
  const Semiring& r = regular.ring();
  if (!two_sided_inverse(r, u))
    throw Error("translate_spine_by_unit: " + std::to_string(u) +
                " is not a unit");
  auto translate = [&](const Bitset& set) {
    Bitset out(r.size());
    set.for_each([&](int x) { out.set(r.mul(x, u)); });
    return out;
  };
  Bitset su = translate(s);
  Bitset lhs = translate(halo(regular, s).members);
  Bitset rhs = halo(regular, su).members;
  if (lhs != rhs)
    throw Error("translate_spine_by_unit: halo(S)u != halo(Su)");
  return su;
}

Bitset spine_product(const SpineProductContext& ctx, const Bitset& s1,
                     const Bitset& s2) {
  const Module& v1 = *ctx.v1;
  const Module& v2 = *ctx.v2;
  const Module& v = *ctx.target;
  const Semiring& r = v.ring();
  auto bullet = [&](int a, int b) { return ctx.compose(a, b); };
  Bitset c1 = ctx.carrier1.universe() ? ctx.carrier1 : Bitset::full(v1.size());
  Bitset c2 = ctx.carrier2.universe() ? ctx.carrier2 : Bitset::full(v2.size());
  std::vector<int> x1 = c1.indices(), x2 = c2.indices();

  // compatibility: (λ1λ2)(x • y) = (λ1 x) • (λ2 y)
  std::vector<int> l1 = ctx.r1.indices(), l2 = ctx.r2.indices();
  for (int a : l1)
    for (int b : l2) {
      if (r.mul(a, b) != r.mul(b, a))
        throw Error("spine_product: scalars " + std::to_string(a) + " and " +
                    std::to_string(b) + " do not commute");
      for (int x : x1)
        for (int y : x2)
          if (v.act(r.mul(a, b), bullet(x, y)) !=
              bullet(v1.act(a, x), v2.act(b, y)))
            throw Error("spine_product: compatibility fails at scalars (" +
                        std::to_string(a) + "," + std::to_string(b) +
                        "), vectors (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
    }

  // coverage: V = Σ^∞ V1 • V2
  Bitset all_products(v.size());
  for (int x : x1)
    for (int y : x2) all_products.set(bullet(x, y));
  if (additive_closure(v, all_products).count() != v.size())
    throw Error("spine_product: V1 • V2 does not additively generate V");

  Bitset out(v.size());
  s1.for_each([&](int x) {
    s2.for_each([&](int y) { out.set(bullet(x, y)); });
  });

  // halo(S1) • halo(S2) ⊆ halo(S1 • S2)
  Bitset h1 = halo(v1, s1, &c1, &ctx.r1).members;
  Bitset h2 = halo(v2, s2, &c2, &ctx.r2).members;
  Bitset h = halo(v, out).members;
  bool ok = true;
  h1.for_each([&](int x) {
    h2.for_each([&](int y) {
      if (!h.test(bullet(x, y))) ok = false;
    });
  });
  if (!ok)
    throw Error("spine_product: halo(S1) • halo(S2) escapes halo(S1 • S2)");
  return out;
}

}  // namespace sa
