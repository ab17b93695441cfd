#include "sa/module.hpp"

namespace sa {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::optional<std::string> Module::check_axioms(const Semiring& ring, int size,
                                                int zero, const OpTable& add,
                                                const OpTable& act) {
  if (size <= 0) return "carrier must be nonempty";
  if (zero < 0 || zero >= size) return "zero index out of range";
  if (add.cols != size || add.rows() != size) return "add table shape mismatch";
  if (act.cols != size || act.rows() != ring.size())
    return "act table shape mismatch (want |R| x |V|)";
  for (int v : add.t)
    if (v < 0 || v >= size) return "add table entry out of range";
  for (int v : act.t)
    if (v < 0 || v >= size) return "act table entry out of range";

  for (int v = 0; v < size; ++v) {
    if (add(zero, v) != v || add(v, zero) != v)
      return "additive identity violated at " + std::to_string(v);
    if (act(ring.one(), v) != v)
      return "1·v = v violated at " + std::to_string(v);
    if (act(ring.zero(), v) != zero)
      return "0_R·v = 0_V violated at " + std::to_string(v);
  }
  for (int r = 0; r < ring.size(); ++r)
    if (act(r, zero) != zero)
      return "r·0_V = 0_V violated at r=" + std::to_string(r);
  for (int v = 0; v < size; ++v)
    for (int w = 0; w < size; ++w)
      if (add(v, w) != add(w, v))
        return "additive commutativity fails at " + pair_str(v, w);
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      for (int w = 0; w < size; ++w)
        if (add(add(u, v), w) != add(u, add(v, w)))
          return "additive associativity fails at (" + std::to_string(u) + "," +
                 std::to_string(v) + "," + std::to_string(w) + ")";
  for (int r = 0; r < ring.size(); ++r)
    for (int v = 0; v < size; ++v)
      for (int w = 0; w < size; ++w)
        if (act(r, add(v, w)) != add(act(r, v), act(r, w)))
          return "r(v+w) = rv+rw fails at r=" + std::to_string(r) + ", " +
                 pair_str(v, w);
  for (int r = 0; r < ring.size(); ++r)
    for (int s = 0; s < ring.size(); ++s)
      for (int v = 0; v < size; ++v) {
        if (act(ring.add(r, s), v) != add(act(r, v), act(s, v)))
          return "(r+s)v = rv+sv fails at " + pair_str(r, s) + ", v=" +
                 std::to_string(v);
        if (act(ring.mul(r, s), v) != act(r, act(s, v)))
          return "(rs)v = r(sv) fails at " + pair_str(r, s) + ", v=" +
                 std::to_string(v);
      }
  return std::nullopt;
}

Module Module::make(SemiringPtr ring, int size, int zero, OpTable add,
                    OpTable act) {
  if (!ring) throw Error("module: null semiring");
  if (auto err = check_axioms(*ring, size, zero, add, act))
    throw Error("module: " + *err);
  Module m;
  m.ring_ = std::move(ring);
  m.size_ = size;
  m.zero_ = zero;
  m.add_ = std::move(add);
  m.act_ = std::move(act);
  return m;
}

Module regular_module(SemiringPtr ring) {
  OpTable add = ring->add_table();
  OpTable act = ring->mul_table();
  int size = ring->size(), zero = ring->zero();
  return Module::make(std::move(ring), size, zero, std::move(add),
                      std::move(act));
}

int FreeModule::coordinate(int x, int i) const {
  long v = x;
  for (int d = 0; d < i; ++d) v /= base;
  return static_cast<int>(v % base);
}

int FreeModule::encode(std::span<const int> coords) const {
  long x = 0, p = 1;
  for (int c : coords) {
    x += c * p;
    p *= base;
  }
  return static_cast<int>(x);
}

FreeModule free_module(SemiringPtr ring, int n) {
  if (n < 1) throw Error("free_module: n must be >= 1");
  const Semiring& r = *ring;
  long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= r.size();
    if (size > carrier_cap())
      throw Error("free_module: carrier would exceed cap " +
                  std::to_string(carrier_cap()));
  }
  int sz = static_cast<int>(size);

  std::vector<int> digit(static_cast<size_t>(sz) * n);
  for (int x = 0; x < sz; ++x) {
    long v = x;
    for (int d = 0; d < n; ++d) {
      digit[static_cast<size_t>(x) * n + d] = static_cast<int>(v % r.size());
      v /= r.size();
    }
  }
  auto enc = [&](const std::vector<int>& buf) {
    long x = 0, p = 1;
    for (int c : buf) {
      x += c * p;
      p *= r.size();
    }
    return static_cast<int>(x);
  };

  OpTable add(sz, sz), act(r.size(), sz);
  std::vector<int> buf(n);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      for (int d = 0; d < n; ++d)
        buf[d] = r.add(digit[static_cast<size_t>(x) * n + d],
                       digit[static_cast<size_t>(y) * n + d]);
      add.at(x, y) = enc(buf);
    }
  for (int s = 0; s < r.size(); ++s)
    for (int x = 0; x < sz; ++x) {
      for (int d = 0; d < n; ++d)
        buf[d] = r.mul(s, digit[static_cast<size_t>(x) * n + d]);
      act.at(s, x) = enc(buf);
    }

  FreeModule f;
  f.n = n;
  f.base = r.size();
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < n; ++d) buf[d] = (d == i) ? r.one() : r.zero();
    f.basis_elems.push_back(enc(buf));
  }
  for (int d = 0; d < n; ++d) buf[d] = r.zero();
  int zero = enc(buf);
  f.mod = Module::make(std::move(ring), sz, zero, std::move(add),
                       std::move(act));
  return f;
}

Module product_module(const Module& v1, const Module& v2) {
  if (v1.ring_ptr().get() != v2.ring_ptr().get())
    throw Error("product_module: factors live over different semirings");
  long size = static_cast<long>(v1.size()) * v2.size();
  if (size > carrier_cap())
    throw Error("product_module: carrier would exceed cap " +
                std::to_string(carrier_cap()));
  int sz = static_cast<int>(size);
  int n1 = v1.size();
  OpTable add(sz, sz), act(v1.ring().size(), sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      add.at(x, y) = product_encode(v1, v1.add(x % n1, y % n1),
                                    v2.add(x / n1, y / n1));
  for (int r = 0; r < v1.ring().size(); ++r)
    for (int x = 0; x < sz; ++x)
      act.at(r, x) = product_encode(v1, v1.act(r, x % n1), v2.act(r, x / n1));
  return Module::make(v1.ring_ptr(), sz,
                      product_encode(v1, v1.zero(), v2.zero()), std::move(add),
                      std::move(act));
}

std::optional<std::pair<int, int>> lzs_counterexample(const Module& v) {
  for (int x = 0; x < v.size(); ++x)
    for (int y = 0; y < v.size(); ++y)
      if (v.add(x, y) == v.zero() && (x != v.zero() || y != v.zero()))
        return std::make_pair(x, y);
  return std::nullopt;
}

Bitset additive_closure(const Module& v, const Bitset& x) {
  Bitset closed(v.size());
  closed.set(v.zero());
  std::vector<int> work;
  auto push = [&](int e) {
    if (!closed.test(e)) {
      closed.set(e);
      work.push_back(e);
    }
  };
  x.for_each(push);
  work = closed.indices();
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    std::vector<int> cur = closed.indices();
    for (int b : cur) push(v.add(a, b));
  }
  return closed;
}

std::optional<std::string> Submodule::why_not(const Module& v,
                                              const Bitset& members) {
  if (members.universe() != v.size()) return "member universe mismatch";
  if (!members.test(v.zero())) return "does not contain 0_V";
  std::vector<int> elems = members.indices();
  for (int a : elems)
    for (int b : elems)
      if (!members.test(v.add(a, b)))
        return "not closed under addition at " + pair_str(a, b);
  for (int r = 0; r < v.ring().size(); ++r)
    for (int a : elems)
      if (!members.test(v.act(r, a)))
        return "not closed under scalar action at r=" + std::to_string(r) +
               ", v=" + std::to_string(a);
  return std::nullopt;
}

Submodule Submodule::make(const Module& v, Bitset members) {
  if (auto err = why_not(v, members)) throw Error("submodule: " + *err);
  return Submodule(std::move(members));
}

Submodule generated_submodule(const Module& v, const Bitset& s) {
  Bitset rs(v.size());
  s.for_each([&](int x) {
    for (int r = 0; r < v.ring().size(); ++r) rs.set(v.act(r, x));
  });
  return Submodule::trusted(additive_closure(v, rs));
}

Bitset submodule_sum(const Module& v, const Bitset& w1, const Bitset& w2) {
  return additive_closure(v, w1 | w2);
}

LinearMap LinearMap::make(const Module& dom, const Module& cod,
                          std::vector<int> table) {
  if (dom.ring_ptr().get() != cod.ring_ptr().get())
    throw Error("linear map: domain and codomain over different semirings");
  if (static_cast<int>(table.size()) != dom.size())
    throw Error("linear map: table size mismatch");
  for (int y : table)
    if (y < 0 || y >= cod.size()) throw Error("linear map: entry out of range");
  if (table[dom.zero()] != cod.zero())
    throw Error("linear map: does not preserve 0");
  for (int x = 0; x < dom.size(); ++x)
    for (int y = 0; y < dom.size(); ++y)
      if (table[dom.add(x, y)] != cod.add(table[x], table[y]))
        throw Error("linear map: additivity fails at " + pair_str(x, y));
  for (int r = 0; r < dom.ring().size(); ++r)
    for (int x = 0; x < dom.size(); ++x)
      if (table[dom.act(r, x)] != cod.act(r, table[x]))
        throw Error("linear map: homogeneity fails at r=" + std::to_string(r) +
                    ", x=" + std::to_string(x));
  return LinearMap(std::move(table));
}

Bitset map_set(const LinearMap& f, const Bitset& s, int codomain_size) {
  Bitset out(codomain_size);
  s.for_each([&](int x) { out.set(f(x)); });
  return out;
}

Submodule image(const LinearMap& f, const Module& dom, const Module& cod) {
  Bitset img(cod.size());
  for (int x = 0; x < dom.size(); ++x) img.set(f(x));
  return Submodule::make(cod, img);
}

Bitset SubmoduleView::restrict_set(const Bitset& s_in_parent) const {
  Bitset out(static_cast<int>(to_parent.size()));
  s_in_parent.for_each([&](int p) {
    if (from_parent[p] >= 0) out.set(from_parent[p]);
  });
  return out;
}

Bitset SubmoduleView::extend_set(const Bitset& s_in_view,
                                 int parent_size) const {
  Bitset out(parent_size);
  s_in_view.for_each([&](int i) { out.set(to_parent[i]); });
  return out;
}

SubmoduleView restrict_module(const Module& v, const Bitset& w_members) {
  if (auto err = Submodule::why_not(v, w_members))
    throw Error("restrict_module: " + *err);
  SubmoduleView view;
  view.from_parent.assign(v.size(), -1);
  w_members.for_each([&](int p) {
    view.from_parent[p] = static_cast<int>(view.to_parent.size());
    view.to_parent.push_back(p);
  });
  int sz = static_cast<int>(view.to_parent.size());
  OpTable add(sz, sz), act(v.ring().size(), sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      add.at(a, b) = view.from_parent[v.add(view.to_parent[a], view.to_parent[b])];
  for (int r = 0; r < v.ring().size(); ++r)
    for (int a = 0; a < sz; ++a)
      act.at(r, a) = view.from_parent[v.act(r, view.to_parent[a])];
  view.mod = Module::make(v.ring_ptr(), sz, view.from_parent[v.zero()],
                          std::move(add), std::move(act));
  return view;
}

}  // namespace sa
