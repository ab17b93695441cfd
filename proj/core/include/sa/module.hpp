#pragma once

#include <optional>
#include <span>
#include <utility>

#include "sa/semiring.hpp"

namespace sa {

// Finite left semimodule over a Semiring, given by an addition table and a
// scalar-action table. Immutable after validated construction.
class Module {
 public:
  Module() = default;  // empty placeholder; build real ones via make()

  // Validates the module axioms; throws sa::Error with a witness.
  static Module make(SemiringPtr ring, int size, int zero, OpTable add,
                     OpTable act);
  static std::optional<std::string> check_axioms(const Semiring& ring, int size,
                                                 int zero, const OpTable& add,
                                                 const OpTable& act);

  const Semiring& ring() const { return *ring_; }
  const SemiringPtr& ring_ptr() const { return ring_; }
  int size() const { return size_; }
  int zero() const { return zero_; }
  int add(int v, int w) const { return add_(v, w); }
  int act(int r, int v) const { return act_(r, v); }
  const OpTable& add_table() const { return add_; }
  const OpTable& act_table() const { return act_; }

 private:
  SemiringPtr ring_;
  int size_ = 0, zero_ = 0;
  OpTable add_, act_;
};

// R as a left module over itself.
Module regular_module(SemiringPtr ring);

// Free module R^n, coordinatewise tables; coordinate i of element x is
// digit floor(x / |R|^i) mod |R|.
struct FreeModule {
  Module mod;
  int n = 0;
  int base = 0;
  std::vector<int> basis_elems;  // index of v_i

  int basis(int i) const { return basis_elems[i]; }
  int coordinate(int x, int i) const;
  int encode(std::span<const int> coords) const;
};

FreeModule free_module(SemiringPtr ring, int n);

// Componentwise product; element (a,b) has index a + |V1|·b.
Module product_module(const Module& v1, const Module& v2);
inline int product_encode(const Module& v1, int a, int b) {
  return a + v1.size() * b;
}

// Counterexample pair (x,y) with x + y = 0 and (x,y) != (0,0), if any.
std::optional<std::pair<int, int>> lzs_counterexample(const Module& v);
inline bool is_lzs(const Module& v) { return !lzs_counterexample(v); }

// Least superset of X ∪ {0} closed under addition (the set of all finite
// sums of elements of X). Worklist fixpoint.
Bitset additive_closure(const Module& v, const Bitset& x);

// Validated submodule: contains 0, closed under addition and scalar action.
class Submodule {
 public:
  static Submodule make(const Module& v, Bitset members);
  // nullopt if `members` is a valid submodule carrier; otherwise the first
  // violated closure condition with a witness.
  static std::optional<std::string> why_not(const Module& v,
                                            const Bitset& members);
  // Unchecked wrap for sets already known closed.
  static Submodule trusted(Bitset members) { return Submodule(std::move(members)); }

  const Bitset& members() const { return members_; }
  int size() const { return members_.count(); }

 private:
  explicit Submodule(Bitset m) : members_(std::move(m)) {}
  Bitset members_;
};

// Additive closure of R·S: the least submodule containing S.
Submodule generated_submodule(const Module& v, const Bitset& s);

// Submodule sum W + W' = additive closure of the union.
Bitset submodule_sum(const Module& v, const Bitset& w1, const Bitset& w2);

// Total-table R-linear map between modules over the same semiring.
class LinearMap {
 public:
  static LinearMap make(const Module& dom, const Module& cod,
                        std::vector<int> table);

  int operator()(int x) const { return table_[x]; }
  const std::vector<int>& table() const { return table_; }

 private:
  explicit LinearMap(std::vector<int> t) : table_(std::move(t)) {}
  std::vector<int> table_;
};

Bitset map_set(const LinearMap& f, const Bitset& s, int codomain_size);
Submodule image(const LinearMap& f, const Module& dom, const Module& cod);

// A submodule W of V repackaged as a module in its own right, with index
// maps between the two carriers.
struct SubmoduleView {
  Module mod;
  std::vector<int> to_parent;    // view index -> V index
  std::vector<int> from_parent;  // V index -> view index, -1 outside W

  Bitset restrict_set(const Bitset& s_in_parent) const;
  Bitset extend_set(const Bitset& s_in_view, int parent_size) const;
};

SubmoduleView restrict_module(const Module& v, const Bitset& w_members);

}  // namespace sa
