#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace sa {

// Dense bit-set over a fixed universe {0, ..., n-1}. The universal currency
// for subsets of semiring and module carriers.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }

  static Bitset singleton(int universe, int i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }

  static Bitset of(int universe, const std::vector<int>& idx) {
    Bitset b(universe);
    for (int i : idx) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // this ⊆ o
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool proper_subset_of(const Bitset& o) const {
    return subset_of(o) && *this != o;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Order by the sorted element sequences, lexicographically; a set that is
  // an initial segment of another comes first.
  bool lex_less(const Bitset& o) const {
    std::vector<int> a = indices(), b = o.indices();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  // Smallest element of `all ∖ this`, or -1 if this covers the universe.
  int first_missing() const {
    for (int i = 0; i < n_; ++i)
      if (!test(i)) return i;
    return -1;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace sa
