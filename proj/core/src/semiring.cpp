#include "sa/semiring.hpp"

#include <array>
#include <cstdlib>
#include <random>

namespace sa {

long carrier_cap() {
  static long cap = [] {
    if (const char* env = std::getenv("SA_CARRIER_CAP")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 65536L;
  }();
  return cap;
}

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
  OpTable t;
  t.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.cols)
      throw Error("ragged operation table");
    t.t.insert(t.t.end(), row.begin(), row.end());
  }
  return t;
}

std::vector<std::vector<int>> OpTable::to_rows() const {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < rows(); ++a)
    out.emplace_back(t.begin() + static_cast<size_t>(a) * cols,
                     t.begin() + static_cast<size_t>(a + 1) * cols);
  return out;
}

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

// Runs `law` over all (a,b,c) triples if size³ fits the budget, otherwise
// over seeded uniform samples. Returns the first failing triple.
template <class Law>
std::optional<std::array<int, 3>> scan_triples(int size, VerifyMode* mode,
                                               Law law) {
  long total = static_cast<long>(size) * size * size;
  if (total <= kTripleBudget) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c)
          if (!law(a, b, c)) return std::array<int, 3>{a, b, c};
    return std::nullopt;
  }
  if (mode) *mode = VerifyMode::sampled;
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_int_distribution<int> d(0, size - 1);
  for (long i = 0; i < 1'000'000; ++i) {
    int a = d(rng), b = d(rng), c = d(rng);
    if (!law(a, b, c)) return std::array<int, 3>{a, b, c};
  }
  return std::nullopt;
}

std::optional<std::string> check_table_shape(const OpTable& t, int size,
                                             const char* what) {
  if (t.cols != size || t.rows() != size)
    return std::string(what) + " table is not " + std::to_string(size) + "x" +
           std::to_string(size);
  for (int v : t.t)
    if (v < 0 || v >= size)
      return std::string(what) + " table entry " + std::to_string(v) +
             " out of range";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> Semiring::check_axioms(int size, int zero, int one,
                                                  const OpTable& add,
                                                  const OpTable& mul,
                                                  VerifyMode* mode_out) {
  if (mode_out) *mode_out = VerifyMode::exhaustive;
  if (size <= 0) return "carrier must be nonempty";
  if (zero < 0 || zero >= size || one < 0 || one >= size)
    return "zero/one index out of range";
  if (auto e = check_table_shape(add, size, "add")) return e;
  if (auto e = check_table_shape(mul, size, "mul")) return e;

  for (int a = 0; a < size; ++a) {
    if (add(zero, a) != a || add(a, zero) != a)
      return "additive identity violated at " + std::to_string(a);
    if (mul(one, a) != a || mul(a, one) != a)
      return "multiplicative identity violated at " + std::to_string(a);
    if (mul(zero, a) != zero || mul(a, zero) != zero)
      return "absorbing zero violated at " + std::to_string(a);
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (add(a, b) != add(b, a))
        return "additive commutativity fails at (" + std::to_string(a) + "," +
               std::to_string(b) + ")";

  if (auto w = scan_triples(size, mode_out, [&](int a, int b, int c) {
        return add(add(a, b), c) == add(a, add(b, c));
      }))
    return "additive associativity fails at " + triple((*w)[0], (*w)[1], (*w)[2]);
  if (auto w = scan_triples(size, mode_out, [&](int a, int b, int c) {
        return mul(mul(a, b), c) == mul(a, mul(b, c));
      }))
    return "multiplicative associativity fails at " +
           triple((*w)[0], (*w)[1], (*w)[2]);
  if (auto w = scan_triples(size, mode_out, [&](int a, int b, int c) {
        return mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
      }))
    return "left distributivity fails at " + triple((*w)[0], (*w)[1], (*w)[2]);
  if (auto w = scan_triples(size, mode_out, [&](int a, int b, int c) {
        return mul(add(a, b), c) == add(mul(a, c), mul(b, c));
      }))
    return "right distributivity fails at " + triple((*w)[0], (*w)[1], (*w)[2]);
  return std::nullopt;
}

Semiring Semiring::make(std::string name, int size, int zero, int one,
                        OpTable add, OpTable mul) {
  VerifyMode mode;
  if (auto err = check_axioms(size, zero, one, add, mul, &mode))
    throw Error("semiring '" + name + "': " + *err);
  Semiring r;
  r.name_ = std::move(name);
  r.size_ = size;
  r.zero_ = zero;
  r.one_ = one;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.mode_ = mode;
  return r;
}

FiniteMonoid FiniteMonoid::make(int size, std::optional<int> identity,
                                std::optional<int> zero_element, OpTable op) {
  if (size <= 0) throw Error("monoid carrier must be nonempty");
  if (auto e = check_table_shape(op, size, "op")) throw Error("monoid: " + *e);
  if (identity && (*identity < 0 || *identity >= size))
    throw Error("monoid identity out of range");
  if (zero_element && (*zero_element < 0 || *zero_element >= size))
    throw Error("monoid zero out of range");
  if (identity)
    for (int a = 0; a < size; ++a)
      if (op(*identity, a) != a || op(a, *identity) != a)
        throw Error("monoid identity law fails at " + std::to_string(a));
  if (zero_element)
    for (int a = 0; a < size; ++a)
      if (op(*zero_element, a) != *zero_element || op(a, *zero_element) != *zero_element)
        throw Error("monoid zero not absorbing at " + std::to_string(a));
  VerifyMode mode;
  if (auto w = scan_triples(size, &mode, [&](int a, int b, int c) {
        return op(op(a, b), c) == op(a, op(b, c));
      }))
    throw Error("monoid associativity fails at " +
                triple((*w)[0], (*w)[1], (*w)[2]));
  FiniteMonoid m;
  m.size_ = size;
  m.identity_ = identity;
  m.zero_ = zero_element;
  m.op_ = std::move(op);
  return m;
}

Bitset idempotents(const Semiring& r) {
  Bitset out(r.size());
  for (int x = 0; x < r.size(); ++x)
    if (r.mul(x, x) == x) out.set(x);
  return out;
}

Bitset left_invertibles(const Semiring& r) {
  Bitset out(r.size());
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.mul(y, x) == r.one()) {
        out.set(x);
        break;
      }
  return out;
}

std::optional<int> two_sided_inverse(const Semiring& r, int u) {
  for (int v = 0; v < r.size(); ++v)
    if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) return v;
  return std::nullopt;
}

}  // namespace sa
