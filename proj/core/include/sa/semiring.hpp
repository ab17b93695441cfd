#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sa/bitset.hpp"

namespace sa {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default ceiling on carrier sizes for product-style constructors.
// Overridable via the SA_CARRIER_CAP environment variable.
long carrier_cap();

// Budget of (a,b,c) triples per ternary law before axiom verification
// falls back to seeded sampling.
constexpr long kTripleBudget = 10'000'000;

// Seed for all randomized verification and sampling.
constexpr std::uint64_t kSampleSeed = 0x5A11;

enum class VerifyMode { exhaustive, sampled };

// Square (or rectangular) operation table, row-major: rows index the left
// operand.
struct OpTable {
  int cols = 0;
  std::vector<int> t;

  OpTable() = default;
  OpTable(int rows, int cols_) : cols(cols_), t(static_cast<size_t>(rows) * cols_, 0) {}

  int rows() const { return cols ? static_cast<int>(t.size()) / cols : 0; }
  int operator()(int a, int b) const { return t[static_cast<size_t>(a) * cols + b]; }
  int& at(int a, int b) { return t[static_cast<size_t>(a) * cols + b]; }

  static OpTable from_rows(const std::vector<std::vector<int>>& rows);
  std::vector<std::vector<int>> to_rows() const;
};

// Finite semiring given by its addition and multiplication tables.
// Immutable after validated construction.
class Semiring {
 public:
  Semiring() = default;  // empty placeholder; build real ones via make()

  // Validates all axioms; throws sa::Error naming the first violated law
  // with a concrete witness.
  static Semiring make(std::string name, int size, int zero, int one,
                       OpTable add, OpTable mul);

  // Non-throwing variant of the axiom check; nullopt means valid.
  static std::optional<std::string> check_axioms(int size, int zero, int one,
                                                 const OpTable& add,
                                                 const OpTable& mul,
                                                 VerifyMode* mode_out = nullptr);

  int size() const { return size_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_(a, b); }
  int mul(int a, int b) const { return mul_(a, b); }
  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }
  const std::string& name() const { return name_; }
  VerifyMode verify_mode() const { return mode_; }

 private:
  std::string name_;
  int size_ = 0, zero_ = 0, one_ = 0;
  OpTable add_, mul_;
  VerifyMode mode_ = VerifyMode::exhaustive;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

// Finite multiplicative monoid, optionally pointed (with absorbing zero).
// `identity` may be absent: the matrix-unit semigroup with zero has no
// two-sided identity yet still supports the monoid-semiring construction.
class FiniteMonoid {
 public:
  static FiniteMonoid make(int size, std::optional<int> identity,
                           std::optional<int> zero_element, OpTable op);

  int size() const { return size_; }
  std::optional<int> identity() const { return identity_; }
  std::optional<int> zero_element() const { return zero_; }
  int op(int a, int b) const { return op_(a, b); }
  const OpTable& op_table() const { return op_; }

 private:
  FiniteMonoid() = default;
  int size_ = 0;
  std::optional<int> identity_, zero_;
  OpTable op_;
};

// {x : x·x = x}
Bitset idempotents(const Semiring& r);

// {x : ∃y, y·x = 1}
Bitset left_invertibles(const Semiring& r);

// Two-sided inverse of u, if any.
std::optional<int> two_sided_inverse(const Semiring& r, int u);

}  // namespace sa
