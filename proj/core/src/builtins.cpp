#include "sa/builtins.hpp"

#include <algorithm>
#include <cmath>

namespace sa {

namespace {

// |A|^count with the carrier cap enforced.
long checked_power(int base, int count, const char* what) {
  long size = 1;
  for (int i = 0; i < count; ++i) {
    size *= base;
    if (size > carrier_cap())
      throw Error(std::string(what) + ": carrier would exceed cap " +
                  std::to_string(carrier_cap()));
  }
  return size;
}

int min_cap(long v, int k) { return static_cast<int>(std::min<long>(v, k)); }

}  // namespace

Semiring boolean_semifield() {
  OpTable add = OpTable::from_rows({{0, 1}, {1, 1}});
  OpTable mul = OpTable::from_rows({{0, 0}, {0, 1}});
  return Semiring::make("B", 2, 0, 1, std::move(add), std::move(mul));
}

Semiring truncated_naturals(int k) {
  if (k < 1) throw Error("truncated_naturals: k must be >= 1");
  int n = k + 1;
  OpTable add(n, n), mul(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add.at(a, b) = min_cap(static_cast<long>(a) + b, k);
      mul.at(a, b) = min_cap(static_cast<long>(a) * b, k);
    }
  return Semiring::make("N" + std::to_string(k), n, 0, 1, std::move(add),
                        std::move(mul));
}

Semiring truncated_maxplus(int k) {
  if (k < 0) throw Error("truncated_maxplus: k must be >= 0");
  int n = k + 2;  // index 0 = -inf, index v+1 = value v
  OpTable add(n, n), mul(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add.at(a, b) = std::max(a, b);
      mul.at(a, b) = (a == 0 || b == 0) ? 0 : min_cap(static_cast<long>(a - 1) + (b - 1), k) + 1;
    }
  return Semiring::make("T" + std::to_string(k), n, 0, 1, std::move(add),
                        std::move(mul));
}

int MatrixSemiring::unit(int i, int j) const {
  long p = 1;
  for (int d = 0; d < i * n + j; ++d) p *= base;
  return static_cast<int>(one_entry * p);
}

int MatrixSemiring::entry(int x, int i, int j) const {
  long v = x;
  for (int d = 0; d < i * n + j; ++d) v /= base;
  return static_cast<int>(v % base);
}

int MatrixSemiring::encode(std::span<const int> entries) const {
  long x = 0, p = 1;
  for (int e : entries) {
    x += e * p;
    p *= base;
  }
  return static_cast<int>(x);
}

MatrixSemiring matrix_semiring(const Semiring& a, int n) {
  if (n < 1) throw Error("matrix_semiring: n must be >= 1");
  int cells = n * n;
  long size = checked_power(a.size(), cells, "matrix_semiring");
  int sz = static_cast<int>(size);

  // entry digits per carrier index
  std::vector<int> digit(static_cast<size_t>(sz) * cells);
  for (int x = 0; x < sz; ++x) {
    long v = x;
    for (int d = 0; d < cells; ++d) {
      digit[static_cast<size_t>(x) * cells + d] = static_cast<int>(v % a.size());
      v /= a.size();
    }
  }
  auto at = [&](int x, int i, int j) {
    return digit[static_cast<size_t>(x) * cells + i * n + j];
  };

  OpTable add(sz, sz), mul(sz, sz);
  std::vector<int> buf(cells);
  auto enc = [&]() {
    long x = 0, p = 1;
    for (int e : buf) {
      x += e * p;
      p *= a.size();
    }
    return static_cast<int>(x);
  };
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      for (int d = 0; d < cells; ++d)
        buf[d] = a.add(digit[static_cast<size_t>(x) * cells + d],
                       digit[static_cast<size_t>(y) * cells + d]);
      add.at(x, y) = enc();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int acc = a.zero();
          for (int k = 0; k < n; ++k)
            acc = a.add(acc, a.mul(at(x, i, k), at(y, k, j)));
          buf[i * n + j] = acc;
        }
      mul.at(x, y) = enc();
    }

  for (int d = 0; d < cells; ++d) buf[d] = a.zero();
  long p = 1;
  long zero_idx = 0, one_idx = 0;
  for (int d = 0; d < cells; ++d) {
    zero_idx += static_cast<long>(a.zero()) * p;
    int i = d / n, j = d % n;
    one_idx += static_cast<long>(i == j ? a.one() : a.zero()) * p;
    p *= a.size();
  }

  MatrixSemiring m;
  m.n = n;
  m.base = a.size();
  m.zero_entry = a.zero();
  m.one_entry = a.one();
  m.identity = static_cast<int>(one_idx);
  m.ring = Semiring::make("M" + std::to_string(n) + "(" + a.name() + ")", sz,
                          static_cast<int>(zero_idx), static_cast<int>(one_idx),
                          std::move(add), std::move(mul));
  return m;
}

int matrix_unit_monoid_index(int n, int i, int j) { return 1 + i * n + j; }

FiniteMonoid matrix_unit_monoid(int n) {
  if (n < 1) throw Error("matrix_unit_monoid: n must be >= 1");
  int size = 1 + n * n;
  OpTable op(size, size);  // zero-initialized: products default to the zero
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          op.at(matrix_unit_monoid_index(n, i, j),
                matrix_unit_monoid_index(n, k, l)) =
              (j == k) ? matrix_unit_monoid_index(n, i, l) : 0;
  std::optional<int> identity;
  if (n == 1) identity = matrix_unit_monoid_index(1, 0, 0);
  return FiniteMonoid::make(size, identity, 0, std::move(op));
}

int MonoidSemiring::embed_scalar(int a) const {
  if (!has_monoid_identity)
    throw Error("monoid_semiring: no monoid identity to embed scalars along");
  long p = 1;
  for (int d = 0; d < monoid_identity_pos; ++d) p *= base;
  return static_cast<int>(a * p);
}

int MonoidSemiring::embed_monoid(int s) const {
  long x = 0, p = 1;
  for (size_t k = 0; k < basis.size(); ++k) {
    x += static_cast<long>(basis[k] == s ? a_one : a_zero) * p;
    p *= base;
  }
  return static_cast<int>(x);
}

int MonoidSemiring::coefficient(int x, int basis_pos) const {
  long v = x;
  for (int d = 0; d < basis_pos; ++d) v /= base;
  return static_cast<int>(v % base);
}

MonoidSemiring monoid_semiring(const Semiring& a, const FiniteMonoid& s) {
  std::vector<int> basis;
  std::vector<int> pos(s.size(), -1);
  for (int e = 0; e < s.size(); ++e) {
    if (s.zero_element() && *s.zero_element() == e) continue;
    pos[e] = static_cast<int>(basis.size());
    basis.push_back(e);
  }
  if (basis.empty()) throw Error("monoid_semiring: empty basis");
  int m = static_cast<int>(basis.size());
  long size = checked_power(a.size(), m, "monoid_semiring");
  int sz = static_cast<int>(size);

  std::vector<int> digit(static_cast<size_t>(sz) * m);
  for (int x = 0; x < sz; ++x) {
    long v = x;
    for (int d = 0; d < m; ++d) {
      digit[static_cast<size_t>(x) * m + d] = static_cast<int>(v % a.size());
      v /= a.size();
    }
  }

  OpTable add(sz, sz), mul(sz, sz);
  std::vector<int> buf(m);
  auto enc = [&]() {
    long x = 0, p = 1;
    for (int e : buf) {
      x += e * p;
      p *= a.size();
    }
    return static_cast<int>(x);
  };
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      for (int d = 0; d < m; ++d)
        buf[d] = a.add(digit[static_cast<size_t>(x) * m + d],
                       digit[static_cast<size_t>(y) * m + d]);
      add.at(x, y) = enc();
      // convolution: (a_p · basis[p]) (b_q · basis[q]) lands on basis[p]·basis[q]
      for (int d = 0; d < m; ++d) buf[d] = a.zero();
      for (int p = 0; p < m; ++p) {
        int ap = digit[static_cast<size_t>(x) * m + p];
        if (ap == a.zero()) continue;
        for (int q = 0; q < m; ++q) {
          int bq = digit[static_cast<size_t>(y) * m + q];
          if (bq == a.zero()) continue;
          int st = s.op(basis[p], basis[q]);
          if (s.zero_element() && *s.zero_element() == st) continue;
          buf[pos[st]] = a.add(buf[pos[st]], a.mul(ap, bq));
        }
      }
      mul.at(x, y) = enc();
    }

  // zero = the all-0_A coefficient vector; one = the unique two-sided unit,
  // located by scan (it need not be supported on a single basis element,
  // e.g. the identity matrix inside A[matrix-unit monoid]).
  for (int d = 0; d < m; ++d) buf[d] = a.zero();
  int zero_idx = enc();
  int one_idx = -1;
  for (int x = 0; x < sz && one_idx < 0; ++x) {
    bool unit = true;
    for (int y = 0; y < sz; ++y)
      if (mul(x, y) != y || mul(y, x) != y) {
        unit = false;
        break;
      }
    if (unit) one_idx = x;
  }
  if (one_idx < 0)
    throw Error("monoid_semiring: no multiplicative identity exists in A[S]");

  MonoidSemiring out;
  out.basis = std::move(basis);
  out.base = a.size();
  out.a_zero = a.zero();
  out.a_one = a.one();
  if (s.identity()) {
    out.has_monoid_identity = true;
    out.monoid_identity_pos = pos[*s.identity()];
  }
  out.ring = Semiring::make(a.name() + "[S" + std::to_string(s.size()) + "]",
                            sz, zero_idx, one_idx, std::move(add),
                            std::move(mul));
  return out;
}

}  // namespace sa
