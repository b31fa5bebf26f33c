#pragma once

// Exact arithmetic over Z/p^k and Z: residues, dense matrices, Smith normal
// form, permutations of {1..p} and the Teichmueller unit lift.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptoral/errors.hpp"

namespace ptoral {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// scalar helpers

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m + m) % m;
}

inline i64 pow_mod(i64 base, u64 e, i64 m) {
  i64 result = 1 % m;
  base = mod(base, m);
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

struct ExtGcd {
  i64 g, x, y;  // g = a*x + b*y
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 quo = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quo * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline i64 inverse_mod(i64 a, i64 m) {
  auto [g, x, y] = ext_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) throw InvalidArgument("element is not a unit modulo " + std::to_string(m));
  return mod(x, m);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_prime(i64 n) { return n > 2 && is_prime(n); }

inline i64 ipow(i64 base, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline i64 binomial(i64 n, i64 r) {
  if (r < 0 || r > n) return 0;
  i64 out = 1;
  for (i64 i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// multiplicative order of a unit
inline i64 unit_order(i64 a, i64 m) {
  a = mod(a, m);
  if (std::gcd(a, m) != 1) throw InvalidArgument("unit_order of a non-unit");
  i64 x = a, n = 1;
  while (x != 1 % m) {
    x = mul_mod(x, a, m);
    ++n;
  }
  return n;
}

inline int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw InvalidArgument("primitive root requested for non-prime " + std::to_string(p));
  for (int g = 1; g < p + 1; ++g)
    if (std::gcd(g, p) == 1 && unit_order(g, p) == p - 1) return g;
  throw InvalidArgument("no primitive root");
}

// ---------------------------------------------------------------------------
// Residue

struct Residue {
  i64 value = 0;
  i64 modulus = 1;

  Residue() = default;
  Residue(i64 v, i64 m) : value(mod(v, m)), modulus(m) {
    if (m < 1) throw InvalidArgument("residue modulus must be positive");
  }

  bool is_unit() const { return std::gcd(value, modulus) == 1; }
  Residue inverse() const { return {inverse_mod(value, modulus), modulus}; }
  Residue pow(u64 e) const { return {pow_mod(value, e, modulus), modulus}; }

  friend Residue operator+(Residue a, Residue b) { return {a.check(b).value + b.value, a.modulus}; }
  friend Residue operator-(Residue a, Residue b) { return {a.check(b).value - b.value, a.modulus}; }
  friend Residue operator*(Residue a, Residue b) { return {mul_mod(a.check(b).value, b.value, a.modulus), a.modulus}; }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  const Residue& check(const Residue& o) const {
    if (o.modulus != modulus) throw InvalidArgument("residue modulus mismatch");
    return *this;
  }
};

// lambda^(p^(k-1)) mod p^k: the unique lift of lambda of order dividing p-1
inline Residue unit_lift(i64 lambda, int p, int k) {
  if (!is_odd_prime(p) || k < 1) throw InvalidArgument("unit_lift needs an odd prime and k >= 1");
  if (mod(lambda, p) == 0) throw InvalidArgument("unit_lift: lambda is not coprime to p");
  const i64 q = ipow(p, k);
  return {pow_mod(lambda, static_cast<u64>(ipow(p, k - 1)), q), q};
}

// ---------------------------------------------------------------------------
// ModMatrix: dense square matrix over Z/q, row-major

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int n, i64 q) : n_(n), q_(q), a_(static_cast<size_t>(n) * n, 0) {}

  static ModMatrix identity(int n, i64 q) {
    ModMatrix m(n, q);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static ModMatrix scalar(int n, i64 q, i64 c) {
    ModMatrix m(n, q);
    for (int i = 0; i < n; ++i) m.set(i, i, c);
    return m;
  }

  static ModMatrix from_rows(const std::vector<std::vector<i64>>& rows, i64 q) {
    const int n = static_cast<int>(rows.size());
    ModMatrix m(n, q);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) throw InvalidArgument("ModMatrix rows must form a square");
      for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  int size() const { return n_; }
  i64 modulus() const { return q_; }
  i64 operator()(int r, int c) const { return a_[idx(r, c)]; }
  void set(int r, int c, i64 v) { a_[idx(r, c)] = mod(v, q_); }
  const std::vector<i64>& data() const { return a_; }

  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
    if (x.n_ != y.n_ || x.q_ != y.q_) throw InvalidArgument("ModMatrix shape or modulus mismatch");
    ModMatrix z(x.n_, x.q_);
    for (int i = 0; i < x.n_; ++i)
      for (int l = 0; l < x.n_; ++l) {
        const i64 xil = x(i, l);
        if (xil == 0) continue;
        for (int j = 0; j < x.n_; ++j) z.a_[z.idx(i, j)] += xil * y(l, j) % x.q_;
      }
    for (auto& v : z.a_) v %= x.q_;
    return z;
  }

  friend ModMatrix operator+(const ModMatrix& x, const ModMatrix& y) {
    ModMatrix z(x.n_, x.q_);
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = (x.a_[i] + y.a_[i]) % x.q_;
    return z;
  }

  friend ModMatrix operator-(const ModMatrix& x, const ModMatrix& y) {
    ModMatrix z(x.n_, x.q_);
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = mod(x.a_[i] - y.a_[i], x.q_);
    return z;
  }

  ModMatrix scaled(i64 c) const {
    ModMatrix z(n_, q_);
    for (size_t i = 0; i < a_.size(); ++i) z.a_[i] = mul_mod(a_[i], c, q_);
    return z;
  }

  std::vector<i64> apply(std::span<const i64> v) const {
    std::vector<i64> out(n_, 0);
    for (int i = 0; i < n_; ++i) {
      i64 acc = 0;
      for (int j = 0; j < n_; ++j) acc = (acc + a_[idx(i, j)] * v[j]) % q_;
      out[i] = mod(acc, q_);
    }
    return out;
  }

  ModMatrix pow(u64 e) const {
    ModMatrix result = identity(n_, q_), base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  ModMatrix transpose() const {
    ModMatrix t(n_, q_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  // entries reduced modulo a divisor of the modulus
  ModMatrix reduced(i64 m) const {
    if (q_ % m != 0) throw InvalidArgument("reduction modulus must divide the matrix modulus");
    ModMatrix r(n_, m);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] % m;
    return r;
  }

  i64 determinant() const;
  bool is_invertible() const { return std::gcd(determinant(), q_) == 1; }
  ModMatrix inverse() const;

  bool is_identity() const { return *this == identity(n_, q_); }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
  friend auto operator<=>(const ModMatrix&, const ModMatrix&) = default;

 private:
  size_t idx(int r, int c) const { return static_cast<size_t>(r) * n_ + c; }

  int n_ = 0;
  i64 q_ = 1;
  std::vector<i64> a_;
};

// Gauss-Jordan with unit pivots.  Over Z/p^k a column of an invertible
// matrix always holds a unit below the diagonal after earlier steps.
inline ModMatrix ModMatrix::inverse() const {
  const int n = n_;
  ModMatrix a = *this, inv = identity(n, q_);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (std::gcd(a(r, c), q_) == 1) {
        piv = r;
        break;
      }
    if (piv < 0) throw InvalidArgument("ModMatrix is not invertible");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.a_[a.idx(c, j)], a.a_[a.idx(piv, j)]);
        std::swap(inv.a_[inv.idx(c, j)], inv.a_[inv.idx(piv, j)]);
      }
    const i64 u = inverse_mod(a(c, c), q_);
    for (int j = 0; j < n; ++j) {
      a.set(c, j, mul_mod(a(c, j), u, q_));
      inv.set(c, j, mul_mod(inv(c, j), u, q_));
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const i64 f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a.set(r, j, a(r, j) - mul_mod(f, a(c, j), q_));
        inv.set(r, j, inv(r, j) - mul_mod(f, inv(c, j), q_));
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// IntMatrix over arbitrary-precision integers

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i].at(j);
    return m;
  }

  static IntMatrix lift(const ModMatrix& m) {
    IntMatrix out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) out.at(i, j) = m(i, j);
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw InvalidArgument("IntMatrix shape mismatch");
    IntMatrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int l = 0; l < x.cols_; ++l) {
        if (x.at(i, l) == 0) continue;
        for (int j = 0; j < y.cols_; ++j) z.at(i, j) += x.at(i, l) * y.at(l, j);
      }
    return z;
  }

  void swap_rows(int r1, int r2) {
    for (int j = 0; j < cols_; ++j) std::swap(at(r1, j), at(r2, j));
  }
  void swap_cols(int c1, int c2) {
    for (int i = 0; i < rows_; ++i) std::swap(at(i, c1), at(i, c2));
  }
  // row[dst] += f * row[src]
  void add_row(int dst, int src, const BigInt& f) {
    for (int j = 0; j < cols_; ++j) at(dst, j) += f * at(src, j);
  }
  void add_col(int dst, int src, const BigInt& f) {
    for (int i = 0; i < rows_; ++i) at(i, dst) += f * at(i, src);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// Bareiss fraction-free elimination
inline BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

inline i64 ModMatrix::determinant() const {
  const BigInt d = ptoral::determinant(IntMatrix::lift(*this)) % q_;
  return mod(static_cast<i64>(d), q_);
}

struct SmithForm {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, nonnegative, d_i | d_{i+1}
  IntMatrix left;                // left * m * right == diag
  IntMatrix right;
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  const int R = m.rows(), C = m.cols();
  IntMatrix d = m, u = IntMatrix::identity(R), v = IntMatrix::identity(C);
  const int steps = std::min(R, C);
  bool exhausted = false;
  for (int t = 0; t < steps && !exhausted; ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      BigInt best = 0;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j) {
          const BigInt& x = d.at(i, j);
          if (x != 0 && (pr < 0 || abs(x) < best)) {
            best = abs(x);
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {  // remaining block is zero
        exhausted = true;
        break;
      }
      if (pr != t) {
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
      }
      if (pc != t) {
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
      }
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (d.at(i, t) == 0) continue;
        const BigInt f = -(d.at(i, t) / d.at(t, t));
        d.add_row(i, t, f);
        u.add_row(i, t, f);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (d.at(t, j) == 0) continue;
        const BigInt f = -(d.at(t, j) / d.at(t, t));
        d.add_col(j, t, f);
        v.add_col(j, t, f);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (!exhausted && d.at(t, t) < 0) {
      for (int j = 0; j < C; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < R; ++j) u.at(t, j) = -u.at(t, j);
    }
  }
  SmithForm out;
  out.diagonal.reserve(steps);
  for (int t = 0; t < steps; ++t) out.diagonal.push_back(d.at(t, t));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

// p-part of an integer
inline BigInt p_part(BigInt x, int p) {
  if (x == 0) return 0;
  if (x < 0) x = -x;
  BigInt r = 1;
  while (x % p == 0) {
    x /= p;
    r *= p;
  }
  return r;
}

// Number of solutions of m t = 0 over Z/q.
inline u64 kernel_size_mod(const ModMatrix& m) {
  const i64 q = m.modulus();
  const SmithForm snf = smith_normal_form(IntMatrix::lift(m));
  u64 n = 1;
  for (const auto& d : snf.diagonal) {
    const i64 dm = static_cast<i64>(d % q);
    n *= static_cast<u64>(std::gcd(dm, q) == 0 ? q : std::gcd(dm, q));
  }
  return n;
}

// Solves m t = w over Z/q through a Smith form computed once.
class ModSolver {
 public:
  explicit ModSolver(const ModMatrix& m) : q_(m.modulus()), left_(m.size(), q_), right_(m.size(), q_), diag_(m.size()) {
    const int n = m.size();
    const SmithForm snf = smith_normal_form(IntMatrix::lift(m));
    for (int i = 0; i < n; ++i) {
      diag_[i] = mod(static_cast<i64>(snf.diagonal[i] % q_), q_);
      for (int j = 0; j < n; ++j) {
        left_.set(i, j, mod(static_cast<i64>(snf.left.at(i, j) % q_), q_));
        right_.set(i, j, mod(static_cast<i64>(snf.right.at(i, j) % q_), q_));
      }
    }
  }

  // Some solution, if one exists.
  std::optional<std::vector<i64>> solve(std::span<const i64> w) const {
    std::vector<i64> y = left_.apply(w);
    for (size_t i = 0; i < y.size(); ++i) {
      const i64 d = diag_[i];
      const i64 g = std::gcd(d, q_);  // gcd(0, q) = q
      if (y[i] % g != 0) return std::nullopt;
      const i64 qg = q_ / g;
      y[i] = qg == 1 ? 0 : mul_mod(y[i] / g, inverse_mod(d / g, qg), qg);
    }
    return right_.apply(y);
  }

 private:
  i64 q_;
  ModMatrix left_, right_;
  std::vector<i64> diag_;
};

inline std::optional<std::vector<i64>> solve_mod(const ModMatrix& m, std::span<const i64> w) {
  return ModSolver(m).solve(w);
}

// ---------------------------------------------------------------------------
// The matrices of the extension

// Rows encode s_i^C(p,1) s_{i+1}^C(p,2) ... s_{i+p-1}^C(p,p) = 1, truncated.
inline IntMatrix relation_matrix(int p, int k) {
  if (!is_odd_prime(p)) throw InvalidArgument("relation_matrix: p must be an odd prime");
  if (k < 2) throw InvalidArgument("relation_matrix: k must be at least 2");
  const int n = (p - 1) * k;
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= p && i + j - 1 < n; ++j) r.at(i, i + j - 1) = binomial(p, j);
  return r;
}

// Column j holds the s-coordinates of v_{j+1} = sum_m C(j, m) s_{m+1}.
inline ModMatrix binomial_change_of_basis(int p, int k) {
  if (!is_odd_prime(p)) throw InvalidArgument("binomial_change_of_basis: p must be an odd prime");
  const int n = p - 1;
  ModMatrix c(n, ipow(p, k));
  for (int j = 0; j < n; ++j)
    for (int m = 0; m <= j; ++m) c.set(m, j, binomial(j, m));
  return c;
}

// Action of s on T in the s-basis: s_j -> s_j s_{j+1}, and s_{p-1} expressed
// through the relation s_1^C(p,1) ... s_{p-1}^C(p,p-1) s_p^C(p,p) = 1.
inline ModMatrix action_matrix_a(int p, int k) {
  if (!is_odd_prime(p)) throw InvalidArgument("action_matrix_a: p must be an odd prime");
  const int n = p - 1;
  ModMatrix a(n, ipow(p, k));
  for (int j = 0; j + 1 < n; ++j) {
    a.set(j, j, 1);
    a.set(j + 1, j, 1);
  }
  for (int i = 0; i + 1 < n; ++i) a.set(i, n - 1, -binomial(p, i + 1));
  a.set(n - 1, n - 1, 1 - binomial(p, p - 1));
  return a;
}

// Action of s on T in the v-basis: the cyclic shift e_i -> e_{i+1}.
inline ModMatrix action_matrix_b(int p, int k) {
  if (!is_odd_prime(p)) throw InvalidArgument("action_matrix_b: p must be an odd prime");
  const int n = p - 1;
  ModMatrix b(n, ipow(p, k));
  for (int i = 0; i + 1 < n; ++i) b.set(i + 1, i, 1);
  for (int i = 0; i < n; ++i) b.set(i, n - 1, -1);
  return b;
}

// ---------------------------------------------------------------------------
// Permutation of {1..n}

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int x : img_) {
      if (x < 1 || x > static_cast<int>(img_.size()) || seen[x])
        throw InvalidArgument("Permutation images must be a bijection on {1..n}");
      seen[x] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // (1 2 ... n)
  static Permutation standard_cycle(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (i + 1) % n + 1;
    return Permutation(std::move(v));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation t = identity(n);
    std::swap(t.img_[a - 1], t.img_[b - 1]);
    return t;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> v(b.img_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i] - 1];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < v.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
  }

  Permutation pow(i64 e) const {
    Permutation r = identity(degree()), base = e < 0 ? inverse() : *this;
    for (i64 i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    return r;
  }

  int order() const {
    int o = 1;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return o;
  }

  int sign() const {
    int transpositions = 0;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
      int len = 0;
      for (size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      if (len > 0) transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
  }

  bool is_identity() const { return *this == identity(degree()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// sigma(x) = lambda * x mod p on residues, fixing the point p (residue 0).
inline Permutation sigma_normalizer_perm(int p, int lambda) {
  if (!is_odd_prime(p)) throw InvalidArgument("sigma_normalizer_perm: p must be an odd prime");
  if (unit_order(lambda, p) != p - 1) throw InvalidArgument("sigma_normalizer_perm: lambda is not a primitive root");
  std::vector<int> v(p);
  for (int x = 1; x <= p; ++x) {
    const int r = static_cast<int>(mod(static_cast<i64>(lambda) * x, p));
    v[x - 1] = r == 0 ? p : r;
  }
  Permutation sigma(std::move(v));
  const Permutation c = Permutation::standard_cycle(p);
  if (sigma * c * sigma.inverse() != c.pow(lambda) || sigma.order() != p - 1)
    throw Error("sigma_normalizer_perm: conjugation identity failed");
  return sigma;
}

}  // namespace ptoral
