#pragma once

// The level-k truncation S_k = T_k x| <s>, T_k = (Z/p^k)^(p-1) in the
// v-basis, s acting by the matrix B.  Elements are pairs (t, e) meaning
// v_1^t1 ... v_{p-1}^t{p-1} s^e.

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptoral/modarith.hpp"

namespace ptoral {

// Largest supported p-1.  Encodability of |S_k| in 64 bits already rules
// out p >= 11 at k >= 2.
inline constexpr int kMaxRank = 6;

// Coordinates past the rank of the context are kept at zero.
using TorusCoords = std::array<i64, kMaxRank>;

struct Element {
  TorusCoords t{};
  i64 e = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

class GroupContext {
 public:
  GroupContext(int p, int k) : p_(p), k_(k) {
    if (!is_odd_prime(p)) throw InvalidArgument("p must be an odd prime, got " + std::to_string(p));
    if (k < 2) throw InvalidArgument("k must be at least 2, got " + std::to_string(k));
    if (p - 1 > kMaxRank) throw InvalidArgument("p - 1 exceeds the supported torus rank");
    n_ = p - 1;
    q_ = ipow(p, k);
    BigInt order = 1;
    for (int i = 0; i < n_ * k + 1; ++i) order *= p;
    if (order > BigInt(std::numeric_limits<i64>::max()))
      throw InvalidArgument("|S_k| does not fit the 63-bit element encoding");
    order_ = static_cast<u64>(order);
    torus_order_ = order_ / static_cast<u64>(p);

    b_ = action_matrix_b(p, k);
    ModMatrix m = ModMatrix::identity(n_, q_);
    for (int e = 0; e < p; ++e) {
      b_pow_.push_back(m);
      m = m * b_;
    }
    if (!m.is_identity()) throw Error("B^p is not the identity");
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int rank() const { return n_; }
  i64 q() const { return q_; }
  u64 order() const { return order_; }
  u64 torus_order() const { return torus_order_; }

  const ModMatrix& action() const { return b_; }
  const ModMatrix& action_power(i64 e) const { return b_pow_[mod(e, p_)]; }

  // B^e t
  TorusCoords act(i64 e, const TorusCoords& t) const { return apply(action_power(e), t); }

  TorusCoords apply(const ModMatrix& m, const TorusCoords& t) const {
    TorusCoords out{};
    const auto& a = m.data();
    for (int i = 0; i < n_; ++i) {
      i64 acc = 0;
      for (int j = 0; j < n_; ++j) acc += a[i * n_ + j] * t[j];
      out[i] = acc % q_;
    }
    return out;
  }

  // Mixed-radix code sum t_i q^i + e q^n, a bijection onto [0, |S_k|).
  u64 encode(const Element& x) const {
    u64 code = static_cast<u64>(x.e);
    for (int i = n_ - 1; i >= 0; --i) code = code * static_cast<u64>(q_) + static_cast<u64>(x.t[i]);
    return code;
  }

  Element decode(u64 code) const {
    Element x;
    for (int i = 0; i < n_; ++i) {
      x.t[i] = static_cast<i64>(code % static_cast<u64>(q_));
      code /= static_cast<u64>(q_);
    }
    x.e = static_cast<i64>(code);
    return x;
  }

  Element identity() const { return {}; }
  Element s() const { return {{}, 1}; }

  // v_i, 1-based as in the notation v_1 ... v_{p-1}
  Element v(int i) const {
    if (i < 1 || i > n_) throw InvalidArgument("v index out of range");
    Element x;
    x.t[i - 1] = 1;
    return x;
  }

  Element torus(const TorusCoords& t) const { return {normalized(t), 0}; }

  // (v_1 v_2^2 ... v_{p-1}^{p-1})^(p^(k-1))
  Element zeta() const {
    Element z;
    const i64 c = q_ / p_;
    for (int i = 0; i < n_; ++i) z.t[i] = (i + 1) * c % q_;
    return z;
  }

  TorusCoords normalized(TorusCoords t) const {
    for (int i = 0; i < kMaxRank; ++i) t[i] = i < n_ ? mod(t[i], q_) : 0;
    return t;
  }

  bool valid(const Element& x) const {
    if (x.e < 0 || x.e >= p_) return false;
    for (int i = 0; i < kMaxRank; ++i)
      if ((i < n_ && (x.t[i] < 0 || x.t[i] >= q_)) || (i >= n_ && x.t[i] != 0)) return false;
    return true;
  }

  void validate(const Element& x) const {
    if (!valid(x)) throw InvalidArgument("element does not belong to S_" + std::to_string(k_) + " at p=" + std::to_string(p_));
  }

  Element random_element(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u64> d(0, order_ - 1);
    return decode(d(rng));
  }

  friend bool operator==(const GroupContext& a, const GroupContext& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  int p_, k_, n_ = 0;
  i64 q_ = 1;
  u64 order_ = 1, torus_order_ = 1;
  ModMatrix b_;
  std::vector<ModMatrix> b_pow_;
};

inline GroupContext make_group(int p, int k) { return GroupContext(p, k); }

// ---------------------------------------------------------------------------
// arithmetic

inline Element multiply(const GroupContext& g, const Element& a, const Element& b) {
  const TorusCoords bt = g.act(a.e, b.t);
  Element r;
  for (int i = 0; i < g.rank(); ++i) r.t[i] = (a.t[i] + bt[i]) % g.q();
  r.e = (a.e + b.e) % g.p();
  return r;
}

// (t, e)^-1 = (-B^-e t, -e)
inline Element inverse(const GroupContext& g, const Element& a) {
  const TorusCoords bt = g.act(-a.e, a.t);
  Element r;
  for (int i = 0; i < g.rank(); ++i) r.t[i] = bt[i] == 0 ? 0 : g.q() - bt[i];
  r.e = mod(-a.e, g.p());
  return r;
}

inline Element power(const GroupContext& g, Element a, i64 n) {
  if (n < 0) {
    a = inverse(g, a);
    n = -n;
  }
  Element r = g.identity();
  while (n != 0) {
    if (n & 1) r = multiply(g, r, a);
    a = multiply(g, a, a);
    n >>= 1;
  }
  return r;
}

inline bool is_toral(const Element& x) { return x.e == 0; }

inline u64 torus_vector_order(const GroupContext& g, const TorusCoords& t) {
  i64 o = 1;
  for (int i = 0; i < g.rank(); ++i) o = std::max<i64>(o, g.q() / std::gcd(t[i], g.q()));
  return static_cast<u64>(o);
}

inline u64 element_order(const GroupContext& g, const Element& x) {
  if (x.e == 0) return torus_vector_order(g, x.t);
  return static_cast<u64>(g.p()) * torus_vector_order(g, power(g, x, g.p()).t);
}

// g h g^-1
inline Element conjugate(const GroupContext& ctx, const Element& g, const Element& h) {
  return multiply(ctx, multiply(ctx, g, h), inverse(ctx, g));
}

// a b a^-1 b^-1
inline Element commutator(const GroupContext& ctx, const Element& a, const Element& b) {
  return multiply(ctx, conjugate(ctx, a, b), inverse(ctx, b));
}

// s v s^-1 = B v
inline TorusCoords torus_conj_by_s(const GroupContext& g, const TorusCoords& v) { return g.act(1, v); }

// t s t^-1 = ((I - B) t) s
inline Element s_conj_by_torus(const GroupContext& g, const TorusCoords& t) {
  const TorusCoords bt = g.act(1, t);
  Element r;
  for (int i = 0; i < g.rank(); ++i) r.t[i] = mod(t[i] - bt[i], g.q());
  r.e = 1;
  return r;
}

inline i64 torus_sum(const GroupContext& g, const TorusCoords& t) {
  i64 s = 0;
  for (int i = 0; i < g.rank(); ++i) s += t[i];
  return mod(s, g.p());
}

// Coordinates of the image in S/Phi(S) = F_p^2: (s-exponent, coordinate sum).
inline std::array<i64, 2> frattini_coords(const GroupContext& g, const Element& x) {
  return {x.e % g.p(), torus_sum(g, x.t)};
}

// ---------------------------------------------------------------------------
// text form "v1^a v2^b ... s^e"

inline std::string format_element(const GroupContext& g, const Element& x) {
  std::ostringstream os;
  for (int i = 0; i < g.rank(); ++i) os << 'v' << (i + 1) << '^' << x.t[i] << ' ';
  os << "s^" << x.e;
  return os.str();
}

inline Element parse_element(const GroupContext& g, const std::string& text) {
  Element x;
  std::istringstream is(text);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos || caret == 0) throw InvalidArgument("bad element token '" + tok + "'");
    const std::string base = tok.substr(0, caret);
    i64 expo = 0;
    try {
      size_t used = 0;
      expo = std::stoll(tok.substr(caret + 1), &used);
      if (used != tok.size() - caret - 1) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad exponent in '" + tok + "'");
    }
    if (base == "s") {
      x.e = mod(expo, g.p());
    } else if (base[0] == 'v') {
      int idx = 0;
      try {
        idx = std::stoi(base.substr(1));
      } catch (const std::exception&) {
        throw InvalidArgument("bad generator in '" + tok + "'");
      }
      if (idx < 1 || idx > g.rank()) throw InvalidArgument("generator index out of range in '" + tok + "'");
      x.t[idx - 1] = mod(expo, g.q());
    } else {
      throw InvalidArgument("unknown generator in '" + tok + "'");
    }
    any = true;
  }
  if (!any) throw InvalidArgument("empty element text");
  return x;
}

}  // namespace ptoral
