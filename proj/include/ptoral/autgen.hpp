#pragma once

// Automorphisms of S_k, finite group tables and the named automorphism
// groups of T, V and S.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ptoral/blackburn.hpp"

namespace ptoral {

// ---------------------------------------------------------------------------
// finite group tables

template <class G>
struct FiniteGroupTable {
  std::vector<G> elements;  // sorted
  std::vector<G> generators;
  G identity{};
  std::function<G(const G&, const G&)> compose;

  size_t order() const { return elements.size(); }
  bool contains(const G& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

  size_t index_of(const G& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) throw InvalidArgument("element is not in the table");
    return static_cast<size_t>(it - elements.begin());
  }

  u64 element_order(const G& x) const {
    G y = x;
    u64 n = 1;
    while (!(y == identity)) {
      y = compose(y, x);
      ++n;
    }
    return n;
  }

  G inverse(const G& x) const {
    G y = identity, prev = identity;
    do {
      prev = y;
      y = compose(y, x);
    } while (!(y == identity));
    return prev;
  }
};

namespace detail {

template <class G, class Op>
std::optional<FiniteGroupTable<G>> try_generate(std::vector<G> gens, G identity, Op compose, size_t cap) {
  std::set<G> seen{identity};
  std::vector<G> frontier{identity};
  while (!frontier.empty()) {
    std::vector<G> next;
    for (const auto& y : frontier)
      for (const auto& x : gens) {
        G z = compose(y, x);
        if (seen.insert(z).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(z));
        }
      }
    frontier = std::move(next);
  }
  FiniteGroupTable<G> t;
  t.elements.assign(seen.begin(), seen.end());
  t.generators = std::move(gens);
  t.identity = std::move(identity);
  t.compose = compose;
  return t;
}

}  // namespace detail

template <class G, class Op>
FiniteGroupTable<G> generate_group(std::vector<G> gens, G identity, Op compose, size_t cap) {
  auto t = detail::try_generate(std::move(gens), std::move(identity), compose, cap);
  if (!t) throw CapExceeded("group generation", cap + 1, cap);
  return std::move(*t);
}

// Subgroup of a table generated by some of its elements.
template <class G>
FiniteGroupTable<G> subgroup_of(const FiniteGroupTable<G>& table, std::vector<G> gens) {
  return generate_group(std::move(gens), table.identity, table.compose, table.order());
}

template <class G>
bool is_subgroup_table_normal(const FiniteGroupTable<G>& table, const FiniteGroupTable<G>& sub) {
  for (const auto& g : table.generators) {
    const G gi = table.inverse(g);
    for (const auto& h : sub.generators)
      if (!sub.contains(table.compose(table.compose(g, h), gi))) return false;
  }
  return true;
}

inline bool is_power_of(u64 n, u64 p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// O^{p'}(G): generated by the elements of p-power order.  Normality and
// coprimality of the index are checked, not assumed.
template <class G>
FiniteGroupTable<G> o_p_prime(const FiniteGroupTable<G>& table, int p) {
  std::vector<G> gens;
  for (const auto& x : table.elements)
    if (is_power_of(table.element_order(x), p)) gens.push_back(x);
  FiniteGroupTable<G> sub = subgroup_of(table, gens);
  if (!is_subgroup_table_normal(table, sub)) throw Error("O^{p'} candidate is not normal");
  if ((table.order() / sub.order()) % p == 0) throw Error("O^{p'} candidate has index divisible by p");
  return sub;
}

// O^p(G): generated by the elements of order prime to p.
template <class G>
FiniteGroupTable<G> o_p(const FiniteGroupTable<G>& table, int p) {
  std::vector<G> gens;
  for (const auto& x : table.elements)
    if (table.element_order(x) % p != 0) gens.push_back(x);
  FiniteGroupTable<G> sub = subgroup_of(table, gens);
  if (!is_subgroup_table_normal(table, sub)) throw Error("O^p candidate is not normal");
  if (!is_power_of(table.order() / sub.order(), p)) throw Error("O^p candidate has index not a power of p");
  return sub;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over F_p in the basis (s, zeta) of V

struct VMatrix {
  std::array<i64, 4> a{};  // row-major; column 0 is the image of s
  i64 p = 0;

  static VMatrix make(i64 a00, i64 a01, i64 a10, i64 a11, i64 p) {
    return {{mod(a00, p), mod(a01, p), mod(a10, p), mod(a11, p)}, p};
  }
  static VMatrix identity(i64 p) { return make(1, 0, 0, 1, p); }
  static VMatrix diag(i64 x, i64 y, i64 p) { return make(x, 0, 0, y, p); }

  i64 operator()(int r, int c) const { return a[r * 2 + c]; }
  i64 det() const { return mod(a[0] * a[3] - a[1] * a[2], p); }

  friend VMatrix operator*(const VMatrix& x, const VMatrix& y) {
    return make(x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
                x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1), x.p);
  }

  friend bool operator==(const VMatrix&, const VMatrix&) = default;
  friend auto operator<=>(const VMatrix&, const VMatrix&) = default;
};

inline FiniteGroupTable<VMatrix> vmatrix_group(std::vector<VMatrix> gens, i64 p) {
  return generate_group(std::move(gens), VMatrix::identity(p),
                        [](const VMatrix& x, const VMatrix& y) { return x * y; }, 1U << 20);
}

inline FiniteGroupTable<VMatrix> gl2(int p) {
  const i64 lambda = smallest_primitive_root(p);
  return vmatrix_group({VMatrix::diag(lambda, 1, p), VMatrix::make(1, 1, 0, 1, p), VMatrix::make(1, 0, 1, 1, p)}, p);
}

inline FiniteGroupTable<VMatrix> sl2(int p) {
  return vmatrix_group({VMatrix::make(1, 1, 0, 1, p), VMatrix::make(1, 0, 1, 1, p)}, p);
}

// Coordinates (a, b) of x = s^a zeta^b in V; nullopt if x is not in V.
inline std::optional<std::array<i64, 2>> v_coords(const GroupContext& g, const Element& x) {
  const i64 unit = g.q() / g.p();
  if (x.t[0] % unit != 0) return std::nullopt;
  const i64 b = x.t[0] / unit;
  for (int i = 0; i < g.rank(); ++i)
    if (x.t[i] != mod(b * (i + 1) * unit, g.q())) return std::nullopt;
  return std::array<i64, 2>{x.e, b % g.p()};
}

inline Element from_v_coords(const GroupContext& g, i64 a, i64 b) {
  Element x = power(g, g.zeta(), mod(b, g.p()));
  x.e = mod(a, g.p());
  return x;
}

inline Element apply_vmatrix(const GroupContext& g, const VMatrix& m, const Element& x) {
  const auto c = v_coords(g, x);
  if (!c) throw InvalidArgument("element is not in V");
  return from_v_coords(g, m(0, 0) * (*c)[0] + m(0, 1) * (*c)[1], m(1, 0) * (*c)[0] + m(1, 1) * (*c)[1]);
}

// ---------------------------------------------------------------------------
// automorphisms of S_k

// theta(t, e) = (M t, 0) theta(s)^e.  Equality and order use (M, theta(s))
// only, which is legitimate because T and s generate S_k.
struct GroupAutomorphism {
  ModMatrix torus_matrix;
  Element s_image;
  std::vector<Element> s_powers;  // theta(s)^e, e = 0..p-1

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    return a.torus_matrix == b.torus_matrix && a.s_image == b.s_image;
  }
  friend auto operator<=>(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    if (auto c = a.torus_matrix <=> b.torus_matrix; c != 0) return c;
    return a.s_image <=> b.s_image;
  }
};

// Validates bijectivity and compatibility M B = B^e M, e the s-exponent of
// the image of s (conjugation by any (u, e) acts on T as B^e).
inline GroupAutomorphism make_automorphism(const GroupContext& g, ModMatrix m, const Element& s_image) {
  g.validate(s_image);
  if (m.size() != g.rank() || m.modulus() != g.q()) throw InvalidArgument("torus matrix has the wrong shape");
  if (!m.is_invertible()) throw InvalidArgument("torus matrix is not invertible");
  if (s_image.e == 0) throw InvalidArgument("image of s lies in the torus");
  if (element_order(g, s_image) != static_cast<u64>(g.p())) throw InvalidArgument("image of s does not have order p");
  if (m * g.action() != g.action_power(s_image.e) * m) throw InvalidArgument("torus matrix is not compatible with the image of s");
  GroupAutomorphism a{std::move(m), s_image, {}};
  Element y = g.identity();
  for (int e = 0; e < g.p(); ++e) {
    a.s_powers.push_back(y);
    y = multiply(g, y, s_image);
  }
  return a;
}

inline Element apply(const GroupContext& g, const GroupAutomorphism& a, const Element& x) {
  Element r{g.apply(a.torus_matrix, x.t), 0};
  return multiply(g, r, a.s_powers[x.e]);
}

inline GroupAutomorphism identity_automorphism(const GroupContext& g) {
  return make_automorphism(g, ModMatrix::identity(g.rank(), g.q()), g.s());
}

// a o b
inline GroupAutomorphism compose(const GroupContext& g, const GroupAutomorphism& a, const GroupAutomorphism& b) {
  return make_automorphism(g, a.torus_matrix * b.torus_matrix, apply(g, a, b.s_image));
}

inline GroupAutomorphism inverse(const GroupContext& g, const GroupAutomorphism& a) {
  const ModMatrix minv = a.torus_matrix.inverse();
  const i64 e = inverse_mod(a.s_image.e, g.p());
  // a(s^e) = (u, 1) and a((-M^-1 u, 0) s^e) = (-u, 0)(u, 1) = s
  const Element u = a.s_powers[e];
  Element pre{g.apply(minv, u.t), e};
  for (int i = 0; i < g.rank(); ++i) pre.t[i] = mod(-pre.t[i], g.q());
  return make_automorphism(g, minv, pre);
}

// c_x(y) = x y x^-1
inline GroupAutomorphism inner_automorphism(const GroupContext& g, const Element& x) {
  return make_automorphism(g, g.action_power(x.e), conjugate(g, x, g.s()));
}

inline u64 automorphism_order(const GroupContext& g, const GroupAutomorphism& a) {
  GroupAutomorphism y = a;
  u64 n = 1;
  const GroupAutomorphism id = identity_automorphism(g);
  while (!(y == id)) {
    y = compose(g, y, a);
    ++n;
  }
  return n;
}

inline FiniteGroupTable<GroupAutomorphism> automorphism_group(const GroupContext& g, std::vector<GroupAutomorphism> gens,
                                                              size_t cap) {
  return generate_group(std::move(gens), identity_automorphism(g),
                        [g](const GroupAutomorphism& a, const GroupAutomorphism& b) { return compose(g, a, b); }, cap);
}

// Action of pi on M_k = {sum-zero vectors in the e-basis}, written in the
// basis v_a = e_a - e_{a+1}.  Uses e_i - e_j = w(i) - w(j) with
// w(i) = v_i + ... + v_{p-1} and w(p) = 0.
inline ModMatrix perm_to_torus_matrix(const GroupContext& g, const Permutation& pi) {
  if (pi.degree() != g.p()) throw InvalidArgument("permutation degree differs from p");
  const int n = g.rank();
  auto w = [&](int i, TorusCoords& acc, int sign) {
    for (int j = i; j <= n; ++j) acc[j - 1] += sign;
  };
  ModMatrix m(n, g.q());
  for (int a = 1; a <= n; ++a) {
    TorusCoords col{};
    w(pi(a), col, 1);
    w(pi(a + 1), col, -1);
    for (int r = 0; r < n; ++r) m.set(r, a - 1, col[r]);
  }
  return m;
}

inline i64 lambda_of(const GroupContext& g) { return smallest_primitive_root(g.p()); }
inline i64 mu_of(const GroupContext& g) { return unit_lift(lambda_of(g), g.p(), g.k()).value; }

// phi: T by the permutation matrix of sigma, s -> s^lambda
inline GroupAutomorphism build_phi(const GroupContext& g) {
  const Permutation sigma = sigma_normalizer_perm(g.p(), static_cast<int>(lambda_of(g)));
  return make_automorphism(g, perm_to_torus_matrix(g, sigma), power(g, g.s(), lambda_of(g)));
}

// psi: mu on every coordinate of T, identity on <s>
inline GroupAutomorphism build_psi(const GroupContext& g) {
  return make_automorphism(g, ModMatrix::scalar(g.rank(), g.q(), mu_of(g)), g.s());
}

// Image of theta in GL_2(F_p) acting on S/Phi(S), coordinates (e, sum).
inline VMatrix frattini_matrix(const GroupContext& g, const GroupAutomorphism& a) {
  const auto fs = frattini_coords(g, apply(g, a, g.s()));
  const auto fv = frattini_coords(g, apply(g, a, g.v(1)));
  return VMatrix::make(fs[0], fv[0], fs[1], fv[1], g.p());
}

inline std::optional<VMatrix> restrict_to_v(const GroupContext& g, const GroupAutomorphism& a) {
  const auto cs = v_coords(g, apply(g, a, g.s()));
  const auto cz = v_coords(g, apply(g, a, g.zeta()));
  if (!cs || !cz) return std::nullopt;
  return VMatrix::make((*cs)[0], (*cz)[0], (*cs)[1], (*cz)[1], g.p());
}

// A homomorphism given on the canonical generators of its domain.
struct Morphism {
  Subgroup domain;
  Subgroup codomain;
  std::vector<Element> images;  // of domain.canonical_generators()
};

inline Morphism restrict(const GroupContext& g, const GroupAutomorphism& a, const Subgroup& sub,
                         bool demand_automorphism) {
  Morphism m;
  m.domain = sub;
  std::vector<Element> imgs;
  for (const auto& x : sub.canonical_generators()) imgs.push_back(apply(g, a, x));
  m.codomain = structural_closure(g, imgs);
  m.images = std::move(imgs);
  if (demand_automorphism && !(m.codomain == sub)) throw NotInvariant("automorphism does not stabilize the subgroup");
  return m;
}

// ---------------------------------------------------------------------------
// torus tables

inline FiniteGroupTable<ModMatrix> matrix_group(const GroupContext& g, std::vector<ModMatrix> gens, size_t cap = 1U << 20) {
  return generate_group(std::move(gens), ModMatrix::identity(g.rank(), g.q()),
                        [](const ModMatrix& x, const ModMatrix& y) { return x * y; }, cap);
}

// Sigma_p in the v-basis, generated by (1 2) and the p-cycle.
inline FiniteGroupTable<ModMatrix> symmetric_torus_group(const GroupContext& g) {
  return matrix_group(g, {perm_to_torus_matrix(g, Permutation::transposition(g.p(), 1, 2)), g.action()});
}

// A_p, generated by (1 2 3) and the p-cycle.
inline FiniteGroupTable<ModMatrix> alternating_torus_group(const GroupContext& g) {
  const Permutation c3({2, 3, 1});
  std::vector<int> img(g.p());
  for (int i = 0; i < g.p(); ++i) img[i] = i < 3 ? c3(i + 1) : i + 1;
  return matrix_group(g, {perm_to_torus_matrix(g, Permutation(img)), g.action()});
}

// Is m the matrix of some permutation?  Returns it if so.
inline std::optional<Permutation> torus_matrix_permutation(const GroupContext& g, const ModMatrix& m) {
  // m e_i - m e_p = m(w(i)), so pi is recovered from the images of the w(i)
  const int p = g.p(), n = g.rank();
  std::vector<TorusCoords> w(p + 1);
  for (int i = 1; i <= p; ++i)
    for (int j = i; j <= n; ++j) w[i][j - 1] = 1;
  // pi(p) is the unique j with w(pi(i)) - w(pi(p)) = m w(i) for all i
  for (int last = 1; last <= p; ++last) {
    std::vector<int> img(p, 0);
    img[p - 1] = last;
    bool ok = true;
    for (int i = 1; i < p && ok; ++i) {
      const TorusCoords mw = g.apply(m, w[i]);
      int found = 0;
      for (int j = 1; j <= p; ++j) {
        TorusCoords d{};
        for (int r = 0; r < n; ++r) d[r] = mod(w[j][r] - w[last][r], g.q());
        if (d == mw) found = j;
      }
      if (found == 0) ok = false;
      img[i - 1] = found;
    }
    if (!ok) continue;
    try {
      Permutation pi(img);
      if (perm_to_torus_matrix(g, pi) == m) return pi;
    } catch (const InvalidArgument&) {
    }
  }
  return std::nullopt;
}

// An order-48 group of 2x2 matrices mod 3^k containing B, the matrix of
// sigma and mu I, reducing onto GL_2(F_3).  Searched at k = 2 over one extra
// generator, then lifted one level at a time through g + 3^(j-1) X.
inline FiniteGroupTable<ModMatrix> lift_gl2f3_action(const GroupContext& g) {
  if (g.p() != 3) throw InvalidArgument("lift_gl2f3_action needs p = 3");
  auto base_gens = [](const GroupContext& gj) {
    return std::vector<ModMatrix>{gj.action(), perm_to_torus_matrix(gj, sigma_normalizer_perm(3, 2)),
                                  ModMatrix::scalar(2, gj.q(), mu_of(gj))};
  };
  auto certify = [&](const GroupContext& gj, const ModMatrix& extra) -> std::optional<FiniteGroupTable<ModMatrix>> {
    if (!extra.is_invertible()) return std::nullopt;
    auto gens = base_gens(gj);
    gens.push_back(extra);
    auto t = detail::try_generate(gens, ModMatrix::identity(2, gj.q()),
                                  [](const ModMatrix& x, const ModMatrix& y) { return x * y; }, 48);
    if (!t || t->order() != 48) return std::nullopt;
    std::set<ModMatrix> images;
    for (const auto& x : t->elements) images.insert(x.reduced(3));
    if (images.size() != 48) return std::nullopt;
    return t;
  };

  std::optional<ModMatrix> found;
  std::optional<FiniteGroupTable<ModMatrix>> table;
  {
    const GroupContext g2(3, 2);
    for (i64 code = 0; code < 9 * 9 * 9 * 9 && !found; ++code) {
      const ModMatrix x = ModMatrix::from_rows({{code / 729, code / 81 % 9}, {code / 9 % 9, code % 9}}, 9);
      if (auto t = certify(g2, x)) {
        found = x;
        table = std::move(t);
      }
    }
  }
  if (!found) throw LiftNotFound("no GL_2(F_3) lift exists at level 2");
  for (int j = 3; j <= g.k(); ++j) {
    const GroupContext gj(3, j);
    const i64 step = ipow(3, j - 1);
    std::optional<ModMatrix> next;
    for (int code = 0; code < 81 && !next; ++code) {
      ModMatrix x(2, gj.q());
      int c = code;
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col, c /= 3) x.set(r, col, (*found)(r, col) + step * (c % 3));
      if (auto t = certify(gj, x)) {
        next = x;
        table = std::move(t);
      }
    }
    if (!next) throw LiftNotFound("GL_2(F_3) lift does not extend to level " + std::to_string(j));
    found = next;
  }
  return std::move(*table);
}

}  // namespace ptoral
