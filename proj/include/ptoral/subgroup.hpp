#pragma once

// Subgroups of S_k in structural form.  A subgroup H is either toral,
// H = L, or H = L <x> with x = (t0, 1); in both cases L = H cap T is stored
// as a lattice between q Z^n and Z^n in canonical Hermite form.

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ptoral/group.hpp"

namespace ptoral {

// Upper-triangular basis of a lattice containing q Z^n.  Diagonal entries
// divide q, entries right of the diagonal are reduced below the diagonal
// entry of their column.  Two lattices are equal iff their bases are.
class TorusLattice {
 public:
  TorusLattice() = default;
  TorusLattice(int n, i64 q) : n_(n), q_(q) {
    for (int i = 0; i < n; ++i) h_[i][i] = q;
  }

  static TorusLattice full(int n, i64 q) {
    TorusLattice l(n, q);
    for (int i = 0; i < n; ++i) l.h_[i][i] = 1;
    return l;
  }

  int rank() const { return n_; }
  i64 modulus() const { return q_; }
  i64 diagonal(int i) const { return h_[i][i]; }
  const TorusCoords& row(int i) const { return h_[i]; }

  u64 order() const {
    u64 o = 1;
    for (int i = 0; i < n_; ++i) o *= static_cast<u64>(q_ / h_[i][i]);
    return o;
  }

  bool is_trivial() const { return order() == 1; }

  // Returns true if v was not already in the lattice.
  bool insert(TorusCoords v) {
    bool grew = false;
    for (int c = 0; c < n_; ++c) {
      v[c] = mod(v[c], q_);
      if (v[c] == 0) continue;
      TorusCoords& h = h_[c];
      if (v[c] % h[c] == 0) {
        const i64 f = v[c] / h[c];
        for (int j = c; j < n_; ++j) v[j] = mod(v[j] - f * h[j], q_);
        continue;
      }
      grew = true;
      const auto [g, a, b] = ext_gcd(h[c], v[c]);
      const i64 hc = h[c] / g, vc = v[c] / g;
      TorusCoords nh{}, nv{};
      for (int j = c; j < n_; ++j) {
        nh[j] = mod(mul_mod(a, h[j], q_) + mul_mod(b, v[j], q_), q_);
        nv[j] = mod(mul_mod(hc, v[j], q_) - mul_mod(vc, h[j], q_), q_);
      }
      nh[c] = g;
      h = nh;
      v = nv;
    }
    if (grew) canonicalize();
    return grew;
  }

  bool contains(TorusCoords v) const {
    for (int c = 0; c < n_; ++c) {
      v[c] = mod(v[c], q_);
      if (v[c] % h_[c][c] != 0) return false;
      const i64 f = v[c] / h_[c][c];
      if (f != 0)
        for (int j = c; j < n_; ++j) v[j] = mod(v[j] - f * h_[c][j], q_);
    }
    return true;
  }

  // Canonical representative of v + L.
  TorusCoords reduce(TorusCoords v) const {
    for (int c = 0; c < n_; ++c) {
      v[c] = mod(v[c], q_);
      const i64 f = v[c] / h_[c][c];
      if (f != 0)
        for (int j = c; j < n_; ++j) v[j] = mod(v[j] - f * h_[c][j], q_);
    }
    return v;
  }

  // Smallest B-invariant lattice containing this one.
  void close_under(const GroupContext& g) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n_; ++i)
        if (h_[i][i] != q_ && insert(g.act(1, h_[i]))) changed = true;
    }
  }

  template <class F>
  void for_each(F&& f) const {
    TorusCoords coeff{}, cur{};
    std::array<i64, kMaxRank> bound{};
    for (int i = 0; i < n_; ++i) bound[i] = q_ / h_[i][i];
    for (;;) {
      f(cur);
      int i = 0;
      for (; i < n_; ++i) {
        for (int j = i; j < n_; ++j) cur[j] = (cur[j] + h_[i][j]) % q_;
        if (++coeff[i] < bound[i]) break;
        coeff[i] = 0;
        for (int j = i; j < n_; ++j) cur[j] = mod(cur[j] - mul_mod(bound[i], h_[i][j], q_), q_);
      }
      if (i == n_) return;
    }
  }

  std::vector<TorusCoords> basis() const {
    std::vector<TorusCoords> out;
    for (int i = 0; i < n_; ++i)
      if (h_[i][i] != q_) out.push_back(h_[i]);
    return out;
  }

  friend bool operator==(const TorusLattice&, const TorusLattice&) = default;
  friend auto operator<=>(const TorusLattice&, const TorusLattice&) = default;

 private:
  void canonicalize() {
    for (int c = 1; c < n_; ++c)
      for (int r = 0; r < c; ++r) {
        const i64 f = h_[r][c] / h_[c][c];
        if (f != 0)
          for (int j = c; j < n_; ++j) h_[r][j] = mod(h_[r][j] - f * h_[c][j], q_);
      }
  }

  int n_ = 0;
  i64 q_ = 1;
  std::array<TorusCoords, kMaxRank> h_{};
};

// torus part of (t0, 1)^e
inline TorusCoords outer_power_torus(const GroupContext& g, const TorusCoords& t0, i64 e) {
  return power(g, Element{t0, 1}, e).t;
}

class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(const GroupContext& g) : torus_(g.rank(), g.q()) {}

  const TorusLattice& torus_part() const { return torus_; }
  const std::optional<TorusCoords>& outer() const { return outer_; }
  const std::vector<Element>& generators() const { return gens_; }
  bool is_toral() const { return !outer_.has_value(); }

  u64 order(const GroupContext& g) const {
    return torus_.order() * (outer_ ? static_cast<u64>(g.p()) : 1U);
  }

  bool contains(const GroupContext& g, const Element& x) const {
    if (x.e == 0) return torus_.contains(x.t);
    if (!outer_) return false;
    return torus_.contains(multiply(g, x, power(g, Element{*outer_, 1}, -x.e)).t);
  }

  // Adds x to the generating set; returns true if the subgroup grew.
  bool adjoin(const GroupContext& g, const Element& x) {
    if (contains(g, x)) return false;
    gens_.push_back(x);
    if (x.e == 0) {
      torus_.insert(x.t);
    } else if (!outer_) {
      const Element y = power(g, x, inverse_mod(x.e, g.p()));
      outer_ = y.t;
      torus_.insert(power(g, y, g.p()).t);
    } else {
      torus_.insert(multiply(g, x, power(g, Element{*outer_, 1}, -x.e)).t);
    }
    if (outer_) {
      torus_.close_under(g);
      outer_ = torus_.reduce(*outer_);
    }
    return true;
  }

  // Lattice basis plus the outer generator: a small generating set that
  // depends only on the subgroup.
  std::vector<Element> canonical_generators() const {
    std::vector<Element> out;
    for (const auto& r : torus_.basis()) out.push_back({r, 0});
    if (outer_) out.push_back({*outer_, 1});
    return out;
  }

  template <class F>
  void for_each(const GroupContext& g, F&& f) const {
    const i64 top = outer_ ? g.p() : 1;
    for (i64 e = 0; e < top; ++e) {
      const TorusCoords base = e == 0 ? TorusCoords{} : outer_power_torus(g, *outer_, e);
      torus_.for_each([&](const TorusCoords& l) {
        Element x;
        for (int i = 0; i < g.rank(); ++i) x.t[i] = (base[i] + l[i]) % g.q();
        x.e = e;
        f(x);
      });
    }
  }

  std::vector<u64> element_codes(const GroupContext& g, u64 cap) const {
    const u64 n = order(g);
    if (n > cap) throw CapExceeded("subgroup enumeration", n, cap);
    std::vector<u64> codes;
    codes.reserve(n);
    for_each(g, [&](const Element& x) { codes.push_back(g.encode(x)); });
    std::sort(codes.begin(), codes.end());
    return codes;
  }

  // Explicit element set, filled by subgroup_closure.
  const std::optional<std::vector<u64>>& cached_elements() const { return elements_; }
  void cache_elements(std::vector<u64> codes) { elements_ = std::move(codes); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.torus_ == b.torus_ && a.outer_ == b.outer_;
  }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.torus_ <=> b.torus_; c != 0) return c;
    return a.outer_ <=> b.outer_;
  }

 private:
  TorusLattice torus_;
  std::optional<TorusCoords> outer_;
  std::vector<Element> gens_;
  std::optional<std::vector<u64>> elements_;
};

inline Subgroup structural_closure(const GroupContext& g, const std::vector<Element>& gens) {
  Subgroup h(g);
  for (const auto& x : gens) {
    g.validate(x);
    h.adjoin(g, x);
  }
  return h;
}

// Breadth-first closure on explicit elements, cross-checked against the
// structural closure.
inline Subgroup subgroup_closure(const GroupContext& g, const std::vector<Element>& gens, u64 cap) {
  Subgroup h = structural_closure(g, gens);
  std::unordered_set<u64> seen{g.encode(g.identity())};
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& y : frontier)
      for (const auto& x : gens) {
        const Element z = multiply(g, y, x);
        if (seen.insert(g.encode(z)).second) {
          if (seen.size() > cap) throw CapExceeded("subgroup closure", seen.size(), cap);
          next.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  std::vector<u64> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  if (codes.size() != h.order(g)) throw Error("explicit and structural closures disagree");
  for (u64 c : codes)
    if (!h.contains(g, g.decode(c))) throw Error("explicit and structural closures disagree");
  h.cache_elements(std::move(codes));
  return h;
}

inline u64 subgroup_order(const GroupContext& g, const Subgroup& h) { return h.order(g); }

inline Subgroup trivial_subgroup(const GroupContext& g) { return Subgroup(g); }

inline Subgroup torus_subgroup(const GroupContext& g) {
  std::vector<Element> gens;
  for (int i = 1; i <= g.rank(); ++i) gens.push_back(g.v(i));
  return structural_closure(g, gens);
}

inline Subgroup whole_group(const GroupContext& g) { return structural_closure(g, {g.s(), g.v(1)}); }

// V = <s, zeta>
inline Subgroup subgroup_v(const GroupContext& g) { return structural_closure(g, {g.s(), g.zeta()}); }

// [S, S] = (B - I) T
inline Subgroup derived_subgroup(const GroupContext& g) {
  std::vector<Element> gens;
  for (int i = 1; i <= g.rank(); ++i) gens.push_back(commutator(g, g.s(), g.v(i)));
  return structural_closure(g, gens);
}

inline bool is_subgroup_of(const GroupContext& g, const Subgroup& a, const Subgroup& b) {
  for (const auto& x : a.canonical_generators())
    if (!b.contains(g, x)) return false;
  return true;
}

inline bool is_normal(const GroupContext& g, const Subgroup& h) {
  for (const auto& x : h.canonical_generators())
    for (const auto& c : {g.s(), g.v(1)})
      if (!h.contains(g, conjugate(g, c, x))) return false;
  return true;
}

inline Subgroup normal_closure(const GroupContext& g, Subgroup h) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : h.canonical_generators())
      for (const auto& c : {g.s(), g.v(1)})
        if (h.adjoin(g, conjugate(g, c, x))) grew = true;
  }
  return h;
}

// N_S(H) and C_S(H) by a sweep over S_k.
inline Subgroup normalizer(const GroupContext& g, const Subgroup& h, u64 cap) {
  if (g.order() > cap) throw CapExceeded("normalizer sweep", g.order(), cap);
  const auto gens = h.canonical_generators();
  Subgroup n(g);
  for (u64 c = 0; c < g.order(); ++c) {
    const Element x = g.decode(c);
    if (n.contains(g, x)) continue;
    bool ok = true;
    for (const auto& y : gens)
      if (!h.contains(g, conjugate(g, x, y))) {
        ok = false;
        break;
      }
    if (ok) n.adjoin(g, x);
  }
  return n;
}

inline Subgroup centralizer(const GroupContext& g, const Subgroup& h, u64 cap) {
  if (g.order() > cap) throw CapExceeded("centralizer sweep", g.order(), cap);
  const auto gens = h.canonical_generators();
  Subgroup c(g);
  for (u64 code = 0; code < g.order(); ++code) {
    const Element x = g.decode(code);
    if (c.contains(g, x)) continue;
    bool ok = true;
    for (const auto& y : gens)
      if (conjugate(g, x, y) != y) {
        ok = false;
        break;
      }
    if (ok) c.adjoin(g, x);
  }
  return c;
}

}  // namespace ptoral
