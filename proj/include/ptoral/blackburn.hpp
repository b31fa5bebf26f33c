#pragma once

// Conjugacy, center and tower structure of S_k, and the check of the
// presentation by s, s_1, ..., s_{(p-1)k}.

#include <string>
#include <vector>

#include "ptoral/report.hpp"
#include "ptoral/subgroup.hpp"

namespace ptoral {

// Z(S_k) = <zeta>.  Toral central elements are the fixed points of B; no
// outer element centralizes v_1.
inline Subgroup center(const GroupContext& g) {
  const Element z = g.zeta();
  if (multiply(g, g.s(), z) != multiply(g, z, g.s())) throw Error("zeta does not commute with s");
  if (element_order(g, z) != static_cast<u64>(g.p())) throw Error("zeta does not have order p");
  const ModMatrix b_minus_i = g.action() - ModMatrix::identity(g.rank(), g.q());
  if (kernel_size_mod(b_minus_i) != static_cast<u64>(g.p())) throw Error("fixed points of B exceed <zeta>");
  for (int e = 1; e < g.p(); ++e)
    if (g.act(e, g.v(1).t) == g.v(1).t) throw Error("an outer element centralizes v_1");
  return structural_closure(g, {z});
}

inline Element normalize_outer(const GroupContext& g, const Element& x) {
  if (x.e == 0) throw InvalidArgument("expected an element outside the torus");
  return power(g, x, inverse_mod(x.e, g.p()));
}

// Coordinate sum mod p of the power of x with s-exponent 1.
inline i64 outer_coset_invariant(const GroupContext& g, const Element& x) {
  return torus_sum(g, normalize_outer(g, x).t);
}

inline bool are_S_conjugate_outer(const GroupContext& g, const Element& x, const Element& y) {
  if (x.e == 0 || y.e == 0) throw InvalidArgument("are_S_conjugate_outer: torus element given");
  return x.e == y.e && outer_coset_invariant(g, x) == outer_coset_invariant(g, y);
}

// Orbit of x under conjugation by S_k, by breadth-first search on the
// generators s and v_1.  Sorted codes.
inline std::vector<u64> s_conjugacy_orbit(const GroupContext& g, const Element& x, u64 cap) {
  std::unordered_set<u64> seen{g.encode(x)};
  std::vector<Element> frontier{x};
  const Element gens[] = {g.s(), g.v(1)};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& y : frontier)
      for (const auto& c : gens) {
        const Element z = conjugate(g, c, y);
        if (seen.insert(g.encode(z)).second) {
          if (seen.size() > cap) throw CapExceeded("conjugacy orbit", seen.size(), cap);
          next.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  std::vector<u64> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// C_S(x) = <x, zeta> for x outside the torus.
inline Subgroup centralizer_of_outer(const GroupContext& g, const Element& x) {
  if (x.e == 0) throw InvalidArgument("centralizer_of_outer: torus element given");
  Subgroup c = structural_closure(g, {x, g.zeta()});
  if (c.order(g) != static_cast<u64>(g.p()) * g.p()) throw Error("centralizer of an outer element is not of order p^2");
  return c;
}

// Size of the S-class of an outer element: the coset of (I - B) T it lies in.
inline u64 outer_class_size(const GroupContext& g) {
  Subgroup img(g);
  for (int i = 1; i <= g.rank(); ++i) img.adjoin(g, {s_conj_by_torus(g, g.v(i).t).t, 0});
  return img.order(g);
}

// <v_1^i s>, i = 0..p-1
inline std::vector<Subgroup> order_p_reps_outside_torus(const GroupContext& g) {
  std::vector<Subgroup> reps;
  std::vector<i64> seen;
  for (int i = 0; i < g.p(); ++i) {
    Element x = g.s();
    x.t[0] = i;
    if (element_order(g, x) != static_cast<u64>(g.p())) throw Error("v_1^i s does not have order p");
    const i64 inv = outer_coset_invariant(g, x);
    if (std::find(seen.begin(), seen.end(), inv) != seen.end()) throw Error("two representatives are S-conjugate");
    seen.push_back(inv);
    reps.push_back(structural_closure(g, {x}));
  }
  return reps;
}

// I_k: S_k -> S_{k+1}, s -> s, v_i -> v_i^p
inline Element tower_embed(const GroupContext& from, const GroupContext& to, const Element& x) {
  if (from.p() != to.p() || to.k() != from.k() + 1) throw InvalidArgument("tower_embed: level mismatch");
  Element y = x;
  for (int i = 0; i < from.rank(); ++i) y.t[i] = x.t[i] * from.p();
  return y;
}

// s_1 .. s_{(p-1)k} realized in the v-model: s_1 .. s_{p-1} through the
// inverse of the binomial change of basis, the rest as iterated commutators
// with s.  Index 0 is unused.
inline std::vector<Element> s_basis_elements(const GroupContext& g) {
  const int n = g.rank(), total = n * g.k();
  const ModMatrix cinv = binomial_change_of_basis(g.p(), g.k()).inverse();
  std::vector<Element> s(total + 2);
  for (int j = 1; j <= n; ++j)
    for (int r = 0; r < n; ++r) s[j].t[r] = cinv(r, j - 1);
  for (int i = n + 1; i <= total + 1; ++i) s[i] = commutator(g, g.s(), s[i - 1]);
  return s;
}

inline CheckReport blackburn_presentation_check(const GroupContext& g) {
  CheckReport r;
  r.name = "presentation";
  Stopwatch clock;
  const int p = g.p(), total = g.rank() * g.k();
  const auto s = s_basis_elements(g);
  const Element one = g.identity();
  auto str = [&](const Element& x) { return format_element(g, x); };

  int checked = 0;
  for (int i = 2; i <= total; ++i, ++checked)
    if (commutator(g, g.s(), s[i - 1]) != s[i])
      r.fail("[s, s_" + std::to_string(i - 1) + "] != s_" + std::to_string(i) + ": " + str(commutator(g, g.s(), s[i - 1])));
  r.witness("family (1): " + std::to_string(checked) + " commutator relations");

  checked = 0;
  for (int i = 2; i <= total; ++i, ++checked)
    if (commutator(g, s[1], s[i]) != one) r.fail("[s_1, s_" + std::to_string(i) + "] != 1");
  r.witness("family (2): " + std::to_string(checked) + " commuting relations");

  if (power(g, g.s(), p) != one) r.fail("s^p != 1");
  r.witness("family (3): s^p = 1");

  // Truncation is legitimate only if s_{(p-1)k+1} is trivial.
  if (s[total + 1] != one) r.fail("s_" + std::to_string(total + 1) + " is not trivial: " + str(s[total + 1]));
  checked = 0;
  for (int i = 1; i <= total; ++i, ++checked) {
    Element acc = one;
    for (int j = 1; j <= p && i + j - 1 <= total; ++j) acc = multiply(g, acc, power(g, s[i + j - 1], binomial(p, j)));
    if (acc != one) r.fail("binomial relation at i=" + std::to_string(i) + " gives " + str(acc));
  }
  r.witness("family (4): " + std::to_string(checked) + " binomial relations");

  if (whole_group(g).order(g) != g.order() || structural_closure(g, {g.s(), s[1]}).order(g) != g.order())
    r.fail("s and s_1 do not generate S_k");
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace ptoral
