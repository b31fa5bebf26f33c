#pragma once

// Fusion systems over S_k generated by Aut(S), Aut(T) and Aut(V).
//
// Aut_F(S) = G Inn(S) with G a p'-group, so it is stored as the table of G
// plus the two inner generators c_s, c_{v_1}.  Aut_F(T) and Aut_F(V) are
// stored in full; they always contain the restrictions of G and of the
// inner automorphisms normalizing T and V.

#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ptoral/autgen.hpp"
#include "ptoral/blackburn.hpp"

namespace ptoral {

enum class Flavor { F_p3, F, Ftilde };

inline const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::F_p3: return "F_p3";
    case Flavor::F: return "F";
    case Flavor::Ftilde: return "Ftilde";
  }
  return "F";
}

inline std::optional<Flavor> flavor_from_string(const std::string& s) {
  if (s == "F_p3") return Flavor::F_p3;
  if (s == "F") return Flavor::F;
  if (s == "Ftilde") return Flavor::Ftilde;
  return std::nullopt;
}

// How a system was produced; lets checks rebuild the same system one level up.
enum class Recipe { standard, inner_only, v_only, subsystem };

struct FusionSystem {
  GroupContext ctx;
  Flavor flavor = Flavor::F;
  Recipe recipe = Recipe::standard;
  Subgroup S, T, V;
  std::vector<GroupAutomorphism> inner_generators;
  FiniteGroupTable<GroupAutomorphism> outer;
  FiniteGroupTable<ModMatrix> aut_T;
  FiniteGroupTable<VMatrix> aut_V;

  // |Aut_F(S)| = |G| |S| / |Z(S)|
  u64 aut_S_order() const { return outer.order() * (ctx.order() / static_cast<u64>(ctx.p())); }
};

// An element t of T with t s t^-1 = zeta s; c_t generates Aut_S(V).
inline Element v_normalizing_element(const GroupContext& g) {
  const ModMatrix i_minus_b = ModMatrix::identity(g.rank(), g.q()) - g.action();
  std::vector<i64> rhs(g.zeta().t.begin(), g.zeta().t.begin() + g.rank());
  const auto sol = solve_mod(i_minus_b, rhs);
  if (!sol) throw Error("zeta is not in the image of I - B");
  Element t;
  for (int i = 0; i < g.rank(); ++i) t.t[i] = (*sol)[i];
  return t;
}

inline VMatrix aut_s_v_generator(const GroupContext& g) {
  const auto m = restrict_to_v(g, inner_automorphism(g, v_normalizing_element(g)));
  if (!m) throw Error("normalizing element does not stabilize V");
  return *m;
}

// Greedy generating set of a table, in element order.
template <class G>
std::vector<G> small_generating_set(const FiniteGroupTable<G>& table) {
  std::vector<G> gens;
  FiniteGroupTable<G> cur = subgroup_of(table, {});
  for (const auto& x : table.elements) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_of(table, gens);
    if (cur.order() == table.order()) break;
  }
  return gens;
}

// Closes the generating data: adds the inner contributions and the
// restrictions of G to T and V.
inline FusionSystem assemble_fusion_system(const GroupContext& g, Flavor flavor, Recipe recipe,
                                           std::vector<GroupAutomorphism> outer_gens, std::vector<ModMatrix> t_gens,
                                           std::vector<VMatrix> v_gens) {
  FusionSystem fs{g, flavor, recipe, whole_group(g), torus_subgroup(g), subgroup_v(g), {}, {}, {}, {}};
  fs.inner_generators = {inner_automorphism(g, g.s()), inner_automorphism(g, g.v(1))};
  fs.outer = automorphism_group(g, outer_gens, 4096);
  for (const auto& a : fs.outer.elements)
    if (std::gcd(automorphism_order(g, a), static_cast<u64>(g.p())) != 1)
      throw InvalidArgument("outer automorphisms must form a p'-group");

  t_gens.push_back(g.action());
  v_gens.push_back(aut_s_v_generator(g));
  for (const auto& a : outer_gens) {
    t_gens.push_back(a.torus_matrix);
    const auto mv = restrict_to_v(g, a);
    if (!mv) throw InvalidArgument("outer automorphisms must stabilize V");
    v_gens.push_back(*mv);
  }
  fs.aut_T = matrix_group(g, std::move(t_gens));
  fs.aut_V = vmatrix_group(std::move(v_gens), g.p());
  return fs;
}

inline u64 factorial(int n) { return n <= 1 ? 1 : static_cast<u64>(n) * factorial(n - 1); }

inline FusionSystem build_fusion(const GroupContext& g, Flavor flavor) {
  const int p = g.p();
  if (flavor == Flavor::Ftilde && p == 3) throw InvalidArgument("flavor Ftilde needs p >= 5");
  if (flavor == Flavor::F_p3 && p != 3) throw InvalidArgument("flavor F_p3 needs p = 3");
  const auto phi = build_phi(g), psi = build_psi(g);
  const i64 lambda = lambda_of(g);
  std::optional<FusionSystem> fs;
  u64 want_outer = 0, want_t = 0, want_v = 0;
  if (p == 3) {
    // F at p = 3 is the same system
    const auto lift = lift_gl2f3_action(g);
    const auto gl = gl2(3);
    fs = assemble_fusion_system(g, flavor, Recipe::standard, {phi, psi}, lift.generators, gl.generators);
    want_outer = 4;
    want_t = want_v = 48;
  } else if (flavor == Flavor::Ftilde) {
    const auto sym = symmetric_torus_group(g);
    auto t_gens = sym.generators;
    t_gens.push_back(psi.torus_matrix);
    fs = assemble_fusion_system(g, flavor, Recipe::standard, {phi, psi}, t_gens, gl2(p).generators);
    want_outer = static_cast<u64>((p - 1) * (p - 1));
    want_t = factorial(p) * (p - 1);
    want_v = gl2(p).order();
  } else {
    const auto phi2 = compose(g, phi, phi);
    const auto psi_phiinv = compose(g, psi, inverse(g, phi));
    auto t_gens = alternating_torus_group(g).generators;
    t_gens.push_back(psi_phiinv.torus_matrix);
    auto v_gens = sl2(p).generators;
    v_gens.push_back(VMatrix::diag(lambda * lambda, 1, p));
    fs = assemble_fusion_system(g, flavor, Recipe::standard, {phi2, psi_phiinv}, t_gens, v_gens);
    want_outer = static_cast<u64>((p - 1) * (p - 1) / 2);
    want_t = factorial(p) / 2 * (p - 1);
    want_v = sl2(p).order() * (p - 1) / 2;
  }
  if (fs->outer.order() != want_outer || fs->aut_T.order() != want_t || fs->aut_V.order() != want_v)
    throw Error("automorphism tables of " + std::string(to_string(flavor)) + " have unexpected orders");
  return std::move(*fs);
}

// The fusion system of S_k itself.
inline FusionSystem inner_only_fusion(const GroupContext& g) {
  return assemble_fusion_system(g, Flavor::F, Recipe::inner_only, {}, {}, {});
}

// Aut(V) of the flavor without any toral or outer automorphisms.
inline FusionSystem v_only_fusion(const GroupContext& g, Flavor flavor) {
  const FusionSystem full = build_fusion(g, flavor);
  return assemble_fusion_system(g, flavor, Recipe::v_only, {}, {}, full.aut_V.generators);
}

// The analogous system one level up the tower.
inline FusionSystem rebuild_at(const FusionSystem& fs, const GroupContext& g) {
  switch (fs.recipe) {
    case Recipe::standard: return build_fusion(g, fs.flavor);
    case Recipe::inner_only: return inner_only_fusion(g);
    case Recipe::v_only: return v_only_fusion(g, fs.flavor);
    case Recipe::subsystem: break;
  }
  throw InvalidArgument("subsystems cannot be rebuilt at another level");
}

// ---------------------------------------------------------------------------
// F-conjugacy of elements

template <class F>
void for_each_neighbor(const FusionSystem& fs, const Element& x, F&& f) {
  const GroupContext& g = fs.ctx;
  for (const auto& a : fs.outer.generators) f(apply(g, a, x));
  for (const auto& a : fs.inner_generators) f(apply(g, a, x));
  if (x.e == 0)
    for (const auto& m : fs.aut_T.generators) f(Element{g.apply(m, x.t), 0});
  if (v_coords(g, x))
    for (const auto& m : fs.aut_V.generators) f(apply_vmatrix(g, m, x));
}

// Sorted codes of the F-class of x.
inline std::vector<u64> f_class_of_element(const FusionSystem& fs, const Element& x, u64 cap) {
  const GroupContext& g = fs.ctx;
  g.validate(x);
  std::unordered_set<u64> seen{g.encode(x)};
  std::vector<Element> frontier{x};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& y : frontier)
      for_each_neighbor(fs, y, [&](const Element& z) {
        if (seen.insert(g.encode(z)).second) {
          if (seen.size() > cap) throw CapExceeded("F-class of " + format_element(g, x), seen.size(), cap);
          next.push_back(z);
        }
      });
    frontier = std::move(next);
  }
  std::vector<u64> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// F-conjugacy modulo S-conjugacy.  An S-class is named by a canonical
// representative: (v1^i s)^e for x outside T with s-exponent e and coset
// invariant i, and the least code of the <B>-orbit for x in T.
inline Element s_class_rep(const GroupContext& g, const Element& x) {
  if (x.e != 0) {
    Element y = g.s();
    y.t[0] = outer_coset_invariant(g, x);
    return power(g, y, x.e);
  }
  Element best = x;
  for (int e = 1; e < g.p(); ++e) {
    const Element y{g.act(e, x.t), 0};
    if (g.encode(y) < g.encode(best)) best = y;
  }
  return best;
}

inline u64 s_class_size(const GroupContext& g, const Element& x) {
  if (x.e != 0) return outer_class_size(g);
  return g.act(1, x.t) == x.t ? 1 : static_cast<u64>(g.p());
}

// Representatives of the S-classes making up the F-class of x, by code.
// Aut_F(S) permutes S-classes, so its generators act on representatives;
// Aut_F(T) and Aut_F(V) act on every member lying in T or V.
inline std::vector<Element> f_class_reps(const FusionSystem& fs, const Element& x, u64 cap) {
  const GroupContext& g = fs.ctx;
  g.validate(x);
  std::vector<Element> v_members;
  for (int e = 0; e < g.p(); ++e)
    for (int j = 0; j < g.p(); ++j) v_members.push_back(multiply(g, power(g, g.zeta(), j), power(g, g.s(), e)));
  std::map<u64, Element> seen;
  std::vector<Element> frontier;
  auto visit = [&](const Element& y) {
    const Element r = s_class_rep(g, y);
    if (seen.emplace(g.encode(r), r).second) {
      if (seen.size() > cap) throw CapExceeded("S-classes in the F-class of " + format_element(g, x), seen.size(), cap);
      frontier.push_back(r);
    }
  };
  visit(x);
  while (!frontier.empty()) {
    const auto current = std::move(frontier);
    frontier.clear();
    for (const auto& r : current) {
      for (const auto& a : fs.outer.generators) visit(apply(g, a, r));
      if (r.e == 0)
        for (int e = 0; e < g.p(); ++e)
          for (const auto& m : fs.aut_T.generators) visit(Element{g.apply(m, g.act(e, r.t)), 0});
      for (const auto& y : v_members)
        if (s_class_rep(g, y) == r)
          for (const auto& m : fs.aut_V.generators) visit(apply_vmatrix(g, m, y));
    }
  }
  std::vector<Element> out;
  for (const auto& [code, r] : seen) out.push_back(r);
  return out;
}

// Partition of all of S_k into F-classes.  Class ids follow the smallest
// code of each class.
struct ElementClasses {
  std::vector<std::uint32_t> class_of;  // indexed by code
  std::vector<u64> offsets;             // members of class c: members[offsets[c] .. offsets[c+1])
  std::vector<u64> members;             // sorted within each class

  size_t count() const { return offsets.size() - 1; }
  std::span<const u64> members_of(size_t c) const {
    return {members.data() + offsets[c], static_cast<size_t>(offsets[c + 1] - offsets[c])};
  }
  std::span<const u64> class_containing(u64 code) const { return members_of(class_of[code]); }
};

inline ElementClasses classify_elements(const FusionSystem& fs, u64 cap) {
  const GroupContext& g = fs.ctx;
  if (g.order() > cap) throw CapExceeded("element classification", g.order(), cap);
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  ElementClasses out;
  out.class_of.assign(g.order(), unset);
  out.offsets.push_back(0);
  out.members.reserve(g.order());
  std::vector<u64> stack;
  for (u64 code = 0; code < g.order(); ++code) {
    if (out.class_of[code] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.offsets.size() - 1);
    const size_t start = out.members.size();
    out.class_of[code] = id;
    stack.assign(1, code);
    while (!stack.empty()) {
      const u64 c = stack.back();
      stack.pop_back();
      out.members.push_back(c);
      for_each_neighbor(fs, g.decode(c), [&](const Element& z) {
        const u64 zc = g.encode(z);
        if (out.class_of[zc] == unset) {
          out.class_of[zc] = id;
          stack.push_back(zc);
        }
      });
    }
    std::sort(out.members.begin() + static_cast<std::ptrdiff_t>(start), out.members.end());
    out.offsets.push_back(out.members.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// strongly closed, focal and hyperfocal subgroups

// Least subgroup containing seed whose elements' F-classes stay inside it.
inline Subgroup strong_closure(const FusionSystem& fs, const Subgroup& seed, const ElementClasses& classes) {
  const GroupContext& g = fs.ctx;
  Subgroup p = seed;
  std::vector<bool> done(classes.count(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<u64> pending;
    p.for_each(g, [&](const Element& x) {
      const auto c = classes.class_of[g.encode(x)];
      if (!done[c]) {
        done[c] = true;
        pending.push_back(c);
      }
    });
    for (u64 c : pending)
      for (u64 y : classes.members_of(c))
        if (p.adjoin(g, g.decode(y))) grew = true;
  }
  return p;
}

// Strongly closed subgroups are normal, so adding S-class representatives
// of F-classes of generators gives a lower bound.  Above the enumeration cap
// only that bound is available, and it settles the answer only at S.
inline Subgroup strong_closure_lower_bound(const FusionSystem& fs, const Subgroup& seed, u64 orbit_cap) {
  const GroupContext& g = fs.ctx;
  Subgroup p = normal_closure(g, seed);
  std::set<u64> done;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : p.canonical_generators()) {
      if (!done.insert(g.encode(x)).second) continue;
      for (const auto& y : f_class_reps(fs, x, orbit_cap)) grew |= p.adjoin(g, y);
    }
    if (grew) p = normal_closure(g, p);
  }
  return p;
}

inline Subgroup strong_closure(const FusionSystem& fs, const Subgroup& seed, u64 cap) {
  const GroupContext& g = fs.ctx;
  if (g.order() <= cap) return strong_closure(fs, seed, classify_elements(fs, cap));
  Subgroup p = strong_closure_lower_bound(fs, seed, cap);
  if (p.order(g) != g.order()) throw CapExceeded("strong closure below S is inconclusive", g.order(), cap);
  return p;
}

inline bool is_strongly_closed(const FusionSystem& fs, const Subgroup& p, const ElementClasses& classes) {
  const GroupContext& g = fs.ctx;
  bool ok = true;
  p.for_each(g, [&](const Element& x) {
    if (!ok) return;
    for (u64 y : classes.class_containing(g.encode(x)))
      if (!p.contains(g, g.decode(y))) {
        ok = false;
        return;
      }
  });
  return ok;
}

// <x y^-1 : x, y F-conjugate>, exhaustively over a full partition.
inline Subgroup focal_subgroup(const FusionSystem& fs, const ElementClasses& classes) {
  const GroupContext& g = fs.ctx;
  Subgroup foc(g);
  for (size_t c = 0; c < classes.count(); ++c) {
    const auto mem = classes.members_of(c);
    const Element rep = g.decode(mem[0]);
    for (size_t i = 1; i < mem.size(); ++i) foc.adjoin(g, multiply(g, rep, inverse(g, g.decode(mem[i]))));
  }
  return foc;
}

// Without a partition: S-class representatives in the F-classes of v_i, s
// and zeta, plus [S, S] which every fusion system's focal subgroup contains.
// Only a lower bound, so it is accepted only when it already reaches S.
inline Subgroup focal_subgroup(const FusionSystem& fs, u64 enum_cap, u64 orbit_cap) {
  const GroupContext& g = fs.ctx;
  if (g.order() <= enum_cap) return focal_subgroup(fs, classify_elements(fs, enum_cap));
  Subgroup foc = derived_subgroup(g);
  std::vector<Element> sweep{g.s(), g.zeta()};
  for (int i = 1; i <= g.rank(); ++i) sweep.push_back(g.v(i));
  for (const auto& x : sweep)
    for (const auto& y : f_class_reps(fs, x, orbit_cap)) foc.adjoin(g, multiply(g, x, inverse(g, y)));
  if (foc.order(g) != g.order()) throw CapExceeded("focal subgroup sweep is inconclusive", g.order(), enum_cap);
  return foc;
}

// <T, g a(g)^-1 : a in O^p(Aut_F(Q)), Q in {S, T, V}>.  Any subgroup
// containing T is T or S, and g a(g)^-1 lies outside T exactly when a moves
// the s-exponent of g, a linear condition checked on generators of Q and of
// O^p(Aut_F(Q)).
inline Subgroup hyperfocal_subgroup(const FusionSystem& fs) {
  const GroupContext& g = fs.ctx;
  Subgroup h = torus_subgroup(g);
  for (const auto& a : o_p(fs.outer, g.p()).elements)
    for (const auto& x : {g.s(), g.v(1)}) h.adjoin(g, multiply(g, x, inverse(g, apply(g, a, x))));
  for (const auto& m : o_p(fs.aut_V, g.p()).elements)
    for (const auto& x : {g.s(), g.zeta()}) h.adjoin(g, multiply(g, x, inverse(g, apply_vmatrix(g, m, x))));
  return h;
}

// ---------------------------------------------------------------------------
// Out_F(S), Out^0_F(S) and Gamma_{p'}

struct GammaData {
  u64 out_order = 0;
  u64 out0_order = 0;
  std::string gamma;                      // "1", "Z/m" or "order m"
  std::vector<std::vector<size_t>> cosets;  // of Out^0 in G, indices into fs.outer.elements; coset 0 is Out^0
  std::vector<std::string> discrepancies;   // concrete vs generic membership tests
};

inline bool concrete_torus_test(const FusionSystem& fs, const ModMatrix& m) {
  const GroupContext& g = fs.ctx;
  if (g.p() == 3) return m.determinant() % 3 == 1;
  const auto pi = torus_matrix_permutation(g, m);
  return pi && pi->sign() == 1;
}

inline GammaData out0_and_gamma(const FusionSystem& fs) {
  const GroupContext& g = fs.ctx;
  const int p = g.p();
  GammaData out;
  std::set<VMatrix> frattini;
  for (const auto& a : fs.outer.elements) frattini.insert(frattini_matrix(g, a));
  if (frattini.size() != fs.outer.order()) throw Error("G meets Inn(S) nontrivially");
  out.out_order = fs.outer.order();

  const auto op_t = o_p_prime(fs.aut_T, p);
  const auto op_v = o_p_prime(fs.aut_V, p);
  std::vector<GroupAutomorphism> qualifying;
  for (const auto& a : fs.outer.elements) {
    const auto mv = restrict_to_v(g, a);
    const bool gen_t = op_t.contains(a.torus_matrix);
    const bool gen_v = mv && op_v.contains(*mv);
    const bool con_t = concrete_torus_test(fs, a.torus_matrix);
    const bool con_v = mv && mv->det() == 1;
    if (gen_t != con_t || gen_v != con_v)
      out.discrepancies.push_back("membership tests disagree on the class with Frattini image (" +
                                  std::to_string(frattini_matrix(g, a)(0, 0)) + ", " +
                                  std::to_string(frattini_matrix(g, a)(1, 1)) + ")");
    if (gen_t || gen_v) qualifying.push_back(a);
  }
  const auto out0 = subgroup_of(fs.outer, qualifying);
  out.out0_order = out0.order();
  if (!is_subgroup_table_normal(fs.outer, out0)) throw Error("Out^0 is not normal in Out");

  std::vector<bool> placed(fs.outer.order(), false);
  for (size_t i = 0; i < fs.outer.order(); ++i) {
    if (placed[i]) continue;
    std::vector<size_t> coset;
    for (const auto& h : out0.elements) {
      const size_t j = fs.outer.index_of(fs.outer.compose(fs.outer.elements[i], h));
      placed[j] = true;
      coset.push_back(j);
    }
    std::sort(coset.begin(), coset.end());
    out.cosets.push_back(std::move(coset));
  }
  const u64 m = out.cosets.size();
  if (m == 1) {
    out.gamma = "1";
  } else {
    bool cyclic = false;
    for (const auto& a : fs.outer.elements) {
      GroupAutomorphism y = a;
      u64 n = 1;
      while (!out0.contains(y)) {
        y = fs.outer.compose(y, a);
        ++n;
      }
      if (n == m) cyclic = true;
    }
    out.gamma = cyclic ? "Z/" + std::to_string(m) : "order " + std::to_string(m);
  }
  return out;
}

// The subsystem of index prime to p attached to a subgroup H of Gamma,
// given as a set of coset indices.
inline FusionSystem subsystem_for(const FusionSystem& fs, const GammaData& gamma, const std::vector<size_t>& h) {
  const GroupContext& g = fs.ctx;
  std::set<size_t> hs(h.begin(), h.end());
  if (!hs.count(0)) throw InvalidArgument("H must contain the identity of Gamma");
  std::vector<size_t> coset_of(fs.outer.order());
  for (size_t c = 0; c < gamma.cosets.size(); ++c)
    for (size_t i : gamma.cosets[c]) coset_of[i] = c;
  if (*hs.rbegin() >= gamma.cosets.size()) throw InvalidArgument("H names a coset that does not exist");
  for (size_t a : hs) {
    for (size_t b : hs) {
      const auto prod = fs.outer.compose(fs.outer.elements[gamma.cosets[a][0]], fs.outer.elements[gamma.cosets[b][0]]);
      if (!hs.count(coset_of[fs.outer.index_of(prod)])) throw InvalidArgument("H is not a subgroup of Gamma");
    }
  }
  std::vector<GroupAutomorphism> outer_gens;
  for (size_t c : hs)
    for (size_t i : gamma.cosets[c]) outer_gens.push_back(fs.outer.elements[i]);
  const auto op_t = o_p_prime(fs.aut_T, g.p());
  const auto op_v = o_p_prime(fs.aut_V, g.p());
  FusionSystem sub = assemble_fusion_system(g, fs.flavor, Recipe::subsystem, outer_gens, small_generating_set(op_t),
                                            small_generating_set(op_v));
  return sub;
}

// ---------------------------------------------------------------------------
// centralizer of a central element

struct CentralizerGenerators {
  FiniteGroupTable<GroupAutomorphism> gamma_S;  // elements of G fixing x; Inn(S) fixes x as well
  FiniteGroupTable<ModMatrix> gamma_T;
  FiniteGroupTable<VMatrix> gamma_V;
};

template <class G, class Pred>
FiniteGroupTable<G> stabilizer_table(const FiniteGroupTable<G>& table, Pred keep) {
  FiniteGroupTable<G> out;
  out.identity = table.identity;
  out.compose = table.compose;
  for (const auto& x : table.elements)
    if (keep(x)) out.elements.push_back(x);
  out.generators = small_generating_set(out);
  return out;
}

inline CentralizerGenerators centralizer_fusion_generators(const FusionSystem& fs, const Element& x) {
  const GroupContext& g = fs.ctx;
  if (x == g.identity() || !center(g).contains(g, x)) throw InvalidArgument("element is not a nontrivial central element");
  CentralizerGenerators out;
  out.gamma_S = stabilizer_table(fs.outer, [&](const GroupAutomorphism& a) { return apply(g, a, x) == x; });
  out.gamma_T = stabilizer_table(fs.aut_T, [&](const ModMatrix& m) { return g.apply(m, x.t) == x.t; });
  out.gamma_V = stabilizer_table(fs.aut_V, [&](const VMatrix& m) { return apply_vmatrix(g, m, x) == x; });
  return out;
}

// ---------------------------------------------------------------------------

// An element of order p in Z(P) fixed under conjugation by N_S(P).
inline Element fixed_point_in_center(const GroupContext& g, const Subgroup& p, u64 cap) {
  if (p.order(g) == 1) throw InvalidArgument("fixed_point_in_center needs a nontrivial subgroup");
  const auto pgens = p.canonical_generators();
  const auto ngens = normalizer(g, p, cap).canonical_generators();
  std::optional<Element> found;
  const u64 n = p.order(g);
  if (n > cap) throw CapExceeded("subgroup enumeration", n, cap);
  std::vector<Element> elems;
  p.for_each(g, [&](const Element& x) { elems.push_back(x); });
  std::sort(elems.begin(), elems.end());
  for (const auto& x : elems) {
    if (x == g.identity() || element_order(g, x) != static_cast<u64>(g.p())) continue;
    bool ok = true;
    for (const auto& y : pgens)
      if (multiply(g, x, y) != multiply(g, y, x)) ok = false;
    for (const auto& h : ngens)
      if (ok && conjugate(g, h, x) != x) ok = false;
    if (ok) return x;
  }
  throw Error("no N_S(P)-fixed element of order p in Z(P)");
}

}  // namespace ptoral
