#pragma once

// Brute-force saturation check over the full subgroup lattice.  Only for
// groups small enough that every subgroup, every F-morphism P -> S and
// every normalizer fit in memory; p = 3, k = 2 is the case in view.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptoral/fusion.hpp"
#include "ptoral/report.hpp"

namespace ptoral {

inline constexpr u64 kLatticeOrderCap = 243;

// All subgroups, by cyclic extension from the trivial one.  Sorted.
inline std::vector<Subgroup> all_subgroups(const GroupContext& g) {
  if (g.order() > kLatticeOrderCap) throw CapExceeded("subgroup lattice", g.order(), kLatticeOrderCap);
  std::set<Subgroup> seen{trivial_subgroup(g)};
  std::vector<Subgroup> frontier{trivial_subgroup(g)};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier)
      for (u64 c = 0; c < g.order(); ++c) {
        const Element x = g.decode(c);
        if (h.contains(g, x)) continue;
        Subgroup k = h;
        k.adjoin(g, x);
        if (seen.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace detail {

using Image = std::vector<std::uint32_t>;  // images of a subgroup's sorted codes

struct LatticeData {
  const GroupContext& g;
  std::vector<Subgroup> subs;
  std::map<Subgroup, size_t> index;
  std::vector<std::vector<std::uint32_t>> codes;  // sorted elements of each subgroup
  std::vector<std::vector<std::uint32_t>> normalizer, centralizer;
  std::vector<std::vector<std::uint32_t>> mult;   // full multiplication table
  std::vector<std::uint32_t> inv;

  explicit LatticeData(const GroupContext& gg) : g(gg), subs(all_subgroups(gg)) {
    const u64 n = g.order();
    mult.assign(n, std::vector<std::uint32_t>(n));
    inv.resize(n);
    for (u64 a = 0; a < n; ++a) {
      const Element x = g.decode(a);
      inv[a] = static_cast<std::uint32_t>(g.encode(inverse(g, x)));
      for (u64 b = 0; b < n; ++b) mult[a][b] = static_cast<std::uint32_t>(g.encode(multiply(g, x, g.decode(b))));
    }
    for (size_t i = 0; i < subs.size(); ++i) {
      index.emplace(subs[i], i);
      std::vector<std::uint32_t> c;
      subs[i].for_each(g, [&](const Element& x) { c.push_back(static_cast<std::uint32_t>(g.encode(x))); });
      std::sort(c.begin(), c.end());
      codes.push_back(std::move(c));
    }
    for (size_t i = 0; i < subs.size(); ++i) {
      std::vector<bool> member(n, false);
      for (auto c : codes[i]) member[c] = true;
      std::vector<std::uint32_t> nor, cen;
      for (std::uint32_t h = 0; h < n; ++h) {
        bool normalizes = true, centralizes = true;
        for (auto c : codes[i]) {
          const auto conj = mult[mult[h][c]][inv[h]];
          if (!member[conj]) normalizes = false;
          if (conj != c) centralizes = false;
        }
        if (normalizes) nor.push_back(h);
        if (centralizes) cen.push_back(h);
      }
      normalizer.push_back(std::move(nor));
      centralizer.push_back(std::move(cen));
    }
  }

  size_t index_of_codes(std::vector<std::uint32_t> c) const {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    Subgroup h(g);
    for (auto x : c) h.adjoin(g, g.decode(x));
    const size_t i = index.at(h);
    if (codes[i] != c) throw Error("image of a subgroup is not a subgroup");
    return i;
  }
};

// F-morphisms out of one subgroup, as image vectors, with their targets.
struct HomSet {
  std::vector<Image> maps;
  std::vector<size_t> target;
};

}  // namespace detail

// Verifies the two saturation axioms over every subgroup:
//  (I)  fully normalized => fully centralized, and Aut_S(P) is Sylow in Aut_F(P);
//  (II) each isomorphism onto a fully centralized subgroup extends to N_phi.
inline CheckReport saturation_oracle(const FusionSystem& fs) {
  CheckReport r;
  r.name = "saturation-oracle";
  Stopwatch clock;
  const GroupContext& g = fs.ctx;
  const int p = g.p();
  try {
    detail::LatticeData lat(g);
    const u64 n = g.order();
    r.caps_used["lattice"] = lat.subs.size();

    // each generating automorphism as a table on codes, with its domain
    struct Gen {
      std::vector<std::uint32_t> image;
      std::vector<bool> domain;
    };
    std::vector<Gen> gens;
    auto add_gen = [&](auto&& in_domain, auto&& act) {
      Gen gen{std::vector<std::uint32_t>(n), std::vector<bool>(n, false)};
      for (u64 c = 0; c < n; ++c) {
        const Element x = g.decode(c);
        if (!in_domain(x)) continue;
        gen.domain[c] = true;
        gen.image[c] = static_cast<std::uint32_t>(g.encode(act(x)));
      }
      gens.push_back(std::move(gen));
    };
    auto all = [](const Element&) { return true; };
    for (const auto& a : fs.outer.generators) add_gen(all, [&](const Element& x) { return apply(g, a, x); });
    for (const auto& a : fs.inner_generators) add_gen(all, [&](const Element& x) { return apply(g, a, x); });
    for (const auto& m : fs.aut_T.generators)
      add_gen([](const Element& x) { return x.e == 0; }, [&](const Element& x) { return Element{g.apply(m, x.t), 0}; });
    for (const auto& m : fs.aut_V.generators)
      add_gen([&](const Element& x) { return v_coords(g, x).has_value(); },
              [&](const Element& x) { return apply_vmatrix(g, m, x); });

    std::vector<std::optional<detail::HomSet>> homs(lat.subs.size());
    auto hom = [&](size_t i) -> const detail::HomSet& {
      if (homs[i]) return *homs[i];
      detail::HomSet hs;
      std::set<detail::Image> seen;
      detail::Image id = lat.codes[i];
      seen.insert(id);
      std::vector<detail::Image> frontier{id};
      while (!frontier.empty()) {
        std::vector<detail::Image> next;
        for (const auto& im : frontier)
          for (const auto& gen : gens) {
            bool ok = true;
            for (auto c : im)
              if (!gen.domain[c]) {
                ok = false;
                break;
              }
            if (!ok) continue;
            detail::Image out(im.size());
            for (size_t j = 0; j < im.size(); ++j) out[j] = gen.image[im[j]];
            if (seen.insert(out).second) next.push_back(std::move(out));
          }
        frontier = std::move(next);
      }
      for (const auto& im : seen) {
        hs.maps.push_back(im);
        hs.target.push_back(lat.index_of_codes(im));
      }
      homs[i] = std::move(hs);
      return *homs[i];
    };

    // Aut_S(P) as image vectors on P's codes
    auto aut_s = [&](size_t i) {
      std::set<detail::Image> out;
      for (auto h : lat.normalizer[i]) {
        detail::Image im;
        for (auto c : lat.codes[i]) im.push_back(lat.mult[lat.mult[h][c]][lat.inv[h]]);
        out.insert(std::move(im));
      }
      return out;
    };

    u64 axiom1 = 0, axiom2 = 0, classes = 0, violations = 0;
    auto violation = [&](std::string why) {
      if (violations++ == 0) r.fail(std::move(why));
    };
    std::vector<bool> done(lat.subs.size(), false);
    for (size_t i = 0; i < lat.subs.size(); ++i) {
      if (done[i]) continue;
      ++classes;
      const auto& hs = hom(i);
      std::set<size_t> cls(hs.target.begin(), hs.target.end());
      size_t best_n = 0, best_c = 0;
      for (size_t j : cls) {
        done[j] = true;
        best_n = std::max(best_n, lat.normalizer[j].size());
        best_c = std::max(best_c, lat.centralizer[j].size());
      }
      const std::string pname = "P = <" + [&] {
        std::string s;
        for (const auto& x : lat.subs[i].canonical_generators()) s += (s.empty() ? "" : ", ") + format_element(g, x);
        return s;
      }() + ">";

      for (size_t j : cls) {
        // (I)
        if (lat.normalizer[j].size() == best_n) {
          ++axiom1;
          if (lat.centralizer[j].size() != best_c)
            violation("(I) fully normalized but not fully centralized, class of " + pname);
          u64 aut_f = 0;
          for (size_t m = 0; m < hom(j).maps.size(); ++m) aut_f += hom(j).target[m] == j;
          const u64 aut_s_order = lat.normalizer[j].size() / lat.centralizer[j].size();
          if (aut_f % aut_s_order != 0 || (aut_f / aut_s_order) % p == 0)
            violation("(I) Aut_S(P) is not Sylow in Aut_F(P), class of " + pname + ": |Aut_F(P)| = " +
                   std::to_string(aut_f) + ", |Aut_S(P)| = " + std::to_string(aut_s_order));
        }
      }

      // (II): isomorphisms phi: P_j -> P_t with P_t fully centralized
      for (size_t j : cls) {
        const auto& hj = hom(j);
        const auto& pj = lat.codes[j];
        std::map<std::uint32_t, size_t> pos;
        for (size_t a = 0; a < pj.size(); ++a) pos[pj[a]] = a;
        for (size_t m = 0; m < hj.maps.size(); ++m) {
          const size_t t = hj.target[m];
          if (lat.centralizer[t].size() != best_c) continue;
          ++axiom2;
          const auto& phi = hj.maps[m];
          const auto& pt = lat.codes[t];
          const auto auts_t = aut_s(t);
          // phi^{-1} on P_t codes
          std::map<std::uint32_t, std::uint32_t> phi_inv;
          for (size_t a = 0; a < pj.size(); ++a) phi_inv[phi[a]] = pj[a];
          std::vector<std::uint32_t> n_phi;
          for (auto h : lat.normalizer[j]) {
            detail::Image im;
            for (auto y : pt) im.push_back(phi[pos[lat.mult[lat.mult[h][phi_inv[y]]][lat.inv[h]]]]);
            if (auts_t.count(im)) n_phi.push_back(h);
          }
          const size_t ni = lat.index_of_codes(n_phi);
          const auto& hn = hom(ni);
          const auto& pn = lat.codes[ni];
          std::vector<size_t> where;
          for (auto c : pj) where.push_back(static_cast<size_t>(std::lower_bound(pn.begin(), pn.end(), c) - pn.begin()));
          bool extends = false;
          for (const auto& psi : hn.maps) {
            bool match = true;
            for (size_t a = 0; a < pj.size() && match; ++a) match = psi[where[a]] == phi[a];
            if (match) {
              extends = true;
              break;
            }
          }
          if (!extends)
            violation("(II) an isomorphism out of " + pname + " does not extend to N_phi of order " +
                   std::to_string(pn.size()));
        }
      }
    }
    r.witness(std::to_string(lat.subs.size()) + " subgroups in " + std::to_string(classes) + " F-classes");
    r.witness("(I) checked on " + std::to_string(axiom1) + " fully normalized subgroups");
    r.witness("(II) checked on " + std::to_string(axiom2) + " isomorphisms onto fully centralized subgroups");
    if (violations) r.witness(std::to_string(violations) + " violations in total");
  } catch (const CapExceeded& e) {
    r.cap_hit(e.what());
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace ptoral
