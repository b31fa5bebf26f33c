#pragma once

// The check suite behind the command-line tool, and its text and JSON
// reports.

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptoral/blackburn.hpp"
#include "ptoral/fusion_checks.hpp"
#include "ptoral/saturation.hpp"

namespace ptoral {

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "presentation", "change-of-basis", "torus-structure", "conjugacy-formulas", "center",
      "order-p-to-center", "strongly-closed", "focal", "hyperfocal", "gamma-prime",
      "subsystem-index", "centralizer-of-center", "saturation-criterion", "saturation-oracle", "reduced-simple"};
  return names;
}

struct RunConfig {
  int p = 3;
  int k = 2;
  Flavor flavor = Flavor::F_p3;
  std::vector<std::string> checks = {"all"};
  Caps caps;
  std::string format = "text";
  u64 seed = 1;
  bool omit_timing = false;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.p == b.p && a.k == b.k && a.flavor == b.flavor && a.checks == b.checks &&
           a.caps.enumeration == b.caps.enumeration && a.caps.orbit == b.caps.orbit &&
           a.caps.closure == b.caps.closure && a.format == b.format && a.seed == b.seed &&
           a.omit_timing == b.omit_timing;
  }
};

struct SuiteReport {
  RunConfig config;
  std::vector<CheckReport> checks;
  Status overall = Status::pass;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// Check names to run, in suite order.
inline std::vector<std::string> selected_checks(const RunConfig& c) {
  const auto& all = check_names();
  if (std::find(c.checks.begin(), c.checks.end(), "all") != c.checks.end()) return all;
  std::vector<std::string> out;
  for (const auto& n : all)
    if (std::find(c.checks.begin(), c.checks.end(), n) != c.checks.end()) out.push_back(n);
  return out;
}

inline void validate_config(const RunConfig& c) {
  if (!is_odd_prime(c.p)) throw InvalidArgument("p must be an odd prime, got " + std::to_string(c.p));
  if (c.flavor == Flavor::Ftilde && c.p < 5) throw InvalidArgument("flavor Ftilde needs p >= 5");
  if (c.flavor == Flavor::F_p3 && c.p != 3) throw InvalidArgument("flavor F_p3 needs p = 3");
  if (c.caps.enumeration == 0 || c.caps.orbit == 0 || c.caps.closure == 0)
    throw InvalidArgument("caps must be positive");
  if (c.format != "text" && c.format != "json") throw InvalidArgument("format must be text or json");
  for (const auto& n : c.checks)
    if (n != "all" && std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw InvalidArgument("unknown check: " + n);
  make_group(c.p, c.k);  // rejects k < 2 and groups too large to encode
}

inline Status overall_status(const std::vector<CheckReport>& checks) {
  Status s = Status::pass;
  for (const auto& r : checks) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::cap_exceeded) s = Status::cap_exceeded;
  }
  return s;
}

namespace detail {

inline CheckReport change_of_basis_check(const GroupContext& g) {
  CheckReport r;
  r.name = "change-of-basis";
  const ModMatrix c = binomial_change_of_basis(g.p(), g.k());
  const ModMatrix a = action_matrix_a(g.p(), g.k()), b = action_matrix_b(g.p(), g.k());
  if (!c.is_invertible()) r.fail("change of basis is not invertible mod " + std::to_string(g.q()));
  if (c.inverse() * a * c != b) r.fail("C^-1 A C differs from B");
  if (b != g.action()) r.fail("the group's action matrix is not B");
  r.witness("C^-1 A C = B mod " + std::to_string(g.q()) + ", det C = " + std::to_string(c.determinant()));
  return r;
}

inline CheckReport torus_structure_check(const GroupContext& g) {
  CheckReport r;
  r.name = "torus-structure";
  const int p = g.p(), k = g.k(), n = g.rank() * k;
  const IntMatrix rel = relation_matrix(p, k);
  const SmithForm snf = smith_normal_form(rel);
  std::vector<BigInt> parts;
  for (const auto& d : snf.diagonal) parts.push_back(p_part(d, p));
  std::sort(parts.begin(), parts.end());
  BigInt pk = 1, det_expected = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  for (int i = 0; i < n; ++i) det_expected *= p;
  for (int i = 0; i < n; ++i) {
    const BigInt want = i < n - g.rank() ? BigInt(1) : pk;
    if (parts[i] != want) r.fail("p-part of elementary divisor " + std::to_string(i) + " is " + parts[i].str());
  }
  const BigInt det = abs(determinant(rel));
  if (det != det_expected) r.fail("|det R| = " + det.str());
  r.witness("elementary divisors: " + std::to_string(g.rank()) + " copies of " + pk.str() + ", |det R| = " + det.str());
  u64 expected = 1;
  for (int i = 0; i < n + 1; ++i) expected *= static_cast<u64>(p);
  if (g.order() != expected) r.fail("|S| = " + std::to_string(g.order()));
  if (whole_group(g).order(g) != g.order()) r.fail("s and v_1 do not generate S");
  r.witness("|S| = " + std::to_string(g.order()) + " = p^" + std::to_string(n + 1));
  return r;
}

inline CheckReport conjugacy_check(const GroupContext& g, const Caps& caps, u64 seed) {
  CheckReport r;
  r.name = "conjugacy-formulas";
  std::mt19937_64 rng(seed);
  const int p = g.p();
  // conjugation formulas and order p outside T, on random samples
  for (int i = 0; i < 500; ++i) {
    const Element t{g.random_element(rng).t, 0};
    const Element x = conjugate(g, t, g.s());
    if (x != s_conj_by_torus(g, t.t)) r.fail("t s t^-1 formula fails at t = " + format_element(g, t));
    if (conjugate(g, g.s(), t) != Element{torus_conj_by_s(g, t.t), 0})
      r.fail("s v s^-1 formula fails at v = " + format_element(g, t));
    if (power(g, multiply(g, t, g.s()), p) != g.identity()) r.fail(format_element(g, multiply(g, t, g.s())) + " has order > p");
  }
  r.witness("conjugation formulas and (v s)^p = 1 on 500 random v");

  // S-classes on the coset T s are the fibers of the invariant
  const u64 fiber = g.torus_order() / p;
  if (outer_class_size(g) != fiber) r.fail("|(I - B) T| = " + std::to_string(outer_class_size(g)));
  if (g.torus_order() <= caps.orbit) {
    std::vector<int> seen(p, 0);
    std::vector<bool> covered(g.torus_order(), false);
    for (u64 c = 0; c < g.torus_order(); ++c) {
      if (covered[c]) continue;
      const Element x{g.decode(c).t, 1};
      const auto orbit = s_conjugacy_orbit(g, x, caps.orbit);
      const i64 inv = outer_coset_invariant(g, x);
      if (orbit.size() != fiber) r.fail("class of " + format_element(g, x) + " has size " + std::to_string(orbit.size()));
      for (u64 y : orbit) {
        const Element ye = g.decode(y);
        if (outer_coset_invariant(g, ye) != inv) r.fail("invariant not constant on the class of " + format_element(g, x));
        covered[g.encode(Element{ye.t, 0})] = true;
      }
      ++seen[inv];
    }
    for (int i = 0; i < p; ++i)
      if (seen[i] != 1) r.fail("invariant value " + std::to_string(i) + " met by " + std::to_string(seen[i]) + " classes");
    r.witness("exhaustive on T s: " + std::to_string(p) + " classes of size " + std::to_string(fiber));
  }
  // sampled: conjugacy against solvability of (I - B) u = t_y - t_x
  const ModSolver solver(ModMatrix::identity(g.rank(), g.q()) - g.action());
  for (int i = 0; i < 10000; ++i) {
    const Element x{g.random_element(rng).t, 1}, y{g.random_element(rng).t, 1};
    std::vector<i64> diff(g.rank());
    for (int j = 0; j < g.rank(); ++j) diff[j] = mod(y.t[j] - x.t[j], g.q());
    if (solver.solve(diff).has_value() != are_S_conjugate_outer(g, x, y))
      r.fail("invariant disagrees with conjugacy on " + format_element(g, x) + ", " + format_element(g, y));
  }
  r.witness("10000 random pairs on T s agree with the invariant");
  // structural: |S : C_S(v1^i s)| for each invariant value i
  std::string sizes;
  for (int i = 0; i < p; ++i) {
    Element x = g.s();
    x.t[0] = i;
    const u64 size = g.order() / centralizer_of_outer(g, x).order(g);
    if (size != fiber) r.fail("class of " + format_element(g, x) + " has size " + std::to_string(size));
    sizes += (i ? ", " : "") + std::to_string(size);
  }
  r.witness("orbit sizes from centralizers: " + sizes);

  // order-p subgroups outside T, and v_1^i s conjugate to s iff p divides i
  const auto reps = order_p_reps_outside_torus(g);
  r.witness(std::to_string(reps.size()) + " classes of subgroups of order p outside T");
  for (i64 i = 0; i < std::min<i64>(g.q(), 50); ++i) {
    Element x = g.s();
    x.t[0] = i;
    if (are_S_conjugate_outer(g, x, g.s()) != (i % p == 0)) r.fail(format_element(g, x) + " breaks the i = 0 mod p rule");
  }
  return r;
}

inline CheckReport center_check(const GroupContext& g, const Caps& caps) {
  CheckReport r;
  r.name = "center";
  Element z = g.identity();
  for (int i = 1; i <= g.rank(); ++i) z = multiply(g, z, power(g, g.v(i), i));
  z = power(g, z, g.q() / g.p());
  if (z != g.zeta()) r.fail("zeta differs from (v1 v2^2 ... )^(p^(k-1))");
  const Subgroup c = center(g);
  if (c.order(g) != static_cast<u64>(g.p())) r.fail("|Z(S)| = " + std::to_string(c.order(g)));
  if (g.order() <= caps.enumeration) {
    u64 count = 0;
    for (u64 code = 0; code < g.order(); ++code) {
      const Element x = g.decode(code);
      if (multiply(g, x, g.s()) == multiply(g, g.s(), x) && multiply(g, x, g.v(1)) == multiply(g, g.v(1), x)) {
        ++count;
        if (!c.contains(g, x)) r.fail(format_element(g, x) + " is central but not in <zeta>");
      }
    }
    r.witness("exhaustive: " + std::to_string(count) + " central elements");
    r.caps_used["enumeration"] = g.order();
  } else {
    r.witness("structural: fixed points of B form <zeta>, no outer element centralizes v1");
  }
  r.witness("zeta = " + format_element(g, g.zeta()));
  return r;
}

inline CheckReport gamma_check(const FusionSystem& fs) {
  CheckReport r;
  r.name = "gamma-prime";
  const GroupContext& g = fs.ctx;
  const int p = g.p();
  const auto op_v = o_p_prime(fs.aut_V, p);
  const auto op_t = o_p_prime(fs.aut_T, p);
  if (op_v.elements != sl2(p).elements) r.fail("O^{p'}(Aut_F(V)) is not SL_2(F_p)");
  if (p == 3) {
    if (op_t.order() != 24) r.fail("O^{3'}(Aut_F(T)) has order " + std::to_string(op_t.order()));
    for (const auto& m : op_t.elements)
      if (m.reduced(3).determinant() != 1) r.fail("O^{3'}(Aut_F(T)) does not reduce into SL_2(F_3)");
  } else if (op_t.elements != alternating_torus_group(g).elements) {
    r.fail("O^{p'}(Aut_F(T)) is not A_p");
  }
  r.witness("|O^{p'}(Aut_F(T))| = " + std::to_string(op_t.order()) + ", |O^{p'}(Aut_F(V))| = " +
            std::to_string(op_v.order()));
  const auto gd = out0_and_gamma(fs);
  for (const auto& d : gd.discrepancies) r.fail(d);
  const std::string expected = fs.flavor == Flavor::Ftilde ? "Z/2" : "1";
  r.witness("|Out| = " + std::to_string(gd.out_order) + ", |Out^0| = " + std::to_string(gd.out0_order) +
            ", Gamma_{p'} = " + gd.gamma);
  if (gd.gamma != expected) r.fail("Gamma_{p'} = " + gd.gamma + ", expected " + expected);
  return r;
}

inline CheckReport subsystem_check(const FusionSystem& fs) {
  CheckReport r;
  r.name = "subsystem-index";
  const GroupContext& g = fs.ctx;
  const auto gd = out0_and_gamma(fs);
  const auto sub = subsystem_for(fs, gd, {0});
  if (fs.flavor == Flavor::Ftilde) {
    const auto f = build_fusion(g, Flavor::F);
    if (sub.aut_T.elements != f.aut_T.elements) r.fail("Aut(T) of the subsystem differs from F");
    if (sub.aut_V.elements != f.aut_V.elements) r.fail("Aut(V) of the subsystem differs from F");
    if (sub.outer.elements != f.outer.elements) r.fail("Aut(S) of the subsystem differs from F");
    r.witness("H = 1 gives F: |Aut(T)| = " + std::to_string(sub.aut_T.order()) + ", |Aut(V)| = " +
              std::to_string(sub.aut_V.order()) + ", index " + std::to_string(fs.outer.order() / sub.outer.order()));
  } else {
    if (sub.aut_T.elements != fs.aut_T.elements || sub.aut_V.elements != fs.aut_V.elements ||
        sub.outer.elements != fs.outer.elements)
      r.fail("the subsystem for H = 1 is proper although Gamma_{p'} is trivial");
    r.witness("Gamma_{p'} trivial: the only subsystem of index prime to p is F itself");
  }
  return r;
}

inline CheckReport centralizer_check(const FusionSystem& fs) {
  CheckReport r;
  r.name = "centralizer-of-center";
  const GroupContext& g = fs.ctx;
  const auto cz = centralizer_fusion_generators(fs, g.zeta());
  const auto perms = fs.flavor == Flavor::F && g.p() >= 5 ? alternating_torus_group(g) : symmetric_torus_group(g);
  if (cz.gamma_T.elements != perms.elements) r.fail("Gamma_T is not the expected group of permutation matrices");
  for (const auto& m : cz.gamma_T.elements) {
    bool scalar = true;
    for (int i = 0; i < g.rank() && scalar; ++i)
      for (int j = 0; j < g.rank() && scalar; ++j)
        scalar = m(i, j) == (i == j ? m(0, 0) : 0);
    if (scalar && !m.is_identity()) r.fail("Gamma_T contains a nontrivial scalar");
  }
  r.witness("|Gamma_T| = " + std::to_string(cz.gamma_T.order()) + ", |Gamma_V| = " + std::to_string(cz.gamma_V.order()) +
            ", |Gamma_S / Inn| = " + std::to_string(cz.gamma_S.order()));
  return r;
}

// F and F_p3 are predicted reduced and simple.  Ftilde is predicted to have
// no proper strongly closed subgroup and full hyperfocal subgroup, with
// Gamma_{p'} = Z/2 making it non-reduced.
inline CheckReport reduced_simple_check(const FusionSystem& fs, const ElementClasses* classes, const Caps& caps) {
  ReducedSimpleParts parts;
  CheckReport r = reduced_simple_report(fs, classes, caps, &parts);
  if (fs.flavor != Flavor::Ftilde || r.status == Status::cap_exceeded) return r;
  CheckReport out;
  out.name = r.name;
  out.witnesses = r.witnesses;
  out.caps_used = r.caps_used;
  out.elapsed_ms = r.elapsed_ms;
  if (!parts.closure_decided) out.cap_hit("(1) strong closure of Z(S) not decided within the caps");
  else if (!parts.no_strongly_closed) out.fail("(1) proper strongly closed subgroup");
  if (!parts.hyperfocal_is_S) out.fail("(2) hyperfocal subgroup is proper");
  if (parts.gamma != "Z/2") out.fail("(3) Gamma_{p'} = " + parts.gamma + ", expected Z/2");
  out.witness("not reduced, as predicted: Gamma_{p'} = Z/2 gives a subsystem of index 2");
  return out;
}

}  // namespace detail

inline SuiteReport run_suite(const RunConfig& config) {
  validate_config(config);
  Stopwatch total;
  SuiteReport out;
  out.config = config;
  const GroupContext g = make_group(config.p, config.k);
  const Caps& caps = config.caps;
  std::optional<FusionSystem> fs;
  std::optional<ElementClasses> classes;
  bool classes_tried = false;
  auto system = [&]() -> const FusionSystem& {
    if (!fs) fs.emplace(build_fusion(g, config.flavor));
    return *fs;
  };
  auto element_classes = [&]() -> const ElementClasses* {
    if (!classes_tried) {
      classes_tried = true;
      if (g.order() <= caps.enumeration) classes.emplace(classify_elements(system(), caps.enumeration));
    }
    return classes ? &*classes : nullptr;
  };
  const std::map<std::string, std::function<CheckReport()>> runners = {
      {"presentation", [&] { return blackburn_presentation_check(g); }},
      {"change-of-basis", [&] { return detail::change_of_basis_check(g); }},
      {"torus-structure", [&] { return detail::torus_structure_check(g); }},
      {"conjugacy-formulas", [&] { return detail::conjugacy_check(g, caps, config.seed); }},
      {"center", [&] { return detail::center_check(g, caps); }},
      {"order-p-to-center", [&] { return verify_order_p_to_center(system(), CenterReachMode::tower, caps); }},
      {"strongly-closed",
       [&] {
         CheckReport r;
         r.name = "strongly-closed";
         const auto* c = element_classes();
         try {
           const Subgroup sc = c ? strong_closure(system(), center(g), *c) : strong_closure(system(), center(g), caps.enumeration);
           r.witness(std::string(c ? "exhaustive" : "S-class representatives") + ": strong closure of Z(S) has order " +
                     std::to_string(sc.order(g)));
           if (sc.order(g) != g.order()) r.fail("proper strongly closed subgroup of order " + std::to_string(sc.order(g)));
           if (c && strong_closure(system(), trivial_subgroup(g), *c).order(g) != 1) r.fail("closure of 1 is not 1");
         } catch (const CapExceeded& e) {
           r.cap_hit(e.what());
         }
         return r;
       }},
      {"focal",
       [&] {
         CheckReport r;
         r.name = "focal";
         const auto* c = element_classes();
         try {
           const Subgroup foc = c ? focal_subgroup(system(), *c) : focal_subgroup(system(), caps.enumeration, caps.orbit);
           r.witness(std::string(c ? "exhaustive" : "generator sweep") + ": focal subgroup has order " +
                     std::to_string(foc.order(g)));
           if (foc.order(g) != g.order()) r.fail("focal subgroup is proper, order " + std::to_string(foc.order(g)));
           if (!is_subgroup_of(g, derived_subgroup(g), foc)) r.fail("focal subgroup misses [S, S]");
         } catch (const CapExceeded& e) {
           r.cap_hit(e.what());
         }
         return r;
       }},
      {"hyperfocal",
       [&] {
         CheckReport r;
         r.name = "hyperfocal";
         const Subgroup h = hyperfocal_subgroup(system());
         r.witness("hyperfocal subgroup has order " + std::to_string(h.order(g)));
         if (!is_subgroup_of(g, torus_subgroup(g), h)) r.fail("hyperfocal subgroup misses T");
         if (h.order(g) != g.order()) r.fail("hyperfocal subgroup is proper, order " + std::to_string(h.order(g)));
         return r;
       }},
      {"gamma-prime", [&] { return detail::gamma_check(system()); }},
      {"subsystem-index", [&] { return detail::subsystem_check(system()); }},
      {"centralizer-of-center", [&] { return detail::centralizer_check(system()); }},
      {"saturation-criterion", [&] { return check_saturation_criterion(system(), XChoice::fully_centralized, caps); }},
      {"saturation-oracle", [&] { return saturation_oracle(system()); }},
      {"reduced-simple", [&] { return detail::reduced_simple_check(system(), element_classes(), caps); }},
  };

  for (const auto& name : selected_checks(config)) {
    Stopwatch clock;
    CheckReport r;
    try {
      r = runners.at(name)();
    } catch (const CapExceeded& e) {
      r = CheckReport{};
      r.cap_hit(e.what());
    } catch (const std::exception& e) {
      r = CheckReport{};
      r.fail(std::string("error: ") + e.what());
    }
    r.name = name;
    r.elapsed_ms = config.omit_timing ? 0 : clock.elapsed_ms();
    out.checks.push_back(std::move(r));
  }
  out.overall = overall_status(out.checks);
  out.elapsed_ms = config.omit_timing ? 0 : total.elapsed_ms();
  return out;
}

// 0 pass, 2 any failure, 3 only cap-exceeded.
inline int exit_code(const SuiteReport& r) {
  switch (r.overall) {
    case Status::pass: return 0;
    case Status::fail: return 2;
    case Status::cap_exceeded: return 3;
  }
  return 2;
}

// ---------------------------------------------------------------------------
// reports

inline nlohmann::ordered_json to_json(const RunConfig& c) {
  return {{"p", c.p},
          {"k", c.k},
          {"flavor", to_string(c.flavor)},
          {"checks", c.checks},
          {"caps", {{"enumeration", c.caps.enumeration}, {"orbit", c.caps.orbit}, {"closure", c.caps.closure}}},
          {"format", c.format},
          {"seed", c.seed},
          {"omit_timing", c.omit_timing}};
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json caps = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.caps_used) caps[k] = v;
  return {{"name", r.name},
          {"status", to_string(r.status)},
          {"witnesses", r.witnesses},
          {"counterexample", r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json()},
          {"elapsed_ms", r.elapsed_ms},
          {"caps_used", caps}};
}

inline nlohmann::ordered_json to_json(const SuiteReport& s) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : s.checks) checks.push_back(to_json(r));
  return {{"schema_version", kSchemaVersion},
          {"config", to_json(s.config)},
          {"checks", checks},
          {"overall", to_string(s.overall)},
          {"elapsed_ms", s.elapsed_ms}};
}

inline Status parse_status(const std::string& s) {
  const auto st = status_from_string(s);
  if (!st) throw InvalidArgument("unknown status: " + s);
  return *st;
}

inline SuiteReport parse_report(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw InvalidArgument("unsupported schema version");
  SuiteReport s;
  const auto& c = j.at("config");
  s.config.p = c.at("p").get<int>();
  s.config.k = c.at("k").get<int>();
  const auto fl = flavor_from_string(c.at("flavor").get<std::string>());
  if (!fl) throw InvalidArgument("unknown flavor in report");
  s.config.flavor = *fl;
  s.config.checks = c.at("checks").get<std::vector<std::string>>();
  s.config.caps.enumeration = c.at("caps").at("enumeration").get<u64>();
  s.config.caps.orbit = c.at("caps").at("orbit").get<u64>();
  s.config.caps.closure = c.at("caps").at("closure").get<u64>();
  s.config.format = c.at("format").get<std::string>();
  s.config.seed = c.at("seed").get<u64>();
  s.config.omit_timing = c.at("omit_timing").get<bool>();
  for (const auto& jr : j.at("checks")) {
    CheckReport r;
    r.name = jr.at("name").get<std::string>();
    r.status = parse_status(jr.at("status").get<std::string>());
    r.witnesses = jr.at("witnesses").get<std::vector<std::string>>();
    if (!jr.at("counterexample").is_null()) r.counterexample = jr.at("counterexample").get<std::string>();
    r.elapsed_ms = jr.at("elapsed_ms").get<std::int64_t>();
    for (const auto& [k, v] : jr.at("caps_used").items()) r.caps_used[k] = v.get<std::uint64_t>();
    s.checks.push_back(std::move(r));
  }
  s.overall = parse_status(j.at("overall").get<std::string>());
  s.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return s;
}

inline void emit_report(const SuiteReport& s, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << to_json(s).dump(2) << '\n';
    return;
  }
  const auto& c = s.config;
  os << "p = " << c.p << ", k = " << c.k << ", flavor " << to_string(c.flavor) << ", seed " << c.seed << "\n\n";
  size_t width = 5;
  for (const auto& r : s.checks) width = std::max(width, r.name.size());
  for (const auto& r : s.checks) {
    os << r.name << std::string(width + 2 - r.name.size(), ' ') << std::string(to_string(r.status));
    if (!c.omit_timing) os << "  (" << r.elapsed_ms << " ms)";
    os << '\n';
    if (r.counterexample) os << "    counterexample: " << *r.counterexample << '\n';
    for (const auto& w : r.witnesses) os << "    " << w << '\n';
  }
  os << "\noverall: " << to_string(s.overall) << " (" << s.checks.size() << " checks)\n";
}

}  // namespace ptoral
