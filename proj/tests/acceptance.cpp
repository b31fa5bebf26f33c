// One line per acceptance criterion, then the k = 2 / k = 3 comparison.
// Exit status is the number of failed lines.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ptoral/ptoral.hpp"

using namespace ptoral;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool has_witness(const CheckReport& r, const std::string& needle) {
  for (const auto& w : r.witnesses)
    if (w.find(needle) != std::string::npos) return true;
  return false;
}

const std::vector<std::pair<int, int>> kBasisLevels = {{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}};

Outcome group_orders() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const GroupContext g = make_group(p, k);
    u64 want = 1;
    for (int i = 0; i < (p - 1) * k + 1; ++i) want *= static_cast<u64>(p);
    o.require(g.order() == want && whole_group(g).order(g) == want,
              "|S| wrong at p = " + std::to_string(p) + ", k = " + std::to_string(k));
  }
  return o;
}

Outcome presentations() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    const auto r = blackburn_presentation_check(make_group(p, k));
    o.require(r.passed(), r.counterexample.value_or("presentation"));
  }
  return o;
}

Outcome basis_change() {
  Outcome o;
  for (auto [p, k] : kBasisLevels) {
    const ModMatrix c = binomial_change_of_basis(p, k);
    o.require(c.inverse() * action_matrix_a(p, k) * c == action_matrix_b(p, k),
              "C^-1 A C != B at p = " + std::to_string(p) + ", k = " + std::to_string(k));
  }
  return o;
}

Outcome torus_structure() {
  Outcome o;
  for (auto [p, k] : kBasisLevels) {
    const auto snf = smith_normal_form(relation_matrix(p, k));
    BigInt pk = 1, det = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    for (int i = 0; i < (p - 1) * k; ++i) det *= p;
    int copies = 0;
    for (const auto& d : snf.diagonal) {
      const BigInt part = p_part(d, p);
      if (part == pk) ++copies;
      else o.require(part == 1, "unexpected elementary divisor");
    }
    o.require(copies == p - 1, "wrong number of p^k divisors");
    o.require(abs(determinant(relation_matrix(p, k))) == det, "|det R| wrong");
  }
  return o;
}

Outcome coset_classes() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}}) {
    RunConfig c;
    c.p = p;
    c.k = k;
    c.flavor = p == 3 ? Flavor::F_p3 : Flavor::F;
    c.checks = {"conjugacy-formulas"};
    const auto r = run_suite(c).checks.at(0);
    o.require(r.passed(), r.counterexample.value_or("conjugacy"));
    if (p == 3) o.require(has_witness(r, "exhaustive on T s: 3 classes of size 27"), "no exhaustive witness at p = 3");
    else o.require(has_witness(r, "10000 random pairs") && has_witness(r, "78125, 78125, 78125, 78125, 78125"),
                   "no sampled or structural witness at p = 5");
  }
  return o;
}

Outcome center_order() {
  Outcome o;
  RunConfig c;
  c.checks = {"center"};
  const auto r = run_suite(c).checks.at(0);
  o.require(r.passed() && has_witness(r, "exhaustive: 3 central elements"), r.counterexample.value_or("center"));
  const GroupContext g = make_group(3, 2);
  o.require(element_order(g, g.zeta()) == 3, "zeta does not have order 3");
  return o;
}

Outcome order_p_to_center() {
  Outcome o;
  Caps caps;
  const auto r3 = verify_order_p_to_center(build_fusion(make_group(3, 2), Flavor::F_p3), CenterReachMode::tower, caps);
  o.require(r3.passed() && has_witness(r3, "exhaustive"), "p = 3: " + r3.counterexample.value_or("no exhaustive run"));
  for (Flavor f : {Flavor::F, Flavor::Ftilde}) {
    const auto r = verify_order_p_to_center(build_fusion(make_group(5, 2), f), CenterReachMode::tower, caps);
    o.require(r.passed() && has_witness(r, "structural"), std::string("p = 5 ") + to_string(f));
  }
  return o;
}

Outcome strongly_closed() {
  Outcome o;
  const std::vector<std::tuple<int, Flavor>> cases = {{3, Flavor::F_p3}, {5, Flavor::F}, {5, Flavor::Ftilde}};
  for (auto [p, f] : cases) {
    const auto fs = build_fusion(make_group(p, 2), f);
    const auto cl = classify_elements(fs, 2'000'000);
    o.require(strong_closure(fs, center(fs.ctx), cl).order(fs.ctx) == fs.ctx.order(),
              std::string("proper strong closure for ") + to_string(f));
  }
  return o;
}

Outcome op_prime() {
  Outcome o;
  const auto gl = gl2(3);
  std::vector<VMatrix> threes;
  for (const auto& m : gl.elements)
    if (m != VMatrix::identity(3) && m * m * m == VMatrix::identity(3)) threes.push_back(m);
  const auto h = vmatrix_group(threes, 3);
  o.require(h.order() == 24 && h.elements == sl2(3).elements, "order-3 elements of GL_2(F_3)");

  std::vector<Permutation> cycles;
  std::vector<int> img = {1, 2, 3, 4, 5};
  do {
    const Permutation pi(img);
    if (pi.order() == 5) cycles.push_back(pi);
  } while (std::next_permutation(img.begin(), img.end()));
  const auto a5 = generate_group(cycles, Permutation::identity(5),
                                 [](const Permutation& a, const Permutation& b) { return a * b; }, 200);
  bool even = true;
  for (const auto& x : a5.elements) even &= x.sign() == 1;
  o.require(a5.order() == 60 && even, "5-cycles of the symmetric group");
  return o;
}

Outcome gamma_values() {
  Outcome o;
  const std::vector<std::tuple<int, Flavor, std::string>> cases = {
      {5, Flavor::Ftilde, "Z/2"}, {7, Flavor::Ftilde, "Z/2"}, {3, Flavor::F, "1"}, {5, Flavor::F, "1"}};
  for (const auto& [p, f, want] : cases) {
    const auto gd = out0_and_gamma(build_fusion(make_group(p, 2), f));
    o.require(gd.gamma == want && gd.discrepancies.empty(),
              "p = " + std::to_string(p) + " " + to_string(f) + ": Gamma = " + gd.gamma);
  }
  return o;
}

Outcome subsystem_index() {
  Outcome o;
  const GroupContext g = make_group(5, 2);
  const auto ft = build_fusion(g, Flavor::Ftilde);
  const auto sub = subsystem_for(ft, out0_and_gamma(ft), {0});
  const auto f = build_fusion(g, Flavor::F);
  o.require(sub.aut_T.elements == f.aut_T.elements, "Aut(T) differs");
  o.require(sub.aut_V.elements == f.aut_V.elements, "Aut(V) differs");
  o.require(sub.outer.elements == f.outer.elements, "Aut(S) differs");
  return o;
}

Outcome focal_hyperfocal() {
  Outcome o;
  for (auto [p, f] : std::vector<std::tuple<int, Flavor>>{{3, Flavor::F_p3}, {5, Flavor::F}}) {
    const auto fs = build_fusion(make_group(p, 2), f);
    const auto cl = classify_elements(fs, 2'000'000);
    o.require(focal_subgroup(fs, cl).order(fs.ctx) == fs.ctx.order(), "focal proper at p = " + std::to_string(p));
    o.require(hyperfocal_subgroup(fs).order(fs.ctx) == fs.ctx.order(), "hyperfocal proper at p = " + std::to_string(p));
  }
  return o;
}

Outcome centralizer_of_center() {
  Outcome o;
  const std::vector<std::tuple<int, Flavor, size_t>> cases = {{3, Flavor::F_p3, 6}, {5, Flavor::F, 60}, {5, Flavor::Ftilde, 120}};
  for (const auto& [p, f, want] : cases) {
    const auto fs = build_fusion(make_group(p, 2), f);
    const auto gt = centralizer_fusion_generators(fs, fs.ctx.zeta()).gamma_T;
    o.require(gt.order() == want, std::string("|Gamma_T| for ") + to_string(f) + " = " + std::to_string(gt.order()));
    for (const auto& m : gt.elements) o.require(torus_matrix_permutation(fs.ctx, m).has_value(), "not a permutation matrix");
  }
  return o;
}

Outcome saturation_oracle_p3() {
  Outcome o;
  const auto r = saturation_oracle(build_fusion(make_group(3, 2), Flavor::F_p3));
  o.require(r.passed(), r.counterexample.value_or(to_string(r.status)));
  return o;
}

Outcome saturation_criterion() {
  Outcome o;
  Caps caps;
  for (auto [p, f] : std::vector<std::tuple<int, Flavor>>{{3, Flavor::F_p3}, {5, Flavor::Ftilde}}) {
    const auto r = check_saturation_criterion(build_fusion(make_group(p, 2), f), XChoice::fully_centralized, caps);
    o.require(r.passed() && has_witness(r, "(ii): "), std::string(to_string(f)) + ": " + r.counterexample.value_or(""));
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const GroupContext g = make_group(3, 2);
  const auto inner = inner_only_fusion(g);
  const auto cl = classify_elements(inner, 2'000'000);
  const Subgroup foc = focal_subgroup(inner, cl);
  o.require(foc == derived_subgroup(g) && foc.order(g) != g.order(), "inner-only focal subgroup is not [S, S]");
  const auto c = verify_order_p_to_center(inner, CenterReachMode::tower, Caps{});
  o.require(c.status == Status::fail && c.counterexample && c.counterexample->starts_with(format_element(g, g.s())),
            "inner-only order-p-to-center does not fail at s");
  ReducedSimpleParts parts;
  const auto r = reduced_simple_report(build_fusion(make_group(5, 2), Flavor::Ftilde), nullptr, Caps{}, &parts);
  o.require(r.status == Status::fail && parts.gamma == "Z/2", "Ftilde not flagged with Gamma = Z/2");
  return o;
}

// Every suite check but the gated lattice oracle, at k = 2 and k = 3.
Outcome tower_consistency() {
  Outcome o;
  RunConfig c;
  c.flavor = Flavor::F;
  c.checks.clear();
  for (const auto& n : check_names())
    if (n != "saturation-oracle") c.checks.push_back(n);
  c.k = 2;
  const auto a = run_suite(c);
  c.k = 3;
  const auto b = run_suite(c);
  for (size_t i = 0; i < a.checks.size(); ++i)
    o.require(a.checks[i].status == b.checks[i].status, a.checks[i].name + " differs between levels");
  o.require(a.overall == Status::pass, "k = 2 run does not pass");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"group orders", 1, group_orders},
      {"presentation relations", 10, presentations},
      {"change of basis", 1, basis_change},
      {"torus elementary divisors and determinant", 5, torus_structure},
      {"S-classes on the coset T s", 120, coset_classes},
      {"center of order p", 10, center_order},
      {"order-p elements reach the center", 120, order_p_to_center},
      {"no proper strongly closed subgroup", 300, strongly_closed},
      {"O^{p'} of GL_2(F_3) and of the symmetric group", 10, op_prime},
      {"Gamma_{p'}", 60, gamma_values},
      {"index-2 subsystem of Ftilde is F", 60, subsystem_index},
      {"focal and hyperfocal subgroups are S", 300, focal_hyperfocal},
      {"Gamma_T of the centralizer of Z", 120, centralizer_of_center},
      {"saturation oracle at p = 3, k = 2", 600, saturation_oracle_p3},
      {"saturation criterion conditions (i)-(ii)", 300, saturation_criterion},
      {"negative controls", 60, negative_controls},
      {"tower consistency k = 2 vs k = 3", 600, tower_consistency},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Stopwatch clock;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = static_cast<double>(clock.elapsed_ms()) / 1000.0;
    if (o.ok && secs > criteria[i].budget_s) {
      o.ok = false;
      o.detail = "over the time budget";
    }
    failures += !o.ok;
    const std::string id = i + 1 < criteria.size() ? std::to_string(i + 1) : "T";
    std::printf("criterion %2s %s  %-48s %7.2fs%s%s\n", id.c_str(), o.ok ? "PASS" : "FAIL", criteria[i].label, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return failures;
}
