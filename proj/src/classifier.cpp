#include "cicy/classifier.hpp"

#include "cicy/genus_bounds.hpp"
#include "cicy/ruled_surfaces.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace cicy {

std::string to_string(RuleKind k) { return k == RuleKind::Arithmetic ? "ARITHMETIC" : "AXIOM"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Survives: return "SURVIVES";
    case Status::Eliminated: return "ELIMINATED";
    case Status::AxiomEliminated: return "AXIOM-ELIMINATED";
  }
  return "?";
}

std::string to_string(RankRegime r) { return r == RankRegime::Rank2 ? "rank2" : "higher-rank"; }

std::string to_string(Branch b) {
  switch (b) {
    case Branch::SerreC2: return "serre-c1-2";
    case Branch::ExtensionC2: return "extension-c1-2";
    case Branch::SerreC1: return "serre-c1-1";
  }
  return "?";
}

const std::vector<Rule>& rule_corpus() {
  using K = RuleKind;
  static const std::vector<Rule> rules = {
      {"R-genus-bound", K::Arithmetic, "g <= pi(d, span); g > pi_1(d, r) puts C on a surface of degree < r",
       "genus against the Castelnuovo bound of the span"},
      {"R-degree-cap", K::Arithmetic, "deg C <= 4 deg X - 3 for c1 = 2; deg C <= deg X for c1 = 1",
       "total degree against max_curve_degree"},
      {"R-span", K::Arithmetic, "h^0(E(-1)) = 0 forces <C> = P^n; c1 = 1 forces h^0(I_C(1)) >= 2",
       "linear span of the curve"},
      {"R-plane-section", K::Arithmetic, "a plane not in X meets X in a curve of degree max d_i",
       "plane components have degree at most the largest defining degree"},
      {"R-linear-section", K::Arithmetic, "C inside <C> cap X, residual genus by liaison",
       "components spanning a codimension 2 space lie in the linear section"},
      {"R-ci-omega", K::Arithmetic, "complete intersection with omega_C = O_C(t), t != c1",
       "complete intersection twist must equal the required twist"},
      {"R-hirzebruch-F1", K::Arithmetic, "F_1, |h+2f|, a + b = 15, 2g - 2 = 30 has no integral solution",
       "degree 15 curves on the smooth cubic scroll"},
      {"R-hirzebruch-F3", K::Arithmetic, "F_3, |h+3f|, b = 15, 3a <= b <= 3a + 1 gives (5,15), g = 26",
       "degree 15 curves on the cubic cone"},
      {"R-mu-d", K::Arithmetic, "mu d = 15 gives (1,15) or (3,5); pi(5,4) = 1",
       "multiplicity splitting on a cubic surface"},
      {"R-adjunction-28-40", K::Arithmetic, "(4h+8f).(2h+5f) = -8+20+16 = 28",
       "quartic sections of cubic and quartic scrolls"},
      {"R-ruled-38", K::Arithmetic, "d = 17 on a sextic scroll over a genus 2 curve: 2g - 2 = 34 but C.(C+K) = 38",
       "degree 17 curve on a sextic surface"},
      {"R-ruled-58", K::Arithmetic, "-3e + 6q + 58 = 32 with e even, e >= -q, q <= 2",
       "degree 16 component, three points on each ruling"},
      {"R-ruled-e2q20", K::Arithmetic, "2q + 16 - e = 36 gives e = 2q - 20",
       "degree 18 component on a sextic scroll"},
      {"R-clifford", K::Arithmetic, "Cliff(O_C(1)) = 2 gives h^0 = 8, g = 17 > pi(16,7) = 12",
       "degree 16 component, two points on each ruling"},
      {"R-union-genus", K::Arithmetic, "p_a(C_i cup L) = 13, deg(C_i cap L) = 2",
       "union with the residual line of a quartic surface section"},
      {"R-liaison-18", K::Arithmetic, "d = 3(24 - d) gives d = 18", "linkage in three quadrics and a cubic"},
      {"R-rank-window", K::Arithmetic, "r <= h^0 of the dual of the kernel minus its rank",
       "maximal rank with no trivial summand"},
      {"A-base-locus-surface-degree", K::Axiom, "deg of the base locus <= 2^codim; deg(S) in {5,6,7} excluded",
       "case analysis of the base locus of |I_C(2)|"},
      {"A-berzolari", K::Axiom, "trisecant count forces p_a(D) = 2 for a sextic hyperplane section",
       "Berzolari trisecant formula"},
      {"A-secant-dim", K::Axiom, "dim Sec(T) = 3", "secant variety of a curve in P^5"},
      {"A-no-plane", K::Axiom, "smooth X_5 and X_{3,3} contain no plane", "no plane lies on X"},
      {"A-spannedness-h0", K::Axiom, "h^0(I_C(2)) = 2 and C not a complete intersection: I_C(2) not spanned",
       "global generation of the twisted ideal sheaf"},
      {"A-residual-connected", K::Axiom, "residual curve of a complete intersection meets C",
       "connectedness of complete intersections"},
      {"A-scroll-spannedness", K::Axiom, "a >= 4 and 30a^2 - 31a + 60 <= 0",
       "spannedness of omega_C(-2) on the cubic scroll"},
  };
  return rules;
}

const Rule& find_rule(const std::string& id) {
  for (const auto& r : rule_corpus())
    if (r.id == id) return r;
  throw Error("unknown rule " + id);
}

RuleConfig RuleConfig::without_axioms() {
  RuleConfig c;
  for (const auto& r : rule_corpus())
    if (r.kind == RuleKind::Axiom) c.disabled.insert(r.id);
  return c;
}

namespace {

struct StepResult {
  bool admits = true;
  Json values = Json::object();
};

using StepFn = std::function<StepResult(const CurveCandidate&)>;

struct Step {
  std::string rule;
  StepFn run;
};

struct Case {
  std::string label;
  std::function<bool(const CurveCandidate&)> applies;
  std::vector<Step> steps;
};

const char* kGate = "A-base-locus-surface-degree";

Int codim(const CicyContext& ctx) { return ctx.ambient_dim() - 3; }

Int required_twist(Branch b) {
  switch (b) {
    case Branch::SerreC2: return 2;
    case Branch::SerreC1: return 1;
    case Branch::ExtensionC2: return 0;
  }
  return 0;
}

Int branch_genus(Branch b, Int d) {
  switch (b) {
    case Branch::SerreC2: return required_genus(2, d);
    case Branch::SerreC1: return required_genus(1, d);
    case Branch::ExtensionC2: return 1;
  }
  return 0;
}

Int branch_cap(const CicyContext& ctx, Branch b) {
  return b == Branch::SerreC2 ? max_curve_degree(ctx, 2, 2) : max_curve_degree(ctx, 1, 2);
}

Int branch_c2(const CicyContext& ctx, Branch b, const CurveCandidate& c) {
  if (b == Branch::ExtensionC2) return chern_of_extension(1, 1, c.total_degree(), ctx).c2;
  return c.total_degree();
}

std::vector<Int> with_hyperplanes(const CicyContext& ctx, Int count) {
  std::vector<Int> degs(count, 1);
  degs.insert(degs.end(), ctx.multidegree().begin(), ctx.multidegree().end());
  return degs;
}

CurveComponent linear_section(const CicyContext& ctx) {
  return {ctx.u(), ctx.u() + 1, ctx.ambient_dim() - 2};
}

Int count_of(const CurveCandidate& c, const CurveComponent& x) {
  return std::count(c.components.begin(), c.components.end(), x);
}

Int size_of(const CurveCandidate& c) { return static_cast<Int>(c.components.size()); }

/// First component that is not the linear section, if any.
const CurveComponent* first_other(const CurveCandidate& c, const CicyContext& ctx) {
  const auto l = linear_section(ctx);
  for (const auto& x : c.components)
    if (x != l) return &x;
  return nullptr;
}

Json component_json(const CurveComponent& c) { return Json::array({c.d, c.g, c.span}); }

Json class_json(const DivisorClass& c) { return Json::array({c.a, c.b}); }

// ---- arithmetic payloads shared by steps, reports and the audit ----

Json ci_json(const std::vector<Int>& degrees, Int n) {
  const auto inv = ci_curve_invariants(degrees, n);
  return Json{{"degrees", degrees}, {"degree", inv.degree}, {"omega_twist", inv.omega_twist}, {"genus", inv.genus}};
}

Json hirzebruch_f1_values() {
  const auto s = RuledSurface::hirzebruch(1);
  const DivisorClass h{1, 2};
  const auto poly = genus_polynomial(h, 15, s);
  // C.(C+K) = 2g - 2 = 30 moved to one side.
  const Rational c0 = poly.c0 - 30;
  GenusConstraint gc{h, 15, required_genus(2, 15), {}, 1000};
  Json sols = Json::array();
  for (const auto& c : eliminate_by_genus(gc, s)) sols.push_back(class_json(c));
  return Json{{"surface", "F_1"},
              {"hyperplane", class_json(h)},
              {"degree", 15},
              {"target_2g_minus_2", 30},
              {"polynomial", {to_string(poly.c2), to_string(poly.c1), to_string(c0)}},
              {"solutions", sols},
              {"discrepancy", "leading coefficient is -3, not -30 (lattice gives -3a^2+31a-30 = 30)"}};
}

Json hirzebruch_f3_values() {
  const auto s = RuledSurface::hirzebruch(3);
  const DivisorClass h{1, 3};
  GenusConstraint gc{h, 15, std::nullopt, {LinearConstraint{-3, 1, 0, 1}}, 1000};
  Json sols = Json::array();
  Json genera = Json::array();
  for (const auto& c : eliminate_by_genus(gc, s)) {
    sols.push_back(class_json(c));
    genera.push_back(adjunction_genus(c, s));
  }
  return Json{{"surface", "F_3"}, {"hyperplane", class_json(h)}, {"degree", 15},
              {"solutions", sols}, {"genera", genera}, {"required_genus", required_genus(2, 15)}};
}

/// Allowed degrees of a connected curve on a cubic surface with mu d = 15.
Json mu_d_values() {
  Json pairs = Json::array();
  Json allowed = Json::array();
  for (Int mu = 1; mu <= 15; ++mu) {
    if (15 % mu != 0) continue;
    const Int d = 15 / mu;
    if (d < 4) continue;  // a curve spanning P^4 has degree >= 4
    pairs.push_back(Json::array({mu, d}));
    if (castelnuovo_pi(d, 4) >= required_genus(2, d)) allowed.push_back(d);
  }
  return Json{{"pairs", pairs}, {"pi_5_4", castelnuovo_pi(5, 4)}, {"allowed_degrees", allowed}};
}

Json adjunction_28_40_values() {
  Json rows = Json::array();
  struct Row { Int e; DivisorClass h; Int multiple; };
  for (const Row& r : {Row{1, {1, 2}, 4}, Row{3, {1, 3}, 4}, Row{0, {1, 2}, 4}, Row{2, {1, 3}, 4}, Row{4, {1, 4}, 4}}) {
    const auto s = RuledSurface::hirzebruch(r.e);
    const DivisorClass c = r.h * r.multiple;
    const Int d = embedding_degree(c, r.h, s);
    rows.push_back(Json{{"surface", "F_" + std::to_string(r.e)}, {"class", class_json(c)}, {"degree", d},
                        {"adjunction", adjunction_degree(c, s)}, {"required", 2 * required_genus(2, d) - 2}});
  }
  return Json{{"cases", rows}};
}

bool adjunction_rejects_degree(Int d) {
  for (const auto& row : adjunction_28_40_values()["cases"])
    if (row["degree"].get<Int>() == d && row["adjunction"] == row["required"]) return false;
  return true;
}

/// Sextic scroll S' over D with hyperplane h + (3 + e/2) f; C = 3h + (b0 + 3e/2) f.
Int scroll_adjunction(Int b0, Int degree, Int q, Int e) {
  const auto s = RuledSurface::make(e, q);
  const DivisorClass h{1, 3 + e / 2};
  const DivisorClass c{3, b0 + 3 * e / 2};
  if (embedding_degree(c, h, s) != degree) throw Error("scroll class has the wrong degree");
  return adjunction_degree(c, s);
}

Json scroll_values(Int b0, Int degree, Int q) {
  Json rows = Json::array();
  std::set<Int> values;
  for (Int e = -q; e <= 12; ++e) {
    if (e % 2 != 0) continue;
    const Int v = scroll_adjunction(b0, degree, q, e);
    values.insert(v);
    rows.push_back(Json{{"e", e}, {"adjunction", v}});
  }
  return Json{{"q", q}, {"degree", degree}, {"required", 2 * required_genus(2, degree) - 2}, {"by_e", rows},
              {"distinct", Json(std::vector<Int>(values.begin(), values.end()))}};
}

Json ruled_38_values() {
  // p_a(D) = 2, so the ruled surface has base genus 2.
  auto v = scroll_values(8, 17, 2);
  v["constant"] = v["distinct"].size() == 1 ? v["distinct"][0] : Json();
  return v;
}

/// Integer pairs (q, e) with e even, -q <= e, 0 <= q <= 2 satisfying lhs(q, e) == rhs.
template <class F>
Json feasible_pairs(F lhs, Int rhs) {
  Json out = Json::array();
  for (Int q = 0; q <= 2; ++q)
    for (Int e = -q; e <= 60; ++e)
      if (e % 2 == 0 && lhs(q, e) == rhs) out.push_back(Json::array({q, e}));
  return out;
}

Json ruled_58_values() {
  Json lattice = Json::array();
  for (Int q = 0; q <= 2; ++q) lattice.push_back(scroll_values(7, 16, q)["distinct"]);
  return Json{{"equation", "-3e + 6q + 58 = 32"},
              {"solutions", feasible_pairs([](Int q, Int e) { return -3 * e + 6 * q + 58; }, 32)},
              {"lattice_class", "3h + (7 + 3e/2) f"},
              {"lattice_adjunction_q0_q1_q2", lattice},
              {"lattice_solutions",
               feasible_pairs([](Int q, Int e) { return scroll_adjunction(7, 16, q, e); }, 32)},
              {"discrepancy", "the class 3h + (16 + 3e/2) f has degree 25; degree 16 needs 3h + (7 + 3e/2) f"}};
}

Json ruled_e2q20_values() {
  Json lattice = Json::array();
  for (Int q = 0; q <= 2; ++q) lattice.push_back(scroll_values(9, 18, q)["distinct"]);
  return Json{
      {"equation", "2q + 16 - e = 36"},
      {"solutions", feasible_pairs([](Int q, Int e) { return 2 * q + 16 - e; }, 36)},
      {"lattice_adjunction_q0_q1_q2", lattice},
      {"lattice_solutions",
       feasible_pairs([](Int q, Int e) { return scroll_adjunction(9, 18, q, e); }, 36)},
      {"discrepancy", "C = 3h + (9 + 3e/2) f gives C.(C+K) = 30 + 6q, which equals 36 at q = 1"}};
}

Json clifford_values() {
  const Int d = 16, g = required_genus(2, d);
  const Int cliff = 2;
  // Cliff(L) = deg L + 2 - 2 h^0(L)
  const Int h0 = (d + 2 - cliff) / 2;
  const Int span = h0 - 1;
  return Json{{"degree", d}, {"genus", g}, {"clifford_index", cliff}, {"h0", h0}, {"span", span},
              {"pi", castelnuovo_pi(d, span)}, {"alternative_clifford_index", g - 3},
              {"max_clifford_index", d + 2 - 2 * 3},
              {"discrepancy", "the relation is 32 = 2g_2 - 2 with g_2 = 17, not 2g_2 + 2"}};
}

Json union_genus_values() {
  const auto ci = ci_curve_invariants({2, 2, 3}, 4);
  const Int gi = required_genus(2, 11);
  // p_a(C_i cup L) = g_i + 0 - 2 + 1 + t
  const Int meets = ci.genus - union_genus({gi, 0}, 0);
  // deg omega restricted to L = 2 p_a(L) - 2 + deg(L cap C_i)
  const Int omega_on_line = -2 + meets;
  return Json{{"complete_intersection", ci_json({2, 2, 3}, 4)},
              {"component_genus", gi},
              {"meets", meets},
              {"union_genus", union_genus({gi, 0}, meets)},
              {"omega_degree_on_line", omega_on_line},
              {"required_degree_on_line", ci.omega_twist}};
}

Json liaison_values() {
  const auto ci = ci_curve_invariants({2, 2, 2, 3}, 5);
  return Json{{"complete_intersection", ci_json({2, 2, 2, 3}, 5)},
              {"target_twist", 2},
              {"cut", 3},
              {"degree", liaison_solve(ci.degree, ci.omega_twist, 2, 3)}};
}

Json scroll_spannedness_values() {
  // Lattice form 3a^2 - 31a + 60 <= 0; the literal form has leading coefficient 30.
  Json sat = Json::array();
  for (Int a = 4; a <= 15; ++a)
    if (3 * a * a - 31 * a + 60 <= 0) sat.push_back(a);
  Json literal = Json::array();
  for (Int a = 4; a <= 15; ++a)
    if (30 * a * a - 31 * a + 60 <= 0) literal.push_back(a);
  return Json{{"literal_solutions", literal},
              {"lattice_solutions", sat},
              {"discrepancy", "lattice inequality 3a^2 - 31a + 60 <= 0 holds for 4 <= a <= 7"}};
}

/// Static payload for a rule, or null if its values depend only on the candidate.
Json static_values(const std::string& id) {
  if (id == "R-hirzebruch-F1") return hirzebruch_f1_values();
  if (id == "R-hirzebruch-F3") return hirzebruch_f3_values();
  if (id == "R-mu-d") return mu_d_values();
  if (id == "R-adjunction-28-40") return adjunction_28_40_values();
  if (id == "R-ruled-38") return ruled_38_values();
  if (id == "R-ruled-58") return ruled_58_values();
  if (id == "R-ruled-e2q20") return ruled_e2q20_values();
  if (id == "R-clifford") return clifford_values();
  if (id == "R-union-genus") return union_genus_values();
  if (id == "R-liaison-18") return liaison_values();
  if (id == "A-scroll-spannedness") return scroll_spannedness_values();
  if (id == "R-genus-bound")
    return Json{{"pi_one_14_5", pi_one(14, 5)}, {"pi_one_15_5", pi_one(15, 5)},
                {"discrepancy", "pi_1(14,5) evaluates to 13, not 11; both are below g = 15"}};
  if (id == "A-berzolari") return Json{{"pi_6_4", castelnuovo_pi(6, 4)}, {"forced_genus", 2}};
  if (id == "A-secant-dim") return Json{{"secant_dim", 3}};
  return Json();
}

StepResult admit(Json v = Json::object()) { return {true, std::move(v)}; }
StepResult reject(Json v = Json::object()) { return {false, std::move(v)}; }

// ---- component rules ----

struct ComponentCheck {
  std::string rule;
  std::function<bool(const CurveComponent&)> applies;
  std::function<StepResult(const CurveComponent&)> run;
};

std::vector<ComponentCheck> component_checks(const CicyContext& ctx, Branch branch) {
  const Int k = codim(ctx);
  const Int u = ctx.u();
  const Int cap = branch_cap(ctx, branch);
  const Int maxdeg = *std::max_element(ctx.multidegree().begin(), ctx.multidegree().end());
  const Int twist = required_twist(branch);
  std::vector<ComponentCheck> out;
  auto always = [](const CurveComponent&) { return true; };
  out.push_back({"R-degree-cap", always, [cap](const CurveComponent& c) {
                   Json v{{"degree", c.d}, {"cap", cap}};
                   return c.d <= cap ? admit(v) : reject(v);
                 }});
  out.push_back({"R-genus-bound", always, [](const CurveComponent& c) {
                   if (c.span >= 3 && c.d < c.span) return reject(Json{{"degree", c.d}, {"span", c.span}, {"nondegenerate", false}});
                   const Int bound = max_genus(c.d, c.span);
                   Json v{{"degree", c.d}, {"span", c.span}, {"genus", c.g}, {"bound", bound}};
                   const bool ok = c.span == 2 ? c.g == bound : c.g <= bound;
                   return ok ? admit(v) : reject(v);
                 }});
  auto is_plane = [](const CurveComponent& c) { return c.span == 2; };
  out.push_back({"A-no-plane", is_plane, [](const CurveComponent&) { return admit(); }});
  out.push_back({"R-plane-section", is_plane, [maxdeg](const CurveComponent& c) {
                   Json v{{"degree", c.d}, {"max_defining_degree", maxdeg}};
                   return c.d <= maxdeg ? admit(v) : reject(v);
                 }});
  auto is_linear = [k](const CurveComponent& c) { return c.span == k + 1; };
  out.push_back({"R-ci-omega", [is_linear, u](const CurveComponent& c) { return is_linear(c) && c.d == u; },
                 [ctx, twist](const CurveComponent&) {
                   Json v = ci_json(with_hyperplanes(ctx, 2), ctx.ambient_dim());
                   v["required_twist"] = twist;
                   return v["omega_twist"].get<Int>() == twist ? admit(v) : reject(v);
                 }});
  out.push_back({"R-linear-section", is_linear, [ctx, u](const CurveComponent& c) {
                   const auto ci = ci_curve_invariants(with_hyperplanes(ctx, 2), ctx.ambient_dim());
                   if (c.d > u) return reject(Json{{"degree", c.d}, {"section_degree", u}});
                   if (c.d == u) return admit(Json{{"degree", c.d}, {"section_degree", u}});
                   // g(C) - g(D) = (d - d_D) t / 2 for C + D linked in the section.
                   const Int residual = u - c.d;
                   const Int bound = plane_genus(residual) + (2 * c.d - u) * ci.omega_twist / 2;
                   Json v{{"degree", c.d}, {"residual_degree", residual}, {"genus", c.g}, {"bound", bound}};
                   return c.g <= bound ? admit(v) : reject(v);
                 }});
  if (branch != Branch::SerreC2)
    out.push_back({"A-spannedness-h0", is_linear, [u](const CurveComponent& c) {
                     Json v{{"degree", c.d}, {"section_degree", u}};
                     return c.d == u ? admit(v) : reject(v);
                   }});
  return out;
}

Status status_for(const std::string& rule) {
  return find_rule(rule).kind == RuleKind::Arithmetic ? Status::Eliminated : Status::AxiomEliminated;
}

// ---- candidate rules ----

std::vector<Step> candidate_steps(const CicyContext& ctx, Branch branch) {
  const Int n = ctx.ambient_dim();
  const Int k = codim(ctx);
  const Int cap = branch_cap(ctx, branch);
  std::vector<Step> out;
  out.push_back({"R-degree-cap", [cap](const CurveCandidate& c) {
                   Json v{{"degree", c.total_degree()}, {"cap", cap}};
                   return c.total_degree() <= cap ? admit(v) : reject(v);
                 }});
  if (branch == Branch::SerreC2) {
    out.push_back({"R-span", [n](const CurveCandidate& c) {
                     if (c.empty()) return admit();
                     if (size_of(c) == 1) {
                       Json v{{"span", c.components[0].span}, {"required", n}};
                       return c.components[0].span == n ? admit(v) : reject(v);
                     }
                     Int sum = 0;
                     for (const auto& x : c.components) sum += x.span + 1;
                     Json v{{"span_sum", sum}, {"required", n + 1}};
                     return sum >= n + 1 ? admit(v) : reject(v);
                   }});
  } else if (branch == Branch::SerreC1) {
    out.push_back({"R-span", [n](const CurveCandidate& c) {
                     Int worst = 0;
                     for (const auto& x : c.components) worst = std::max(worst, x.span);
                     Json v{{"max_span", worst}, {"allowed", n - 2}};
                     return worst <= n - 2 ? admit(v) : reject(v);
                   }});
    out.push_back({"A-spannedness-h0", [](const CurveCandidate& c) {
                     Json v{{"components", size_of(c)}};
                     return size_of(c) <= 1 ? admit(v) : reject(v);
                   }});
  } else {
    out.push_back({"A-spannedness-h0", [k](const CurveCandidate& c) {
                     if (c.empty()) return admit();
                     Json v{{"components", size_of(c)}, {"span", c.components[0].span}, {"linear_section_span", k + 1}};
                     return size_of(c) == 1 && c.components[0].span == 2 && 2 < k + 1 ? admit(v) : reject(v);
                   }});
  }
  return out;
}

// ---- case covers for the c1 = 2 Serre branch ----

Step ci_step(std::vector<Int> degrees, Int n, std::function<bool(const CurveCandidate&, const Json&)> ok) {
  return {"R-ci-omega", [degrees, n, ok](const CurveCandidate& c) {
            Json v = ci_json(degrees, n);
            v["required_twist"] = 2;
            v["candidate_degree"] = c.total_degree();
            return ok(c, v) ? admit(v) : reject(v);
          }};
}

Step axiom_reject(const std::string& rule, Json v = Json::object()) {
  return {rule, [v](const CurveCandidate&) { return reject(v); }};
}

Step static_step(const std::string& rule, std::function<bool(const CurveCandidate&, const Json&)> ok) {
  return {rule, [rule, ok](const CurveCandidate& c) {
            Json v = static_values(rule);
            return ok(c, v) ? admit(v) : reject(v);
          }};
}

std::vector<Case> quintic_cover(const CicyContext& ctx) {
  const auto l = linear_section(ctx);
  std::vector<Case> cases;
  cases.push_back({"base locus of three quadrics is a curve", [](const CurveCandidate&) { return true; },
                   {ci_step({2, 2, 2}, 4, [](const CurveCandidate& c, const Json& v) {
                     const Int d = c.total_degree();
                     const Int top = v["degree"].get<Int>();
                     return d < top || (d == top && v["omega_twist"] == v["required_twist"]);
                   })}});
  cases.push_back({"two planes meeting in a point",
                   [l](const CurveCandidate& c) { return c == CurveCandidate::of({l, l}); },
                   {ci_step(with_hyperplanes(ctx, 2), 4,
                            [](const CurveCandidate&, const Json& v) { return v["omega_twist"] == v["required_twist"]; })}});
  cases.push_back({"three planes", [l](const CurveCandidate& c) { return c == CurveCandidate::of({l, l, l}); },
                   {axiom_reject("A-spannedness-h0", Json{{"planes", 3}})}});
  cases.push_back({"quadric surface and a plane",
                   [l](const CurveCandidate& c) { return count_of(c, l) == 1 && size_of(c) >= 2; },
                   {ci_step({1, 2, 5}, 4, [](const CurveCandidate&, const Json& v) {
                     return v["omega_twist"] == v["required_twist"];
                   })}});
  auto integral_cubic = [l](const CurveCandidate& c) { return count_of(c, l) == 0; };
  auto mu_d = [](const std::vector<DivisorClass>& reps, Int e) {
    return Step{"R-mu-d", [reps, e](const CurveCandidate& c) {
                  Json v = mu_d_values();
                  const auto s = RuledSurface::hirzebruch(e);
                  v["connected"] = disjointness_obstruction(reps, s);
                  v["components"] = size_of(c);
                  if (size_of(c) >= 2) return reject(v);
                  const Int d = c.total_degree();
                  for (const auto& a : v["allowed_degrees"])
                    if (a.get<Int>() == d) return admit(v);
                  return reject(v);
                }};
  };
  cases.push_back({"smooth cubic scroll", integral_cubic,
                   {mu_d({{1, 2}, {1, 2}}, 1),
                    static_step("R-hirzebruch-F1", [](const CurveCandidate&, const Json& v) { return !v["solutions"].empty(); })}});
  cases.push_back({"cone over a twisted cubic", integral_cubic,
                   {mu_d({{1, 3}, {1, 3}}, 3), static_step("R-hirzebruch-F3", [](const CurveCandidate&, const Json& v) {
                      for (const auto& g : v["genera"])
                        if (g == v["required_genus"]) return true;
                      return false;
                    })}});
  return cases;
}

Step curve_base_locus_step() {
  return ci_step({2, 2, 2, 2}, 5, [](const CurveCandidate& c, const Json& v) {
    return c.total_degree() <= v["degree"].get<Int>() && v["omega_twist"] == v["required_twist"];
  });
}

Step residual_step() {
  return {"A-residual-connected", [](const CurveCandidate& c) {
            Json v{{"degree", c.total_degree()}, {"complete_intersection_degree", 16}};
            return c.total_degree() == 16 ? admit(v) : reject(v);
          }};
}

std::vector<Case> x24_cover(const CicyContext& ctx) {
  const auto l = linear_section(ctx);
  auto connected = [](const CurveCandidate& c) { return size_of(c) == 1; };
  auto split = [](const CurveCandidate& c) { return size_of(c) >= 2; };
  std::vector<Case> cases;
  cases.push_back({"base locus is a curve", connected, {curve_base_locus_step(), residual_step()}});
  cases.push_back({"base locus contains a surface", connected, {{"A-base-locus-surface-degree", [](const CurveCandidate& c) {
                     const Int d = c.total_degree();
                     Json v{{"degree", d}, {"quartic_section", true}};
                     if (d % 4 == 0) v["surface_degree"] = d / 4;
                     return d == 24 ? admit(v) : reject(v);  // sextic surfaces go to the trisecant count
                   }},
                   {"A-berzolari", [](const CurveCandidate&) { return reject(static_values("A-berzolari")); }}}});
  cases.push_back({"two linear sections",
                   [l](const CurveCandidate& c) { return size_of(c) == 2 && count_of(c, l) == 2; },
                   {ci_step(with_hyperplanes(ctx, 2), 5,
                            [](const CurveCandidate&, const Json& v) { return v["omega_twist"] == v["required_twist"]; })}});
  cases.push_back({"three or more linear sections",
                   [l](const CurveCandidate& c) { return size_of(c) >= 3 && count_of(c, l) == size_of(c); },
                   {axiom_reject("A-spannedness-h0", Json{{"linear_sections", "at least 3"}})}});
  auto other_is = [ctx, split](std::function<bool(const CurveComponent&)> p) {
    return [ctx, split, p](const CurveCandidate& c) {
      const auto* f = first_other(c, ctx);
      return split(c) && f && p(*f);
    };
  };
  cases.push_back({"quartic section of a cubic scroll", other_is([](const CurveComponent& f) { return f.d == 12; }),
                   {static_step("R-adjunction-28-40", [](const CurveCandidate&, const Json&) { return !adjunction_rejects_degree(12); })}});
  cases.push_back({"quartic section of a quartic scroll", other_is([](const CurveComponent& f) { return f.d == 16; }),
                   {static_step("R-adjunction-28-40", [](const CurveCandidate&, const Json&) { return !adjunction_rejects_degree(16); })}});
  cases.push_back({"other component", other_is([](const CurveComponent& f) { return f.d != 12 && f.d != 16; }),
                   {{"A-base-locus-surface-degree", [ctx](const CurveCandidate& c) {
                      const auto* f = first_other(c, ctx);
                      return reject(Json{{"component", component_json(*f)}, {"surface_degrees", {2, 3, 4}}});
                    }}}});
  return cases;
}

std::vector<Case> x33_cover(const CicyContext& ctx) {
  const auto l = linear_section(ctx);
  auto connected = [](const CurveCandidate& c) { return size_of(c) == 1; };
  auto split = [](const CurveCandidate& c) { return size_of(c) >= 2; };
  auto deg_in = [connected](Int lo, Int hi) {
    return [connected, lo, hi](const CurveCandidate& c) {
      return connected(c) && lo <= c.total_degree() && c.total_degree() <= hi;
    };
  };
  std::vector<Case> cases;
  cases.push_back({"base locus is a curve", connected, {curve_base_locus_step(), residual_step()}});
  cases.push_back({"surface of degree 5", deg_in(14, 15),
                   {{"R-ci-omega", [](const CurveCandidate& c) {
                      // weak del Pezzo: omega_T = O_T(-1), C = T cap cubic
                      Json v{{"surface_twist", -1}, {"cut", 3}, {"omega_twist", -1 + 3}, {"required_twist", 2},
                             {"degree", 5 * 3}};
                      return c.total_degree() == 15 ? admit(v) : reject(v);
                    }},
                    residual_step()}});
  cases.push_back({"surface of degree 6", deg_in(14, 18),
                   {{"R-genus-bound", [](const CurveCandidate& c) {
                      const Int d = c.total_degree();
                      const Int g = required_genus(2, d);
                      if (d != 14 && d != 15) return admit(Json{{"degree", d}});
                      const Int p1 = pi_one(d, 5);
                      Json v{{"degree", d}, {"genus", g}, {"pi_one", p1}, {"small_surface_max_degree", 3 * 4}};
                      // g > pi_1 puts C on a surface of degree <= 4, so d <= 12.
                      return g <= p1 ? admit(v) : reject(v);
                    }},
                    {"A-berzolari", [](const CurveCandidate& c) {
                       if (c.total_degree() != 17) return admit(Json{{"degree", c.total_degree()}});
                       return admit(static_values("A-berzolari"));
                     }},
                    {"R-ruled-38", [](const CurveCandidate& c) {
                       Json v = static_values("R-ruled-38");
                       if (c.total_degree() != 17) return admit(Json{{"degree", c.total_degree()}});
                       return v["constant"] == v["required"] ? admit(v) : reject(v);
                     }}}});
  cases.push_back({"surface of degree 7", deg_in(14, 21),
                   {axiom_reject("A-base-locus-surface-degree", Json{{"surface_degree", 7}})}});
  cases.push_back({"complete intersection of three quadrics", deg_in(14, 24),
                   {static_step("R-liaison-18", [](const CurveCandidate& c, const Json& v) {
                     return c.total_degree() == v["degree"].get<Int>();
                   })}});
  cases.push_back({"threefold in the base locus", deg_in(25, 1000),
                   {axiom_reject("A-base-locus-surface-degree", Json{{"max_surface_degree", 8}, {"max_degree", 24}})}});
  cases.push_back({"two linear sections",
                   [l](const CurveCandidate& c) { return size_of(c) == 2 && count_of(c, l) == 2; },
                   {ci_step(with_hyperplanes(ctx, 2), 5,
                            [](const CurveCandidate&, const Json& v) { return v["omega_twist"] == v["required_twist"]; })}});
  cases.push_back({"three or more linear sections",
                   [l](const CurveCandidate& c) { return size_of(c) >= 3 && count_of(c, l) == size_of(c); },
                   {axiom_reject("A-spannedness-h0", Json{{"linear_sections", "at least 3"}})}});
  auto other_is = [ctx, split](std::function<bool(const CurveComponent&)> p) {
    return [ctx, split, p](const CurveCandidate& c) {
      const auto* f = first_other(c, ctx);
      return split(c) && f && p(*f);
    };
  };
  auto other_deg = [ctx](const CurveCandidate& c) { return first_other(c, ctx)->d; };
  cases.push_back({"component on a quartic surface", other_is([](const CurveComponent& f) { return f.span == 4; }),
                   {{"A-base-locus-surface-degree", [other_deg](const CurveCandidate& c) {
                      Json v{{"degree", other_deg(c)}, {"max_degree", 3 * 4}};
                      return other_deg(c) <= 12 ? admit(v) : reject(v);
                    }},
                    {"R-union-genus", [other_deg](const CurveCandidate& c) {
                       if (other_deg(c) != 11) return admit(Json{{"degree", other_deg(c)}});
                       Json v = static_values("R-union-genus");
                       return v["omega_degree_on_line"] == v["required_degree_on_line"] ? admit(v) : reject(v);
                     }},
                    {"A-spannedness-h0", [other_deg](const CurveCandidate& c) {
                       Json v{{"degree", other_deg(c)}};
                       return other_deg(c) != 12 ? admit(v) : reject(v);
                     }}}});
  auto span5 = [](Int lo, Int hi) {
    return [lo, hi](const CurveComponent& f) { return f.span == 5 && lo <= f.d && f.d <= hi; };
  };
  cases.push_back({"component of degree 14", other_is(span5(14, 14)),
                   {axiom_reject("A-residual-connected", Json{{"degree", 14}})}});
  cases.push_back({"component of degree 15", other_is(span5(15, 15)),
                   {axiom_reject("A-base-locus-surface-degree", Json{{"pi_one", pi_one(15, 5)}, {"surface_degree", 5}})}});
  cases.push_back({"component of degree 16, trisecant rulings", other_is(span5(16, 16)),
                   {{"A-secant-dim", [](const CurveCandidate&) { return admit(static_values("A-secant-dim")); }},
                    static_step("R-ruled-58", [](const CurveCandidate&, const Json& v) {
                      return !v["solutions"].empty();
                    })}});
  cases.push_back({"component of degree 16, bisecant rulings", other_is(span5(16, 16)),
                   {{"A-secant-dim", [](const CurveCandidate&) { return admit(static_values("A-secant-dim")); }},
                    static_step("R-clifford", [](const CurveCandidate&, const Json& v) {
                      return v["genus"].get<Int>() <= v["pi"].get<Int>();
                    })}});
  cases.push_back({"component of degree 17", other_is(span5(17, 17)),
                   {static_step("R-ruled-38", [](const CurveCandidate&, const Json& v) { return v["constant"] == v["required"]; })}});
  cases.push_back({"component of degree 18", other_is(span5(18, 18)),
                   {static_step("R-ruled-e2q20", [](const CurveCandidate&, const Json& v) { return !v["solutions"].empty(); })}});
  cases.push_back({"component of degree above 18", other_is(span5(19, 1000)),
                   {axiom_reject("A-base-locus-surface-degree", Json{{"max_degree", 18}})}});
  return cases;
}

std::vector<Case> serre_cover(const CicyContext& ctx) {
  if (ctx.multidegree() == std::vector<Int>{5}) return quintic_cover(ctx);
  if (ctx.multidegree() == std::vector<Int>{2, 4}) return x24_cover(ctx);
  if (ctx.multidegree() == std::vector<Int>{3, 3}) return x33_cover(ctx);
  return {};
}

/// Runs every step of every rule so the trail lists all rejections. A verdict is ELIMINATED
/// when arithmetic rejections alone remove it, AXIOM-ELIMINATED when axioms are needed.
Verdict evaluate(const CurveCandidate& cand, const CicyContext& ctx, Branch branch, const RuleConfig& cfg,
                 const std::vector<Step>& steps, const std::vector<Case>& cover) {
  Verdict v{branch, cand, Status::Survives, {}, branch_c2(ctx, branch, cand)};
  bool arith_reject = false;
  bool axiom_reject = false;
  auto record = [&](const Step& st, const std::string& label) {
    auto r = st.run(cand);
    v.trail.push_back({st.rule, label, !r.admits, std::move(r.values)});
    return r.admits;
  };
  for (const auto& st : steps) {
    if (!cfg.enabled(st.rule)) continue;
    if (!record(st, "candidate")) (find_rule(st.rule).kind == RuleKind::Arithmetic ? arith_reject : axiom_reject) = true;
  }
  if (branch == Branch::SerreC2 && !cand.empty() && cfg.enabled(kGate)) {
    Int applied = 0;
    bool admitted = false;
    bool all_arith = true;
    for (const auto& cs : cover) {
      if (!cs.applies(cand)) continue;
      ++applied;
      bool ok = true;
      bool arith = false;
      for (const auto& st : cs.steps) {
        if (!cfg.enabled(st.rule)) continue;
        if (!record(st, cs.label)) {
          ok = false;
          arith = arith || find_rule(st.rule).kind == RuleKind::Arithmetic;
        }
      }
      admitted = admitted || ok;
      if (!ok && !arith) all_arith = false;
    }
    if (applied == 0) {
      v.trail.push_back({kGate, "no case applies", true, Json::object()});
      axiom_reject = true;
    } else if (!admitted) {
      (all_arith ? arith_reject : axiom_reject) = true;
    }
  }
  if (arith_reject) v.status = Status::Eliminated;
  else if (axiom_reject) v.status = Status::AxiomEliminated;
  return v;
}

}  // namespace

Verdict component_admissible(const CurveComponent& comp, const CicyContext& ctx, Branch branch, const RuleConfig& cfg) {
  Verdict v{branch, CurveCandidate::of({comp}), Status::Survives, {}, 0};
  bool plane_hypothesis = cfg.enabled("A-no-plane");
  for (const auto& chk : component_checks(ctx, branch)) {
    if (!chk.applies(comp) || !cfg.enabled(chk.rule)) continue;
    if (chk.rule == "R-plane-section" && !plane_hypothesis) continue;
    auto r = chk.run(comp);
    v.trail.push_back({chk.rule, "component", !r.admits, std::move(r.values)});
    if (!r.admits) {
      v.status = status_for(chk.rule);
      return v;
    }
  }
  return v;
}

std::vector<CurveComponent> admissible_components(const CicyContext& ctx, Branch branch, const RuleConfig& cfg) {
  std::vector<CurveComponent> out;
  const Int cap = branch_cap(ctx, branch);
  for (Int d = 1; d <= cap; ++d) {
    if (branch == Branch::SerreC1 && d % 2 != 0) continue;
    const Int g = branch_genus(branch, d);
    for (Int span = 2; span <= ctx.ambient_dim(); ++span) {
      const CurveComponent c{d, g, span};
      if (component_admissible(c, ctx, branch, cfg).status == Status::Survives) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveCandidate> enumerate_branch(const CicyContext& ctx, Branch branch, const RuleConfig& cfg) {
  const auto comps = admissible_components(ctx, branch, cfg);
  const Int cap = branch_cap(ctx, branch);
  std::vector<CurveCandidate> out;
  std::vector<CurveComponent> cur;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t start, Int total) {
    out.push_back(CurveCandidate::of(cur));
    for (std::size_t i = start; i < comps.size(); ++i) {
      if (total + comps[i].d > cap) continue;
      cur.push_back(comps[i]);
      rec(i, total + comps[i].d);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveCandidate> enumerate_candidates(const CicyContext& ctx, Int c1, RankRegime, const RuleConfig& cfg) {
  if (c1 == 0) return {CurveCandidate{}};
  if (c1 == 1) return enumerate_branch(ctx, Branch::SerreC1, cfg);
  if (c1 == 2) return enumerate_branch(ctx, Branch::SerreC2, cfg);
  throw Error("c1 must be 0, 1 or 2");
}

std::vector<Verdict> apply_rules(const std::vector<CurveCandidate>& candidates, const CicyContext& ctx, Branch branch,
                                 const RuleConfig& cfg) {
  const auto steps = candidate_steps(ctx, branch);
  const auto cover = serre_cover(ctx);
  std::vector<Verdict> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(evaluate(c, ctx, branch, cfg, steps, cover));
  return out;
}

namespace {

bool is_classified(const CicyContext& ctx) {
  const auto& m = ctx.multidegree();
  return m == std::vector<Int>{5} || m == std::vector<Int>{2, 4} || m == std::vector<Int>{3, 3};
}

std::vector<RankWindow> quintic_shapes(const CicyContext& ctx) {
  auto window = [&](const std::string& shape, const std::vector<Int>& sub, Int quot_zero, const std::vector<Int>& extra) {
    std::vector<Int> quot(quot_zero, 0);
    quot.insert(quot.end(), extra.begin(), extra.end());
    const auto inv = chern_from_resolution(sub, quot, ctx);
    return RankWindow{shape, inv.c1, inv.c2, 3,
                      max_rank_no_trivial(sub, ctx, extra)};
  };
  std::vector<RankWindow> out;
  out.push_back(window("euler-sequence-pullback", {-1}, 5, {}));
  out.push_back(window("quintic-resolution-r14", {-2}, 4, {}));
  out.push_back(window("quintic-resolution-r8", {-1, -1}, 5, {}));
  out.push_back(window("quintic-resolution-r5", {-1}, 3, {1}));
  return out;
}

}  // namespace

ClassificationResult classify(const CicyContext& ctx, Int c1_max, RankRegime regime, const RuleConfig& cfg) {
  if (c1_max < 0 || c1_max > 2) throw Error("c1_max must be 0, 1 or 2");
  if (!is_classified(ctx)) throw Error("classification covers X_5, X_{2,4} and X_{3,3} only");
  if (regime == RankRegime::HigherRank && ctx.multidegree() != std::vector<Int>{5})
    throw Error("higher rank classification covers X_5 only");
  ClassificationResult res;
  res.ctx = ctx;
  res.c1_max = c1_max;
  res.regime = regime;
  std::set<Int> c2s{0};
  for (Int c1 = 1; c1 <= c1_max; ++c1) {
    res.admissible_pairs.insert({c1, 0});
    std::vector<Branch> branches = c1 == 1 ? std::vector<Branch>{Branch::SerreC1}
                                           : std::vector<Branch>{Branch::SerreC2, Branch::ExtensionC2};
    for (auto b : branches) {
      for (const auto& comp : [&] {
             std::vector<CurveComponent> all;
             const Int cap = branch_cap(ctx, b);
             for (Int d = 1; d <= cap; ++d) {
               if (b == Branch::SerreC1 && d % 2 != 0) continue;
               for (Int span = 2; span <= ctx.ambient_dim(); ++span) all.push_back({d, branch_genus(b, d), span});
             }
             return all;
           }()) {
        auto v = component_admissible(comp, ctx, b, cfg);
        if (v.status != Status::Survives) res.component_verdicts.push_back(std::move(v));
      }
      for (auto& v : apply_rules(enumerate_branch(ctx, b, cfg), ctx, b, cfg)) {
        if (v.status == Status::Survives) {
          c2s.insert(v.c2);
          res.admissible_pairs.insert({c1, v.c2});
        }
        res.verdicts.push_back(std::move(v));
      }
    }
  }
  if (regime == RankRegime::HigherRank) {
    res.rank_windows = quintic_shapes(ctx);
    for (const auto& w : res.rank_windows) {
      if (w.c1 > c1_max) continue;
      c2s.insert(w.c2);
      res.admissible_pairs.insert({w.c1, w.c2});
    }
  }
  res.admissible_c2.assign(c2s.begin(), c2s.end());
  for (const auto& e : registry()) {
    if (!(e.ctx == ctx) || e.c1 > c1_max || e.c2 == 0) continue;
    if (regime == RankRegime::Rank2 && e.rank != 2) continue;
    if (!c2s.count(e.c2)) continue;
    auto& names = res.witnesses[e.c2];
    if (std::find(names.begin(), names.end(), e.name) == names.end()) names.push_back(e.name);
  }
  // c2 = 16 is realized on both codimension 2 threefolds but not classified there.
  if (c1_max == 2 && codim(ctx) == 2 && c2s.count(16)) res.unresolved.push_back(16);
  return res;
}

namespace {

struct RuleUse {
  Int fired = 0;
  Int rejected = 0;
};

}  // namespace

Json rule_report(const ClassificationResult& r) {
  std::map<std::string, RuleUse> uses;
  auto tally = [&](const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
      for (const auto& t : v.trail) {
        auto& u = uses[t.rule_id];
        ++u.fired;
        if (t.rejects) ++u.rejected;
      }
  };
  tally(r.component_verdicts);
  tally(r.verdicts);
  if (!r.rank_windows.empty()) {
    uses["R-rank-window"].fired += static_cast<Int>(r.rank_windows.size());
    uses["A-scroll-spannedness"].fired += 1;
  }

  Json out;
  out["threefold"] = r.ctx.label();
  out["c1"] = r.c1_max;
  out["rank_regime"] = to_string(r.regime);
  out["admissible_c2"] = r.admissible_c2;
  Json pairs = Json::array();
  for (const auto& [c1, c2] : r.admissible_pairs) pairs.push_back(Json::array({c1, c2}));
  out["admissible_pairs"] = pairs;
  Json wit = Json::object();
  for (const auto& [c2, names] : r.witnesses) wit[std::to_string(c2)] = names;
  out["witnesses"] = wit;
  out["unresolved"] = r.unresolved;
  if (!r.rank_windows.empty()) {
    Json ws = Json::array();
    for (const auto& w : r.rank_windows)
      ws.push_back(Json{{"shape", w.shape}, {"c1", w.c1}, {"c2", w.c2}, {"min_rank", w.min_rank}, {"max_rank", w.max_rank}});
    out["rank_windows"] = ws;
  }
  Json rules = Json::array();
  for (const auto& rule : rule_corpus()) {
    auto it = uses.find(rule.id);
    if (it == uses.end()) continue;
    Json values = static_values(rule.id);
    if (values.is_null()) values = Json::object();
    Json entry{{"id", rule.id}, {"kind", to_string(rule.kind)}, {"anchor", rule.anchor}, {"values", values},
               {"fired", it->second.fired}, {"rejected", it->second.rejected}};
    if (values.contains("discrepancy")) entry["discrepancy"] = values["discrepancy"];
    rules.push_back(entry);
  }
  out["rules"] = rules;
  return out;
}

namespace {

std::string join(const Json& arr, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], cell(r[i]).size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    os << "|";
    for (std::size_t i = 0; i < r.size(); ++i) os << " " << std::left << std::setw(static_cast<int>(w[i])) << cell(r[i]) << " |";
    os << "\n";
  };
  line(head);
  os << "|";
  for (auto x : w) os << std::string(x + 2, '-') << "|";
  os << "\n";
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace

std::string render_markdown(const Json& rep) {
  std::ostringstream os;
  os << "# " << rep["threefold"].get<std::string>() << ", c1 <= " << rep["c1"].get<Int>() << ", "
     << rep["rank_regime"].get<std::string>() << "\n\n";
  os << "admissible c2: " << join(rep["admissible_c2"], " ") << "\n\n";
  os << "unresolved: " << (rep["unresolved"].empty() ? "none" : join(rep["unresolved"], " ")) << "\n\n";
  std::vector<std::vector<std::string>> wrows;
  for (const auto& [c2, names] : rep["witnesses"].items()) wrows.push_back({c2, join(names, ", ")});
  os << "## Witnesses\n\n" << table({"c2", "constructions"}, wrows) << "\n";
  if (rep.contains("rank_windows")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : rep["rank_windows"])
      rows.push_back({w["shape"].get<std::string>(), w["c1"].dump(), w["c2"].dump(),
                      "[" + w["min_rank"].dump() + ", " + w["max_rank"].dump() + "]"});
    os << "## Rank windows\n\n" << table({"shape", "c1", "c2", "ranks"}, rows) << "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rep["rules"])
    rows.push_back({r["id"].get<std::string>(), r["kind"].get<std::string>(), r["fired"].dump(), r["rejected"].dump(),
                    r["anchor"].get<std::string>()});
  os << "## Rules\n\n" << table({"rule", "kind", "fired", "rejected", "anchor"}, rows);
  for (const auto& r : rep["rules"])
    if (r.contains("discrepancy"))
      os << "\n- " << r["id"].get<std::string>() << ": " << r["discrepancy"].get<std::string>();
  os << "\n";
  return os.str();
}

std::string render_plain(const ClassificationResult& r) {
  std::ostringstream os;
  os << r.ctx.label() << " c1<=" << r.c1_max << " " << to_string(r.regime) << "\n";
  os << "admissible c2:";
  for (auto c : r.admissible_c2) os << " " << c;
  os << "\nunresolved:";
  if (r.unresolved.empty()) os << " none";
  for (auto c : r.unresolved) os << " " << c;
  os << "\n";
  for (const auto& [c2, names] : r.witnesses) {
    os << "witness " << c2 << ":";
    for (const auto& n : names) os << " " << n;
    os << "\n";
  }
  for (const auto& w : r.rank_windows)
    os << "rank window " << w.shape << ": (c1,c2)=(" << w.c1 << "," << w.c2 << ") ranks " << w.min_rank << ".."
       << w.max_rank << "\n";
  return os.str();
}

std::vector<std::string> self_audit(const ClassificationResult& result, const RuleConfig& cfg) {
  std::vector<std::string> bad;
  auto check_trails = [&](const std::vector<Verdict>& recorded, const std::vector<Verdict>& fresh, const char* what) {
    if (recorded.size() != fresh.size()) {
      bad.push_back(std::string(what) + ": verdict count changed");
      return;
    }
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      const auto& a = recorded[i];
      const auto& b = fresh[i];
      if (a.status != b.status || a.trail.size() != b.trail.size()) {
        bad.push_back(std::string(what) + " " + to_string(a.candidate) + ": status or trail changed");
        continue;
      }
      for (std::size_t j = 0; j < a.trail.size(); ++j)
        if (a.trail[j].rule_id != b.trail[j].rule_id || a.trail[j].values != b.trail[j].values ||
            a.trail[j].rejects != b.trail[j].rejects)
          bad.push_back(std::string(what) + " " + to_string(a.candidate) + ": " + a.trail[j].rule_id + " differs");
    }
  };
  // Rerun every candidate through the rules with the recorded branch.
  std::vector<Verdict> fresh;
  const auto cover = serre_cover(result.ctx);
  for (const auto& v : result.verdicts)
    fresh.push_back(evaluate(v.candidate, result.ctx, v.branch, cfg, candidate_steps(result.ctx, v.branch), cover));
  check_trails(result.verdicts, fresh, "candidate");
  std::vector<Verdict> comps;
  for (const auto& v : result.component_verdicts)
    comps.push_back(component_admissible(v.candidate.components.at(0), result.ctx, v.branch, cfg));
  check_trails(result.component_verdicts, comps, "component");
  // Every elimination cites a rule that actually rejected.
  for (const auto& v : result.verdicts) {
    if (v.status == Status::Survives) continue;
    const bool arith = std::any_of(v.trail.begin(), v.trail.end(), [](const TrailEntry& t) {
      return t.rejects && find_rule(t.rule_id).kind == RuleKind::Arithmetic;
    });
    if (v.status == Status::Eliminated && !arith)
      bad.push_back(to_string(v.candidate) + ": ELIMINATED without an arithmetic rejection");
  }
  return bad;
}

}  // namespace cicy
