#include "cicy/serre_constructions.hpp"

#include <algorithm>
#include <numeric>

namespace cicy {

void CurveComponent::validate() const {
  if (d < 1) throw Error("component degree must be positive");
  if (g < 0) throw Error("component genus must be nonnegative");
  if (span < 2) throw Error("component span must be at least 2");
  if (span == 2 && g != plane_genus(d))
    throw Error("plane component " + to_string(*this) + " must have genus " + std::to_string(plane_genus(d)));
  if (span >= 3 && (d < span || g > castelnuovo_pi(d, span)))
    throw Error("component " + to_string(*this) + " violates the Castelnuovo bound");
}

std::string to_string(const CurveComponent& c) {
  return "(" + std::to_string(c.d) + "," + std::to_string(c.g) + "," + std::to_string(c.span) + ")";
}

CurveCandidate CurveCandidate::of(std::vector<CurveComponent> parts) {
  std::sort(parts.begin(), parts.end());
  return CurveCandidate{std::move(parts)};
}

Int CurveCandidate::total_degree() const {
  Int t = 0;
  for (const auto& c : components) t += c.d;
  return t;
}

Int CurveCandidate::arithmetic_genus() const {
  if (components.empty()) throw Error("the empty curve has no genus");
  std::vector<Int> gs;
  for (const auto& c : components) gs.push_back(c.g);
  return union_genus(gs, 0);
}

std::string to_string(const CurveCandidate& c) {
  if (c.empty()) return "empty";
  std::string out = "{";
  for (std::size_t i = 0; i < c.components.size(); ++i) out += (i ? " " : "") + to_string(c.components[i]);
  return out + "}";
}

Int required_genus(Int c1, Int d) {
  if (d < 1) throw Error("required_genus needs a nonempty curve (d >= 1)");
  if ((c1 * d) % 2 != 0) throw Error("no such curve: parity");
  return c1 * d / 2 + 1;
}

Int union_genus(const std::vector<Int>& genera, Int meets) {
  if (meets < 0) throw Error("number of meeting points must be nonnegative");
  const Int s = static_cast<Int>(genera.size());
  return std::accumulate(genera.begin(), genera.end(), Int{0}) - s + 1 + meets;
}

Int liaison_solve(Int total_degree, Int omega_twist_total, Int omega_twist_target, Int cutting_degree) {
  if (total_degree <= 0 || cutting_degree <= 0) throw Error("no liaison solution: nonpositive input");
  const Int coeff = omega_twist_total - omega_twist_target;
  if (coeff == 0) throw Error("no liaison solution: zero coefficient");
  // coeff * d = cut * (total - d)  <=>  d (coeff + cut) = cut * total
  const Int lhs = coeff + cutting_degree;
  const Int rhs = cutting_degree * total_degree;
  if (lhs <= 0 || rhs % lhs != 0) throw Error("no liaison solution");
  const Int d = rhs / lhs;
  if (d <= 0 || d >= total_degree) throw Error("no liaison solution");
  return d;
}

namespace {

CurveComponent comp(Int d, Int g, Int span) { return {d, g, span}; }

CicyContext ctx_of(std::vector<Int> m) { return CicyContext::make(std::move(m)); }

std::vector<Int> with_linear(const CicyContext& ctx, Int hyperplanes) {
  std::vector<Int> degs(hyperplanes, 1);
  degs.insert(degs.end(), ctx.multidegree().begin(), ctx.multidegree().end());
  return degs;
}

std::vector<Construction> build_registry() {
  const auto x5 = ctx_of({5});
  const auto x24 = ctx_of({2, 4});
  const auto x33 = ctx_of({3, 3});
  const auto x223 = ctx_of({2, 2, 3});
  std::vector<Construction> r;
  r.push_back({"quintic-two-plane-quintics", x5, 2, 2, 10, CurveCandidate::of({comp(5, 6, 2), comp(5, 6, 2)}),
               "two disjoint smooth plane quintic sections of X_5"});
  r.push_back({"pullback-null-correlation", x5, 2, 2, 10, CurveCandidate::of({comp(5, 6, 2), comp(5, 6, 2)}),
               "E = pi_P^*(N_P3(1)) for a linear projection X_5 -> P^3"});
  r.push_back({"quintic-resolution-r14", x5, 14, 2, 20, {}, "0 -> O(-2) -> O^(r+1) -> E -> 0, 3 <= r <= 14"});
  r.push_back({"quintic-resolution-r8", x5, 8, 2, 15, {}, "0 -> O(-1)^2 -> O^(r+2) -> E -> 0, 3 <= r <= 8"});
  r.push_back({"quintic-resolution-r5", x5, 5, 2, 10, {}, "0 -> O(-1) -> O^r + O(1) -> E -> 0, 3 <= r <= 5"});
  r.push_back({"euler-sequence-pullback", x5, 4, 1, 5, {}, "E = TP^4(-1) restricted to X_5"});
  for (const auto& x : {x5, x24, x33})
    r.push_back({"split-hyperplane-pair", x, 2, 2, x.u(),
                 CurveCandidate::of({comp(x.u(), x.u() + 1, x.ambient_dim() - 2)}), "E = O(1) + O(1)"});
  r.push_back({"x24-plane-quartic", x24, 2, 1, 4, CurveCandidate::of({comp(4, 3, 2)}),
               "0 -> O -> E -> I_C(1) -> 0 with C a plane quartic"});
  r.push_back({"plane-cubic-extension", x24, 2, 2, 11, CurveCandidate::of({comp(3, 1, 2)}),
               "0 -> O(1) -> E -> I_Z(1) -> 0 with Z a plane cubic"});
  r.push_back({"plane-cubic-extension", x33, 2, 2, 12, CurveCandidate::of({comp(3, 1, 2)}),
               "0 -> O(1) -> E -> I_Z(1) -> 0 with Z a plane cubic"});
  r.push_back({"two-linear-sections", x24, 2, 2, 16, CurveCandidate::of({comp(8, 9, 3), comp(8, 9, 3)}),
               "C = X cap (U_1 cup U_2), U_i codimension 2 linear spaces"});
  r.push_back({"two-linear-sections", x33, 2, 2, 18, CurveCandidate::of({comp(9, 10, 3), comp(9, 10, 3)}),
               "C = X cap (U_1 cup U_2), U_i codimension 2 linear spaces"});
  r.push_back({"four-quadrics", x24, 2, 2, 16, CurveCandidate::of({comp(16, 17, 5)}),
               "complete intersection of 4 quadrics in P^5, omega_C = O_C(2)"});
  r.push_back({"four-quadrics", x33, 2, 2, 16, CurveCandidate::of({comp(16, 17, 5)}),
               "complete intersection of 4 quadrics in P^5, omega_C = O_C(2)"});
  r.push_back({"delpezzo5-cubic", x33, 2, 2, 15, CurveCandidate::of({comp(15, 16, 5)}),
               "weak del Pezzo surface of degree 5 cut by a cubic"});
  r.push_back({"inc-linked-18", x33, 2, 2, 18, CurveCandidate::of({comp(18, 19, 5)}),
               "C linked inside Q_1 cap Q_2 cap Q_3 cap U, d = 3(24 - d)"});
  r.push_back({"x223-delpezzo6-cubic", x223, 2, 2, 18, CurveCandidate::of({comp(18, 19, 5)}),
               "sextic del Pezzo surface cut by a cubic, (c1, c2) = (2, 18)"});
  return r;
}

template <class T>
void check(ValidationReport& rep, const std::string& field, const T& expected, const T& actual) {
  std::string e, a;
  if constexpr (std::is_same_v<T, std::string>) {
    e = expected;
    a = actual;
  } else {
    e = std::to_string(expected);
    a = std::to_string(actual);
  }
  rep.checks.push_back({field, e, a, expected == actual});
}

void check_components(ValidationReport& rep, const Construction& c, const std::vector<CurveComponent>& expected) {
  check(rep, "components", to_string(CurveCandidate::of(expected)), to_string(c.curve));
}

/// Rank 2 Serre curve checks: component invariants, omega_C = O_C(c1), c2 = deg C.
void check_serre_curve(ValidationReport& rep, const Construction& c) {
  for (const auto& part : c.curve.components) {
    bool ok = true;
    try {
      part.validate();
    } catch (const Error&) {
      ok = false;
    }
    rep.checks.push_back({"component " + to_string(part), "admissible", ok ? "admissible" : "violates bound", ok});
    check(rep, "genus of " + to_string(part), required_genus(c.c1, part.d), part.g);
  }
  check(rep, "c2", c.curve.total_degree(), c.c2);
  if (c.rank == 2 && c.c1 == 2 && !c.curve.empty())
    check(rep, "d = p_a - 1", c.curve.arithmetic_genus() - 1, c.curve.total_degree());
}

void check_membership(ValidationReport& rep, const Construction& c, bool higher_rank) {
  const auto list = final_c2_list(c.ctx, higher_rank);
  const bool in = std::find(list.begin(), list.end(), c.c2) != list.end();
  rep.checks.push_back({"c2 in final list", "member", in ? "member" : "absent", in});
}

}  // namespace

const std::vector<Construction>& registry() {
  static const std::vector<Construction> r = build_registry();
  return r;
}

std::vector<Construction> registry_entries(const std::string& name) {
  std::vector<Construction> out;
  for (const auto& c : registry())
    if (c.name == name) out.push_back(c);
  if (out.empty()) throw Error("no registry entry named " + name);
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& l) { return l.ok; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& l : checks)
    if (!l.ok) return l.field;
  return {};
}

ValidationReport validate_entry(const Construction& c) {
  ValidationReport rep{c.name, c.ctx.key(), {}};
  const auto& ctx = c.ctx;
  const Int u = ctx.u();
  const Int n = ctx.ambient_dim();

  if (c.name == "quintic-two-plane-quintics") {
    check(rep, "plane genus", plane_genus(5), required_genus(2, 5));
    check_components(rep, c, {comp(5, plane_genus(5), 2), comp(5, plane_genus(5), 2)});
    check(rep, "union genus", union_genus({6, 6}, 0), c.curve.total_degree() + 1);
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "pullback-null-correlation") {
    // N on P^3 has (c1, c2) = (0, 1); pulling back along a degree u projection
    // multiplies the H^2 coefficient by u.
    const Int n_c1 = 0, n_c2 = 1, t = 1;
    check(rep, "c1", n_c1 + 2 * t, c.c1);
    check(rep, "c2", (n_c2 + t * n_c1 + t * t) * u, c.c2);
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name.rfind("quintic-resolution-", 0) == 0) {
    std::vector<Int> sub, extra;
    if (c.c2 == 20) sub = {-2};
    if (c.c2 == 15) sub = {-1, -1};
    if (c.c2 == 10) {
      sub = {-1};
      extra = {1};
    }
    if (sub.empty()) {
      rep.checks.push_back({"resolution shape", "known", "unknown", false});
      return rep;
    }
    const Int max_rank = max_rank_no_trivial(sub, ctx, extra);
    std::vector<Int> quot(max_rank + sub.size() - extra.size(), 0);
    quot.insert(quot.end(), extra.begin(), extra.end());
    const auto inv = chern_from_resolution(sub, quot, ctx);
    check(rep, "max rank", max_rank, c.rank);
    check(rep, "rank", inv.rank, c.rank);
    check(rep, "c1", inv.c1, c.c1);
    check(rep, "c2", inv.c2, c.c2);
    check_membership(rep, c, true);
  } else if (c.name == "euler-sequence-pullback") {
    const auto inv = chern_from_resolution({-1}, std::vector<Int>(h0_line_bundle(ctx, 1), 0), ctx);
    check(rep, "max rank", max_rank_no_trivial({-1}, ctx), c.rank);
    check(rep, "rank", inv.rank, c.rank);
    check(rep, "c1", inv.c1, c.c1);
    check(rep, "c2", inv.c2, c.c2);
    check_membership(rep, c, true);
  } else if (c.name == "split-hyperplane-pair") {
    const auto inv = chern_of_extension(1, 1, 0, ctx);
    const auto ci = ci_curve_invariants(with_linear(ctx, n - 1 - static_cast<Int>(ctx.multidegree().size())), n);
    check(rep, "omega twist", c.c1, ci.omega_twist);
    check_components(rep, c, {comp(ci.degree, ci.genus, n - 2)});
    check(rep, "c2 (extension)", inv.c2, c.c2);
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "x24-plane-quartic") {
    check(rep, "plane genus", plane_genus(4), required_genus(1, 4));
    check_components(rep, c, {comp(4, plane_genus(4), 2)});
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "plane-cubic-extension") {
    // omega_Z = O_Z forces genus 1, so Z is a plane cubic.
    check(rep, "genus of Z", Int{1}, plane_genus(3));
    check_components(rep, c, {comp(3, 1, 2)});
    const auto inv = chern_of_extension(1, 1, c.curve.total_degree(), ctx);
    check(rep, "c1", inv.c1, c.c1);
    check(rep, "c2", inv.c2, c.c2);
    check(rep, "c2 = u + 3", u + 3, c.c2);
    check_membership(rep, c, false);
  } else if (c.name == "two-linear-sections") {
    const auto ci = ci_curve_invariants(with_linear(ctx, 2), n);
    check(rep, "omega twist", Int{2}, ci.omega_twist);
    check(rep, "degree", u, ci.degree);
    check_components(rep, c, {comp(ci.degree, ci.genus, 3), comp(ci.degree, ci.genus, 3)});
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "four-quadrics") {
    const auto ci = ci_curve_invariants({2, 2, 2, 2}, 5);
    check(rep, "omega twist", Int{2}, ci.omega_twist);
    check_components(rep, c, {comp(ci.degree, ci.genus, 5)});
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "delpezzo5-cubic") {
    // omega_S = O_S(-1) on a degree 5 surface; C = S cap cubic.
    const Int d = 5 * 3;
    const Int twist = -1 + 3;
    check(rep, "omega twist", Int{2}, twist);
    check_components(rep, c, {comp(d, required_genus(twist, d), 5)});
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "inc-linked-18") {
    const auto y = ci_curve_invariants({2, 2, 2, 3}, 5);
    check(rep, "deg Y", Int{24}, y.degree);
    check(rep, "omega twist of Y", Int{3}, y.omega_twist);
    const Int d = liaison_solve(y.degree, y.omega_twist, 2, 3);
    check_components(rep, c, {comp(d, required_genus(2, d), 5)});
    check_serre_curve(rep, c);
    check_membership(rep, c, false);
  } else if (c.name == "x223-delpezzo6-cubic") {
    const Int d = 6 * 3;
    const Int twist = -1 + 3;
    check(rep, "omega twist", Int{2}, twist);
    check_components(rep, c, {comp(d, required_genus(twist, d), 5)});
    check_serre_curve(rep, c);
    check(rep, "(c1,c2)", std::string("(2,18)"), "(" + std::to_string(c.c1) + "," + std::to_string(c.c2) + ")");
  } else {
    rep.checks.push_back({"recipe", "known", "unknown entry " + c.name, false});
  }
  return rep;
}

std::vector<ValidationReport> validate_construction(const std::string& name) {
  std::vector<ValidationReport> out;
  for (const auto& c : registry_entries(name)) out.push_back(validate_entry(c));
  return out;
}

nlohmann::ordered_json registry_json(const std::vector<Construction>& entries) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : entries) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["threefold"] = c.ctx.key();
    j["rank"] = c.rank;
    j["c1"] = c.c1;
    j["c2"] = c.c2;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& p : c.curve.components) {
      nlohmann::ordered_json cj;
      cj["d"] = p.d;
      cj["g"] = p.g;
      cj["span"] = p.span;
      comps.push_back(cj);
    }
    j["components"] = comps;
    j["anchor"] = c.anchor;
    arr.push_back(j);
  }
  return arr;
}

IncidenceCounts incidence_dimension_check() {
  IncidenceCounts r;
  const Int quadrics = binomial(5 + 2, 2);  // h^0(O_P5(2)) = 21
  r.grassmannian_dim = 4 * (quadrics - 4);
  r.cubic_sections = binomial(5 + 3, 3);
  // T = complete intersection of 4 quadrics: h^0(O_T(3)) = 3 deg T + 1 - g, and T is projectively normal.
  const auto t = ci_curve_invariants({2, 2, 2, 2}, 5);
  r.cubics_through_curve = r.cubic_sections - (3 * t.degree + 1 - t.genus);
  r.fiber_dim = r.cubics_through_curve - 1;
  r.total_dim = r.grassmannian_dim + r.fiber_dim;
  r.cubic_space_dim = r.cubic_sections - 1;
  r.fiber_over_cubic = r.total_dim - r.cubic_space_dim;
  return r;
}

std::vector<Int> final_c2_list(const CicyContext& ctx, bool higher_rank) {
  if (ctx.multidegree() == std::vector<Int>{5}) {
    if (higher_rank) return {0, 5, 10, 15, 20};
    return {0, 5, 10};
  }
  if (ctx.multidegree() == std::vector<Int>{2, 4}) return {0, 4, 8, 11, 16};
  if (ctx.multidegree() == std::vector<Int>{3, 3}) return {0, 9, 12, 15, 16, 18};
  return {};
}

}  // namespace cicy
