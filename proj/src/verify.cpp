#include "cicy/verify.hpp"

#include "cicy/classifier.hpp"
#include "cicy/genus_bounds.hpp"
#include "cicy/ruled_surfaces.hpp"
#include "cicy/serre_constructions.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace cicy {

const std::vector<std::string>& verify_modules() {
  static const std::vector<std::string> m = {"chow", "ruled", "bounds", "serre", "classifier"};
  return m;
}

namespace {

std::string str(Int v) { return std::to_string(v); }
std::string str(const Rational& v) { return to_string(v); }
std::string str(const std::string& v) { return v; }

std::string str(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

class Sink {
 public:
  Sink(std::vector<VerifyCheck>& out, std::string module) : out_(out), module_(std::move(module)) {}

  template <class T>
  void eq(const std::string& name, const T& expected, std::function<T()> actual) {
    std::string a;
    bool ok = false;
    try {
      const T got = actual();
      a = str(got);
      ok = got == expected;
    } catch (const std::exception& e) {
      a = std::string("error: ") + e.what();
    }
    out_.push_back({module_, name, str(expected), a, ok});
  }

  void truth(const std::string& name, std::function<bool()> fn) {
    eq<std::string>(name, "true", [&] { return std::string(fn() ? "true" : "false"); });
  }

 private:
  std::vector<VerifyCheck>& out_;
  std::string module_;
};

CicyContext ctx(const std::string& s) { return CicyContext::parse(s); }

void chow(Sink& s) {
  const std::vector<std::pair<std::string, Int>> chi1 = {{"5", 5}, {"2,4", 6}, {"3,3", 6}, {"2,2,3", 7}, {"2,2,2,2", 8}};
  for (const auto& [k, v] : chi1) {
    s.eq<Rational>("chi(" + k + "; 1, 0)", Rational(v), [&] { return chi_rank2(ctx(k), 1, 0); });
    s.eq<Rational>("chi(" + k + "; 0, 0)", Rational(0), [&] { return chi_rank2(ctx(k), 0, 0); });
  }
  s.eq<Rational>("chi(5; 2, 5)", Rational(10), [] { return chi_rank2(ctx("5"), 2, 5); });
  s.eq<Int>("resolution O(-2): c2", 20, [] { return chern_from_resolution({-2}, {0, 0, 0, 0}, ctx("5")).c2; });
  s.eq<Int>("resolution O(-1)^2: c2", 15,
            [] { return chern_from_resolution({-1, -1}, {0, 0, 0, 0, 0}, ctx("5")).c2; });
  s.eq<Int>("resolution O(-1) with O(1): c2", 10,
            [] { return chern_from_resolution({-1}, {0, 0, 0, 1}, ctx("5")).c2; });
  s.eq<Int>("euler sequence: c1", 1, [] { return chern_from_resolution({-1}, {0, 0, 0, 0, 0}, ctx("5")).c1; });
  s.eq<Int>("euler sequence: c2", 5, [] { return chern_from_resolution({-1}, {0, 0, 0, 0, 0}, ctx("5")).c2; });
  s.eq<Int>("max rank O(-2)", 14, [] { return max_rank_no_trivial({-2}, ctx("5")); });
  s.eq<Int>("max rank O(-1)^2", 8, [] { return max_rank_no_trivial({-1, -1}, ctx("5")); });
  s.eq<Int>("max rank O(-1) with O(1)", 5, [] { return max_rank_no_trivial({-1}, ctx("5"), {1}); });
  s.eq<Int>("h0 O_X5(2)", 15, [] { return h0_line_bundle(ctx("5"), 2); });
}

void ruled(Sink& s) {
  s.eq<Int>("F_1 degree 15 genus 16 classes", 0, [] {
    return static_cast<Int>(eliminate_by_genus({{1, 2}, 15, 16, {}, 1000}, RuledSurface::hirzebruch(1)).size());
  });
  s.eq<std::string>("F_3 degree 15 class", "(5,15)", [] {
    const auto r = eliminate_by_genus({{1, 3}, 15, std::nullopt, {{-3, 1, 0, 1}}, 1000}, RuledSurface::hirzebruch(3));
    std::string out;
    for (const auto& c : r) out += to_string(c);
    return out;
  });
  s.eq<Int>("F_3 (5,15) genus", 26, [] { return adjunction_genus({5, 15}, RuledSurface::hirzebruch(3)); });
  const std::vector<std::tuple<Int, DivisorClass, Int>> adj = {
      {1, {4, 8}, 28}, {3, {4, 12}, 28}, {0, {4, 8}, 40}, {2, {4, 12}, 40}, {4, {4, 16}, 40}};
  for (const auto& [e, c, v] : adj)
    s.eq<Int>("adjunction on F_" + std::to_string(e) + " " + to_string(c), v,
              [&] { return adjunction_degree(c, RuledSurface::hirzebruch(e)); });
  s.eq<Int>("sextic scroll d = 17, q = 2", 38, [] {
    return adjunction_degree({3, 8}, RuledSurface::make(0, 2));
  });
  s.truth("-3e + 6q + 58 = 32 unsolvable", [] {
    for (Int q = 0; q <= 2; ++q)
      for (Int e = -q; e <= 60; e += 1)
        if (e % 2 == 0 && -3 * e + 6 * q + 58 == 32) return false;
    return true;
  });
  s.truth("e = 2q - 20 infeasible", [] {
    for (Int q = 0; q <= 2; ++q)
      if (2 * q - 20 >= -q) return false;
    return true;
  });
  s.eq<std::string>("F_1 genus polynomial", "-3 31 -30", [] {
    const auto p = genus_polynomial({1, 2}, 15, RuledSurface::hirzebruch(1));
    return to_string(p.c2) + " " + to_string(p.c1) + " " + to_string(p.c0);
  });
}

void bounds(Sink& s) {
  const std::vector<std::tuple<Int, Int, Int>> pis = {{6, 3, 4}, {7, 3, 6}, {8, 3, 9}, {5, 4, 1},
                                                      {6, 4, 2}, {11, 4, 12}, {14, 5, 15}, {16, 7, 12}};
  for (const auto& [d, r, v] : pis)
    s.eq<Int>("pi(" + str(d) + "," + str(r) + ")", v, [&] { return castelnuovo_pi(d, r); });
  s.truth("pi(x,3) = x - 3 for 3 <= x <= 5", [] {
    for (Int x = 3; x <= 5; ++x)
      if (castelnuovo_pi(x, 3) != x - 3) return false;
    return true;
  });
  s.truth("pi(x,4) = x - 4 for 4 <= x <= 7", [] {
    for (Int x = 4; x <= 7; ++x)
      if (castelnuovo_pi(x, 4) != x - 4) return false;
    return true;
  });
  s.eq<Int>("pi_1(14,5)", 13, [] { return pi_one(14, 5); });
  s.eq<Int>("pi_1(15,5)", 16, [] { return pi_one(15, 5); });
  s.eq<Int>("four quadrics in P^5: genus", 17, [] { return ci_curve_invariants({2, 2, 2, 2}, 5).genus; });
  s.eq<Int>("cap X_5, c1 = 2, rank 2", 17, [] { return max_curve_degree(ctx("5"), 2, 2); });
}

void serre(Sink& s) {
  for (const auto& e : registry()) {
    const auto rep = validate_entry(e);
    s.eq<std::string>("registry " + e.name + " on " + e.ctx.label(), "ok",
                      [&] { return rep.ok() ? std::string("ok") : "failed at " + rep.first_failure(); });
  }
  s.eq<Int>("liaison d = 3(24 - d)", 18, [] { return liaison_solve(24, 3, 2, 3); });
  const auto inc = incidence_dimension_check();
  s.eq<Int>("grassmannian dimension", 68, [&] { return inc.grassmannian_dim; });
  s.eq<Int>("fiber dimension", 23, [&] { return inc.fiber_dim; });
  s.eq<Int>("incidence dimension", 91, [&] { return inc.total_dim; });
  s.eq<Int>("fiber over a cubic", 36, [&] { return inc.fiber_over_cubic; });
  s.eq<Int>("h0 O_P5(3)", 56, [&] { return inc.cubic_sections; });
  s.eq<Int>("h0 I_T(3)", 24, [&] { return inc.cubics_through_curve; });
  s.eq<Int>("p_a(C_i cup L)", 13, [] { return union_genus({12, 0}, 2); });
}

void classifier(Sink& s) {
  struct Row { std::string key; RankRegime regime; std::vector<Int> c2; };
  const std::vector<Row> rows = {{"5", RankRegime::Rank2, {0, 5, 10}},
                                 {"5", RankRegime::HigherRank, {0, 5, 10, 15, 20}},
                                 {"2,4", RankRegime::Rank2, {0, 4, 8, 11, 16}},
                                 {"3,3", RankRegime::Rank2, {0, 9, 12, 15, 16, 18}}};
  for (const auto& r : rows) {
    const auto res = classify(ctx(r.key), 2, r.regime);
    s.eq<std::vector<Int>>("admissible c2 on " + res.ctx.label() + " " + to_string(r.regime), r.c2,
                           [&] { return res.admissible_c2; });
    s.eq<std::string>("self-audit on " + res.ctx.label() + " " + to_string(r.regime), "clean", [&] {
      const auto bad = self_audit(res);
      return bad.empty() ? std::string("clean") : bad.front();
    });
    s.truth("witnesses on " + res.ctx.label() + " " + to_string(r.regime), [&] {
      for (auto c2 : res.admissible_c2) {
        if (c2 == 0) continue;
        const bool flagged = std::find(res.unresolved.begin(), res.unresolved.end(), c2) != res.unresolved.end();
        if (!flagged && !res.witnesses.count(c2)) return false;
      }
      return true;
    });
  }
  s.eq<std::string>("rank 2 quintic pairs", "(1,0)(2,0)(2,5)(2,10)", [] {
    std::string out;
    for (const auto& [a, b] : classify(ctx("5"), 2, RankRegime::Rank2).admissible_pairs)
      out += "(" + str(a) + "," + str(b) + ")";
    return out;
  });
  s.eq<std::vector<Int>>("unresolved on X_{2,4}", {16}, [] { return classify(ctx("2,4"), 2, RankRegime::Rank2).unresolved; });
  s.eq<std::vector<Int>>("unresolved on X_{3,3}", {16}, [] { return classify(ctx("3,3"), 2, RankRegime::Rank2).unresolved; });
  s.truth("report is deterministic", [] {
    return rule_report(classify(ctx("3,3"), 2, RankRegime::Rank2)).dump() ==
           rule_report(classify(ctx("3,3"), 2, RankRegime::Rank2)).dump();
  });
}

}  // namespace

std::vector<VerifyCheck> run_verification(const std::string& module) {
  const std::vector<std::pair<std::string, std::function<void(Sink&)>>> groups = {
      {"chow", chow}, {"ruled", ruled}, {"bounds", bounds}, {"serre", serre}, {"classifier", classifier}};
  bool known = module.empty();
  std::vector<VerifyCheck> out;
  for (const auto& [name, fn] : groups) {
    if (!module.empty() && module != name) continue;
    known = true;
    Sink s(out, name);
    fn(s);
  }
  if (!known) throw Error("unknown module " + module);
  return out;
}

}  // namespace cicy
