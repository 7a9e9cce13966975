#include "cicy/chow_kernel.hpp"
#include "cicy/classifier.hpp"
#include "cicy/genus_bounds.hpp"
#include "cicy/ruled_surfaces.hpp"

#include <doctest.h>

#include <random>

using namespace cicy;

namespace {

std::mt19937_64 rng(20261019);

Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

Rational random_rational(bool nonzero) {
  for (;;) {
    const Rational r(uniform(-40, 40), uniform(1, 12));
    if (!nonzero || r != 0) return r;
  }
}

std::set<CurveCandidate> survivors(const CicyContext& x, Branch b, const RuleConfig& cfg) {
  std::set<CurveCandidate> out;
  for (const auto& v : apply_rules(enumerate_branch(x, b, cfg), x, b, cfg))
    if (v.status == Status::Survives) out.insert(v.candidate);
  return out;
}

const std::vector<CicyContext>& classified() {
  static const std::vector<CicyContext> xs = {CicyContext::quintic(), CicyContext::parse("2,4"),
                                              CicyContext::parse("3,3")};
  return xs;
}

}  // namespace

TEST_CASE("ring inverse round trip on 1000 random units") {
  for (int i = 0; i < 1000; ++i) {
    TruncatedClass x{{random_rational(true), random_rational(false), random_rational(false), random_rational(false)}};
    const auto inv = ring_invert(x);
    CHECK(ring_mul(x, inv) == TruncatedClass::unit());
    CHECK(ring_mul(inv, x) == TruncatedClass::unit());
  }
}

TEST_CASE("intersection is symmetric and bilinear on 1000 random triples") {
  for (int i = 0; i < 1000; ++i) {
    const Int q = uniform(0, 3);
    const auto s = RuledSurface::make(uniform(q == 0 ? 0 : -q, 8), q);
    const DivisorClass x{uniform(-50, 50), uniform(-50, 50)};
    const DivisorClass y{uniform(-50, 50), uniform(-50, 50)};
    const DivisorClass z{uniform(-50, 50), uniform(-50, 50)};
    const Int k = uniform(-9, 9);
    CHECK(intersect(x, y, s) == intersect(y, x, s));
    CHECK(intersect(x + y, z, s) == intersect(x, z, s) + intersect(y, z, s));
    CHECK(intersect(x * k, z, s) == k * intersect(x, z, s));
    CHECK(adjunction_degree(x, s) % 2 == 0);
  }
}

TEST_CASE("eliminate_by_genus equals the box scan on 50 random systems") {
  for (int i = 0; i < 50; ++i) {
    const auto s = RuledSurface::hirzebruch(uniform(0, 4));
    DivisorClass h{uniform(0, 2), uniform(0, 4)};
    if (h.a == 0 && h.b == 0) h.b = 1;
    if (intersect({1, 0}, h, s) == 0 && intersect({0, 1}, h, s) == 0) h = {1, s.e + 1};
    const DivisorClass target{uniform(0, 6), uniform(-3, 12)};
    GenusConstraint c{h, intersect(target, h, s), std::nullopt, {}, 30};
    if (uniform(0, 1)) c.genus = adjunction_genus(target, s);
    if (uniform(0, 1)) c.extra.push_back({1, 0, 0, 30});
    CHECK(eliminate_by_genus(c, s) == scan_by_genus(c, s));
  }
}

TEST_CASE("twisting back and forth is the identity") {
  for (const auto& x : CicyContext::all())
    for (int i = 0; i < 100; ++i) {
      const Int c1 = uniform(-5, 5), c2 = uniform(-50, 50), t = uniform(-4, 4), t2 = uniform(-4, 4);
      const auto once = twist_rank2(c1, c2, t, x);
      CHECK(twist_rank2(once.first, once.second, -t, x) == std::pair<Int, Int>{c1, c2});
      const auto composed = twist_rank2(once.first, once.second, t2, x);
      CHECK(composed == twist_rank2(c1, c2, t + t2, x));
    }
}

TEST_CASE("genus bounds are ordered") {
  for (Int r = 3; r <= 9; ++r) {
    for (Int d = r + 1; d <= 60; ++d) CHECK(castelnuovo_pi(d, r) >= castelnuovo_pi(d - 1, r));
    for (Int d = 2 * r + 1; d <= 60; ++d) CHECK(pi_one(d, r) <= castelnuovo_pi(d, r));
    for (Int d = r; d <= 60; ++d) CHECK(castelnuovo_pi(d, r + 1 <= d ? r + 1 : r) <= castelnuovo_pi(d, r));
  }
}

TEST_CASE("classification is deterministic") {
  for (const auto& x : classified())
    for (auto regime : {RankRegime::Rank2, RankRegime::HigherRank}) {
      if (regime == RankRegime::HigherRank && x.u() != 5) continue;
      const auto a = rule_report(classify(x, 2, regime)).dump(2);
      const auto b = rule_report(classify(x, 2, regime)).dump(2);
      CHECK(a == b);
      CHECK(render_markdown(Json::parse(a)) == render_markdown(Json::parse(b)));
    }
}

TEST_CASE("turning axioms off never removes survivors") {
  for (const auto& x : classified())
    for (auto b : {Branch::SerreC2, Branch::ExtensionC2, Branch::SerreC1}) {
      const auto base = survivors(x, b, {});
      std::vector<RuleConfig> configs{RuleConfig::without_axioms()};
      for (const auto& r : rule_corpus())
        if (r.kind == RuleKind::Axiom) configs.push_back(RuleConfig{{r.id}});
      for (const auto& cfg : configs) {
        const auto more = survivors(x, b, cfg);
        CHECK(std::includes(more.begin(), more.end(), base.begin(), base.end()));
      }
    }
}

TEST_CASE("eliminations have no hidden causes") {
  for (const auto& x : classified())
    for (auto b : {Branch::SerreC2, Branch::ExtensionC2, Branch::SerreC1})
      for (const auto& v : apply_rules(enumerate_branch(x, b), x, b)) {
        if (v.status != Status::Eliminated) continue;
        RuleConfig cfg;
        for (const auto& t : v.trail)
          if (t.rejects) cfg.disabled.insert(t.rule_id);
        const auto again = apply_rules({v.candidate}, x, b, cfg).at(0);
        INFO(to_string(v.candidate));
        CHECK(again.status != Status::Eliminated);
      }
}
