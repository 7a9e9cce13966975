#include "cicy/classifier.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cicy;

namespace {

std::vector<Int> survivors_c2(const CicyContext& x, Branch b, const RuleConfig& cfg = {}) {
  std::vector<Int> out;
  for (const auto& v : apply_rules(enumerate_branch(x, b, cfg), x, b, cfg))
    if (v.status == Status::Survives) out.push_back(v.c2);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<CurveCandidate>& cs, const CurveCandidate& c) {
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

const Verdict& verdict_for(const std::vector<Verdict>& vs, const CurveCandidate& c) {
  for (const auto& v : vs)
    if (v.candidate == c) return v;
  throw Error("candidate not found");
}

}  // namespace

TEST_CASE("corpus") {
  for (const auto& r : rule_corpus()) CHECK_FALSE(r.anchor.empty());
  CHECK(find_rule("A-no-plane").kind == RuleKind::Axiom);
  CHECK(find_rule("R-liaison-18").kind == RuleKind::Arithmetic);
  CHECK_THROWS_AS((find_rule("R-missing")), Error);
}

TEST_CASE("enumeration") {
  const auto q = CicyContext::quintic();
  const auto x24 = CicyContext::parse("2,4");
  CHECK(enumerate_candidates(q, 0, RankRegime::Rank2) == std::vector<CurveCandidate>{CurveCandidate{}});
  const auto c2 = enumerate_candidates(q, 2, RankRegime::Rank2);
  CHECK(contains(c2, CurveCandidate::of({{5, 6, 2}, {5, 6, 2}})));
  CHECK(std::is_sorted(c2.begin(), c2.end()));
  const auto c1 = enumerate_candidates(x24, 1, RankRegime::Rank2);
  CHECK(contains(c1, CurveCandidate::of({{4, 3, 2}})));
  CHECK_FALSE(contains(c1, CurveCandidate::of({{6, 4, 3}})));
  CHECK_THROWS_AS((enumerate_candidates(q, 3, RankRegime::Rank2)), Error);
}

TEST_CASE("component rules") {
  const auto x33 = CicyContext::parse("3,3");
  const auto plane = component_admissible({4, 3, 2}, x33, Branch::SerreC1);
  CHECK(plane.status == Status::Eliminated);
  CHECK(plane.trail.back().rule_id == "R-plane-section");
  const auto no_hyp = component_admissible({4, 3, 2}, x33, Branch::SerreC1, RuleConfig{{"A-no-plane"}});
  CHECK(no_hyp.status == Status::Survives);
  CHECK(component_admissible({9, 10, 3}, x33, Branch::SerreC2).status == Status::Survives);
  CHECK(component_admissible({8, 9, 3}, x33, Branch::SerreC2).status == Status::Eliminated);
}

TEST_CASE("quintic branches") {
  const auto q = CicyContext::quintic();
  CHECK(survivors_c2(q, Branch::SerreC2) == std::vector<Int>{0, 10});
  CHECK(survivors_c2(q, Branch::ExtensionC2) == std::vector<Int>{5});
  CHECK(survivors_c2(q, Branch::SerreC1) == std::vector<Int>{0});
  const auto vs = apply_rules(enumerate_branch(q, Branch::SerreC2), q, Branch::SerreC2);
  const auto& cubic = verdict_for(vs, CurveCandidate::of({{15, 16, 4}}));
  CHECK(cubic.status == Status::Eliminated);
  const auto cites = [&](const std::string& id) {
    return std::any_of(cubic.trail.begin(), cubic.trail.end(), [&](const TrailEntry& t) { return t.rule_id == id && t.rejects; });
  };
  CHECK(cites("R-hirzebruch-F1"));
  CHECK(cites("R-hirzebruch-F3"));
  CHECK(verdict_for(vs, CurveCandidate::of({{5, 6, 2}, {5, 6, 2}, {5, 6, 2}})).status == Status::AxiomEliminated);
}

TEST_CASE("codimension two branches") {
  const auto x24 = CicyContext::parse("2,4");
  const auto x33 = CicyContext::parse("3,3");
  CHECK(survivors_c2(x24, Branch::SerreC2) == std::vector<Int>{0, 16, 16});
  CHECK(survivors_c2(x24, Branch::ExtensionC2) == std::vector<Int>{8, 11});
  CHECK(survivors_c2(x24, Branch::SerreC1) == std::vector<Int>{0, 4});
  CHECK(survivors_c2(x33, Branch::SerreC2) == std::vector<Int>{0, 15, 16, 18, 18});
  CHECK(survivors_c2(x33, Branch::ExtensionC2) == std::vector<Int>{9, 12});
  CHECK(survivors_c2(x33, Branch::SerreC1) == std::vector<Int>{0});
}

TEST_CASE("headline classifications") {
  const auto q = classify(CicyContext::quintic(), 2, RankRegime::Rank2);
  CHECK(q.admissible_c2 == std::vector<Int>{0, 5, 10});
  CHECK(q.admissible_pairs == std::set<std::pair<Int, Int>>{{1, 0}, {2, 0}, {2, 5}, {2, 10}});
  CHECK(q.unresolved.empty());

  const auto h = classify(CicyContext::quintic(), 2, RankRegime::HigherRank);
  CHECK(h.admissible_c2 == std::vector<Int>{0, 5, 10, 15, 20});
  REQUIRE(h.rank_windows.size() == 4);
  CHECK(h.rank_windows[1].max_rank == 14);
  CHECK(h.rank_windows[2].max_rank == 8);
  CHECK(h.rank_windows[3].max_rank == 5);

  const auto x24 = classify(CicyContext::parse("2,4"), 2, RankRegime::Rank2);
  CHECK(x24.admissible_c2 == std::vector<Int>{0, 4, 8, 11, 16});
  CHECK(x24.unresolved == std::vector<Int>{16});
  const auto x33 = classify(CicyContext::parse("3,3"), 2, RankRegime::Rank2);
  CHECK(x33.admissible_c2 == std::vector<Int>{0, 9, 12, 15, 16, 18});
  CHECK(x33.unresolved == std::vector<Int>{16});

  for (const auto& x : {CicyContext::quintic(), CicyContext::parse("2,4"), CicyContext::parse("3,3")}) {
    CHECK(classify(x, 0, RankRegime::Rank2).admissible_c2 == std::vector<Int>{0});
    CHECK(classify(x, 2, RankRegime::Rank2).admissible_c2 == final_c2_list(x, false));
  }
}

TEST_CASE("witnesses cover nonzero classes") {
  for (const auto& r : {classify(CicyContext::quintic(), 2, RankRegime::HigherRank),
                        classify(CicyContext::parse("2,4"), 2, RankRegime::Rank2),
                        classify(CicyContext::parse("3,3"), 2, RankRegime::Rank2)})
    for (auto c2 : r.admissible_c2) {
      if (c2 == 0) continue;
      const bool open = std::count(r.unresolved.begin(), r.unresolved.end(), c2) > 0;
      CHECK((open || r.witnesses.count(c2) == 1));
    }
}

TEST_CASE("unsupported classifications") {
  CHECK_THROWS_AS((classify(CicyContext::parse("2,2,3"), 2, RankRegime::Rank2)), Error);
  CHECK_THROWS_AS((classify(CicyContext::parse("2,4"), 2, RankRegime::HigherRank)), Error);
  CHECK_THROWS_AS((classify(CicyContext::quintic(), 3, RankRegime::Rank2)), Error);
}

TEST_CASE("reports") {
  const auto q = rule_report(classify(CicyContext::quintic(), 2, RankRegime::Rank2));
  std::vector<std::string> keys;
  for (const auto& [k, v] : q.items()) keys.push_back(k);
  CHECK(keys.front() == "threefold");
  bool found_f1 = false;
  for (const auto& r : q["rules"])
    if (r["id"] == "R-hirzebruch-F1") {
      found_f1 = true;
      CHECK(r["values"]["polynomial"] == Json::array({"-3", "31", "-60"}));
      CHECK(r["values"]["solutions"].empty());
      CHECK(r.contains("discrepancy"));
    }
  CHECK(found_f1);

  const auto x33 = rule_report(classify(CicyContext::parse("3,3"), 2, RankRegime::Rank2));
  bool plane = false, typo = false;
  for (const auto& r : x33["rules"]) {
    if (r["id"] == "A-no-plane") {
      plane = true;
      CHECK(r["kind"] == "AXIOM");
      CHECK(r["values"].empty());
    }
    if (r["id"] == "R-clifford") typo = r.contains("discrepancy");
  }
  CHECK(plane);
  CHECK(typo);

  const auto h = rule_report(classify(CicyContext::quintic(), 2, RankRegime::HigherRank));
  bool scroll = false;
  for (const auto& r : h["rules"])
    if (r["id"] == "A-scroll-spannedness") scroll = r.contains("discrepancy");
  CHECK(scroll);

  const std::string md = render_markdown(x33);
  CHECK(md.find("admissible c2: 0 9 12 15 16 18") != std::string::npos);
  CHECK(Json::parse(x33.dump(2)).dump(2) == x33.dump(2));
}

TEST_CASE("self audit") {
  const auto r = classify(CicyContext::parse("3,3"), 2, RankRegime::Rank2);
  CHECK(self_audit(r).empty());
  auto tampered = r;
  for (auto& v : tampered.verdicts)
    if (!v.trail.empty()) {
      v.trail.front().values = Json{{"tampered", true}};
      break;
    }
  CHECK_FALSE(self_audit(tampered).empty());
}
