#pragma once

#include "cicy/chow_kernel.hpp"
#include "cicy/serre_constructions.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cicy {

using Json = nlohmann::ordered_json;

enum class RuleKind { Arithmetic, Axiom };
enum class Status { Survives, Eliminated, AxiomEliminated };
enum class RankRegime { Rank2, HigherRank };

/// Which curve a candidate describes for a rank 2 bundle.
///  SerreC2: 0 -> O -> E -> I_C(2) -> 0 with h^0(E(-1)) = 0, omega_C = O_C(2).
///  ExtensionC2: 0 -> O(1) -> E -> I_Z(1) -> 0, omega_Z = O_Z.
///  SerreC1: 0 -> O -> E -> I_C(1) -> 0, omega_C = O_C(1).
enum class Branch { SerreC2, ExtensionC2, SerreC1 };

std::string to_string(RuleKind k);
std::string to_string(Status s);
std::string to_string(RankRegime r);
std::string to_string(Branch b);

struct Rule {
  std::string id;
  RuleKind kind;
  std::string anchor;
  std::string summary;
};

/// All rules in declaration order.
const std::vector<Rule>& rule_corpus();
const Rule& find_rule(const std::string& id);

struct RuleConfig {
  std::set<std::string> disabled;

  bool enabled(const std::string& id) const { return disabled.count(id) == 0; }
  static RuleConfig all_enabled() { return {}; }
  static RuleConfig without_axioms();
};

struct TrailEntry {
  std::string rule_id;
  std::string label;
  bool rejects = false;
  Json values;
};

struct Verdict {
  Branch branch;
  CurveCandidate candidate;
  Status status = Status::Survives;
  std::vector<TrailEntry> trail;
  Int c2 = 0;
};

/// Components passing every enabled component rule for the branch, sorted.
std::vector<CurveComponent> admissible_components(const CicyContext& ctx, Branch branch,
                                                  const RuleConfig& cfg = {});

/// Per-component verdict; the candidate field holds the single component.
Verdict component_admissible(const CurveComponent& comp, const CicyContext& ctx, Branch branch,
                             const RuleConfig& cfg = {});

/// Component multisets (including the empty curve) for the branch, in lex order.
std::vector<CurveCandidate> enumerate_branch(const CicyContext& ctx, Branch branch, const RuleConfig& cfg = {});

/// Serre-curve candidates for c1 in {0, 1, 2}; c1 = 0 gives only the empty curve.
std::vector<CurveCandidate> enumerate_candidates(const CicyContext& ctx, Int c1, RankRegime regime,
                                                 const RuleConfig& cfg = {});

std::vector<Verdict> apply_rules(const std::vector<CurveCandidate>& candidates, const CicyContext& ctx,
                                 Branch branch, const RuleConfig& cfg = {});

struct RankWindow {
  std::string shape;
  Int c1 = 0;
  Int c2 = 0;
  Int min_rank = 3;
  Int max_rank = 0;
};

struct ClassificationResult {
  CicyContext ctx;
  Int c1_max = 0;
  RankRegime regime = RankRegime::Rank2;
  std::vector<Int> admissible_c2;
  std::set<std::pair<Int, Int>> admissible_pairs;  // (c1, c2)
  std::map<Int, std::vector<std::string>> witnesses;
  std::vector<Int> unresolved;
  std::vector<RankWindow> rank_windows;
  std::vector<Verdict> verdicts;
  /// Components rejected by a component rule, per branch.
  std::vector<Verdict> component_verdicts;
};

/// Classification for X_5, X_{2,4}, X_{3,3}; other threefolds throw.
ClassificationResult classify(const CicyContext& ctx, Int c1_max, RankRegime regime, const RuleConfig& cfg = {});

/// {threefold, c1, rank_regime, admissible_c2, witnesses, unresolved, rules[]}
Json rule_report(const ClassificationResult& result);
std::string render_markdown(const Json& report);
std::string render_plain(const ClassificationResult& result);

/// Reruns every trail step and checks the recorded values; returns the mismatches.
std::vector<std::string> self_audit(const ClassificationResult& result, const RuleConfig& cfg = {});

}  // namespace cicy
