#include "cicy/classifier.hpp"
#include "cicy/genus_bounds.hpp"
#include "cicy/ruled_surfaces.hpp"
#include "cicy/serre_constructions.hpp"
#include "cicy/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

cicy::CicyContext parse_threefold(const std::string& s) {
  auto ctx = cicy::CicyContext::parse(s, cicy::validation_from_env());
  for (const auto& w : ctx.warnings()) std::cerr << "warning: " << w << "\n";
  return ctx;
}

std::vector<cicy::Int> parse_ints(const std::string& s) {
  std::vector<cicy::Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find(',', pos);
    const auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw cicy::Error("not an integer list: " + s);
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern class and curve bookkeeping for globally generated bundles on CICY threefolds"};
  app.require_subcommand(1);

  std::string threefold;
  long long c1 = 0, c2 = 0;
  auto* chi = app.add_subcommand("chi", "Euler characteristic of a rank 2 bundle");
  chi->add_option("--threefold", threefold, "multidegree, e.g. 2,4")->required();
  chi->add_option("--c1", c1)->required();
  chi->add_option("--c2", c2)->required();

  long long c1_max = 2;
  std::string rank = "2", format = "json", out_path;
  auto* cls = app.add_subcommand("classify", "admissible c2 values with witnesses");
  cls->add_option("--threefold", threefold)->required();
  cls->add_option("--c1-max", c1_max)->check(CLI::Range(0, 2));
  cls->add_option("--rank", rank)->check(CLI::IsMember({"2", "higher"}));
  cls->add_option("--format", format)->check(CLI::IsMember({"json", "markdown", "plain"}));
  cls->add_option("--out", out_path, "also write the JSON report here");

  bool all = false;
  std::string module;
  auto* ver = app.add_subcommand("verify", "regression values, registry validation and rule audit");
  auto* all_flag = ver->add_flag("--all", all);
  auto* mod_opt = ver->add_option("--module", module)->check(CLI::IsMember(cicy::verify_modules()));
  all_flag->excludes(mod_opt);

  auto* query = app.add_subcommand("query", "single kernel computations");
  query->require_subcommand(1);
  long long d = 0, r = 0, e = 0, q = 0, total = 0, omega = 0, target = 0, cut = 0, t = 0;
  std::string cls_text, x_text, y_text;
  auto* q_pi = query->add_subcommand("pi", "Castelnuovo bound");
  q_pi->add_option("--d", d)->required();
  q_pi->add_option("--r", r)->required();
  bool first_refinement = false;
  q_pi->add_flag("--one", first_refinement, "refined bound pi_1");
  auto* q_genus = query->add_subcommand("genus", "genus of a divisor class on a ruled surface");
  q_genus->add_option("--e", e)->required();
  q_genus->add_option("--q", q);
  q_genus->add_option("--class", cls_text, "a,b")->required();
  auto* q_hg = query->add_subcommand("hirzebruch-genus", "genus of a class on F_e");
  q_hg->add_option("--e", e)->required();
  q_hg->add_option("--q", q);
  q_hg->add_option("--class", cls_text, "a,b")->required();
  auto* q_int = query->add_subcommand("intersect", "intersection of two classes");
  q_int->add_option("--e", e)->required();
  q_int->add_option("--q", q);
  q_int->add_option("--x", x_text)->required();
  q_int->add_option("--y", y_text)->required();
  auto* q_li = query->add_subcommand("liaison", "degree of a linked curve");
  q_li->add_option("--total", total)->required();
  q_li->add_option("--omega", omega)->required();
  q_li->add_option("--target", target)->required();
  q_li->add_option("--cut", cut)->required();
  auto* q_h0 = query->add_subcommand("h0", "h^0(O_X(t))");
  q_h0->add_option("--threefold", threefold)->required();
  q_h0->add_option("--t", t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*chi) {
      std::cout << cicy::to_string(cicy::chi_rank2(parse_threefold(threefold), c1, c2)) << "\n";
      return kOk;
    }
    if (*cls) {
      const auto regime = rank == "2" ? cicy::RankRegime::Rank2 : cicy::RankRegime::HigherRank;
      const auto res = cicy::classify(parse_threefold(threefold), c1_max, regime);
      const auto report = cicy::rule_report(res);
      if (format == "json") std::cout << report.dump(2) << "\n";
      else if (format == "markdown") std::cout << cicy::render_markdown(report);
      else std::cout << cicy::render_plain(res);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw cicy::Error("cannot write " + out_path);
        f << report.dump(2) << "\n";
      }
      return kOk;
    }
    if (*ver) {
      if (!all && module.empty()) {
        std::cerr << "verify needs --all or --module\n" << ver->help();
        return kUsage;
      }
      const auto checks = cicy::run_verification(all ? "" : module);
      int failed = 0;
      for (const auto& c : checks) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << "[" << c.module << "] " << c.name;
        if (!c.ok) std::cout << ": expected " << c.expected << ", got " << c.actual;
        std::cout << "\n";
        failed += c.ok ? 0 : 1;
      }
      std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      return failed ? kVerifyFailed : kOk;
    }
    if (*q_pi) {
      std::cout << (first_refinement ? cicy::pi_one(d, r) : cicy::castelnuovo_pi(d, r)) << "\n";
      return kOk;
    }
    if (*q_genus || *q_hg) {
      const auto ab = parse_ints(cls_text);
      if (ab.size() != 2) throw cicy::Error("--class needs a,b");
      std::cout << cicy::adjunction_genus({ab[0], ab[1]}, cicy::RuledSurface::make(e, q)) << "\n";
      return kOk;
    }
    if (*q_int) {
      const auto x = parse_ints(x_text), y = parse_ints(y_text);
      if (x.size() != 2 || y.size() != 2) throw cicy::Error("classes need a,b");
      std::cout << cicy::intersect({x[0], x[1]}, {y[0], y[1]}, cicy::RuledSurface::make(e, q)) << "\n";
      return kOk;
    }
    if (*q_li) {
      std::cout << cicy::liaison_solve(total, omega, target, cut) << "\n";
      return kOk;
    }
    if (*q_h0) {
      std::cout << cicy::h0_line_bundle(parse_threefold(threefold), t) << "\n";
      return kOk;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
