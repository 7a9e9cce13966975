#include "cicy/serre_constructions.hpp"

#include <doctest.h>

using namespace cicy;

TEST_CASE("components and candidates") {
  CHECK_NOTHROW((CurveComponent{5, 6, 2}.validate()));
  CHECK_THROWS_AS((CurveComponent{5, 5, 2}.validate()), Error);
  CHECK_THROWS_AS((CurveComponent{7, 8, 3}.validate()), Error);
  const auto c = CurveCandidate::of({{9, 10, 3}, {5, 6, 2}});
  CHECK(c.components.front() == CurveComponent{5, 6, 2});
  CHECK(c.total_degree() == 14);
  CHECK(c.arithmetic_genus() == 15);
  CHECK(to_string(c) == "{(5,6,2) (9,10,3)}");
  CHECK(to_string(CurveCandidate{}) == "empty");
  CHECK_THROWS_AS((CurveCandidate{}.arithmetic_genus()), Error);
}

TEST_CASE("required genus") {
  CHECK(required_genus(2, 16) == 17);
  CHECK(required_genus(1, 4) == 3);
  CHECK_THROWS_AS((required_genus(1, 5)), Error);
  CHECK_THROWS_AS((required_genus(2, 0)), Error);
}

TEST_CASE("union genus and liaison") {
  CHECK(union_genus({12, 0}, 2) == 13);
  CHECK(union_genus({6, 6}, 0) == 11);
  CHECK(liaison_solve(24, 3, 2, 3) == 18);
  CHECK_THROWS_AS((liaison_solve(24, 2, 2, 3)), Error);
  CHECK_THROWS_AS((liaison_solve(25, 3, 2, 3)), Error);
}

TEST_CASE("every registry entry validates") {
  CHECK(registry().size() >= 10);
  for (const auto& e : registry()) {
    const auto rep = validate_entry(e);
    INFO(e.name << " on " << e.ctx.label() << ": " << rep.first_failure());
    CHECK(rep.ok());
  }
}

TEST_CASE("liaison degree 18 is derived twice") {
  const auto inc = registry_entries("inc-linked-18");
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].c2 == liaison_solve(24, 3, 2, 3));
  const auto reps = validate_construction("inc-linked-18");
  CHECK(reps.at(0).ok());
  const auto x223 = registry_entries("x223-delpezzo6-cubic").at(0);
  CHECK(x223.c1 == 2);
  CHECK(x223.c2 == 18);
  CHECK(validate_entry(x223).ok());
}

TEST_CASE("a corrupted entry is caught") {
  auto e = registry_entries("four-quadrics").at(0);
  e.c2 = 17;
  const auto rep = validate_entry(e);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure().empty());
  e = registry_entries("delpezzo5-cubic").at(0);
  e.name = "unknown-recipe";
  CHECK_FALSE(validate_entry(e).ok());
  CHECK_THROWS_AS((registry_entries("nope")), Error);
}

TEST_CASE("registry JSON key order") {
  const auto j = registry_json(registry_entries("two-linear-sections"));
  REQUIRE(j.size() == 2);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "threefold", "rank", "c1", "c2", "components", "anchor"});
  CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("incidence dimension count") {
  const auto c = incidence_dimension_check();
  CHECK(c.grassmannian_dim == 68);
  CHECK(c.fiber_dim == 23);
  CHECK(c.total_dim == 91);
  CHECK(c.fiber_over_cubic == 36);
  CHECK(c.cubic_sections == 56);
  CHECK(c.cubics_through_curve == 24);
}

TEST_CASE("final lists") {
  CHECK(final_c2_list(CicyContext::quintic(), true) == std::vector<Int>{0, 5, 10, 15, 20});
  CHECK(final_c2_list(CicyContext::parse("2,4"), false) == std::vector<Int>{0, 4, 8, 11, 16});
  CHECK(final_c2_list(CicyContext::parse("2,2,3"), false).empty());
}
