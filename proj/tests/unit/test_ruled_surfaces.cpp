#include "cicy/ruled_surfaces.hpp"

#include <doctest.h>

using namespace cicy;

namespace {

// Gram matrix [[-e, 1], [1, 0]] applied by hand.
Int gram(const DivisorClass& x, const DivisorClass& y, Int e) {
  return x.a * (-e * y.a + y.b) + x.b * y.a;
}

}  // namespace

TEST_CASE("lattice basics") {
  const auto f1 = RuledSurface::hirzebruch(1);
  CHECK(intersect({1, 0}, {1, 0}, f1) == -1);
  CHECK(intersect({1, 0}, {0, 1}, f1) == 1);
  CHECK(intersect({0, 1}, {0, 1}, f1) == 0);
  CHECK(canonical_class(f1) == DivisorClass{-2, -3});
  CHECK(canonical_class(RuledSurface::hirzebruch(3)) == DivisorClass{-2, -5});
  CHECK(canonical_class(RuledSurface::make(0, 2)) == DivisorClass{-2, 2});
  for (Int e = 0; e <= 5; ++e)
    for (Int a = -3; a <= 3; ++a)
      for (Int b = -3; b <= 3; ++b)
        CHECK(intersect({a, b}, {b, a}, RuledSurface::hirzebruch(e)) == gram({a, b}, {b, a}, e));
}

TEST_CASE("invalid surfaces") {
  CHECK_THROWS_AS((RuledSurface::make(-1, 0)), Error);
  CHECK_THROWS_AS((RuledSurface::make(-3, 2)), Error);
  CHECK_THROWS_AS((RuledSurface::make(0, -1)), Error);
  CHECK_NOTHROW((RuledSurface::make(-2, 2)));
}

TEST_CASE("adjunction") {
  CHECK(adjunction_degree({4, 8}, RuledSurface::hirzebruch(1)) == 28);
  CHECK(adjunction_degree({4, 12}, RuledSurface::hirzebruch(3)) == 28);
  CHECK(adjunction_degree({4, 8}, RuledSurface::hirzebruch(0)) == 40);
  CHECK(adjunction_degree({4, 12}, RuledSurface::hirzebruch(2)) == 40);
  CHECK(adjunction_degree({4, 16}, RuledSurface::hirzebruch(4)) == 40);
  CHECK(adjunction_genus({5, 15}, RuledSurface::hirzebruch(3)) == 26);
  CHECK(adjunction_genus({1, 0}, RuledSurface::hirzebruch(1)) == 0);
  CHECK(embedding_degree({5, 15}, {1, 3}, RuledSurface::hirzebruch(3)) == 15);
}

TEST_CASE("hirzebruch eliminations") {
  const auto f1 = RuledSurface::hirzebruch(1);
  CHECK(eliminate_by_genus({{1, 2}, 15, 16, {}, 1000}, f1).empty());
  const auto p = genus_polynomial({1, 2}, 15, f1);
  CHECK(p.c2 == -3);
  CHECK(p.c1 == 31);
  CHECK(p.c0 == -30);
  // -3a^2 + 31a - 60 = 0 has discriminant 241, not a square.
  CHECK(31 * 31 - 4 * 3 * 60 == 241);

  const auto f3 = RuledSurface::hirzebruch(3);
  const auto r = eliminate_by_genus({{1, 3}, 15, std::nullopt, {{-3, 1, 0, 1}}, 1000}, f3);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == DivisorClass{5, 15});
  CHECK(eliminate_by_genus({{1, 3}, 15, 16, {{-3, 1, 0, 1}}, 1000}, f3).empty());
}

TEST_CASE("sextic scroll contradictions") {
  // H = h + (3 + e/2) f, base of genus 2.
  for (Int e = -2; e <= 10; e += 2) {
    const auto s = RuledSurface::make(e, 2);
    const DivisorClass h{1, 3 + e / 2};
    const DivisorClass c{3, 8 + 3 * e / 2};
    CHECK(embedding_degree(c, h, s) == 17);
    CHECK(adjunction_degree(c, s) == 38);
  }
  for (Int q = 0; q <= 2; ++q)
    for (Int e = -q; e <= 20; ++e) {
      if (e % 2) continue;
      CHECK(-3 * e + 6 * q + 58 != 32);
      CHECK(2 * q - 20 < -q);
    }
}

TEST_CASE("finite search preconditions") {
  const auto f0 = RuledSurface::hirzebruch(0);
  CHECK_THROWS_AS((eliminate_by_genus({{0, 0}, 3, 0, {}, 10}, f0)), Error);
  CHECK_THROWS_AS((eliminate_by_genus({{1, 1}, 3, 0, {}, -1}, f0)), Error);
}

TEST_CASE("disjointness") {
  const auto f3 = RuledSurface::hirzebruch(3);
  CHECK(disjointness_obstruction({{1, 3}, {1, 3}}, f3));
  CHECK_FALSE(disjointness_obstruction({{0, 1}, {0, 1}}, f3));
  CHECK_THROWS_AS((disjointness_obstruction({{1, 3}}, f3)), Error);
}
