#include "cicy/chow_kernel.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace cicy;

namespace {

// Independent oracle: chi(E) = ch_3(E) + c1(E) c2(X).H / 12 on a Calabi-Yau threefold,
// with c(T_X) = (1 + H)^(n+1) / prod(1 + d_i H) expanded by hand.
Rational chi_oracle(const CicyContext& x, Int c1, Int c2) {
  std::vector<Rational> c(4, 0);
  c[0] = 1;
  for (Int k = 0; k < x.ambient_dim() + 1; ++k)
    for (int i = 3; i >= 1; --i) c[i] += c[i - 1];
  for (Int d : x.multidegree()) {
    // divide by (1 + d H)
    for (int i = 1; i <= 3; ++i) c[i] -= d * c[i - 1];
  }
  const Rational c2x_dot_h = c[2] * x.u();
  const Rational ch3 = (Rational(x.u()) * c1 * c1 * c1 - 3 * Rational(c1) * c2) / 6;
  return ch3 + Rational(c1) * c2x_dot_h / 12;
}

// Independent oracle: Hilbert function of the complete intersection from its series.
Int h0_oracle(const CicyContext& x, Int t) {
  if (t < 0) return 0;
  std::vector<long long> series(t + 1, 0);
  series[0] = 1;
  for (Int k = 0; k < x.ambient_dim() + 1; ++k)
    for (Int i = 1; i <= t; ++i) series[i] += series[i - 1];
  for (Int d : x.multidegree())
    for (Int i = t; i >= d; --i) series[i] -= series[i - d];
  return series[t];
}

}  // namespace

TEST_CASE("the five threefolds") {
  const auto& all = CicyContext::all();
  REQUIRE(all.size() == 5);
  CHECK(all[0].key() == "5");
  CHECK(all[1].key() == "2,4");
  CHECK(all[4].key() == "2,2,2,2");
  for (const auto& x : all) CHECK(x.v() + 4 == x.ambient_dim() + 1);
  CHECK(CicyContext::parse("X_{2,4}").u() == 8);
  CHECK(CicyContext::parse("4,2").key() == "2,4");
  CHECK(CicyContext::parse("X8").key() == "2,4");
  CHECK(CicyContext::parse("3,3").u() == 9);
}

TEST_CASE("strict mode rejects non-CICY multidegrees") {
  CHECK_THROWS_AS((CicyContext::parse("7")), Error);
  CHECK_THROWS_AS((CicyContext::make({2, 3})), Error);
  CHECK_THROWS_AS((CicyContext::make({0, 5})), Error);
  try {
    CicyContext::parse("7");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2,2,2,2") != std::string::npos);
  }
}

TEST_CASE("lax mode accepts and warns") {
  const auto x = CicyContext::make({1, 5}, Validation::Lax);
  CHECK(x.ambient_dim() == 5);
  CHECK_THROWS_AS((CicyContext::make({2, 3}, Validation::Lax)), Error);
  CHECK_FALSE(x.warnings().empty());
  CHECK(CicyContext::make({5}, Validation::Lax).warnings().empty());
}

TEST_CASE("ring inverse and products") {
  const auto inv = ring_invert(TruncatedClass::linear(-1));
  CHECK(inv == TruncatedClass{{1, 1, 1, 1}});
  const auto sq = ring_mul(TruncatedClass::linear(1), TruncatedClass::linear(1));
  CHECK(sq == TruncatedClass{{1, 2, 1, 0}});
  CHECK_THROWS_AS((ring_invert(TruncatedClass{{0, 1, 0, 0}})), Error);
  CHECK(to_string(TruncatedClass{{1, Rational(1, 2), 0, -3}}) == "(1, 1/2, 0, -3)");
}

TEST_CASE("chi matches the Hirzebruch-Riemann-Roch oracle") {
  for (const auto& x : CicyContext::all()) {
    CHECK(chi_rank2(x, 1, 0) == x.ambient_dim() + 1);
    CHECK(chi_rank2(x, 0, 0) == 0);
    for (Int c1 = -3; c1 <= 4; ++c1)
      for (Int c2 = -5; c2 <= 40; c2 += 5) CHECK(chi_rank2(x, c1, c2) == chi_oracle(x, c1, c2));
  }
  CHECK(chi_rank2(CicyContext::quintic(), 2, 5) == 10);
  CHECK(chi_rank2(CicyContext::parse("2,4"), 1, 0) == 6);
}

TEST_CASE("chi can be a proper fraction") {
  const auto x = CicyContext::quintic();
  const Rational v = chi_rank2(x, 1, 1);
  CHECK(v == chi_oracle(x, 1, 1));
  CHECK_FALSE(is_integer(v));
}

TEST_CASE("h0 of line bundles matches the Hilbert series") {
  for (const auto& x : CicyContext::all())
    for (Int t = -2; t <= 6; ++t) CHECK(h0_line_bundle(x, t) == h0_oracle(x, t));
  CHECK(h0_line_bundle(CicyContext::quintic(), 1) == 5);
  CHECK(h0_line_bundle(CicyContext::quintic(), 2) == 15);
  CHECK(h0_line_bundle(CicyContext::parse("2,4"), 2) == 20);
}

TEST_CASE("resolutions and extensions") {
  const auto x = CicyContext::quintic();
  const auto euler = chern_from_resolution({-1}, {0, 0, 0, 0, 0}, x);
  CHECK(euler.rank == 4);
  CHECK(euler.c1 == 1);
  CHECK(euler.c2 == 5);
  CHECK(euler.c3 == 5);
  CHECK(chern_from_resolution({-2}, {0, 0, 0, 0}, x).c2 == 20);
  CHECK(chern_from_resolution({-1, -1}, {0, 0, 0, 0, 0}, x).c2 == 15);
  CHECK(chern_from_resolution({-1}, {0, 0, 0, 1}, x).c2 == 10);
  CHECK_THROWS_AS((chern_from_resolution({-1, -1}, {0, 0}, x)), Error);

  CHECK(chern_of_extension(1, 1, 0, x).c2 == 5);
  CHECK(chern_of_extension(1, 1, 3, CicyContext::parse("2,4")).c2 == 11);
  CHECK(chern_of_extension(1, 1, 3, CicyContext::parse("3,3")).c2 == 12);
}

TEST_CASE("twists") {
  const auto x = CicyContext::quintic();
  CHECK(twist_rank2(0, 0, 1, x) == std::pair<Int, Int>{2, 5});
  CHECK(twist_rank2(2, 10, -1, x) == std::pair<Int, Int>{0, 5});
}

TEST_CASE("maximal ranks without trivial summands") {
  const auto x = CicyContext::quintic();
  CHECK(max_rank_no_trivial({-2}, x) == 14);
  CHECK(max_rank_no_trivial({-1, -1}, x) == 8);
  CHECK(max_rank_no_trivial({-1}, x) == 4);
  CHECK(max_rank_no_trivial({-1}, x, {1}) == 5);
  CHECK_THROWS_AS((max_rank_no_trivial({0}, x)), Error);
}

TEST_CASE("validation mode from the environment") {
  ::setenv("CICY_VALIDATION", "lax", 1);
  CHECK(validation_from_env() == Validation::Lax);
  ::setenv("CICY_VALIDATION", "bogus", 1);
  CHECK(validation_from_env() == Validation::Strict);
  ::unsetenv("CICY_VALIDATION");
  CHECK(validation_from_env() == Validation::Strict);
}
