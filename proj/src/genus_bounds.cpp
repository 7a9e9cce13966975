#include "cicy/genus_bounds.hpp"

#include <numeric>

namespace cicy {

Int castelnuovo_pi(Int d, Int r) {
  if (r < 3) throw Error("castelnuovo_pi needs r >= 3; use plane_genus for r = 2");
  if (d < r) throw Error("degenerate for this span: d = " + std::to_string(d) + " < r = " + std::to_string(r));
  const Int m = (d - 1) / (r - 1);
  const Int eps = (d - 1) - m * (r - 1);
  return m * (m - 1) * (r - 1) / 2 + m * eps;
}

Int pi_one(Int d, Int r) {
  if (r < 3 || d < 2 * r + 1)
    throw Unsupported("pi_one is unsupported for (d, r) = (" + std::to_string(d) + ", " +
                      std::to_string(r) + "); implemented for r >= 3, d >= 2r + 1");
  const Int m1 = (d - 1) / r;
  const Int eps1 = (d - 1) - m1 * r;
  const Int mu1 = eps1 == r - 1 ? 1 : 0;
  return m1 * (m1 - 1) * r / 2 + m1 * (eps1 + 1) + mu1;
}

Int plane_genus(Int d) {
  if (d < 1) throw Error("plane curve degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

Int max_genus(Int d, Int r) { return r == 2 ? plane_genus(d) : castelnuovo_pi(d, r); }

CurveInvariants ci_curve_invariants(const std::vector<Int>& degrees, Int n) {
  if (static_cast<Int>(degrees.size()) != n - 1)
    throw Error("a curve in P^" + std::to_string(n) + " needs " + std::to_string(n - 1) +
                " equations, got " + std::to_string(degrees.size()));
  for (Int x : degrees)
    if (x < 1) throw Error("hypersurface degrees must be positive");
  const Int degree = std::accumulate(degrees.begin(), degrees.end(), Int{1}, std::multiplies<>());
  const Int twist = std::accumulate(degrees.begin(), degrees.end(), Int{0}) - n - 1;
  const Int twice = degree * twist;
  if (twice % 2 != 0) throw Error("odd canonical degree for a complete intersection");
  return {degree, twist, twice / 2 + 1};
}

Int max_curve_degree(const CicyContext& ctx, Int c1, Int rank) {
  if (c1 == 1) return ctx.u();
  if (c1 == 2) return rank == 2 ? 4 * ctx.u() - 3 : 4 * ctx.u();
  throw Error("max_curve_degree supports c1 in {1, 2}, got " + std::to_string(c1));
}

}  // namespace cicy
