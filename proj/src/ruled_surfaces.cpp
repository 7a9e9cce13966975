#include "cicy/ruled_surfaces.hpp"

#include <algorithm>

namespace cicy {

RuledSurface RuledSurface::make(Int e, Int q) {
  if (q < 0) throw Error("base genus must be nonnegative");
  if (e < -q) throw Error("e = " + std::to_string(e) + " violates e >= -q for q = " + std::to_string(q));
  return {e, q};
}

std::string to_string(const DivisorClass& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

Int intersect(const DivisorClass& x, const DivisorClass& y, const RuledSurface& s) {
  return -s.e * x.a * y.a + x.a * y.b + y.a * x.b;
}

DivisorClass canonical_class(const RuledSurface& s) { return {-2, 2 * s.q - 2 - s.e}; }

Int adjunction_degree(const DivisorClass& c, const RuledSurface& s) {
  return intersect(c, c + canonical_class(s), s);
}

Int adjunction_genus(const DivisorClass& c, const RuledSurface& s) {
  const Int twice = adjunction_degree(c, s);
  if (twice % 2 != 0) throw Error("odd adjunction pairing for " + to_string(c) + ": lattice violation");
  return twice / 2 + 1;
}

Int embedding_degree(const DivisorClass& c, const DivisorClass& hyperplane, const RuledSurface& s) {
  return intersect(c, hyperplane, s);
}

namespace {

bool accepts(const GenusConstraint& c, const DivisorClass& d, const RuledSurface& s) {
  if (intersect(d, c.hyperplane, s) != c.degree) return false;
  if (c.genus && adjunction_degree(d, s) != 2 * *c.genus - 2) return false;
  return std::all_of(c.extra.begin(), c.extra.end(), [&](const LinearConstraint& l) { return l.holds(d); });
}

}  // namespace

std::vector<DivisorClass> eliminate_by_genus(const GenusConstraint& c, const RuledSurface& s) {
  if (c.box < 0) throw Error("search not finite: negative box");
  // degree = alpha * a + beta * b
  const Int alpha = intersect({1, 0}, c.hyperplane, s);
  const Int beta = intersect({0, 1}, c.hyperplane, s);
  if (alpha == 0 && beta == 0) throw Error("search not finite: hyperplane class has degree 0");
  std::vector<DivisorClass> out;
  for (Int x = -c.box; x <= c.box; ++x) {
    // Solve for the coordinate with nonzero coefficient.
    const Int coeff = beta != 0 ? beta : alpha;
    const Int rest = c.degree - (beta != 0 ? alpha : beta) * x;
    if (rest % coeff != 0) continue;
    const Int y = rest / coeff;
    if (y < -c.box || y > c.box) continue;
    const DivisorClass d = beta != 0 ? DivisorClass{x, y} : DivisorClass{y, x};
    if (accepts(c, d, s)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> scan_by_genus(const GenusConstraint& c, const RuledSurface& s) {
  std::vector<DivisorClass> out;
  for (Int a = -c.box; a <= c.box; ++a)
    for (Int b = -c.box; b <= c.box; ++b)
      if (accepts(c, {a, b}, s)) out.push_back({a, b});
  return out;
}

bool disjointness_obstruction(const std::vector<DivisorClass>& classes, const RuledSurface& s) {
  if (classes.size() < 2) throw Error("disjointness needs at least two classes");
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (intersect(classes[i], classes[j], s) > 0) return true;
  return false;
}

QuadraticInA genus_polynomial(const DivisorClass& hyperplane, Int degree, const RuledSurface& s) {
  const Int alpha = intersect({1, 0}, hyperplane, s);
  const Int beta = intersect({0, 1}, hyperplane, s);
  if (beta == 0) throw Error("hyperplane has degree 0 on fibers");
  // b = beta0 + beta1 a from the degree equation.
  const Rational beta0 = Rational(degree) / beta;
  const Rational beta1 = Rational(-alpha) / beta;
  const Int kappa = canonical_class(s).b;
  return {2 * beta1 - s.e, 2 * beta0 + kappa + 2 * s.e - 2 * beta1, -2 * beta0};
}

}  // namespace cicy
