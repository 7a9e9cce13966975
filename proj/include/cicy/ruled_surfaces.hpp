#pragma once

#include "cicy/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cicy {

/// P^1-bundle over a genus q curve with minimal section h, h^2 = -e, and fiber f.
struct RuledSurface {
  Int e = 0;
  Int q = 0;

  /// Enforces e >= -q, and e >= 0 when q = 0.
  static RuledSurface make(Int e, Int q = 0);
  static RuledSurface hirzebruch(Int e) { return make(e, 0); }
};

/// a h + b f
struct DivisorClass {
  Int a = 0;
  Int b = 0;

  DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
  DivisorClass operator*(Int k) const { return {k * a, k * b}; }
  bool operator==(const DivisorClass&) const = default;
  auto operator<=>(const DivisorClass&) const = default;
};

std::string to_string(const DivisorClass& d);

Int intersect(const DivisorClass& x, const DivisorClass& y, const RuledSurface& s);
DivisorClass canonical_class(const RuledSurface& s);

/// g with 2g - 2 = C.(C + K).
Int adjunction_genus(const DivisorClass& c, const RuledSurface& s);
/// C.(C + K)
Int adjunction_degree(const DivisorClass& c, const RuledSurface& s);

Int embedding_degree(const DivisorClass& c, const DivisorClass& hyperplane, const RuledSurface& s);

/// lo <= ca * a + cb * b <= hi
struct LinearConstraint {
  Int ca = 0;
  Int cb = 0;
  Int lo = 0;
  Int hi = 0;

  bool holds(const DivisorClass& d) const {
    const Int v = ca * d.a + cb * d.b;
    return lo <= v && v <= hi;
  }
};

struct GenusConstraint {
  DivisorClass hyperplane;
  Int degree = 0;
  std::optional<Int> genus;  // unconstrained when empty
  std::vector<LinearConstraint> extra;
  Int box = 1000;  // |a|, |b| <= box
};

/// All classes in the box with the given degree and genus that satisfy the extra
/// constraints, sorted. Solves the degree equation for one coordinate, so the
/// search is finite only when the hyperplane has nonzero degree on h or f.
std::vector<DivisorClass> eliminate_by_genus(const GenusConstraint& c, const RuledSurface& s);

/// Reference scan over the whole box.
std::vector<DivisorClass> scan_by_genus(const GenusConstraint& c, const RuledSurface& s);

/// True iff some pair of classes meets positively, so they cannot be disjoint curves.
bool disjointness_obstruction(const std::vector<DivisorClass>& classes, const RuledSurface& s);

/// C.(C+K) as a polynomial c2 a^2 + c1 a + c0 after eliminating b with the degree
/// equation; requires the hyperplane to have positive degree on h.
struct QuadraticInA {
  Rational c2, c1, c0;
};
QuadraticInA genus_polynomial(const DivisorClass& hyperplane, Int degree, const RuledSurface& s);

}  // namespace cicy
