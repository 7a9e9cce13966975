#pragma once

#include "cicy/chow_kernel.hpp"
#include "cicy/rational.hpp"

#include <vector>

namespace cicy {

/// Castelnuovo's bound for nondegenerate curves of degree d spanning P^r, r >= 3.
Int castelnuovo_pi(Int d, Int r);

/// Refined bound for curves lying on no surface of degree < r. Implemented for
/// 3 <= r and d >= 2r + 1; other inputs throw Unsupported.
Int pi_one(Int d, Int r);

/// Arithmetic genus of a plane curve of degree d.
Int plane_genus(Int d);

/// Maximal genus for span r: plane_genus when r = 2, castelnuovo_pi otherwise.
Int max_genus(Int d, Int r);

struct CurveInvariants {
  Int degree = 0;
  Int omega_twist = 0;
  Int genus = 0;

  bool operator==(const CurveInvariants&) const = default;
};

/// Complete intersection curve of hypersurfaces of the given degrees in P^n.
CurveInvariants ci_curve_invariants(const std::vector<Int>& degrees, Int n);

/// Degree cap for the curve associated to a bundle with the given c1 and rank.
Int max_curve_degree(const CicyContext& ctx, Int c1, Int rank);

}  // namespace cicy
