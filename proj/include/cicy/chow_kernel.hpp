#pragma once

#include "cicy/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

enum class Validation { Strict, Lax };

/// Reads CICY_VALIDATION ("strict" or "lax"); anything else, or unset, is strict.
Validation validation_from_env();

/// A complete intersection threefold X in P^n with Pic(X) = Z·H.
class CicyContext {
 public:
  /// Strict mode accepts only the five CICY multidegrees. Lax mode accepts any
  /// positive multidegree with sum n + 1 and records a warning when v + 4 != n + 1.
  static CicyContext make(std::vector<Int> multidegree, Validation mode = Validation::Strict);

  /// Parses "5", "2,4", "2,2,3", ... and the unambiguous aliases "X5", "X_{3,3}".
  static CicyContext parse(const std::string& text, Validation mode = Validation::Strict);

  /// The five CICY threefolds in a fixed order.
  static const std::vector<CicyContext>& all();

  static CicyContext quintic() { return make({5}); }

  const std::vector<Int>& multidegree() const { return multidegree_; }
  Int ambient_dim() const { return n_; }
  Int u() const { return u_; }
  Int v() const { return v_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// "5", "2,4", ...
  std::string key() const;
  /// "X_{2,4}" style label.
  std::string label() const;

  bool operator==(const CicyContext& o) const { return multidegree_ == o.multidegree_; }

 private:
  std::vector<Int> multidegree_;
  Int n_ = 0;
  Int u_ = 0;
  Int v_ = 0;
  std::vector<std::string> warnings_;
};

/// a0 + a1 H + a2 H^2 + a3 H^3 in Q[H]/(H^4).
struct TruncatedClass {
  std::array<Rational, 4> coeffs{};

  static TruncatedClass unit() { return TruncatedClass{{1, 0, 0, 0}}; }
  /// 1 + t H
  static TruncatedClass linear(Int t) { return TruncatedClass{{1, t, 0, 0}}; }

  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  Rational& operator[](std::size_t i) { return coeffs[i]; }
  bool operator==(const TruncatedClass&) const = default;
};

TruncatedClass ring_mul(const TruncatedClass& x, const TruncatedClass& y);
TruncatedClass ring_invert(const TruncatedClass& x);
std::string to_string(const TruncatedClass& x);

struct BundleInvariants {
  Int rank = 0;
  Int c1 = 0;
  Int c2 = 0;  // degree of the associated curve: H^2 coefficient times u
  std::optional<Int> c3;

  bool operator==(const BundleInvariants&) const = default;
};

/// 0 -> ⊕ O(s_i) -> ⊕ O(q_j) -> E -> 0
BundleInvariants chern_from_resolution(const std::vector<Int>& sub_twists,
                                       const std::vector<Int>& quot_twists,
                                       const CicyContext& ctx);

/// 0 -> O(a) -> E -> I_Z(b) -> 0 with deg Z = z_degree.
BundleInvariants chern_of_extension(Int a, Int b, Int z_degree, const CicyContext& ctx);

/// Riemann-Roch for a rank 2 bundle with the given c1, c2.
Rational chi_rank2(const CicyContext& ctx, Int c1, Int c2);

std::pair<Int, Int> twist_rank2(Int c1, Int c2, Int t, const CicyContext& ctx);

/// h^0(O_X(t)) from the Koszul complex of X in P^n.
Int h0_line_bundle(const CicyContext& ctx, Int t);

/// Largest rank of E in 0 -> ⊕O(s_i) -> O^N ⊕ (⊕O(e_k)) -> E -> 0 with no trivial
/// summand: N is capped by the sections of the dual of the sub bundle.
Int max_rank_no_trivial(const std::vector<Int>& sub_twists, const CicyContext& ctx,
                        const std::vector<Int>& extra_quot_twists = {});

}  // namespace cicy
