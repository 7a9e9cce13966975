#pragma once

#include "cicy/chow_kernel.hpp"
#include "cicy/genus_bounds.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cicy {

struct CurveComponent {
  Int d = 0;
  Int g = 0;
  Int span = 2;

  /// Plane components must have the plane genus, others must respect Castelnuovo.
  void validate() const;

  bool operator==(const CurveComponent&) const = default;
  auto operator<=>(const CurveComponent&) const = default;
};

std::string to_string(const CurveComponent& c);

/// Disjoint union of components; empty means the empty curve.
struct CurveCandidate {
  std::vector<CurveComponent> components;  // kept sorted

  static CurveCandidate of(std::vector<CurveComponent> parts);
  bool empty() const { return components.empty(); }
  Int total_degree() const;
  /// Arithmetic genus of the disjoint union; throws on the empty curve.
  Int arithmetic_genus() const;

  bool operator==(const CurveCandidate&) const = default;
  auto operator<=>(const CurveCandidate&) const = default;
};

std::string to_string(const CurveCandidate& c);

/// g with 2g - 2 = c1 d.
Int required_genus(Int c1, Int d);

/// sum g_i - s + 1 + t for s parts meeting in t nodes in total.
Int union_genus(const std::vector<Int>& genera, Int meets);

/// Positive d solving (omega_total - omega_target) d = cut (total - d).
Int liaison_solve(Int total_degree, Int omega_twist_total, Int omega_twist_target, Int cutting_degree);

struct Construction {
  std::string name;
  CicyContext ctx;
  Int rank = 2;
  Int c1 = 0;
  Int c2 = 0;
  CurveCandidate curve;
  std::string anchor;
};

/// Every explicit construction, in a fixed order.
const std::vector<Construction>& registry();

/// Entries with this name; throws if none.
std::vector<Construction> registry_entries(const std::string& name);

struct CheckLine {
  std::string field;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ValidationReport {
  std::string name;
  std::string threefold;
  std::vector<CheckLine> checks;

  bool ok() const;
  /// First failing field, or empty.
  std::string first_failure() const;
};

/// Recomputes one entry from the kernel operations.
ValidationReport validate_entry(const Construction& entry);

/// Validates every entry registered under name.
std::vector<ValidationReport> validate_construction(const std::string& name);

/// Registry as JSON with keys in the order name, threefold, rank, c1, c2, components, anchor.
nlohmann::ordered_json registry_json(const std::vector<Construction>& entries);

struct IncidenceCounts {
  Int grassmannian_dim = 0;      // 4-dimensional systems of quadrics in P^5
  Int fiber_dim = 0;             // cubics through a fixed curve, projectivized
  Int total_dim = 0;
  Int cubic_sections = 0;        // h^0(O_P5(3))
  Int cubic_space_dim = 0;
  Int cubics_through_curve = 0;  // h^0(I_T(3))
  Int fiber_over_cubic = 0;
};

IncidenceCounts incidence_dimension_check();

/// The final c2 lists, as sets of integers, keyed by threefold for rank 2 with c1 <= 2
/// and for all ranks on the quintic.
std::vector<Int> final_c2_list(const CicyContext& ctx, bool higher_rank);

}  // namespace cicy
