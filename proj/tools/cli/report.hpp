#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include <cfknot/cfknot.hpp>

namespace cfknot::cli {

/// Everything the `report` command gathers for one family member. The
/// growth-rate section appears only when bridge indices were supplied; the
/// L7 description degrades to a reason string when n = 0.
struct FamilyReport {
  FamilyParams params;
  CurveClass curve;
  Int twist_curve_genus;

  bool smallness_applicable = false;
  bool small = false;
  std::vector<SurfaceWitness> witnesses;
  bool msmall = false;  // promoted from small: small knots here are m-small

  int heegaard_genus_bound = 2;

  std::optional<BridgeIndices> bridge;
  std::optional<GrowthRateBound> growth;

  std::optional<SurgeryDescription> l7;
  std::string l7_degenerate_reason;
  SurgeryDescription c7;
  bool figure_variant = false;
};

FamilyReport build_family_report(const FamilyParams& params,
                                 const std::optional<BridgeIndices>& bridge,
                                 bool figure_variant);

nlohmann::json report_json(const FamilyReport& report);
std::string report_text(const FamilyReport& report);

}  // namespace cfknot::cli
