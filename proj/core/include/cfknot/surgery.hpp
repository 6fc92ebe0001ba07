#pragma once

#include <optional>
#include <string>
#include <vector>

#include <cfknot/curves.hpp>
#include <cfknot/rational.hpp>

namespace cfknot {

/// A filling slope, or the marker for the unfilled knot component.
class SurgerySlope {
 public:
  static SurgerySlope unfilled() { return SurgerySlope(); }
  SurgerySlope(ProjectiveRational value) : value_(std::move(value)) {}

  bool is_unfilled() const { return !value_.has_value(); }
  const ProjectiveRational& value() const { return value_.value(); }

 private:
  SurgerySlope() = default;
  std::optional<ProjectiveRational> value_;
};

enum class LinkName { kL7, kC7 };

struct SurgeryComponent {
  std::string label;
  SurgerySlope slope;
};

/// An ordered slope assignment on a seven-component chain link; exactly one
/// component (the knot) is unfilled.
struct SurgeryDescription {
  LinkName link;
  FamilyParams params;
  std::vector<SurgeryComponent> components;
  std::vector<std::string> notes;  // emitted as comment lines
};

/// The twist-realization description: push-off pairs carry the slopes
/// (1/k, -1/k) for twist counts k = -n (inner b pair L-1, L1), k = s
/// (a pair L-2, L2) and k = -r (outer b pair L-3, L3); the center
/// component Kn is unfilled. The negative push-off takes +1/k; flipping
/// every pair gives a homeomorphic description.
/// Throws DegenerateTwist when a twist count is zero.
SurgeryDescription l7_description(const FamilyParams& p);

/// The chain-link filling with slopes r, -s, n, -n-1, s, -r on components
/// 1..6 and the unfilled knot K*. `figure_variant` switches the fourth
/// slope to -n+1.
SurgeryDescription c7_description(const FamilyParams& p,
                                  bool figure_variant = false);

/// Deterministic line-based text: a header line, `#` comment lines, then
/// one `component <label> slope <m>/<n>` or `component <label> UNFILLED`
/// line per component. Newline-terminated, no trailing whitespace,
/// byte-identical across runs and platforms.
std::string export_text(const SurgeryDescription& d);

}  // namespace cfknot
