#include <cfknot/surgery.hpp>

#include <sstream>

#include <cfknot/errors.hpp>

namespace cfknot {

SurgeryDescription l7_description(const FamilyParams& p) {
  // Twist counts of the word: k = -r (outer b pair), k = s (a pair),
  // k = -n (inner b pair).
  for (const Int& k : {Int(-p.r), p.s, Int(-p.n)}) {
    if (k == 0) {
      throw DegenerateTwist(
          "zero twist count: omit the twist from the word instead of "
          "filling a seven-component description");
    }
  }
  SurgeryDescription d{LinkName::kL7, p, {}, {}};
  d.notes.push_back("slopes use the push-off framing from the fiber");
  d.components = {
      {"L-3", ProjectiveRational(1, -p.r)},
      {"L-2", ProjectiveRational(1, p.s)},
      {"L-1", ProjectiveRational(1, -p.n)},
      {"Kn", SurgerySlope::unfilled()},
      {"L1", ProjectiveRational(-1, -p.n)},
      {"L2", ProjectiveRational(-1, p.s)},
      {"L3", ProjectiveRational(-1, -p.r)},
  };
  return d;
}

SurgeryDescription c7_description(const FamilyParams& p, bool figure_variant) {
  const Int fourth = figure_variant ? Int(-p.n + 1) : Int(-p.n - 1);
  SurgeryDescription d{LinkName::kC7, p, {}, {}};
  d.notes.push_back(
      "the longitude and meridian of K* correspond to the meridian and "
      "fiber framing of the surgered knot");
  const Int slopes[6] = {p.r, -p.s, p.n, fourth, p.s, -p.r};
  for (int i = 0; i < 6; ++i) {
    d.components.push_back(
        {std::to_string(i + 1), ProjectiveRational(slopes[i], 1)});
  }
  d.components.push_back({"K*", SurgerySlope::unfilled()});
  return d;
}

std::string export_text(const SurgeryDescription& d) {
  std::ostringstream os;
  os << "link " << (d.link == LinkName::kL7 ? "L7" : "C7") << " params r="
     << d.params.r << " s=" << d.params.s << " n=" << d.params.n << "\n";
  for (const auto& note : d.notes) {
    os << "# " << note << "\n";
  }
  for (const auto& component : d.components) {
    os << "component " << component.label;
    if (component.slope.is_unfilled()) {
      os << " UNFILLED";
    } else {
      os << " slope " << component.slope.value();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cfknot
