#include "cli/render.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace cfknot::cli {

std::string int_str(const Int& value) {
  return value.str();
}

json int_or_string(const Int& value) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (value >= kMin && value <= kMax) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json coefficients_json(const std::vector<Int>& coefficients) {
  json array = json::array();
  for (const Int& b : coefficients) {
    array.push_back(int_or_string(b));
  }
  return array;
}

json curve_json(const CurveClass& c) {
  return {{"m", int_str(c.m())}, {"n", int_str(c.n())}};
}

json witness_json(const SurfaceWitness& w) {
  return {{"I", w.I},
          {"J", w.J},
          {"condition", condition_str(w.condition)},
          {"sum", int_str(w.sum_value)}};
}

json witnesses_json(const std::vector<SurfaceWitness>& ws) {
  json array = json::array();
  for (const auto& w : ws) {
    array.push_back(witness_json(w));
  }
  return array;
}

json description_json(const SurgeryDescription& d) {
  json components = json::array();
  for (const auto& component : d.components) {
    components.push_back(
        {{"label", component.label},
         {"slope", component.slope.is_unfilled()
                       ? std::string("UNFILLED")
                       : component.slope.value().str()}});
  }
  return {{"link", d.link == LinkName::kL7 ? "L7" : "C7"},
          {"params",
           {{"r", int_str(d.params.r)},
            {"s", int_str(d.params.s)},
            {"n", int_str(d.params.n)}}},
          {"components", components},
          {"notes", d.notes}};
}

json growth_json(const BridgeIndices& b, const GrowthRateBound& g) {
  return {{"b0", int_str(b.b0)},
          {"b1", int_str(b.b1)},
          {"torus_candidate", g.torus_candidate.str()},
          {"sphere_candidate", g.sphere_candidate.str()},
          {"min", g.min_bound.str()},
          {"max", g.max_bound.str()}};
}

std::string condition_str(WitnessCondition condition) {
  return condition == WitnessCondition::kOneInI ? "1-in-I" : "1-not-in-I";
}

std::string index_set_str(const std::vector<int>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << subset[i];
  }
  os << '}';
  return os.str();
}

std::string witness_str(const SurfaceWitness& w) {
  std::ostringstream os;
  os << "I=" << index_set_str(w.I) << " J=" << index_set_str(w.J)
     << " condition=" << condition_str(w.condition);
  return os.str();
}

}  // namespace cfknot::cli
