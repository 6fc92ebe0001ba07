#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <cfknot/cfknot.hpp>

namespace cfknot::cli {

using nlohmann::json;

std::string int_str(const Int& value);

/// Bridges arbitrary-precision coefficients into JSON: a plain number when
/// the value fits in 64 bits, a decimal string otherwise.
json int_or_string(const Int& value);

json coefficients_json(const std::vector<Int>& coefficients);
json curve_json(const CurveClass& c);
json witness_json(const SurfaceWitness& w);
json witnesses_json(const std::vector<SurfaceWitness>& ws);
json description_json(const SurgeryDescription& d);
json growth_json(const BridgeIndices& b, const GrowthRateBound& g);

std::string condition_str(WitnessCondition condition);
std::string index_set_str(const std::vector<int>& subset);
std::string witness_str(const SurfaceWitness& w);

}  // namespace cfknot::cli
