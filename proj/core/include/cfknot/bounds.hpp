#pragma once

#include <array>

#include <cfknot/integer.hpp>
#include <cfknot/rational.hpp>

namespace cfknot {

/// Bridge index b0 and torus bridge index b1; b0 > b1 >= 1 holds for every
/// knot other than the unknot and is enforced here.
struct BridgeIndices {
  Int b0;
  Int b1;

  BridgeIndices(Int b0, Int b1);
};

/// min{1 - 1/b1, 1 - 2/b0}, carried together with the max variant and both
/// candidates. The min form is the primary value; the max variant is
/// reported alongside because the two appear interchangeably in the
/// literature and agree in the limit.
struct GrowthRateBound {
  ProjectiveRational torus_candidate;   // 1 - 1/b1
  ProjectiveRational sphere_candidate;  // 1 - 2/b0
  ProjectiveRational min_bound;         // primary
  ProjectiveRational max_bound;
};

/// Applicability (m-smallness, Heegaard genus two) is the caller's
/// responsibility; the result is always < 1.
GrowthRateBound growth_rate_bound(const BridgeIndices& b);

/// Least b1 with 1 - 1/b1 > 1 - eps, i.e. floor(1/eps) + 1.
/// Requires 0 < eps < 1.
Int epsilon_target(const ProjectiveRational& eps);

/// A 2x2 integer Seifert matrix.
struct SeifertMatrix2 {
  Int v00, v01, v10, v11;
};

/// Coefficients of det(V - t*V^T) by ascending power of t, exactly as the
/// determinant expands: {det V, v01^2 + v10^2 - 2 v00 v11, det V}.
/// No normalization is applied.
std::array<Int, 3> alexander_from_seifert(const SeifertMatrix2& V);

/// j(j+1) and j(j-1) are never ±1 (products of consecutive integers are
/// even); exposed as a checkable fact.
bool zero_slope_obstruction(const Int& j);

}  // namespace cfknot
