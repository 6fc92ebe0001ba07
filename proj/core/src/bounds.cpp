#include <cfknot/bounds.hpp>

#include <utility>

#include <cfknot/errors.hpp>

namespace cfknot {

namespace {

// Comparison of finite reduced fractions (positive denominators).
bool finite_le(const ProjectiveRational& a, const ProjectiveRational& b) {
  return a.num() * b.den() <= b.num() * a.den();
}

}  // namespace

BridgeIndices::BridgeIndices(Int b0_in, Int b1_in)
    : b0(std::move(b0_in)), b1(std::move(b1_in)) {
  if (b1 < 1) {
    throw PreconditionError("torus bridge index b1 must be at least 1");
  }
  if (b0 <= b1) {
    throw PreconditionError("bridge indices must satisfy b0 > b1");
  }
}

GrowthRateBound growth_rate_bound(const BridgeIndices& b) {
  GrowthRateBound out{
      ProjectiveRational(b.b1 - 1, b.b1),
      ProjectiveRational(b.b0 - 2, b.b0),
      ProjectiveRational(0, 1),
      ProjectiveRational(0, 1),
  };
  if (finite_le(out.torus_candidate, out.sphere_candidate)) {
    out.min_bound = out.torus_candidate;
    out.max_bound = out.sphere_candidate;
  } else {
    out.min_bound = out.sphere_candidate;
    out.max_bound = out.torus_candidate;
  }
  return out;
}

Int epsilon_target(const ProjectiveRational& eps) {
  if (eps.is_infinity() || eps.num() <= 0 || eps.num() >= eps.den()) {
    throw PreconditionError("epsilon must satisfy 0 < eps < 1");
  }
  return floor_div(eps.den(), eps.num()) + 1;
}

std::array<Int, 3> alexander_from_seifert(const SeifertMatrix2& V) {
  // det(V - tV^T) = (v00 v11 - v01 v10)
  //              + (v01^2 + v10^2 - 2 v00 v11) t
  //              + (v00 v11 - v01 v10) t^2
  const Int constant = V.v00 * V.v11 - V.v01 * V.v10;
  const Int linear = V.v01 * V.v01 + V.v10 * V.v10 - 2 * V.v00 * V.v11;
  return {constant, linear, constant};
}

bool zero_slope_obstruction(const Int& j) {
  const Int up = j * (j + 1);
  const Int down = j * (j - 1);
  return up != 1 && up != -1 && down != 1 && down != -1;
}

}  // namespace cfknot
