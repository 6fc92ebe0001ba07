#pragma once

#include <vector>

#include <cfknot/rational.hpp>

namespace cfknot {

/// Integer coefficients b1,...,bk under the minus convention
///   [b1,...,bk] = 1/(b1 - 1/(b2 - ... - 1/bk)),
/// with the empty sequence evaluating to 0/1. Any integers are allowed,
/// including zeros; evaluation survives intermediate infinities.
struct ContinuedFraction {
  std::vector<Int> coefficients;

  friend bool operator==(const ContinuedFraction&,
                         const ContinuedFraction&) = default;
};

/// Exact value of the fraction. Total: every step is projective, so
/// division by zero yields 1/0 and 1/(1/0) yields 0/1.
ProjectiveRational evaluate(const ContinuedFraction& cf);

/// Canonical greedy minus-expansion, a right inverse of evaluate.
/// expand(0/1) = [] and expand(1/0) = [0]; values in (0,1) expand with
/// every coefficient >= 2, and for other values the leading coefficient is
/// the unique integer that puts the remainder back in [0,1).
ContinuedFraction expand(const ProjectiveRational& q);

}  // namespace cfknot
