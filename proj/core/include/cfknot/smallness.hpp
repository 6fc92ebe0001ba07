#pragma once

#include <map>
#include <vector>

#include <cfknot/integer.hpp>

namespace cfknot {

/// A coefficient list [b1,...,bk] subject to the criterion bounds
/// |b1| >= 3 and |bi| >= 2 for i >= 2.
struct SmallnessProblem {
  std::vector<Int> coefficients;

  bool applicable() const;
  /// Throws CriterionInapplicable when the bounds fail.
  void require_applicable() const;
};

/// Which sum equation a witness satisfied.
enum class WitnessCondition { kOneInI, kOneNotInI };

/// An index pair (I, J) certifying a closed essential surface in the knot
/// exterior: 1 is not in I ∩ J, neither set has consecutive indices, and
/// the applicable sum equation vanishes. Indices are 1-based and sorted.
struct SurfaceWitness {
  std::vector<int> I;
  std::vector<int> J;
  WitnessCondition condition;
  Int sum_value;  // value of the applicable equation; 0 for a real witness

  friend bool operator==(const SurfaceWitness&, const SurfaceWitness&) = default;
};

/// All subsets of {1..k} with no two consecutive elements, ordered
/// lexicographically as sorted index lists. There are Fibonacci(k+2).
std::vector<std::vector<int>> no_consecutive_subsets(int k);

/// Every witness pair, in lexicographic order by (I, J). An empty result
/// certifies that the knot is small.
std::vector<SurfaceWitness> enumerate_witnesses(const SmallnessProblem& p);

/// Independent re-check of the three witness conditions against p.
bool validate_witness(const SmallnessProblem& p, const SurfaceWitness& w);

bool is_small(const SmallnessProblem& p);

struct ScanEntry {
  bool applicable = false;
  bool small = false;  // meaningful only when applicable
  std::vector<SurfaceWitness> witnesses;
};

/// Per-n verdicts for [r, -s, n] over n in [n_min, n_max]. Entries with
/// |n| < 2 are marked inapplicable rather than raised. Requires r >= 3,
/// s >= 2 and a non-empty range.
std::map<Int, ScanEntry> family_smallness_scan(const Int& r, const Int& s,
                                               const Int& n_min,
                                               const Int& n_max);

}  // namespace cfknot
