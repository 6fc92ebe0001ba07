#include <cfknot/smallness.hpp>

#include <algorithm>
#include <string>

#include <cfknot/errors.hpp>

namespace cfknot {

namespace {

void gen_subsets(int k, int next, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int i = next; i <= k; ++i) {
    current.push_back(i);
    gen_subsets(k, i + 2, current, out);
    current.pop_back();
  }
}

Int subset_sum(const std::vector<Int>& coeffs, const std::vector<int>& subset) {
  Int sum = 0;
  for (int index : subset) {
    sum += coeffs[static_cast<std::size_t>(index) - 1];
  }
  return sum;
}

bool contains_one(const std::vector<int>& subset) {
  return !subset.empty() && subset.front() == 1;
}

bool no_consecutive(const std::vector<int>& subset) {
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (subset[i] == subset[i - 1] + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool SmallnessProblem::applicable() const {
  if (coefficients.empty() || abs(coefficients.front()) < 3) {
    return false;
  }
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (abs(coefficients[i]) < 2) {
      return false;
    }
  }
  return true;
}

void SmallnessProblem::require_applicable() const {
  if (!applicable()) {
    throw CriterionInapplicable(
        "criterion needs |b1| >= 3 and |bi| >= 2 for i >= 2");
  }
}

std::vector<std::vector<int>> no_consecutive_subsets(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  gen_subsets(k, 1, current, out);
  return out;
}

std::vector<SurfaceWitness> enumerate_witnesses(const SmallnessProblem& p) {
  p.require_applicable();
  const int k = static_cast<int>(p.coefficients.size());
  const auto subsets = no_consecutive_subsets(k);

  std::vector<Int> sums;
  sums.reserve(subsets.size());
  for (const auto& subset : subsets) {
    sums.push_back(subset_sum(p.coefficients, subset));
  }
  // Bucket candidate J sets by sum; per bucket the indices stay in
  // lexicographic order, so the output is lexicographic in (I, J).
  std::map<Int, std::vector<std::size_t>> by_sum;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    by_sum[sums[j]].push_back(j);
  }

  std::vector<SurfaceWitness> witnesses;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const bool one_in_I = contains_one(subsets[i]);
    // 1 in I:  sum(J) - sum(I) = 0; otherwise sum(J) - (sum(I) + 1) = 0.
    const Int target = one_in_I ? sums[i] : sums[i] + 1;
    const auto bucket = by_sum.find(target);
    if (bucket == by_sum.end()) {
      continue;
    }
    for (std::size_t j : bucket->second) {
      if (one_in_I && contains_one(subsets[j])) {
        continue;
      }
      witnesses.push_back({subsets[i], subsets[j],
                           one_in_I ? WitnessCondition::kOneInI
                                    : WitnessCondition::kOneNotInI,
                           sums[j] - target});
    }
  }
  return witnesses;
}

bool validate_witness(const SmallnessProblem& p, const SurfaceWitness& w) {
  const int k = static_cast<int>(p.coefficients.size());
  for (const auto* subset : {&w.I, &w.J}) {
    if (!std::is_sorted(subset->begin(), subset->end())) {
      return false;
    }
    if (!subset->empty() && (subset->front() < 1 || subset->back() > k)) {
      return false;
    }
    if (!no_consecutive(*subset)) {
      return false;
    }
  }
  const bool one_in_I = contains_one(w.I);
  if (one_in_I && contains_one(w.J)) {
    return false;
  }
  if (w.condition != (one_in_I ? WitnessCondition::kOneInI
                               : WitnessCondition::kOneNotInI)) {
    return false;
  }
  Int value = subset_sum(p.coefficients, w.J) - subset_sum(p.coefficients, w.I);
  if (!one_in_I) {
    value -= 1;
  }
  return value == 0 && w.sum_value == 0;
}

bool is_small(const SmallnessProblem& p) {
  return enumerate_witnesses(p).empty();
}

std::map<Int, ScanEntry> family_smallness_scan(const Int& r, const Int& s,
                                               const Int& n_min,
                                               const Int& n_max) {
  if (r < 3 || s < 2) {
    throw PreconditionError("scan needs r >= 3 and s >= 2");
  }
  if (n_min > n_max) {
    throw PreconditionError("scan range is empty: n_min > n_max");
  }
  std::map<Int, ScanEntry> result;
  for (Int n = n_min; n <= n_max; ++n) {
    SmallnessProblem problem{{r, -s, n}};
    ScanEntry entry;
    entry.applicable = problem.applicable();
    if (entry.applicable) {
      entry.witnesses = enumerate_witnesses(problem);
      entry.small = entry.witnesses.empty();
    }
    result.emplace(n, std::move(entry));
  }
  return result;
}

}  // namespace cfknot
