#include <cfknot/continued_fraction.hpp>

namespace cfknot {

ProjectiveRational evaluate(const ContinuedFraction& cf) {
  // Fold from the right: v = 1/(b - v') with v' = p/q reduced gives
  // v = q/(bq - p), which stays reduced because gcd(q, bq - p) = gcd(q, p).
  ProjectiveRational v;
  for (auto it = cf.coefficients.rbegin(); it != cf.coefficients.rend(); ++it) {
    v = ProjectiveRational(v.den(), *it * v.den() - v.num());
  }
  return v;
}

ContinuedFraction expand(const ProjectiveRational& q) {
  if (q.is_infinity()) {
    return {{Int(0)}};
  }
  ContinuedFraction cf;
  ProjectiveRational rest = q;
  while (!rest.is_zero()) {
    // b = ceil(1/rest); the remainder b - 1/rest lies in [0, 1), so every
    // later coefficient is >= 2 and the denominators strictly decrease.
    const Int b = ceil_div(rest.den(), rest.num());
    cf.coefficients.push_back(b);
    rest = ProjectiveRational(b * rest.num() - rest.den(), rest.num());
  }
  return cf;
}

}  // namespace cfknot
