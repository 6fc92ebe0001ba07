#include <cfknot/braid.hpp>

#include <stdexcept>

#include <cfknot/errors.hpp>

namespace cfknot {

std::pair<Int, Int> to_cb_basis(const CurveClass& c) {
  // m[a] + n[b] = p[c] + q[b] with [c] = [a] + [b], so p = m, q = n - m.
  Int p = c.m();
  Int q = c.n() - c.m();
  if (p >= 0 && q >= 0) {
    return {p, q};
  }
  if (p <= 0 && q <= 0) {
    return {-p, -q};
  }
  throw NotPositivelyRepresentable(
      "class " + c.slope().str() +
      " has no non-negative expression in the c, b basis");
}

BraidCounts braid_counts(const Int& p, const Int& q) {
  if (p < 0 || q < 0) {
    throw PreconditionError("braid counts need non-negative p, q");
  }
  if (p == 0 && q == 0) {
    throw PreconditionError("braid counts need (p, q) != (0, 0)");
  }
  if (gcd(p, q) != 1) {
    throw PreconditionError("braid counts need coprime p, q");
  }
  BraidCounts counts;
  counts.p = p;
  counts.q = q;
  counts.strands = p + q;
  counts.crossings = p * q + p * (p - 1) + q * (q - 1);
  return counts;
}

Int euler_characteristic(const Int& p, const Int& q) {
  const BraidCounts counts = braid_counts(p, q);
  return counts.strands - counts.crossings;
}

Int fibered_genus_pq(const Int& p, const Int& q) {
  const BraidCounts counts = braid_counts(p, q);
  const Int numerator = p * p + q * q + p * q + 1;
  if (numerator % 2 != 0) {
    throw std::logic_error("p^2+q^2+pq+1 must be even for coprime p, q");
  }
  return numerator / 2 - counts.strands;
}

Int fibered_genus(const CurveClass& c) {
  const auto [p, q] = to_cb_basis(c);
  return fibered_genus_pq(p, q);
}

Int ktw_genus(const Int& r, const Int& s) {
  if (r < 3 || s < 2) {
    throw PreconditionError("ktw_genus needs r >= 3 and s >= 2");
  }
  const Int numerator = s * s * (r * r - r + 1) - s;
  if (numerator % 2 != 0) {
    throw std::logic_error("s^2(r^2-r+1)-s must be even");
  }
  return numerator / 2;
}

}  // namespace cfknot
