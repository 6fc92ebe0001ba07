#pragma once

#include <utility>

#include <cfknot/curves.hpp>
#include <cfknot/integer.hpp>

namespace cfknot {

/// Strand and crossing counts of the positive braid representing
/// p[c] + q[b], where [c] = [a] + [b].
struct BraidCounts {
  Int p;
  Int q;
  Int strands;    // p + q
  Int crossings;  // pq + p(p-1) + q(q-1)
};

/// Rewrites m[a] + n[b] as p[c] + q[b] with the global sign chosen so that
/// p, q >= 0. Throws NotPositivelyRepresentable when neither sign works
/// (the curve a itself is the basic example).
std::pair<Int, Int> to_cb_basis(const CurveClass& c);

/// Requires p, q >= 0, coprime, not both zero.
BraidCounts braid_counts(const Int& p, const Int& q);

/// strands - crossings = 2(p+q) - (p^2 + q^2 + pq), the Euler
/// characteristic of the fiber surface of the braid closure.
Int euler_characteristic(const Int& p, const Int& q);

/// Genus (p^2 + q^2 + pq + 1)/2 - (p + q); the numerator is even for every
/// coprime pair, which is verified internally.
Int fibered_genus_pq(const Int& p, const Int& q);

/// Genus of the fibered knot determined by the curve class.
Int fibered_genus(const CurveClass& c);

/// Closed form (s^2(r^2-r+1) - s)/2 for the twisting curve (s, rs+1);
/// equal to fibered_genus(ktw_class(r, s)). Requires r >= 3, s >= 2.
Int ktw_genus(const Int& r, const Int& s);

}  // namespace cfknot
