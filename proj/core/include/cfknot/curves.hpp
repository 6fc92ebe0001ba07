#pragma once

#include <iosfwd>
#include <vector>

#include <cfknot/continued_fraction.hpp>
#include <cfknot/integer.hpp>
#include <cfknot/rational.hpp>

namespace cfknot {

/// An unoriented simple closed curve on the once-punctured torus fiber,
/// written m[a] + n[b] with m, n coprime. Classes are kept up to global
/// sign with the canonical representative n > 0, or (m, n) = (1, 0).
class CurveClass {
 public:
  /// Requires a primitive nonzero pair; the sign is canonicalized.
  CurveClass(Int m, Int n);

  static CurveClass a() { return CurveClass(1, 0); }
  static CurveClass b() { return CurveClass(0, 1); }

  /// The standard identification of curve classes with Q ∪ {1/0}.
  static CurveClass from_slope(const ProjectiveRational& q);
  ProjectiveRational slope() const;

  const Int& m() const { return m_; }
  const Int& n() const { return n_; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  Int m_;
  Int n_;
};

std::ostream& operator<<(std::ostream& os, const CurveClass& c);

/// One letter of a twist word: `exponent` Dehn twists along `curve`.
struct TwistLetter {
  CurveClass curve;
  Int exponent;
};

/// A composition of twist letters, applied right to left as written.
struct TwistWord {
  std::vector<TwistLetter> letters;

  /// Reversed letters with negated exponents.
  TwistWord inverse() const;
};

/// Parameters of the knot family: r >= 3 and s >= 2 are standing
/// assumptions, n ranges over all integers.
struct FamilyParams {
  Int r;
  Int s;
  Int n;

  FamilyParams(Int r, Int s, Int n);
};

/// The coefficient list [r, -s, n] naming the family member.
ContinuedFraction family_cf(const FamilyParams& p);

/// The curve whose homology class is m[a] + n[b] for m/n = evaluate(cf).
CurveClass curve_from_cf(const ContinuedFraction& cf);

/// Geometric intersection number |m1*n2 - n1*m2|. Symmetric, insensitive
/// to the sign choice of either class, zero exactly on equal classes.
Int intersection(const CurveClass& c1, const CurveClass& c2);

/// The class (sn+1, rsn+r+n) of the family knot.
CurveClass knot_class(const FamilyParams& p);

/// The twisting curve (s, rs+1) and the base curve (1, r).
CurveClass ktw_class(const Int& r, const Int& s);
CurveClass k0_class(const Int& r);

/// Homology action of the word: a letter (d, k) sends x to x + k<x,d>d,
/// with the intersection form calibrated to <a,b> = -1. Letters apply from
/// rightmost to leftmost; the result is canonicalized on output only.
CurveClass apply_twist_word(const TwistWord& w, const CurveClass& c);

/// The word realizing the family knot as the image of a, with zero-count
/// letters omitted (a zero-power twist is the identity).
TwistWord family_twist_word(const FamilyParams& p);

/// Componentwise integer identity (sn+1, rsn+r+n) = n(s, rs+1) + (1, r) on
/// raw, non-canonicalized pairs. Holds for every parameter choice; exposed
/// as a self-test.
bool twist_linearity_check(const FamilyParams& p);

}  // namespace cfknot
