#include <cfknot/curves.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <cfknot/errors.hpp>

namespace cfknot {

namespace {

// The intersection form on raw pairs, calibrated so that <a, b> = -1.
// This is the unique choice (up to a simultaneous flip with the twist
// direction) under which the family twist word lands on +(sn+1, rsn+r+n).
Int pairing(const Int& x1, const Int& x2, const Int& d1, const Int& d2) {
  return x2 * d1 - x1 * d2;
}

}  // namespace

CurveClass::CurveClass(Int m, Int n) : m_(std::move(m)), n_(std::move(n)) {
  if (m_ == 0 && n_ == 0) {
    throw PreconditionError("curve class (0, 0) is not a curve");
  }
  if (gcd(abs(m_), abs(n_)) != 1) {
    throw PreconditionError("curve class coefficients must be coprime");
  }
  if (n_ < 0 || (n_ == 0 && m_ < 0)) {
    m_ = -m_;
    n_ = -n_;
  }
}

CurveClass CurveClass::from_slope(const ProjectiveRational& q) {
  return CurveClass(q.num(), q.den());
}

ProjectiveRational CurveClass::slope() const {
  return ProjectiveRational(m_, n_);
}

std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
  return os << '(' << c.m() << ',' << c.n() << ')';
}

TwistWord TwistWord::inverse() const {
  TwistWord inv;
  inv.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    inv.letters.push_back({it->curve, -it->exponent});
  }
  return inv;
}

FamilyParams::FamilyParams(Int r_in, Int s_in, Int n_in)
    : r(std::move(r_in)), s(std::move(s_in)), n(std::move(n_in)) {
  if (r < 3) {
    throw PreconditionError("family parameter r must be at least 3");
  }
  if (s < 2) {
    throw PreconditionError("family parameter s must be at least 2");
  }
}

ContinuedFraction family_cf(const FamilyParams& p) {
  return {{p.r, -p.s, p.n}};
}

CurveClass curve_from_cf(const ContinuedFraction& cf) {
  return CurveClass::from_slope(evaluate(cf));
}

Int intersection(const CurveClass& c1, const CurveClass& c2) {
  return abs(c1.m() * c2.n() - c1.n() * c2.m());
}

CurveClass knot_class(const FamilyParams& p) {
  const Int m = p.s * p.n + 1;
  const Int n = p.r * p.s * p.n + p.r + p.n;
  // Coprime by construction: rsn+r+n = r(sn+1) + n and gcd(sn+1, n) = 1.
  if (gcd(abs(m), abs(n)) != 1) {
    throw std::logic_error("knot_class produced a non-primitive pair");
  }
  return CurveClass(m, n);
}

CurveClass ktw_class(const Int& r, const Int& s) {
  return CurveClass(s, r * s + 1);
}

CurveClass k0_class(const Int& r) {
  return CurveClass(1, r);
}

CurveClass apply_twist_word(const TwistWord& w, const CurveClass& c) {
  Int x1 = c.m();
  Int x2 = c.n();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->exponent == 0) {
      throw PreconditionError("twist word letters must have nonzero exponent");
    }
    const Int& d1 = it->curve.m();
    const Int& d2 = it->curve.n();
    const Int coeff = it->exponent * pairing(x1, x2, d1, d2);
    x1 += coeff * d1;
    x2 += coeff * d2;
  }
  return CurveClass(x1, x2);
}

TwistWord family_twist_word(const FamilyParams& p) {
  TwistWord w;
  w.letters.push_back({CurveClass::b(), -p.r});
  w.letters.push_back({CurveClass::a(), p.s});
  if (p.n != 0) {
    w.letters.push_back({CurveClass::b(), -p.n});
  }
  return w;
}

bool twist_linearity_check(const FamilyParams& p) {
  const Int lhs1 = p.s * p.n + 1;
  const Int lhs2 = p.r * p.s * p.n + p.r + p.n;
  const Int rhs1 = p.n * p.s + 1;
  const Int rhs2 = p.n * (p.r * p.s + 1) + p.r;
  return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace cfknot
