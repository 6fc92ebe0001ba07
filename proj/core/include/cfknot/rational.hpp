#pragma once

#include <iosfwd>
#include <string>

#include <cfknot/integer.hpp>

namespace cfknot {

/// A reduced fraction m/n in Q ∪ {1/0}.
///
/// Canonical form: gcd(|m|, |n|) = 1 and either n > 0 or (m, n) = (1, 0),
/// so the point at infinity has exactly one representative and equality is
/// structural. The pair (0, 0) is rejected.
class ProjectiveRational {
 public:
  ProjectiveRational() : num_(0), den_(1) {}
  ProjectiveRational(Int num, Int den);

  static ProjectiveRational infinity() { return ProjectiveRational(1, 0); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0; }

  /// Rendered as "m/n", e.g. "-1/3", "3/1", "1/0".
  std::string str() const;

  friend bool operator==(const ProjectiveRational&,
                         const ProjectiveRational&) = default;

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const ProjectiveRational& q);

}  // namespace cfknot
