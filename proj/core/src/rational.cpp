#include <cfknot/rational.hpp>

#include <ostream>
#include <sstream>
#include <utility>

#include <cfknot/errors.hpp>

namespace cfknot {

ProjectiveRational::ProjectiveRational(Int num, Int den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) {
    throw PreconditionError("projective rational 0/0 is undefined");
  }
  const Int g = gcd(abs(num_), abs(den_));
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (den_ < 0 || (den_ == 0 && num_ < 0)) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::string ProjectiveRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProjectiveRational& q) {
  return os << q.num() << '/' << q.den();
}

}  // namespace cfknot
