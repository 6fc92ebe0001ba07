#include <cfknot/integer.hpp>

namespace cfknot {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  const Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  return -floor_div(-a, b);
}

}  // namespace cfknot
