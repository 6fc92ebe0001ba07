#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cfknot {

/// Arbitrary-precision signed integer; coefficients such as rsn+r+n grow
/// without bound in parameter scans, so nothing here is fixed-width.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// floor(a / b) for b != 0 (cpp_int division truncates toward zero).
Int floor_div(const Int& a, const Int& b);

/// ceil(a / b) for b != 0.
Int ceil_div(const Int& a, const Int& b);

}  // namespace cfknot
