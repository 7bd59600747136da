#ifndef SCOPE_SCALAR_HPP
#define SCOPE_SCALAR_HPP

#include <string>

#ifdef SCOPE_SCALAR_DOUBLE
#include <cmath>
#include <sstream>
#else
#include <boost/multiprecision/cpp_int.hpp>
#endif

namespace scope {

#ifdef SCOPE_SCALAR_DOUBLE

using Scalar = double;

inline bool scalar_eq(const Scalar& a, const Scalar& b) {
  return std::fabs(a - b) <= 1e-9;
}

inline bool scalar_nonzero(const Scalar& a) { return std::fabs(a) > 1e-9; }

inline std::string scalar_str(const Scalar& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

#else

// Exact rationals; all categorical equalities in the test suites are
// checked with ==.
using Scalar = boost::multiprecision::cpp_rational;

inline bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

inline bool scalar_nonzero(const Scalar& a) { return a != 0; }

inline std::string scalar_str(const Scalar& a) { return a.str(); }

#endif

}  // namespace scope

#endif
