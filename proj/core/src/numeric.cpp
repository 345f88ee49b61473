#include "smw/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace smw {

namespace {
const bool kPrecisionSet = [] {
  Real::default_precision(kDefaultDigits);
  return true;
}();
}  // namespace

Real euler_gamma() { return Real(kEulerGamma); }

Real pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

Real to_real(const BigInt& z) { return Real(z); }

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace smw
