#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace smw {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

// Euler-Mascheroni constant to 60 digits.
inline const char* const kEulerGamma =
    "0.577215664901532860606512090082402431042159335939923598805767";

// Sets the default mpfr precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real euler_gamma();
Real pi();
Real to_real(const Rational& q);
Real to_real(const BigInt& z);
std::string to_string(const Rational& q);
std::string format_real(const Real& x, int digits = 20);

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smw
