#pragma once

#include "smw/model.hpp"

#include <string>
#include <vector>

namespace smw {

// Truncated power series c_0 + c_1 x + ... + c_K x^K, exact modulo x^{K+1}.
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(int order);
  RationalSeries(std::vector<Rational> coeffs, int order);

  static RationalSeries constant(const Rational& c, int order);
  static RationalSeries monomial(const Rational& c, int power, int order);
  // Series of the rational function num/den, both given low degree first.
  static RationalSeries rational_function(const std::vector<Rational>& num,
                                          const std::vector<Rational>& den, int order);
  // sqrt(1 - 4t) = sum_m -C(2m,m)/(2m-1) t^m
  static RationalSeries sqrt_one_minus_4t(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }
  const std::vector<Rational>& coefficients() const { return c_; }

  RationalSeries truncate(int order) const;
  RationalSeries inverse() const;
  // Division by x^k; the first k coefficients must vanish.
  RationalSeries shift_down(int k) const;
  RationalSeries shift_up(int k) const;
  // this(inner(x)); inner must have zero constant term. Horner scheme.
  RationalSeries compose(const RationalSeries& inner) const;
  // this(c x)
  RationalSeries scale_argument(const Rational& c) const;
  RationalSeries pow(unsigned e) const;

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  RationalSeries& operator*=(const Rational& s);

  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(RationalSeries a, const Rational& s) { return a *= s; }
  friend RationalSeries operator*(const Rational& s, RationalSeries a) { return a *= s; }
  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    return a * b.inverse();
  }
  bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

inline constexpr int kDefaultSeriesCap = 200;

// Which count a closed form describes: N^{(h)}_{a->b}, or the tilde count.
struct Quantity {
  int h = 0;
  int a = 1;
  int b = 1;
  bool tilde = false;
};

std::string to_string(const Quantity& q);

RationalSeries closed_form(const ModelSpec& m, const Quantity& q, int order);

std::string series_csv(const RationalSeries& s);

// Dyck-identity check: X^h N(X)^{h+1} against the ballot numbers.
struct DyckCheck {
  bool ok = true;
  int first_failing_n = -1;
  int first_failing_h = -1;
};
BigInt ballot(int n, int h);
DyckCheck verify_dyck_identity(int order);

}  // namespace smw
