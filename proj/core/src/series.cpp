#include "smw/series.hpp"

#include <algorithm>
#include <sstream>

namespace smw {

RationalSeries::RationalSeries(int order) : c_(std::max(order, 0) + 1, Rational(0)) {
  if (order < 0) throw UsageError("series order must be nonnegative");
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, int order)
    : c_(std::move(coeffs)) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  c_.resize(order + 1, Rational(0));
}

RationalSeries RationalSeries::constant(const Rational& c, int order) {
  RationalSeries s(order);
  s.c_[0] = c;
  return s;
}

RationalSeries RationalSeries::monomial(const Rational& c, int power, int order) {
  RationalSeries s(order);
  if (power <= order) s.c_[power] = c;
  return s;
}

RationalSeries RationalSeries::rational_function(const std::vector<Rational>& num,
                                                 const std::vector<Rational>& den, int order) {
  return RationalSeries(num, order) / RationalSeries(den, order);
}

RationalSeries RationalSeries::sqrt_one_minus_4t(int order) {
  RationalSeries s(order);
  BigInt central = 1;  // C(2m, m)
  for (int m = 0; m <= order; ++m) {
    if (m > 0) central = central * (2 * (2 * m - 1)) / m;
    s.c_[m] = -Rational(central) / Rational(2 * m - 1);
  }
  return s;
}

RationalSeries RationalSeries::truncate(int order) const {
  if (order > this->order()) throw UsageError("cannot extend a truncated series");
  return RationalSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

RationalSeries RationalSeries::inverse() const {
  if (c_[0] == 0) throw UsageError("series inverse needs a nonzero constant term");
  const int K = order();
  RationalSeries r(K);
  Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= K; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      if (c_[i] != 0) acc += c_[i] * r.c_[n - i];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

RationalSeries RationalSeries::shift_down(int k) const {
  if (k > order()) throw UsageError("shift exceeds series order");
  for (int i = 0; i < k; ++i)
    if (c_[i] != 0) throw UsageError("series is not divisible by x^" + std::to_string(k));
  return RationalSeries(std::vector<Rational>(c_.begin() + k, c_.end()), order() - k);
}

RationalSeries RationalSeries::shift_up(int k) const {
  std::vector<Rational> v(k, Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return RationalSeries(std::move(v), order() + k);
}

RationalSeries RationalSeries::compose(const RationalSeries& inner) const {
  if (inner.c_[0] != 0) throw UsageError("composition needs an inner series without constant term");
  const int K = std::min(order(), inner.order());
  RationalSeries in = inner.truncate(K);
  int valuation = 1;
  while (valuation <= K && in.c_[valuation] == 0) ++valuation;
  // terms beyond K / valuation vanish modulo x^{K+1}
  const int top = std::min(order(), K / valuation);
  RationalSeries acc = constant(c_[top], K);
  for (int m = top - 1; m >= 0; --m) {
    acc = acc * in;
    acc.c_[0] += c_[m];
  }
  return acc;
}

RationalSeries RationalSeries::scale_argument(const Rational& c) const {
  RationalSeries r = *this;
  Rational p = 1;
  for (auto& v : r.c_) {
    v *= p;
    p *= c;
  }
  return r;
}

RationalSeries RationalSeries::pow(unsigned e) const {
  RationalSeries r = constant(1, order());
  RationalSeries base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int K = std::min(a.order(), b.order());
  RationalSeries r(K);
  int lead_a = 0, lead_b = 0;
  while (lead_a <= K && a.c_[lead_a] == 0) ++lead_a;
  while (lead_b <= K && b.c_[lead_b] == 0) ++lead_b;
  for (int i = lead_a; i <= K; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = lead_b; i + j <= K; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

std::string to_string(const Quantity& q) {
  std::ostringstream os;
  os << (q.tilde ? "Nt" : "N") << '^' << q.h << '_' << q.a << "->" << q.b;
  return os.str();
}

std::string series_csv(const RationalSeries& s) {
  std::ostringstream os;
  os << "n,coefficient\n";
  for (int i = 0; i <= s.order(); ++i) os << i << ',' << to_string(s[i]) << '\n';
  return os.str();
}

BigInt ballot(int n, int h) {
  if (n < 0 || h < 0) throw UsageError("ballot needs n, h >= 0");
  if ((n + h) % 2 != 0 || h > n) return 0;
  int up = (n + h) / 2;
  BigInt binom = 1;
  for (int i = 1; i <= up; ++i) binom = binom * (n - up + i) / i;
  return binom * (h + 1) / (up + 1);
}

DyckCheck verify_dyck_identity(int order) {
  if (order < 0 || order > 4 * kDefaultSeriesCap) throw UsageError("order outside the series cap");
  DyckCheck res;
  const int W = order + 2;
  // N(X) = (1 - sqrt(1 - 4X^2)) / (2X^2) as a series in X
  RationalSeries s = RationalSeries::sqrt_one_minus_4t(W);
  RationalSeries x2 = RationalSeries::monomial(1, 2, W);
  RationalSeries root = s.compose(x2);
  RationalSeries num = RationalSeries::constant(1, W) - root;
  RationalSeries catalan = num.shift_down(2) * Rational(1, 2);
  RationalSeries power = catalan;  // N(X)^{h+1}
  for (int h = 0; h <= order; ++h) {
    RationalSeries term = power.shift_up(h).truncate(order);
    for (int n = 0; n <= order; ++n) {
      if (term[n] != Rational(ballot(n, h))) {
        res.ok = false;
        res.first_failing_n = n;
        res.first_failing_h = h;
        return res;
      }
    }
    power = (power * catalan);
  }
  return res;
}

}  // namespace smw
