#include "smw/series.hpp"

namespace smw {

namespace {

using R = Rational;
using S = RationalSeries;

constexpr int kMargin = 16;

S poly(std::initializer_list<int> c, int order) {
  std::vector<R> v;
  for (int x : c) v.emplace_back(x);
  return S(std::move(v), order);
}

S ratio(std::initializer_list<int> num, std::initializer_list<int> den, int order) {
  return poly(num, order) / poly(den, order);
}

// Generating functions of walks that return to height zero, plus the
// ingredients of the nonzero-height forms, for one of the two alphabets.
struct ZeroHeight {
  S n11, n22, n21, n33;
  S g;       // per-height factor
  S left;    // prefactor of N^{(h)}_{1->1} before x^{-3}
  int colored = 0;
};

// Uncolored three-letter walks, free rule.
ZeroHeight s31_free(int W) {
  ZeroHeight z;
  // X = x^3 Y, Y = 1/((1-x)(1-2x-2x^2))
  S y = S::constant(1, W) / (poly({1, -1}, W) * poly({1, -2, -2}, W));
  S X = y.shift_up(3).truncate(W);
  S root = S::sqrt_one_minus_4t(W).compose(X * X);
  S one = S::constant(1, W);
  // N11 = (1-2x)/(2 x^3 X) [1 - root] = (1-2x)(1-root) / (2 x^6 Y)
  z.n11 = (poly({1, -2}, W) * (one - root) / y).shift_down(6) * R(1, 2);
  // N21 = (1 - root) / (2 x X) = (1 - root) / (2 x^4 Y)
  z.n21 = ((one - root) / y).shift_down(4) * R(1, 2);
  // N22 = (1-x)/(2x^2(1-2x)) [1-2x - (1-2x-2x^2) root]
  S bracket = poly({1, -2}, W) - poly({1, -2, -2}, W) * root;
  z.n22 = (poly({1, -1}, W) * bracket / poly({1, -2}, W)).shift_down(2) * R(1, 2);
  z.n33 = ratio({1}, {1, -1}, W);
  z.g = (z.n11 / poly({1, -2}, W)).shift_up(3);
  return z;
}

// Balanced colored walks, full counts. X = sqrt(2) Z with
// Z = 2x^3 / ((1-2x)(1-4x-2x^2)) so only Z^2 and 1/Z appear.
ZeroHeight s32_balanced(int W) {
  ZeroHeight z;
  S q = S::constant(1, W) / (poly({1, -2}, W) * poly({1, -4, -2}, W));  // Z = 2 x^3 q
  S Z = (q * R(2)).shift_up(3).truncate(W);
  S root = S::sqrt_one_minus_4t(W).compose(Z * Z * R(2));
  S one = S::constant(1, W);
  // N11 = (1-4x+2x^2)/(4 sqrt2 x^3 X)[1-root] = (1-4x+2x^2)(1-root)/(16 x^6 q)
  z.n11 = (poly({1, -4, 2}, W) * (one - root) / q).shift_down(6) * R(1, 16);
  // N21 = (1-root)/(2 sqrt2 x X) = (1-root)/(8 x^4 q)
  z.n21 = ((one - root) / q).shift_down(4) * R(1, 8);
  // N22 = (1-2x)/(4x^2(1-4x+2x^2)) [1-4x+2x^2 - (1-4x-2x^2) root]
  S bracket = poly({1, -4, 2}, W) - poly({1, -4, -2}, W) * root;
  z.n22 = (poly({1, -2}, W) * bracket / poly({1, -4, 2}, W)).shift_down(2) * R(1, 4);
  z.n33 = ratio({1}, {1, -2}, W);
  z.g = (z.n11 / poly({1, -4, 2}, W)).shift_up(3) * R(4);
  z.colored = 1;
  return z;
}

S zero_series(int W) { return S(W); }

S free_rule_form(const ZeroHeight& z, const Quantity& q, int W) {
  const int h = q.h;
  const bool c = z.colored != 0;
  // coefficients that differ between the two alphabets
  S lead = c ? poly({1, -4, 2}, W) : poly({1, -2}, W);  // 1-2x or 1-4x+2x^2
  R two = c ? R(2) : R(1);
  if (h == 0) {
    if (q.a == 3 || q.b == 3) return q.a == 3 && q.b == 3 ? z.n33 : zero_series(W);
    if (q.a == 1 && q.b == 1) return z.n11;
    if (q.a == 2 && q.b == 2) return z.n22;
    return z.n21;
  }
  if (q.a == 3) return zero_series(W);
  S gh = z.g.pow(h);
  S tail = c ? (poly({1, -2}, W) - z.n22.shift_up(2) * R(2)).truncate(W)
             : (poly({1, -1}, W) - z.n22.shift_up(2)).truncate(W);
  switch (q.a * 10 + q.b) {
    case 21:  // G^{h+1} / (2x)
      return (gh * z.g).shift_down(1) * (1 / two);
    case 11:  // lead/(4x^3) G^{h+1}
      return (lead * gh * z.g).shift_down(3) * (1 / (two * two));
    case 22:
      return gh * z.n22;
    case 12:  // lead/(2x^2) G^h N22
      return (lead * gh * z.n22).shift_down(2) * (1 / two);
    case 23:  // G^h [tail]/(2x^2)
      return (gh * tail).shift_down(2) * (1 / two);
    case 13: {  // -delta/x + lead/(4x^4) G^h tail
      S num = lead * gh * tail * (1 / (two * two));
      if (h == 1) num -= S::monomial(1, 3, W);
      return num.shift_down(4);
    }
  }
  throw UsageError("unknown quantity " + to_string(q));
}

S matched_form(const Quantity& q, int W) {
  // D = 1 - 4x + 3x^2 + 2x^3 - x^4
  std::initializer_list<int> d = {1, -4, 3, 2, -1};
  switch (q.h * 100 + q.a * 10 + q.b) {
    case 11: return ratio({1, -3, 2}, d, W);
    case 22: return ratio({1, -1}, {1, -2}, W);
    case 33: return ratio({1}, {1, -1}, W);
    case 112: return ratio({0, 1, -2, 1}, d, W);
    case 113: return ratio({0, 1, -2}, d, W);
    case 213: return ratio({0, 0, 1, -1}, d, W);
    case 123: return ratio({0, 1}, {1, -2}, W);
    default: return zero_series(W);
  }
}

S s21_form(const Quantity& q, int W) {
  switch (q.h * 100 + q.a * 10 + q.b) {
    case 11: return ratio({1, -1}, {1, -2}, W);
    case 22: return ratio({1}, {1, -1}, W);
    case 112: return ratio({0, 1}, {1, -2}, W);
    default: return zero_series(W);
  }
}

}  // namespace

RationalSeries closed_form(const ModelSpec& m, const Quantity& q, int order) {
  if (order < 0 || order > kDefaultSeriesCap * 10) throw UsageError("series order outside the cap");
  if (q.h < 0 || q.a < 1 || q.a > m.k() || q.b < 1 || q.b > m.k())
    throw UsageError("unknown quantity " + to_string(q));
  if (q.tilde && m.family != Family::S32Case2)
    throw UsageError("tilde counts exist for the balanced colored model only");
  const int W = order + kMargin;
  S out;
  switch (m.family) {
    case Family::S21:
      out = s21_form(q, W);
      break;
    case Family::S31:
      out = m.walk_rule() == WalkRule::Matched ? matched_form(q, W)
                                                : free_rule_form(s31_free(W), q, W);
      break;
    case Family::S32Case1:
      out = free_rule_form(s31_free(W), q, W).scale_argument(2);
      break;
    case Family::S32Case2: {
      out = free_rule_form(s32_balanced(W), q, W);
      if (q.tilde) out *= R(1) / R(BigInt(1) << q.h);
      break;
    }
  }
  return out.truncate(order);
}

}  // namespace smw
