#include "smw/asymptotics.hpp"

namespace smw {

using boost::multiprecision::exp;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

Real x0() { return (sqrt(Real(2)) - 1) / 2; }

Real sigma() { return sqrt(Real(2)) * x0() / 9; }

namespace {

AsymptoticForm exact_geometric(const ModelSpec& m, const Quantity& q, Real prefactor, Real base) {
  AsymptoticForm f;
  f.model = m;
  f.quantity = q;
  f.prefactor = std::move(prefactor);
  f.base = std::move(base);
  f.power = 0;
  f.gaussian = 0;
  return f;
}

[[noreturn]] void no_form(const Quantity& q) {
  throw UsageError("no asymptotic form for " + to_string(q));
}

}  // namespace

AsymptoticForm asymptotic_form(const ModelSpec& m, const Quantity& q) {
  if (q.tilde && m.family != Family::S32Case2) no_form(q);
  const int code = q.h * 100 + q.a * 10 + q.b;
  const Real sqrt5 = sqrt(Real(5));

  if (m.family == Family::S21) {
    if (code == 11 || code == 112) return exact_geometric(m, q, Real(1) / 2, Real(2));
    if (code == 22) return exact_geometric(m, q, Real(1), Real(1));
    no_form(q);
  }
  if (m.walk_rule() == WalkRule::Matched) {
    const Real golden_sq = (3 + sqrt5) / 2;
    switch (code) {
      case 11:
      case 112: return exact_geometric(m, q, (sqrt5 + 1) / (4 * sqrt5), golden_sq);
      case 113:
      case 213: return exact_geometric(m, q, 1 / (2 * sqrt5), golden_sq);
      case 22:
      case 123: return exact_geometric(m, q, Real(1) / 2, Real(2));
      case 33: return exact_geometric(m, q, Real(1), Real(1));
    }
    no_form(q);
  }

  const bool balanced = m.family == Family::S32Case2;
  if (q.h == 0 && q.a == 3 && q.b == 3)
    return exact_geometric(m, q, Real(1), Real(m.colored() ? 2 : 1));
  if (q.a == 3 || (q.h == 0 && q.b == 3)) no_form(q);

  AsymptoticForm f;
  f.model = m;
  f.quantity = q;
  f.power = Real(-3) / 2;
  // prefactor numerators c: 27, 9, 3 (three-letter) and 9, 3, 1 (balanced)
  Real unit;
  if (balanced) {
    f.base = 1 / x0();
    unit = 1 / (pow(Real(2), Real(7) / 4) * pow(x0(), Real(3) / 2) * sqrt(pi()));
    f.gaussian = Real(9) / (4 * sqrt(Real(2)) * x0());
    f.half_power_of_two = true;
  } else {
    f.base = m.family == Family::S32Case1 ? 6 : 3;
    unit = sqrt(Real(3)) / (2 * sqrt(pi()));
    f.gaussian = Real(27) / 4;
  }
  const int big = balanced ? 9 : 27, mid = balanced ? 3 : 9, small = balanced ? 1 : 3;
  if (q.h == 0) {
    f.weight = HeightWeight::None;
    if (code == 11) f.prefactor = big * unit;
    else if (code == 22) f.prefactor = small * unit;
    else f.prefactor = mid * unit;
    return f;
  }
  switch (q.a * 10 + q.b) {
    case 21: f.weight = HeightWeight::Linear; f.prefactor = mid * unit; break;
    case 11: f.weight = HeightWeight::Linear; f.prefactor = big * unit; break;
    case 12: f.weight = HeightWeight::Mixed2; f.prefactor = mid * unit; break;
    case 22: f.weight = HeightWeight::Mixed2; f.prefactor = small * unit; break;
    case 23: f.weight = HeightWeight::Mixed4; f.prefactor = small * unit; break;
    case 13: f.weight = HeightWeight::Mixed4; f.prefactor = mid * unit; break;
    default: no_form(q);
  }
  return f;
}

Real asymptotic_value(const AsymptoticForm& f, int n, int h) {
  if (n < 1) throw UsageError("asymptotic forms need n >= 1");
  Real rn(n);
  Real v = f.prefactor * pow(f.base, rn);
  if (f.power != 0) v *= pow(rn, f.power);
  auto gauss = [&](int m) { return exp(-f.gaussian * Real(m) * Real(m) / rn); };
  switch (f.weight) {
    case HeightWeight::None: break;
    case HeightWeight::Linear: v *= (h + 1) * gauss(h + 1); break;
    case HeightWeight::Mixed2: v *= 2 * h * gauss(h) + (h + 1) * gauss(h + 1); break;
    case HeightWeight::Mixed4: v *= 4 * h * gauss(h) - (h + 1) * gauss(h + 1); break;
  }
  if (f.half_power_of_two && h > 0) v *= pow(Real(2), Real(h) / 2);
  if (f.quantity.tilde) v /= pow(Real(2), Real(h));
  return v;
}

Real asymptotic_value(const AsymptoticForm& f, int n) { return asymptotic_value(f, n, f.quantity.h); }

std::vector<RatioRow> asymptotic_ratio_scan(CountTable& table, const Quantity& q,
                                            const std::vector<int>& ns) {
  auto form = asymptotic_form(table.model(), q);
  table.prefetch(q.a, ns, q.tilde);
  std::vector<RatioRow> rows;
  for (int n : ns) {
    RatioRow r;
    r.n = n;
    r.exact = table.count(n, q.h, q.a, q.b, q.tilde);
    r.asymptotic = asymptotic_value(form, n);
    r.ratio = to_real(r.exact) / r.asymptotic;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace smw
