#include "smw/entangle.hpp"

#include "smw/asymptotics.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace smw {

std::string to_string(EntropyMethod m) { return m == EntropyMethod::Counts ? "counts" : "density-matrix"; }

int height_cutoff(int n) { return static_cast<int>(std::ceil(12 * std::sqrt(static_cast<double>(n)))); }

SchmidtSpectrum schmidt_from_counts(CountTable& table, int n, int a, int c) {
  const auto& m = table.model();
  if (n < 1) throw UsageError("half-chain length must be at least 1");
  const bool tilde = m.family == Family::S32Case2;
  table.prefetch(a, {n, 2 * n}, false, true);
  if (tilde) table.prefetch(a, {n}, true);
  table.prefetch(c, {n}, tilde);
  const auto& left = table.row(n, a, tilde);
  const auto& right = table.row(n, c, tilde);
  BigInt norm = table.count(2 * n, 0, a, c, false);
  if (norm == 0) throw UsageError("no walks in sector " + std::to_string(a) + std::to_string(c));

  SchmidtSpectrum s;
  s.model = m;
  s.n = n;
  s.a = a;
  s.c = c;
  s.cutoff = std::min(std::min(left.max_h(), right.max_h()), height_cutoff(n));
  s.total = 0;
  s.truncated_mass = 0;
  const int hmax = std::min(left.max_h(), right.max_h());
  for (int h = 0; h <= hmax; ++h)
    for (const auto& lab : left.labels) {
      BigInt w = left.at_label(h, lab) * right.at_label(h, lab);
      if (w == 0) continue;
      Rational p(w, norm);
      int lm = tilde ? h : 0;
      Rational mass = p * Rational(BigInt(1) << lm);
      s.total += mass;
      if (h > s.cutoff)
        s.truncated_mass += mass;
      else
        s.entries.push_back({h, lab, p, lm});
    }
  if (s.truncated_mass >= Rational(BigInt(1), boost::multiprecision::pow(BigInt(10), 30)))
    throw std::logic_error("height cutoff drops more than 1e-30 of the Schmidt mass");
  return s;
}

Real entropy(const SchmidtSpectrum& s) {
  Real S = 0;
  for (const auto& e : s.entries) {
    Real p = to_real(e.p);
    S -= boost::multiprecision::ldexp(p * boost::multiprecision::log(p), e.log2_mult);
  }
  return S;
}

EntropyPoint entropy_from_counts(CountTable& table, int n, int a, int c) {
  return {n, a, c, entropy(schmidt_from_counts(table, n, a, c)), EntropyMethod::Counts};
}

StateEntropy entropy_from_state(const Hamiltonian& h, const GroundClass& g, int cut) {
  const auto& basis = h.basis();
  const int n = basis.n();
  StateEntropy out;
  if (cut < 0) cut = n / 2;
  out.midpoint = 2 * cut == n;
  if (cut < 1 || cut >= n) throw UsageError("cut must lie strictly inside the chain");
  std::map<std::vector<int>, int> left_id, right_id;
  std::vector<std::pair<int, int>> entries;
  for (std::size_t s : g.members) {
    auto w = basis.walk(basis.code(s));
    std::vector<int> l, r;
    for (int j = 0; j < n; ++j) (j < cut ? l : r).push_back(basis.element_id(w.steps[j]));
    int li = left_id.emplace(l, static_cast<int>(left_id.size())).first->second;
    int ri = right_id.emplace(r, static_cast<int>(right_id.size())).first->second;
    entries.push_back({li, ri});
  }
  const double amp2 = 1.0 / static_cast<double>(g.members.size());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(left_id.size(), right_id.size());
  for (auto [l, r] : entries) mat(l, r) = std::sqrt(amp2);
  Eigen::MatrixXd rho = mat * mat.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
  double S = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()[i];
    if (ev > 1e-300) S -= ev * std::log(ev);
  }
  out.S = S;
  out.left_states = left_id.size();
  return out;
}

Real log_law_constant() {
  using boost::multiprecision::log;
  return log(2 * pi() / 3) / 2 + euler_gamma() - Real(1) / 2;
}

Real sqrt_law_leading() {
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  return 2 * log(Real(2)) * sqrt(2 * sigma() / pi());
}

Real lambda_positive_constant() {
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  Real r5 = sqrt(Real(5));
  return (-(r5 + 1) * log(r5 + 1) - (r5 - 1) * log(r5 - 1) + 2 * r5 * log(4 * r5)) / (2 * r5);
}

FitRegime fit_regime(const ModelSpec& m) {
  if (m.family == Family::S32Case2 && m.mu > 0) return FitRegime::Sqrt;
  if (m.family == Family::S21 || m.walk_rule() == WalkRule::Matched) return FitRegime::Constant;
  return FitRegime::Log;
}

Real asymptotic_entropy(const ModelSpec& m, int n, int a, int c) {
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  if (n < 1) throw UsageError("n must be positive");
  if (a == 3 && c == 3) return 0;
  const Real half_log = log(Real(n)) / 2;
  switch (m.family) {
    case Family::S21:
      if (a == 1 && c == 1) return log(Real(2));
      break;
    case Family::S31:
      if (m.walk_rule() == WalkRule::Matched) {
        if (a == 1 && c == 1) return lambda_positive_constant();
        if (a == 2 && c == 2) return log(Real(2));
        break;
      }
      if (a != 3 && c != 3) return half_log + log_law_constant();
      break;
    case Family::S32Case1:
      if (a != 3 && c != 3) return half_log + log_law_constant();
      break;
    case Family::S32Case2:
      if (m.mu == 0) break;
      if (a != 3 && c != 3) {
        Real s = sigma();
        return 2 * log(Real(2)) * sqrt(2 * s * n / pi()) + half_log + log(2 * pi() * s) / 2 + euler_gamma() -
               Real(1) / 2 + log(3 / boost::multiprecision::cbrt(Real(2)));
      }
      break;
  }
  throw UsageError("no closed-form entropy for sector " + std::to_string(a) + std::to_string(c) + " of " +
                   m.tag());
}

FitReport entropy_scan_and_fit(CountTable& table, int a, int c, const std::vector<int>& ns) {
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  if (ns.size() < 2) throw UsageError("fit needs at least two grid points");
  FitReport f;
  f.regime = fit_regime(table.model());
  for (int n : ns) f.points.push_back(entropy_from_counts(table, n, a, c));

  auto y = [&](const EntropyPoint& p) -> Real {
    Real v = p.S;
    if (f.regime != FitRegime::Constant) v -= log(Real(p.n)) / 2;
    if (f.regime == FitRegime::Sqrt) v /= sqrt(Real(p.n));
    return v;
  };
  const auto& p1 = f.points[f.points.size() - 2];
  const auto& p2 = f.points.back();
  Real s1 = sqrt(Real(p1.n)), s2 = sqrt(Real(p2.n));
  Real y1 = y(p1), y2 = y(p2);
  Real limit = (y2 * s2 - y1 * s1) / (s2 - s1);
  Real slope = (y1 - limit) * s1;
  for (const auto& p : f.points) f.residuals.push_back(y(p) - (limit + slope / sqrt(Real(p.n))));
  switch (f.regime) {
    case FitRegime::Log:
      f.leading = Real(1) / 2;
      f.constant = limit;
      break;
    case FitRegime::Sqrt:
      f.leading = limit;
      f.constant = p2.S - limit * s2 - log(Real(p2.n)) / 2;
      break;
    case FitRegime::Constant:
      f.leading = 0;
      f.constant = limit;
      break;
  }
  return f;
}

std::string fit_json(const FitReport& f) {
  nlohmann::ordered_json j;
  j["regime"] = f.regime == FitRegime::Log ? "log" : f.regime == FitRegime::Sqrt ? "sqrt" : "constant";
  j["leading"] = format_real(f.leading);
  j["constant"] = format_real(f.constant);
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.points.size(); ++i)
    pts.push_back({{"n", f.points[i].n}, {"S", format_real(f.points[i].S)},
                   {"residual", format_real(f.residuals[i])}});
  return j.dump(2);
}

std::string entropy_csv(const ModelSpec& m, const std::vector<EntropyPoint>& pts) {
  std::ostringstream os;
  os << "model,sector,n,S,method\n";
  for (const auto& p : pts)
    os << m.tag() << ',' << p.a << p.c << ',' << p.n << ',' << format_real(p.S) << ',' << to_string(p.method)
       << '\n';
  return os.str();
}

}  // namespace smw
