#include "smw/model.hpp"

#include <sstream>

namespace smw {

ModelSpec ModelSpec::s31(const Rational& lambda) {
  if (lambda < 0) throw UsageError("lambda must be nonnegative");
  ModelSpec m;
  m.family = Family::S31;
  if (lambda == 0) {
    m.lambda1 = 1;
    m.lambda2 = 0;
  } else {
    m.lambda1 = 0;
    m.lambda2 = lambda;
  }
  return m;
}

ModelSpec ModelSpec::s31_phase(const Rational& lambda1, const Rational& lambda2) {
  ModelSpec m;
  m.family = Family::S31;
  m.lambda1 = lambda1;
  m.lambda2 = lambda2;
  m.validate();
  return m;
}

ModelSpec ModelSpec::s21() {
  ModelSpec m;
  m.family = Family::S21;
  return m;
}

ModelSpec ModelSpec::s32_case1() {
  ModelSpec m;
  m.family = Family::S32Case1;
  return m;
}

ModelSpec ModelSpec::s32_case2(const Rational& mu) {
  ModelSpec m;
  m.family = Family::S32Case2;
  m.mu = mu;
  m.validate();
  return m;
}

Regime ModelSpec::lambda_regime() const {
  return lambda2 > 0 ? Regime::Positive : Regime::Zero;
}

Regime ModelSpec::mu_regime() const { return mu > 0 ? Regime::Positive : Regime::Zero; }

WalkRule ModelSpec::walk_rule() const {
  return family == Family::S31 && lambda2 > 0 ? WalkRule::Matched : WalkRule::Free;
}

void ModelSpec::validate() const {
  if (lambda1 < 0 || lambda2 < 0 || mu < 0) throw UsageError("weights must be nonnegative");
  if (family == Family::S31 && lambda1 > 0 && lambda2 > 0)
    throw UsageError("lambda1 > 0 and lambda2 > 0 together break frustration freeness");
}

std::string ModelSpec::tag() const {
  std::ostringstream os;
  os << to_string(family);
  switch (family) {
    case Family::S31:
      os << "-l1_" << to_string(lambda1) << "-l2_" << to_string(lambda2);
      break;
    case Family::S32Case2:
      os << "-mu_" << to_string(mu);
      break;
    default:
      break;
  }
  os << '-' << to_string(boundary) << '-' << to_string(topology);
  auto s = os.str();
  for (auto& c : s)
    if (c == '/') c = 'd';
  return s;
}

std::string ModelSpec::count_tag() const {
  switch (family) {
    case Family::S31:
      return walk_rule() == WalkRule::Matched ? "s31-lpos" : "s31-l0";
    default:
      return to_string(family);
  }
}

std::string to_string(Family f) {
  switch (f) {
    case Family::S21: return "s21";
    case Family::S31: return "s31";
    case Family::S32Case1: return "s32c1";
    default: return "s32c2";
  }
}

std::string to_string(Boundary b) {
  return b == Boundary::Original ? "original" : "corrected";
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Open: return "open";
    case Topology::ClosedEndpoints: return "closed-endpoints";
    default: return "ring";
  }
}

Family parse_family(const std::string& s) {
  if (s == "s21") return Family::S21;
  if (s == "s31") return Family::S31;
  if (s == "s32c1") return Family::S32Case1;
  if (s == "s32c2") return Family::S32Case2;
  throw UsageError("unknown model '" + s + "' (expected s21, s31, s32c1, s32c2)");
}

Boundary parse_boundary(const std::string& s) {
  if (s == "original") return Boundary::Original;
  if (s == "corrected") return Boundary::AddendumCorrected;
  throw UsageError("unknown boundary '" + s + "' (expected original, corrected)");
}

Topology parse_topology(const std::string& s) {
  if (s == "open") return Topology::Open;
  if (s == "closed-endpoints" || s == "endpoints") return Topology::ClosedEndpoints;
  if (s == "ring" || s == "closed") return Topology::ClosedRing;
  throw UsageError("unknown topology '" + s + "' (expected open, closed-endpoints, ring)");
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (dot != std::string::npos && slash == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      BigInt num(digits.empty() ? std::string("0") : digits);
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1));
      return Rational(num, den);
    }
    return Rational(s);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<EndLabel> end_labels(const ModelSpec& m) {
  if (m.family == Family::S21) return {{1, 0}, {2, 0}};
  if (m.walk_rule() == WalkRule::Matched) return {{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}};
  return {{1, 0}, {2, 0}, {3, 0}};
}

}  // namespace smw
