#include "smw/verify.hpp"

#include "smw/asymptotics.hpp"
#include "smw/classes.hpp"
#include "smw/entangle.hpp"
#include "smw/kernel.hpp"
#include "smw/series.hpp"
#include "smw/walks.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace smw::verify {

Suite parse_suite(const std::string& s) {
  if (s == "smoke") return Suite::Smoke;
  if (s == "full") return Suite::Full;
  throw UsageError("unknown suite '" + s + "' (expected smoke, full)");
}

std::string to_string(Suite s) { return s == Suite::Smoke ? "smoke" : "full"; }

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string counterexample;

  void fail(const std::string& what) {
    if (pass) counterexample = what;
    pass = false;
  }
};

struct Labeled {
  std::string name;
  ModelSpec model;
};

std::vector<Labeled> counting_models() {
  return {{"s31 lambda=0", ModelSpec::s31(0)},
          {"s31 lambda>0", ModelSpec::s31(1)},
          {"s21", ModelSpec::s21()},
          {"s32 case 1", ModelSpec::s32_case1()},
          {"s32 case 2", ModelSpec::s32_case2(1)}};
}

bool full(const Config& c) { return c.suite == Suite::Full; }

void note(const Config& c, const std::string& s) {
  if (c.note) c.note(s);
}

std::string str(const Real& x, int digits = 10) { return format_real(x, digits); }

void load(Config& cfg, CountTable& t) {
  if (cfg.cache) cfg.cache->load(t);
}

void save(Config& cfg, CountTable& t) {
  if (cfg.cache) cfg.cache->save(t);
}

// 1 ---------------------------------------------------------------------

Outcome triple_agreement(Config& cfg) {
  Outcome o;
  const int N = full(cfg) ? 10 : 7;
  std::size_t compared = 0;
  for (const auto& lm : counting_models()) {
    std::vector<bool> modes{false};
    if (lm.model.family == Family::S32Case2) modes.push_back(true);
    for (bool tilde : modes) {
      note(cfg, lm.name + (tilde ? " (tilde)" : ""));
      RecursionCounter rec(lm.model, tilde);
      std::map<std::tuple<int, int, int>, RationalSeries> series;
      auto coefficient = [&](int h, int a, int b, int n) {
        auto key = std::make_tuple(h, a, b);
        auto it = series.find(key);
        if (it == series.end()) it = series.emplace(key, closed_form(lm.model, {h, a, b, tilde}, N)).first;
        return it->second[n];
      };
      std::vector<int> lengths;
      for (int n = 0; n <= N; ++n) lengths.push_back(n);
      for (int a = 1; a <= lm.model.k(); ++a) {
        auto rows = count_rows(lm.model, a, lengths, tilde);
        for (int n = 0; n <= N; ++n) {
          std::map<std::pair<int, int>, BigInt> oracle;
          int oracle_h = 0;
          for (const auto& [key, v] : enumerate_table(lm.model, n, a, tilde, N)) {
            oracle[{key.first, key.second.index}] += v;
            oracle_h = std::max(oracle_h, key.first);
          }
          const auto& row = rows[n];
          int hmax = std::max({oracle_h, row.max_h(), max_height_bound(lm.model, n)});
          for (int h = 0; h <= hmax; ++h)
            for (int b = 1; b <= lm.model.k(); ++b) {
              BigInt en = oracle.count({h, b}) ? oracle[{h, b}] : BigInt(0);
              BigInt dp = row.at(h, b);
              BigInt rc = rec.count(n, h, a, b);
              Rational cf = coefficient(h, a, b, n);
              ++compared;
              if (en != dp || dp != rc || Rational(dp) != cf) {
                std::ostringstream os;
                os << lm.name << (tilde ? " tilde" : "") << " N^" << h << "_{" << n << "," << a << "->" << b
                   << "}: enumeration " << en << ", dp " << dp << ", recursion " << rc << ", series "
                   << smw::to_string(cf);
                o.fail(os.str());
              }
            }
        }
      }
    }
  }
  o.detail = std::to_string(compared) + " (model, n, h, a, b) entries, n <= " + std::to_string(N);
  return o;
}

// 2 ---------------------------------------------------------------------

Outcome spot_values(Config& cfg) {
  Outcome o;
  int checks = 0;
  auto expect = [&](const std::string& what, const BigInt& got, const BigInt& want) {
    ++checks;
    if (got != want) o.fail(what + " = " + got.str() + ", expected " + want.str());
  };
  auto s31 = ModelSpec::s31(0);
  CountTable t31(s31);
  expect("N_{3,1->2}", t31.count(3, 0, 1, 2), 3);
  expect("N^1_{3,1->2}", t31.count(3, 1, 1, 2), 6);
  expect("N_{2,1->1}", t31.count(2, 0, 1, 1), 3);
  expect("|P_{3,1->2}|", BigInt(enumerate_walks(s31, 3, 0, 1, 2).size()), 3);
  for (int n = 0; n <= 40; ++n) expect("N_{" + std::to_string(n) + ",3->3}", t31.count(n, 0, 3, 3), 1);
  CountTable t21(ModelSpec::s21());
  for (int n = 1; n <= 40; ++n)
    expect("s21 N_{" + std::to_string(n) + ",1->1}", t21.count(n, 0, 1, 1), BigInt(1) << (n - 1));
  CountTable t2(ModelSpec::s32_case2(1));
  expect("s32c2 N^2_{4,1->2}", t2.count(4, 2, 1, 2), 8);
  expect("s32c2 tilde N^2_{4,1->2}", t2.count(4, 2, 1, 2, true), 2);
  expect("s32c2 |P^2_{4,1->2}|", BigInt(enumerate_walks(ModelSpec::s32_case2(1), 4, 2, 1, 2).size()), 8);
  expect("s32c2 tilde walks", BigInt(enumerate_walks(ModelSpec::s32_case2(1), 4, 2, 1, 2, true).size()), 2);
  CountTable t1(ModelSpec::s32_case1());
  for (int n = 0; n <= 10; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int h = 0; h <= n; ++h)
        for (int b = 1; b <= 3; ++b)
          expect("s32c1 N^" + std::to_string(h) + "_{" + std::to_string(n) + "," + std::to_string(a) + "->" +
                     std::to_string(b) + "}",
                 t1.count(n, h, a, b), t31.count(n, h, a, b) << n);
  o.detail = std::to_string(checks) + " values";
  return o;
}

// 3 ---------------------------------------------------------------------

Outcome dyck(Config&) {
  Outcome o;
  auto r = verify_dyck_identity(40);
  if (!r.ok)
    o.fail("first mismatch at n=" + std::to_string(r.first_failing_n) + " h=" + std::to_string(r.first_failing_h));
  for (int n = 0; n <= 40; ++n)
    for (int h = 0; h <= 40; ++h)
      if ((n + h) % 2 && ballot(n, h) != 0) o.fail("ballot parity at n=" + std::to_string(n));
  o.detail = "n, h <= 40";
  return o;
}

// 4 ---------------------------------------------------------------------

Outcome composition(Config& cfg) {
  Outcome o;
  int checks = 0;
  for (const auto& lm : counting_models()) {
    CountTable t(lm.model);
    for (int n = 1; n <= 10; ++n)
      for (int a = 1; a <= lm.model.k(); ++a)
        for (int c = 1; c <= lm.model.k(); ++c) {
          auto r = composition_check(t, n, a, c);
          ++checks;
          if (!r.holds)
            o.fail(lm.name + " n=" + std::to_string(n) + " " + std::to_string(a) + std::to_string(c) + ": " +
                   r.lhs.str() + " != " + r.rhs.str());
        }
  }
  o.detail = std::to_string(checks) + " (model, n, a, c), n <= 10";
  return o;
}

// 5 ---------------------------------------------------------------------

struct GsdCase {
  std::string name;
  ModelSpec model;
  std::size_t expected;
  int n_max_full, n_max_smoke;
};

std::vector<GsdCase> gsd_cases() {
  auto ring = ModelSpec::s31(0);
  ring.topology = Topology::ClosedRing;
  return {{"s31 lambda=0", ModelSpec::s31(0), 5, 12, 7},
          {"s31 lambda>0", ModelSpec::s31(1), 3, 12, 7},
          {"s21", ModelSpec::s21(), 2, 12, 8},
          {"s32 case 1", ModelSpec::s32_case1(), 5, 7, 5},
          {"s32 case 2", ModelSpec::s32_case2(1), 5, 7, 5},
          {"s31 ring", ring, 2, 12, 7}};
}

Outcome gsd_table(Config& cfg) {
  Outcome o;
  std::ostringstream detail;
  for (const auto& gc : gsd_cases()) {
    int nmax = full(cfg) ? gc.n_max_full : gc.n_max_smoke;
    std::vector<std::string> row;
    for (int n = 4; n <= nmax; ++n) {
      Hamiltonian h(gc.model, n);
      auto k = exact_kernel(h);
      auto cls = ground_classes(h);
      std::string at = gc.name + " n=" + std::to_string(n);
      if (k.dimension != gc.expected) o.fail(at + ": kernel " + std::to_string(k.dimension));
      if (cls.surviving.size() != k.dimension)
        o.fail(at + ": " + std::to_string(cls.surviving.size()) + " classes vs kernel " +
               std::to_string(k.dimension));
      if (h.basis().size() <= 20000) {
        auto fk = float_kernel(h.numeric());
        if (fk.ambiguous || fk.dimension != k.dimension)
          o.fail(at + ": float kernel " + std::to_string(fk.dimension) + (fk.ambiguous ? " (ambiguous)" : ""));
      }
      row.push_back(std::to_string(k.dimension));
    }
    note(cfg, gc.name + " n=4.." + std::to_string(nmax));
    detail << gc.name << " [";
    for (std::size_t i = 0; i < row.size(); ++i) detail << (i ? " " : "") << row[i];
    detail << "] ";
  }

  // link representation with the disconnected penalty
  struct LinkCase {
    ModelSpec m;
    int n_max;
    std::size_t expected;
  };
  std::vector<LinkCase> links{{ModelSpec::s31(0), full(cfg) ? 6 : 5, 5},
                              {ModelSpec::s31(1), full(cfg) ? 6 : 5, 3},
                              {ModelSpec::s21(), 7, 2},
                              {ModelSpec::s32_case2(1), full(cfg) ? 4 : 3, 0}};
  for (const auto& lc : links)
    for (int n = 2; n <= lc.n_max; ++n) {
      HamiltonianOptions lo;
      lo.rep = Representation::Link;
      auto kl = exact_kernel(Hamiltonian(lc.m, n, lo)).dimension;
      auto kr = exact_kernel(Hamiltonian(lc.m, n)).dimension;
      if (kl != kr) o.fail(lc.m.tag() + " n=" + std::to_string(n) + ": link " + std::to_string(kl) + " reduced " +
                           std::to_string(kr));
    }
  detail << "| link = reduced up to n=" << (full(cfg) ? 6 : 5);

  // boundary perturbation at site 0 lifts {11} and {12}
  HamiltonianOptions po;
  po.site0_penalty = true;
  auto kp = exact_kernel(Hamiltonian(ModelSpec::s31(0), 6, po)).dimension;
  if (kp != 3) o.fail("site-0 perturbation: GSD " + std::to_string(kp) + ", expected 3");
  detail << " | perturbed " << kp;
  o.detail = detail.str();
  return o;
}

// 6 ---------------------------------------------------------------------

Outcome frustration_free(Config& cfg) {
  Outcome o;
  std::vector<Labeled> models = counting_models();
  auto orig = ModelSpec::s31(0);
  orig.boundary = Boundary::Original;
  models.push_back({"s31 original boundary", orig});
  models.push_back({"s31 phase II", ModelSpec::s31_phase(0, 0)});
  models.push_back({"s32 mu=0", ModelSpec::s32_case2(0)});
  auto ring = ModelSpec::s31(0);
  ring.topology = Topology::ClosedRing;
  models.push_back({"s31 ring", ring});
  auto ends = ModelSpec::s31(0);
  ends.topology = Topology::ClosedEndpoints;
  models.push_back({"s31 endpoints", ends});

  int states = 0, blocks = 0;
  for (const auto& lm : models) {
    for (const auto& t : model_terms(lm.model, {true, true})) {
      ++blocks;
      if (!projector_idempotent(t)) o.fail(lm.name + ": term " + smw::to_string(t.kind) + " is not a projector");
    }
    const int nmax = lm.model.colored() ? (full(cfg) ? 6 : 5) : (full(cfg) ? 10 : 8);
    for (int n = 4; n <= nmax; ++n) {
      Hamiltonian h(lm.model, n);
      auto cls = ground_classes(h);
      std::string at = lm.name + " n=" + std::to_string(n);
      if (cls.surviving.empty()) o.fail(at + ": no zero-energy class");
      if (h.basis().size() <= 20000) {
        auto op = h.rational();
        if (!op.symmetric()) o.fail(at + ": operator not symmetric");
        for (const auto& g : cls.surviving) {
          ++states;
          if (!verify_zero_energy(op, g)) o.fail(at + ": class {" + g.sector() + "} " + g.seed + " not annihilated");
        }
      } else {
        for (const auto& g : cls.surviving) {
          ++states;
          if (!verify_zero_energy(h, g)) o.fail(at + ": class {" + g.sector() + "} " + g.seed + " not annihilated");
        }
      }
    }
    note(cfg, lm.name);
  }
  o.detail = std::to_string(blocks) + " projector blocks, " + std::to_string(states) + " ground states";
  return o;
}

// 7 ---------------------------------------------------------------------

Outcome addendum(Config&) {
  Outcome o;
  std::ostringstream d;
  for (int n : {6, 5}) {
    auto r = addendum_regression(n);
    d << "n=" << n << ": GSD original " << r.gsd_original << ", corrected " << r.gsd_corrected;
    if (n == 6 && r.gsd_original <= 5) o.fail("original boundaries at n=6 give GSD " + std::to_string(r.gsd_original));
    if (r.gsd_corrected != 5) o.fail("corrected boundaries at n=" + std::to_string(n) + " give GSD " +
                                     std::to_string(r.gsd_corrected));
    for (const auto& ex : r.exhibits) {
      if (!ex.zero_energy_original) o.fail(ex.walk + " is not zero-energy with original boundaries");
      if (ex.zero_energy_corrected) o.fail(ex.walk + " stays zero-energy with corrected boundaries");
    }
    d << ", " << r.exhibits.size() << " exhibit(s) lifted";
    if (!r.residual_non_smw.empty()) d << ", residual non-walk classes " << r.residual_non_smw.size();
    d << "; ";
  }
  o.detail = d.str();
  return o;
}

// 8 ---------------------------------------------------------------------

Walk sector_seed(const ModelSpec& m, int len, int a, int c) {
  const int s = m.colored() ? 1 : 0;
  const int k = m.k();
  Walk w;
  if (a == c) {
    for (int j = 0; j < len; ++j) w.steps.push_back({k, a, a, s});
    return w;
  }
  // a=1, c=2: x13 x32 x22...
  w.steps.push_back({k, 1, 3, s});
  w.steps.push_back({k, 3, 2, s});
  for (int j = 2; j < len; ++j) w.steps.push_back({k, 2, 2, s});
  return w;
}

Outcome entropy_agreement(Config& cfg) {
  Outcome o;
  struct Case {
    Labeled lm;
    int max_half;
    std::vector<std::pair<int, int>> sectors;
  };
  const bool f = full(cfg);
  std::vector<Case> cases{
      {{"s31 lambda=0", ModelSpec::s31(0)}, f ? 6 : 4, {{1, 1}, {2, 2}, {1, 2}, {3, 3}}},
      {{"s31 lambda>0", ModelSpec::s31(1)}, f ? 6 : 4, {{1, 1}, {2, 2}, {3, 3}}},
      {{"s21", ModelSpec::s21()}, f ? 6 : 5, {{1, 1}, {2, 2}}},
      {{"s32 case 1", ModelSpec::s32_case1()}, f ? 4 : 3, {{1, 1}, {2, 2}, {1, 2}, {3, 3}}},
      {{"s32 case 2", ModelSpec::s32_case2(1)}, f ? 4 : 3, {{1, 1}, {2, 2}, {1, 2}, {3, 3}}},
  };
  double worst = 0;
  int points = 0;
  for (const auto& cs : cases) {
    CountTable table(cs.lm.model);
    for (int half = 2; half <= cs.max_half; ++half) {
      Hamiltonian h(cs.lm.model, 2 * half);
      for (auto [a, c] : cs.sectors) {
        std::string at = cs.lm.name + " 2n=" + std::to_string(2 * half) + " {" + std::to_string(a) +
                         std::to_string(c) + "}";
        auto g = class_of(h, sector_seed(cs.lm.model, 2 * half, a, c));
        if (!g || !g->survives()) {
          o.fail(at + ": seed class is not a ground state");
          continue;
        }
        double s_state = entropy_from_state(h, *g).S;
        Real s_counts = entropy_from_counts(table, half, a, c).S;
        double diff = std::abs(s_state - s_counts.convert_to<double>());
        worst = std::max(worst, diff);
        ++points;
        if (diff >= 1e-12) o.fail(at + ": state " + std::to_string(s_state) + " counts " + str(s_counts));
        if (a == 3 && c == 3 && s_counts != 0) o.fail(at + ": nonzero entropy");
      }
    }
    note(cfg, cs.lm.name);
  }
  std::ostringstream d;
  d << points << " points, max |difference| " << std::scientific << std::setprecision(2) << worst;
  o.detail = d.str();
  return o;
}

// 9 ---------------------------------------------------------------------

Outcome closed_constants(Config& cfg) {
  Outcome o;
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  CountTable t21(ModelSpec::s21());
  for (int n = 2; n <= 30; ++n) {
    auto sp = schmidt_from_counts(t21, n, 1, 1);
    bool halves = sp.entries.size() == 2 &&
                  std::all_of(sp.entries.begin(), sp.entries.end(), [](const SchmidtEntry& e) { return e.p == Rational(1, 2); });
    if (!halves) o.fail("s21 n=" + std::to_string(n) + ": spectrum is not {1/2, 1/2}");
    if (abs(entropy(sp) - log(Real(2))) > Real("1e-40")) o.fail("s21 n=" + std::to_string(n) + ": S != ln 2");
  }
  CountTable tp(ModelSpec::s31(1));
  Real s11 = entropy_from_counts(tp, 40, 1, 1).S;
  Real target = lambda_positive_constant();
  Real gap = abs(s11 - target);
  if (gap >= Real("1e-8")) o.fail("s31 lambda>0 {11} at n=40 differs by " + str(gap, 3));
  Real s22 = entropy_from_counts(tp, 40, 2, 2).S;
  if (abs(s22 - log(Real(2))) > Real("1e-30")) o.fail("s31 lambda>0 {22} = " + str(s22));
  o.detail = "s21 {11} = ln 2 for n <= 30; lambda>0 {11} S(40) - S_inf = " + str(s11 - target, 3) +
             ", {22} = " + str(s22, 12);
  return o;
}

// 10 --------------------------------------------------------------------

std::vector<int> large_grid(const Config& cfg) {
  return full(cfg) ? std::vector<int>{200, 500, 1000} : std::vector<int>{100, 200, 400};
}

Outcome log_law(Config& cfg) {
  Outcome o;
  using boost::multiprecision::abs;
  auto m = ModelSpec::s31(0);
  CountTable t(m);
  load(cfg, t);
  const Real want = log_law_constant();
  const Real tol = full(cfg) ? Real("0.03") : Real("0.05");
  std::ostringstream d;
  std::vector<Real> constants;
  for (auto [a, c] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    auto f = entropy_scan_and_fit(t, a, c, large_grid(cfg));
    constants.push_back(f.constant);
    d << "{" << a << c << "} " << str(f.constant, 6) << " ";
    if (a == 1 && c == 1 && abs(f.constant - want) > tol)
      o.fail("{11} constant " + str(f.constant, 6) + " vs " + str(want, 6));
  }
  Real lo = *std::min_element(constants.begin(), constants.end());
  Real hi = *std::max_element(constants.begin(), constants.end());
  if (hi - lo > tol) o.fail("sector constants spread " + str(hi - lo, 4));
  for (const auto& cst : constants)
    if (abs(cst - want) > tol) o.fail("sector constant " + str(cst, 6) + " outside tolerance");
  save(cfg, t);
  d << "target " << str(want, 6);
  o.detail = d.str();
  return o;
}

// 11 --------------------------------------------------------------------

Outcome sqrt_law(Config& cfg) {
  Outcome o;
  using boost::multiprecision::abs;
  auto m = ModelSpec::s32_case2(1);
  CountTable t(m);
  load(cfg, t);
  auto grid = large_grid(cfg);
  auto f = entropy_scan_and_fit(t, 1, 1, grid);
  Real want = sqrt_law_leading();
  Real rel = abs(f.leading / want - 1);
  if (rel > Real("0.1")) o.fail("leading " + str(f.leading, 6) + " vs " + str(want, 6));
  int n = grid.back();
  Real predicted = asymptotic_entropy(m, n, 1, 1);
  Real s = f.points.back().S;
  if (abs(s - predicted) > Real("0.1")) o.fail("S(" + std::to_string(n) + ") " + str(s, 6) + " vs " + str(predicted, 6));
  save(cfg, t);
  o.detail = "leading " + str(f.leading, 6) + " (target " + str(want, 6) + "), S(" + std::to_string(n) + ") " +
             str(s, 6) + " vs formula " + str(predicted, 6);
  return o;
}

// 12 --------------------------------------------------------------------

Outcome large_order(Config& cfg) {
  Outcome o;
  std::ostringstream d;
  struct Case {
    ModelSpec m;
    int n;
    double lo, hi;
  };
  for (const auto& c : {Case{ModelSpec::s31(0), 1000, 0.95, 1.05}, Case{ModelSpec::s32_case2(1), 500, 0.9, 1.1}}) {
    CountTable t(c.m);
    load(cfg, t);
    auto rows = asymptotic_ratio_scan(t, {0, 1, 1, false}, {c.n});
    double r = rows.front().ratio.convert_to<double>();
    d << c.m.count_tag() << " N_{" << c.n << ",1->1} ratio " << std::fixed << std::setprecision(5) << r << "; ";
    if (r < c.lo || r > c.hi) o.fail(c.m.count_tag() + " ratio " + std::to_string(r));
    save(cfg, t);
  }
  o.detail = d.str();
  return o;
}

// 13 --------------------------------------------------------------------

Outcome phases(Config& cfg) {
  Outcome o;
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  std::ostringstream d;

  // lambda axis
  CountTable t0(ModelSpec::s31(0)), tp(ModelSpec::s31(1)), tc(ModelSpec::s32_case2(1));
  auto s = [](CountTable& t, int n) { return entropy_from_counts(t, n, 1, 1).S; };
  Real area = s(tp, 200) - s(tp, 100);
  Real logd = s(t0, 200) - s(t0, 100);
  if (abs(area) > Real("1e-10")) o.fail("lambda>0 entropy still changes: " + str(area, 3));
  if (abs(logd - log(Real(2)) / 2) > Real("0.02")) o.fail("lambda=0 doubling step " + str(logd, 5));
  d << "S(200)-S(100): lambda>0 " << str(area, 2) << ", lambda=0 " << str(logd, 5) << "; ";
  for (int n : {50, 100, 200})
    if (!(s(tc, n) > s(t0, n) && s(t0, n) > s(tp, n))) o.fail("regime order at n=" + std::to_string(n));

  // mu axis: the homogeneous-color class at mu = 0 against s31 counts
  auto mu0 = ModelSpec::s32_case2(0);
  for (int half = 2; half <= (full(cfg) ? 4 : 3); ++half) {
    Hamiltonian h(mu0, 2 * half);
    auto g = class_of(h, sector_seed(mu0, 2 * half, 1, 1));
    if (!g || !g->survives()) {
      o.fail("mu=0 homogeneous class is not a ground state");
      continue;
    }
    double diff = std::abs(entropy_from_state(h, *g).S - s(t0, half).convert_to<double>());
    if (diff > 1e-12) o.fail("mu=0 homogeneous class entropy differs from the lambda=0 counts at 2n=" +
                             std::to_string(2 * half));
  }

  // Addendum-2 phases
  const int n6 = 6;
  auto pts = phase_scan({{"I", ModelSpec::s31_phase(1, 0)}, {"III", ModelSpec::s31_phase(0, 1)}}, n6);
  if (pts[0].gsd != 5) o.fail("phase I GSD " + std::to_string(pts[0].gsd));
  if (pts[1].gsd != 3) o.fail("phase III GSD " + std::to_string(pts[1].gsd));
  auto phase2 = degeneracy_growth(ModelSpec::s31_phase(0, 0), 4, full(cfg) ? 8 : 7);
  d << "phase I " << pts[0].gsd << ", III " << pts[1].gsd << ", II";
  for (std::size_t i = 0; i < phase2.size(); ++i) {
    d << ' ' << phase2[i].gsd;
    if (i && phase2[i].gsd <= phase2[i - 1].gsd) o.fail("phase II GSD not increasing at n=" + std::to_string(phase2[i].n));
  }

  // mu = 0 growth
  HamiltonianOptions big;
  big.max_dimension = 3 * 1679616;
  int hi = full(cfg) ? 8 : 6;
  auto growth = degeneracy_growth(mu0, full(cfg) ? 5 : 4, hi, big);
  const double bound = 1 / x0().convert_to<double>();
  d << "; mu=0 GSD";
  for (const auto& g : growth) {
    d << ' ' << g.gsd;
    if (g.ratio != 0 && !(g.ratio > 2 && g.ratio < bound))
      o.fail("mu=0 growth ratio " + std::to_string(g.ratio) + " at n=" + std::to_string(g.n));
  }
  o.detail = d.str();
  return o;
}

// 14 --------------------------------------------------------------------

Outcome height_bound(Config&) {
  Outcome o;
  std::ostringstream d;
  for (const auto& lm : {Labeled{"s31 lambda=0", ModelSpec::s31(0)}, Labeled{"s31 lambda>0", ModelSpec::s31(1)},
                         Labeled{"s21", ModelSpec::s21()}}) {
    d << lm.name << " [";
    for (int n = 1; n <= 10; ++n) {
      int got = max_height(lm.model, n, 10);
      int want = 0;
      if (lm.model.family == Family::S21)
        want = 1;
      else if (lm.model.walk_rule() == WalkRule::Matched)
        want = std::min(n, 2);
      else
        want = static_cast<int>(std::floor((n - 2) / 3.0)) + 2;
      if (got != want)
        o.fail(lm.name + " n=" + std::to_string(n) + ": " + std::to_string(got) + " vs " + std::to_string(want));
      d << (n > 1 ? " " : "") << got;
    }
    d << "] ";
  }
  o.detail = d.str();
  return o;
}

struct Entry {
  const char* title;
  Outcome (*run)(Config&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"counting triple agreement", triple_agreement},
      {"count spot values", spot_values},
      {"Dyck identity against ballot numbers", dyck},
      {"composition laws", composition},
      {"ground-state degeneracy table", gsd_table},
      {"frustration-free ground states", frustration_free},
      {"corrected boundary regression", addendum},
      {"entropy from counts vs density matrix", entropy_agreement},
      {"closed-form entropy constants", closed_constants},
      {"log law constant", log_law},
      {"square-root law", sqrt_law},
      {"large-order asymptotics", large_order},
      {"phase structure", phases},
      {"height bound", height_bound},
  };
  return r;
}

}  // namespace

int criterion_count() { return static_cast<int>(registry().size()); }

std::string criterion_title(int id) { return registry().at(id - 1).title; }

Result run_criterion(int id, Config& cfg) {
  const auto& e = registry().at(id - 1);
  Result r;
  r.id = id;
  r.title = e.title;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto out = e.run(cfg);
    r.passed = out.pass;
    r.detail = out.detail;
    r.counterexample = out.counterexample;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.counterexample = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Result> run_all(Config& cfg, const std::vector<int>& only) {
  std::vector<Result> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    out.push_back(run_criterion(id, cfg));
  }
  return out;
}

std::string summary_line(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " C" << std::setw(2) << std::setfill('0') << r.id << ' ' << r.title;
  if (!r.detail.empty()) os << ": " << r.detail;
  if (!r.passed && !r.counterexample.empty()) os << " | first failure: " << r.counterexample;
  return os.str();
}

}  // namespace smw::verify
