#include <doctest.h>

#include "smw/entangle.hpp"

#include <cmath>

using namespace smw;

namespace {

Walk flat(const ModelSpec& m, int len, int a) {
  Walk w;
  for (int j = 0; j < len; ++j) w.steps.push_back({m.k(), a, a, m.colored() ? 1 : 0});
  return w;
}

double counts_entropy(CountTable& t, int n, int a, int c) {
  return entropy_from_counts(t, n, a, c).S.convert_to<double>();
}

}  // namespace

TEST_CASE("height cutoff") {
  CHECK(height_cutoff(1) == 12);
  CHECK(height_cutoff(100) == 120);
  CHECK(height_cutoff(1000) == 380);
}

TEST_CASE("Schmidt weights sum to one") {
  for (auto m : {ModelSpec::s31(0), ModelSpec::s31(1), ModelSpec::s21(), ModelSpec::s32_case2(1)}) {
    CountTable t(m);
    for (int n : {3, 10, 40}) {
      auto s = schmidt_from_counts(t, n, 1, 1);
      CAPTURE(m.tag());
      CAPTURE(n);
      CHECK(s.total == 1);
      CHECK(s.truncated_mass == 0);
    }
  }
}

TEST_CASE("exact entropies") {
  CountTable s21(ModelSpec::s21());
  for (int n : {2, 5, 30}) CHECK(counts_entropy(s21, n, 1, 1) == doctest::Approx(std::log(2.0)));
  CountTable pos(ModelSpec::s31(1));
  CHECK(counts_entropy(pos, 20, 2, 2) == doctest::Approx(std::log(2.0)));
  CHECK(counts_entropy(pos, 20, 3, 3) == 0);
  Real gap = entropy_from_counts(pos, 40, 1, 1).S - lambda_positive_constant();
  CHECK(abs(gap) < 1e-8);
}

TEST_CASE("density matrix entropy matches the count formula") {
  for (auto m : {ModelSpec::s31(0), ModelSpec::s31(1), ModelSpec::s21()}) {
    CountTable t(m);
    for (int half = 2; half <= 4; ++half) {
      Hamiltonian h(m, 2 * half);
      for (int a : {1, 2}) {
        auto g = class_of(h, flat(m, 2 * half, a));
        REQUIRE(g);
        REQUIRE(g->survives());
        CAPTURE(m.tag());
        CAPTURE(half);
        CAPTURE(a);
        CHECK(entropy_from_state(h, *g).S == doctest::Approx(counts_entropy(t, half, a, a)).epsilon(1e-12));
      }
    }
  }
  auto m = ModelSpec::s32_case2(1);
  CountTable t(m);
  Hamiltonian h(m, 6);
  auto g = class_of(h, flat(m, 6, 1));
  REQUIRE(g);
  CHECK(entropy_from_state(h, *g).S == doctest::Approx(counts_entropy(t, 3, 1, 1)).epsilon(1e-12));
}

TEST_CASE("log law fit") {
  CountTable t(ModelSpec::s31(0));
  auto f = entropy_scan_and_fit(t, 1, 1, {50, 100, 200});
  CHECK(f.regime == FitRegime::Log);
  CHECK(f.points.size() == 3);
  CHECK(abs(f.constant - log_law_constant()) < 0.05);
  CHECK(static_cast<double>(log_law_constant()) == doctest::Approx(0.446848).epsilon(1e-6));
  auto json = fit_json(f);
  CHECK(json.find("\"regime\"") != std::string::npos);
}

TEST_CASE("sqrt law fit") {
  CountTable t(ModelSpec::s32_case2(1));
  auto f = entropy_scan_and_fit(t, 1, 1, {50, 100, 200});
  CHECK(f.regime == FitRegime::Sqrt);
  CHECK(abs(f.leading - sqrt_law_leading()) / sqrt_law_leading() < 0.1);
}

TEST_CASE("entropy csv") {
  CountTable t(ModelSpec::s21());
  std::vector<EntropyPoint> pts{entropy_from_counts(t, 4, 1, 1)};
  auto csv = entropy_csv(t.model(), pts);
  CHECK(csv.rfind("model,sector,n,S,method\n", 0) == 0);
}
