#include <doctest.h>

#include "smw/asymptotics.hpp"
#include "smw/counting.hpp"
#include "smw/series.hpp"
#include "smw/walks.hpp"

#include <array>
#include <vector>

using namespace smw;

namespace {

// N_{n, a->b} at h = 0 for n = 1..8, columns 1->1, 1->2, 2->2, 3->3
// (from brute-force enumeration)
struct Frozen {
  ModelSpec model;
  std::array<std::array<long, 4>, 8> rows;
};

std::vector<Frozen> frozen() {
  return {
      {ModelSpec::s31(0),
       {{{1, 0, 1, 1}, {3, 1, 2, 1}, {7, 3, 4, 1}, {19, 9, 9, 1}, {51, 25, 21, 1}, {140, 69, 51, 1},
         {386, 189, 127, 1}, {1071, 518, 323, 1}}}},
      {ModelSpec::s31(1),
       {{{1, 0, 1, 1}, {3, 0, 2, 1}, {7, 0, 4, 1}, {18, 0, 8, 1}, {46, 0, 16, 1}, {119, 0, 32, 1},
         {309, 0, 64, 1}, {805, 0, 128, 1}}}},
      {ModelSpec::s32_case1(),
       {{{2, 0, 2, 2}, {12, 4, 8, 4}, {56, 24, 32, 8}, {304, 144, 144, 16}, {1632, 800, 672, 32},
         {8960, 4416, 3264, 64}, {49408, 24192, 16256, 128}, {274176, 132608, 82688, 256}}}},
      {ModelSpec::s32_case2(),
       {{{2, 0, 2, 2}, {8, 2, 6, 4}, {32, 12, 20, 8}, {136, 60, 72, 16}, {592, 280, 272, 32},
         {2616, 1272, 1064, 64}, {11664, 5712, 4272, 128}, {52320, 25536, 17504, 256}}}},
  };
}

const std::array<std::pair<int, int>, 4> kCols{{{1, 1}, {1, 2}, {2, 2}, {3, 3}}};

std::vector<ModelSpec> all_models() {
  return {ModelSpec::s31(0), ModelSpec::s31(1), ModelSpec::s21(), ModelSpec::s32_case1(),
          ModelSpec::s32_case2()};
}

}  // namespace

TEST_CASE("frozen enumeration values") {
  for (const auto& f : frozen()) {
    CountTable t(f.model);
    for (int n = 1; n <= 8; ++n)
      for (int c = 0; c < 4; ++c) {
        auto [a, b] = kCols[c];
        CAPTURE(f.model.tag());
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(t.count(n, 0, a, b) == f.rows[n - 1][c]);
        if (n <= 6) CHECK(enumerate_count(f.model, n, 0, a, b) == f.rows[n - 1][c]);
      }
  }
}

TEST_CASE("spot values") {
  CHECK(count(ModelSpec::s31(0), 3, 0, 1, 2) == 3);
  CHECK(count(ModelSpec::s31(0), 3, 1, 1, 2) == 6);
  CHECK(count(ModelSpec::s32_case2(), 4, 2, 1, 2) == 8);
  CHECK(count(ModelSpec::s32_case2(), 4, 2, 1, 2, true) == 2);
  for (int n = 1; n <= 30; ++n) {
    CHECK(count(ModelSpec::s21(), n, 0, 1, 1) == BigInt(1) << (n - 1));
    CHECK(count(ModelSpec::s31(0), n, 0, 3, 3) == 1);
  }
}

TEST_CASE("enumeration, DP and recursion agree on every entry") {
  for (const auto& m : all_models())
    for (bool tilde : {false, true}) {
      if (tilde && m.family != Family::S32Case2) continue;
      CountTable t(m);
      RecursionCounter rec(m, tilde);
      for (int n = 1; n <= 7; ++n)
        for (int a = 1; a <= m.k(); ++a) {
          auto oracle = enumerate_table(m, n, a, tilde);
          for (int h = 0; h <= n; ++h)
            for (int b = 1; b <= m.k(); ++b) {
              BigInt e = 0;
              for (const auto& [key, v] : oracle)
                if (key.first == h && key.second.index == b) e += v;
              CAPTURE(m.tag());
              CAPTURE(n);
              CAPTURE(h);
              CAPTURE(a);
              CAPTURE(b);
              CHECK(t.count(n, h, a, b, tilde) == e);
              CHECK(rec.count(n, h, a, b) == e);
            }
        }
    }
}

TEST_CASE("colored case 1 counts are 2^n times the uncolored counts") {
  CountTable c1(ModelSpec::s32_case1()), s31(ModelSpec::s31(0));
  for (int n = 1; n <= 12; ++n)
    for (int h = 0; h <= 3; ++h)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) CHECK(c1.count(n, h, a, b) == (BigInt(1) << n) * s31.count(n, h, a, b));
}

TEST_CASE("composition law at the midpoint") {
  for (const auto& m : all_models()) {
    CountTable t(m);
    for (int n = 1; n <= 8; ++n)
      for (int a = 1; a <= m.k(); ++a)
        for (int c = 1; c <= m.k(); ++c) {
          auto r = composition_check(t, n, a, c);
          CAPTURE(m.tag());
          CAPTURE(n);
          CHECK(r.holds);
          CHECK(r.lhs == r.rhs);
        }
  }
}

TEST_CASE("one sweep gives the same rows as separate sweeps") {
  auto m = ModelSpec::s31(0);
  auto rows = count_rows(m, 1, {5, 9, 14});
  for (const auto& r : rows) {
    auto single = count_rows(m, 1, {r.n});
    CHECK(r.by_height == single.front().by_height);
  }
  auto pruned = count_rows(m, 1, {5, 14}, false, true);
  CHECK_FALSE(pruned.back().complete);
  CHECK(pruned.back().at(0, 0) == rows.back().at(0, 0));
}

TEST_CASE("height bound") {
  for (const auto& m : all_models())
    for (int n = 1; n <= 8; ++n) CHECK(max_height(m, n) <= max_height_bound(m, n));
  CHECK(max_height(ModelSpec::s31(0), 6) == 3);
  CHECK(max_height(ModelSpec::s31(0), 8) == 4);
  CHECK(max_height(ModelSpec::s31(1), 1) == 1);
}

TEST_CASE("closed forms reproduce the transfer matrix counts") {
  const int order = 30;
  for (const auto& m : all_models()) {
    CountTable t(m);
    for (int h = 0; h <= 2; ++h)
      for (int a = 1; a <= m.k(); ++a)
        for (int b = 1; b <= m.k(); ++b) {
          Quantity q{h, a, b, false};
          auto s = closed_form(m, q, order);
          for (int n = 1; n <= order; ++n) {
            CAPTURE(m.tag());
            CAPTURE(to_string(q));
            CAPTURE(n);
            CHECK(s[n] == Rational(t.count(n, h, a, b)));
          }
        }
  }
}

TEST_CASE("Dyck identity and ballot numbers") {
  CHECK(ballot(4, 0) == 2);
  CHECK(ballot(6, 0) == 5);
  CHECK(ballot(4, 2) == 3);
  CHECK(ballot(3, 1) == 2);
  CHECK(ballot(3, 0) == 0);
  auto r = verify_dyck_identity(40);
  CHECK(r.ok);
}

TEST_CASE("series arithmetic") {
  auto s = RationalSeries::sqrt_one_minus_4t(6);
  std::vector<Rational> expect{1, -2, -2, -4, -10, -28, -84};
  CHECK(s.coefficients() == expect);
  CHECK(s * s == RationalSeries::rational_function({1, -4}, {1}, 6));
  auto geo = RationalSeries::rational_function({1}, {1, -1}, 10);
  for (int i = 0; i <= 10; ++i) CHECK(geo[i] == 1);
  CHECK(geo * geo.inverse() == RationalSeries::constant(1, 10));
  auto x = RationalSeries::monomial(1, 1, 10);
  CHECK(geo.compose(x * Rational(2)) == geo.scale_argument(2));
  CHECK_THROWS(x.inverse());
}

TEST_CASE("coefficient growth approaches 3") {
  auto s = closed_form(ModelSpec::s31(0), Quantity{0, 1, 1, false}, 200);
  Real r = to_real(s[200]) / to_real(s[199]);
  CHECK(abs(r - 3) / 3 < 0.01);
}

TEST_CASE("asymptotic constants") {
  CHECK(static_cast<double>(x0()) == doctest::Approx(0.20710678118654752));
  CHECK(static_cast<double>(sigma()) == doctest::Approx(std::sqrt(2.0) * 0.20710678118654752 / 9));
  CountTable t(ModelSpec::s31(0));
  auto rows = asymptotic_ratio_scan(t, Quantity{0, 1, 1, false}, {400});
  CHECK(static_cast<double>(rows[0].ratio) == doctest::Approx(1.0).epsilon(0.05));
}
