#include <doctest.h>

#include "smw/numeric.hpp"
#include "smw/sis.hpp"

#include <vector>

using namespace smw;

namespace {

std::vector<SisElement> alphabet(int k, bool colored) {
  std::vector<SisElement> out;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      if (colored) {
        out.push_back(make_element(k, a, b, 1));
        out.push_back(make_element(k, a, b, 2));
      } else {
        out.push_back(make_element(k, a, b));
      }
    }
  return out;
}

std::optional<SisElement> mul(const std::optional<SisElement>& x, const std::optional<SisElement>& y) {
  if (!x || !y) return std::nullopt;
  return compose(*x, *y);
}

}  // namespace

TEST_CASE("composition is associative on every alphabet") {
  for (auto [k, colored] : {std::pair{2, false}, {3, false}, {3, true}}) {
    auto el = alphabet(k, colored);
    for (const auto& x : el)
      for (const auto& y : el)
        for (const auto& z : el) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
}

TEST_CASE("products vanish exactly when range and domain differ") {
  for (const auto& x : alphabet(3, false))
    for (const auto& y : alphabet(3, false)) {
      auto p = compose(x, y);
      CHECK(p.has_value() == (x.range == y.domain));
      if (p) {
        CHECK(p->domain == x.domain);
        CHECK(p->range == y.range);
      }
    }
}

TEST_CASE("E and Z colors multiply as Z2") {
  auto e = make_element(3, 1, 2, 1), z = make_element(3, 2, 2, 2);
  CHECK(compose(e, z)->color == 2);
  CHECK(compose(z, z)->color == 1);
  CHECK(compose(make_element(3, 1, 1, 1), make_element(3, 1, 3, 1))->color == 1);
}

TEST_CASE("pair notation matches the E/Z realization") {
  auto all = all_pair_elements();
  REQUIRE(all.size() == 18);
  int nonzero = 0;
  for (const auto& p : all)
    for (const auto& q : all) {
      auto native = compose_pairs(p, q);
      auto realized = compose(ez_realization(p), ez_realization(q));
      REQUIRE(native.has_value() == realized.has_value());
      if (native) {
        CHECK(ez_realization(*native) == *realized);
        ++nonzero;
      }
    }
  CHECK(nonzero == 18 * 6);
}

TEST_CASE("step classification follows the index order") {
  CHECK(classify_step(make_element(3, 1, 3)) == StepKind::Up);
  CHECK(classify_step(make_element(3, 3, 2)) == StepKind::Down);
  CHECK(classify_step(make_element(3, 2, 2)) == StepKind::Flat);
  CHECK(height_delta(make_element(2, 1, 2)) == 1);
}

TEST_CASE("mixed alphabets and placeholders are rejected") {
  CHECK_THROWS_AS(compose(make_element(2, 1, 1), make_element(3, 1, 1)), UsageError);
  CHECK_THROWS_AS(compose(make_element(3, 1, 1), make_element(3, 1, 1, 1)), UsageError);
  CHECK_THROWS_AS(compose(make_element(3, 1, 3, kXi), make_element(3, 3, 1, 1)), UsageError);
  CHECK_THROWS_AS(make_element(3, 0, 1), UsageError);
  CHECK_THROWS_AS(make_element(4, 1, 1), UsageError);
}

TEST_CASE("walk text round trips") {
  auto w = parse_walk("x[1,3],x[3,2],x[2,2]", 3);
  CHECK(w.size() == 3);
  CHECK(to_string(w) == "x[1,3],x[3,2],x[2,2]");
  CHECK(w.final_height() == 0);
  CHECK(w.height_profile() == std::vector<int>{0, 1, 0, 0});
  auto c = parse_walk("x^1[1,3],x^2[3,1]", 3);
  CHECK(c.steps[1].color == 2);
  CHECK(to_string(c) == "x^1[1,3],x^2[3,1]");
  CHECK_THROWS_AS(parse_walk("x[1,4]", 3), UsageError);
  CHECK_THROWS_AS(parse_walk("y[1,1]", 3), UsageError);
}

TEST_CASE("connectivity") {
  auto c = connectivity(parse_walk("x[1,2],x[2,3],x[3,1]", 3));
  CHECK(c.kind == ConnectivityKind::Connected);
  c = connectivity(parse_walk("x[1,2],x[1,3],x[3,1]", 3));
  CHECK(c.kind == ConnectivityKind::PartiallyConnected);
  CHECK(c.breaks == std::vector<int>{1});
  c = connectivity(parse_walk("x[1,2],x[1,3],x[2,1]", 3));
  CHECK(c.kind == ConnectivityKind::Disconnected);
  CHECK_THROWS_AS(connectivity(Walk{}), UsageError);
}
