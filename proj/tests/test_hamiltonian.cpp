#include <doctest.h>

#include "smw/classes.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/kernel.hpp"
#include "smw/terms.hpp"

#include <cmath>
#include <random>

using namespace smw;

namespace {

ModelSpec ring(ModelSpec m) {
  m.topology = Topology::ClosedRing;
  return m;
}

ModelSpec endpoints(ModelSpec m) {
  m.topology = Topology::ClosedEndpoints;
  return m;
}

std::size_t gsd(const ModelSpec& m, int n, HamiltonianOptions opts = {}) {
  return exact_kernel(Hamiltonian(m, n, opts)).dimension;
}

}  // namespace

TEST_CASE("every term group is a sum of orthogonal projectors") {
  for (auto m : {ModelSpec::s31(0), ModelSpec::s31(1), ModelSpec::s21(), ModelSpec::s32_case1(),
                 ModelSpec::s32_case2(1), ModelSpec::s32_case2(0), ModelSpec::s31_phase(0, 0)})
    for (bool link : {false, true}) {
      TermOptions o;
      o.link_representation = link;
      for (const auto& t : model_terms(m, o)) {
        CAPTURE(m.tag());
        CAPTURE(to_string(t.kind));
        CHECK(projector_idempotent(t));
        for (std::size_t i = 0; i < t.vectors.size(); ++i) CHECK(t.vectors[i].norm2() > 0);
      }
    }
}

TEST_CASE("frozen ground state degeneracies") {
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(gsd(ModelSpec::s31(0), n) == 5);
    CHECK(gsd(ModelSpec::s31(1), n) == 3);
    CHECK(gsd(ModelSpec::s21(), n) == 2);
    CHECK(gsd(ring(ModelSpec::s31(0)), n) == 2);
    CHECK(gsd(endpoints(ModelSpec::s31(0)), n) == 3);
  }
  CHECK(gsd(ModelSpec::s32_case1(), 4) == 5);
  CHECK(gsd(ModelSpec::s32_case2(1), 4) == 5);
  CHECK(gsd(ModelSpec::s32_case2(1), 5) == 5);
}

TEST_CASE("link and reduced representations agree") {
  HamiltonianOptions link;
  link.rep = Representation::Link;
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(gsd(ModelSpec::s31(0), n, link) == gsd(ModelSpec::s31(0), n));
    CHECK(gsd(ModelSpec::s31(1), n, link) == gsd(ModelSpec::s31(1), n));
    CHECK(gsd(ModelSpec::s21(), n, link) == gsd(ModelSpec::s21(), n));
  }
  CHECK(gsd(ModelSpec::s32_case2(1), 3, link) == gsd(ModelSpec::s32_case2(1), 3));
}

TEST_CASE("a two-dimensional site 0 doubles the kernel") {
  HamiltonianOptions d;
  d.double_site0 = true;
  for (int n = 3; n <= 5; ++n) {
    CHECK(gsd(ModelSpec::s32_case1(), n, d) == 2 * gsd(ModelSpec::s32_case1(), n));
    CHECK(gsd(ModelSpec::s32_case2(1), n, d) == 2 * gsd(ModelSpec::s32_case2(1), n));
  }
}

TEST_CASE("site 0 penalty leaves three states") {
  HamiltonianOptions p;
  p.site0_penalty = true;
  CHECK(gsd(ModelSpec::s31(0), 6, p) == 3);
}

TEST_CASE("exact kernel equals the number of surviving classes") {
  for (auto m : {ModelSpec::s31(0), ModelSpec::s31(1), ModelSpec::s21(), ModelSpec::s32_case2(1),
                 ModelSpec::s32_case2(0), ModelSpec::s31_phase(0, 0), ModelSpec::s31_phase(1, 0)})
    for (int n = 3; n <= 5; ++n) {
      Hamiltonian h(m, n);
      auto k = exact_kernel(h);
      auto c = ground_classes(h);
      CAPTURE(m.tag());
      CAPTURE(n);
      CHECK(k.dimension == c.surviving.size());
      CHECK(k.residual_rank == 0);
      auto H = h.rational();
      for (const auto& g : c.surviving) {
        CHECK(verify_zero_energy(H, g));
        CHECK(verify_zero_energy(h, g));
      }
    }
}

TEST_CASE("float kernel agrees with the exact kernel") {
  for (int n = 4; n <= 8; ++n) {
    Hamiltonian h(ModelSpec::s31(0), n);
    auto f = float_kernel(h.numeric());
    CHECK(f.dimension == 5);
    CHECK_FALSE(f.ambiguous);
    CHECK(f.gap > 1e-3);
  }
  SpectrumOptions lanczos;
  lanczos.dense_limit = 50;
  Hamiltonian h(ModelSpec::s21(), 9);
  CHECK(float_kernel(h.numeric(), lanczos).dimension == 2);
  CHECK(float_kernel(Hamiltonian(ModelSpec::s31(0), 6).numeric(), lanczos).dimension == 5);
}

TEST_CASE("assembled operators are symmetric and positive") {
  Hamiltonian h(ModelSpec::s32_case2(1), 3);
  auto H = h.numeric();
  CHECK(H.symmetric());
  CHECK(h.rational().symmetric());
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(H.dim);
    for (auto& v : x) v = g(rng);
    auto y = H.apply(x);
    double q = 0;
    for (std::size_t i = 0; i < x.size(); ++i) q += x[i] * y[i];
    CHECK(q >= -1e-9);
  }
}

TEST_CASE("basis encoding round trips") {
  for (auto rep : {Representation::Link, Representation::Reduced}) {
    Basis b(ModelSpec::s32_case2(1), 3, rep);
    for (std::size_t i = 0; i < b.size(); i += 7) {
      Code c = b.code(i);
      CHECK(b.index(c) == i);
      auto w = b.walk(c);
      if (connectivity(w).kind == ConnectivityKind::Connected) CHECK(b.encode(w) == c);
    }
  }
  Basis r(ring(ModelSpec::s31(0)), 5, Representation::Reduced);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.walk(r.code(i)).final_height() == 0);
}

TEST_CASE("budget is enforced before allocation") {
  HamiltonianOptions o;
  o.max_dimension = 100;
  CHECK_THROWS_AS(Hamiltonian(ModelSpec::s31(0), 6, o), ResourceError);
  CHECK_NOTHROW(Hamiltonian(ModelSpec::s31(0), 3, o));
}

TEST_CASE("addendum boundary terms") {
  auto r = addendum_regression(5);
  CHECK(r.gsd_original == 9);
  CHECK(r.gsd_corrected == 5);
  for (const auto& e : r.exhibits) {
    CAPTURE(e.walk);
    CHECK(e.zero_energy_original);
    CHECK_FALSE(e.zero_energy_corrected);
  }
}

TEST_CASE("coordinate export") {
  Hamiltonian h(ModelSpec::s21(), 2);
  auto text = export_coordinates(h.rational());
  CHECK(text.rfind("%%coordinate rational symmetric\n8 8 ", 0) == 0);
  CHECK(export_coordinates(h.numeric()).rfind("%%coordinate real symmetric", 0) == 0);
}

TEST_CASE("phase II degeneracy grows") {
  auto rows = degeneracy_growth(ModelSpec::s31_phase(0, 0), 4, 6);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].gsd == 7);
  CHECK(rows[1].gsd == 9);
  CHECK(rows[2].gsd == 12);
}
