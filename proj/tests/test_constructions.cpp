#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "fanostab/constructions.hpp"
#include "test_helpers.hpp"

using namespace fanostab;
using fanostab::testing::random_variety;
using fanostab::testing::random_vector;

TEST_CASE("point blow-up: degree law, pullback conservation, exceptional column") {
  std::mt19937 rng(11001);
  for (int trial = 0; trial < 200; ++trial) {
    const Variety3Fold x = random_variety(rng, static_cast<int>(rng() % 3));
    std::map<std::string, Integer> decls;
    for (const auto& c : x.curves) decls[c.name] = Integer(static_cast<int>(rng() % 5) - 2);
    const Variety3Fold y = blow_up(x, BlowUpSpec::at_point(decls));
    const int n = x.rank();
    REQUIRE(y.rank() == n + 1);

    CHECK(y.anticanonical_degree() == x.anticanonical_degree() - 8);

    // pullback triples conserved, mixed triples vanish, E^3 = 1
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        for (int k = j; k < n; ++k) CHECK(y.form.at(i, j, k) == x.form.at(i, j, k));
        CHECK(y.form.at(i, j, n) == Integer(0));
      }
    for (int i = 0; i < n; ++i) CHECK(y.form.at(i, n, n) == Integer(0));
    CHECK(y.form.at(n, n, n) == Integer(1));

    // K' = f*K + 2E
    for (int i = 0; i < n; ++i) CHECK(y.canonical[i] == x.canonical[i]);
    CHECK(y.canonical[n] == Integer(2));

    // declared strict transforms keep their vector with the declared E-entry
    REQUIRE(y.curves.size() == x.curves.size() + 1);
    for (std::size_t c = 0; c < x.curves.size(); ++c) {
      for (int i = 0; i < n; ++i) CHECK(y.curves[c].meets[static_cast<std::size_t>(i)] ==
                                        x.curves[c].meets[static_cast<std::size_t>(i)]);
      CHECK(y.curves[c].meets[static_cast<std::size_t>(n)] == decls.at(y.curves[c].name));
    }

    // auto-tracked line in the exceptional plane
    const CurveClass& exc = y.curves.back();
    CHECK(exc.name.find("_line") != std::string::npos);
    CHECK(exc.genus == 0);
    for (int i = 0; i < n; ++i) CHECK(exc.meets[static_cast<std::size_t>(i)] == Integer(0));
    CHECK(exc.meets[static_cast<std::size_t>(n)] == Integer(-1));

    CHECK(y.provenance.back() == "blowup:point");
    CHECK(y.fibrations.empty());
  }
}

TEST_CASE("curve blow-up: degree law, exceptional column from the center") {
  std::mt19937 rng(11002);
  for (int trial = 0; trial < 200; ++trial) {
    Variety3Fold x = random_variety(rng, 1 + static_cast<int>(rng() % 2));
    const CurveClass center = x.curves.front();
    std::map<std::string, Integer> decls;
    for (std::size_t c = 1; c < x.curves.size(); ++c)
      decls[x.curves[c].name] = Integer(static_cast<int>(rng() % 5) - 2);
    const Variety3Fold y = blow_up(x, BlowUpSpec::along_curve(center, decls));
    const int n = x.rank();
    REQUIRE(y.rank() == n + 1);

    const Integer kc = intersect_curve(x.canonical, center);
    CHECK(y.anticanonical_degree() ==
          x.anticanonical_degree() + 2 * kc - 2 + 2 * center.genus);

    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        for (int k = j; k < n; ++k) CHECK(y.form.at(i, j, k) == x.form.at(i, j, k));
        CHECK(y.form.at(i, j, n) == Integer(0));
      }
    // f*D . E^2 = -(D . C)
    for (int i = 0; i < n; ++i)
      CHECK(y.form.at(i, n, n) == -center.meets[static_cast<std::size_t>(i)]);
    // E^3 = K.C + 2 - 2g
    CHECK(y.form.at(n, n, n) == kc + 2 - 2 * center.genus);

    // K' = f*K + E
    for (int i = 0; i < n; ++i) CHECK(y.canonical[i] == x.canonical[i]);
    CHECK(y.canonical[n] == Integer(1));

    // center consumed; ruling fiber auto-tracked
    for (const auto& c : y.curves) CHECK(c.name != center.name);
    const CurveClass& exc = y.curves.back();
    CHECK(exc.name.find("_fiber") != std::string::npos);
    CHECK(exc.meets[static_cast<std::size_t>(n)] == Integer(-1));

    CHECK(y.provenance.back() == "blowup:curve:" + center.name);
  }
}

TEST_CASE("blow-up validates declarations") {
  const Variety3Fold p3 = threefold_preset("p3");
  REQUIRE(p3.find_curve("line") != nullptr);
  // undeclared tracked curve
  CHECK_THROWS_AS(blow_up(p3, BlowUpSpec::at_point()), input_error);
  // declaration for a curve that is not tracked
  CHECK_THROWS_AS(
      blow_up(p3, BlowUpSpec::at_point({{"line", Integer(0)}, {"ghost", Integer(1)}})),
      input_error);
  // center curve must live on this lattice
  CurveClass wrong;
  wrong.name = "w";
  wrong.genus = 0;
  wrong.meets = {Integer(1), Integer(0)};
  CHECK_THROWS_AS(blow_up(p3, BlowUpSpec::along_curve(wrong)), input_error);
  // blowing up along the tracked line works once the lattice fits
  const Variety3Fold y = blow_up(p3, BlowUpSpec::along_curve(*p3.find_curve("line")));
  CHECK(y.anticanonical_degree() == Integer(54));
}

TEST_CASE("products with the projective line") {
  for (const auto& id : surface_preset_ids()) {
    const Surface s = surface_preset(id);
    const Variety3Fold x = product_with_p1(s);
    REQUIRE(x.rank() == s.rank() + 1);
    // (-K)^3 = 6 K_S^2
    CHECK(x.anticanonical_degree() == 6 * s.canonical_square());
    // both projections registered
    REQUIRE(x.fibrations.size() == 2);
    CHECK(x.fibrations[0].target == s.name);
    CHECK(x.fibrations[0].target_dim == 2);
    CHECK(x.fibrations[0].relative_rank == 1);
    CHECK(x.fibrations[1].target == "p1");
    CHECK(x.fibrations[1].target_dim == 1);
    CHECK(x.fibrations[1].relative_rank == 2);
    // fiber class: F^2 = 0, F . A . B = (A.B)_S
    const int nf = x.rank() - 1;
    CHECK(x.form.at(nf, nf, nf) == Integer(0));
    for (int i = 0; i < s.rank(); ++i)
      for (int j = i; j < s.rank(); ++j)
        CHECK(x.form.at(i, j, nf) ==
              s.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("projectivized bundle over a surface obeys the Grothendieck relations") {
  // P(O + O(D)) over S: xi . pi*A . pi*B = A.B, xi^2 . pi*A = D.A, xi^3 = D.D
  const Surface s = surface_p1xp1();
  const DivisorClass d(std::vector<Integer>{Integer(1), Integer(1)});
  const Variety3Fold x = p1_bundle(s, d);
  REQUIRE(x.rank() == 3);
  CHECK(x.form.at(0, 1, 2) == Integer(1));   // xi h1 h2 = h1.h2 = 1
  CHECK(x.form.at(0, 1, 1) == Integer(0));   // h1^2 = 0
  CHECK(x.form.at(0, 0, 1) == Integer(1));   // xi^2 h1 = D.h1 = 1
  CHECK(x.form.at(0, 0, 2) == Integer(1));
  CHECK(x.form.at(0, 0, 0) == Integer(2));   // xi^3 = D.D = 2
  CHECK(x.form.at(1, 1, 2) == Integer(0));   // pi* triples vanish
  // K = -2 xi + pi*(K_S + D)
  CHECK(x.canonical[0] == Integer(-2));
  CHECK(x.canonical[1] == Integer(-1));
  CHECK(x.canonical[2] == Integer(-1));
  // one projection, relative rank 1
  REQUIRE(x.fibrations.size() == 1);
  CHECK(x.fibrations[0].relative_rank == 1);
  CHECK(x.anticanonical_degree() == Integer(52));
}

TEST_CASE("the two V7 routes agree after a change of basis") {
  // Route 1: P(O + O(1)) over P^2, basis (xi, h).
  const Variety3Fold bundle = threefold_preset("v7");
  // Route 2: blow-up of P^3 at a point, basis (H, E); xi = H, h = H - E.
  Variety3Fold blown = blow_up(threefold_preset("p3"),
                               BlowUpSpec::at_point({{"line", Integer(1)}}));
  const DivisorClass h_class(std::vector<Integer>{Integer(1), Integer(0)});
  const DivisorClass hme(std::vector<Integer>{Integer(1), Integer(-1)});
  const Variety3Fold rebased = rebase(blown, {h_class, hme}, {"xi", "h"});

  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      for (int k = j; k < 2; ++k)
        CHECK(rebased.form.at(i, j, k) == bundle.form.at(i, j, k));
  CHECK(rebased.canonical.coeffs == bundle.canonical.coeffs);
  CHECK(rebased.anticanonical_degree() == Integer(56));
  CHECK(bundle.anticanonical_degree() == Integer(56));
}

TEST_CASE("preset anticanonical degrees") {
  const std::map<std::string, int> expected = {
      {"p3", 64},
      {"q3", 54},
      {"v7", 56},
      {"w4_blowup", 62},
      {"quadric_cone_blowup", 52},
      {"p3_blowup_line", 54},
      {"two_exc_fibers_blowup", 36},
      {"v7_blowup_exc_line", 50},
      {"v7_blowup_strict_line", 50},
      {"p1xf1_blowup", 44},
      {"example1", 46},
      {"example2", 32},
      {"p2xp1", 54},
      {"p1xp1xp1", 48},
      {"f1xp1", 48},
      {"dp1xp1", 48},
      {"dp2xp1", 42},
      {"dp3xp1", 36},
      {"dp4xp1", 30},
      {"dp5xp1", 24},
      {"dp6xp1", 18},
      {"dp7xp1", 12},
      {"dp8xp1", 6},
  };
  const auto ids = threefold_preset_ids();
  CHECK(ids.size() == expected.size());
  for (const auto& [id, degree] : expected) {
    const Variety3Fold x = threefold_preset(id);
    CHECK(x.anticanonical_degree() == Integer(degree));
    CHECK(x.name == id);
  }
}

TEST_CASE("worked-example presets carry their named classes and relations") {
  const Variety3Fold e1 = threefold_preset("example1");
  REQUIRE(e1.rank() == 4);
  for (const char* name : {"H1", "H2", "H3", "Df11", "Df1"})
    CHECK(e1.find_class(name) != nullptr);
  // -K = 2 H1 + 2 H2 - Df11 - Df1
  CHECK(verify_relation(e1, e1.anticanonical(),
                        Integer(2) * *e1.find_class("H1") + Integer(2) * *e1.find_class("H2") -
                            *e1.find_class("Df11") - *e1.find_class("Df1")));
  CHECK(e1.provenance.front() == "preset:p3");

  const Variety3Fold e2 = threefold_preset("example2");
  REQUIRE(e2.rank() == 3);
  REQUIRE(e2.fibrations.size() == 1);
  CHECK(e2.fibrations[0].target_dim == 2);
  CHECK(e2.fibrations[0].relative_rank == 1);
  CHECK(e2.fibrations[0].has_discriminant);
}

TEST_CASE("unknown preset identifiers are rejected") {
  CHECK_THROWS_AS(threefold_preset("p4"), input_error);
  CHECK_THROWS_AS(threefold_preset(""), input_error);
  CHECK_THROWS_AS(threefold_preset("dp9xp1"), input_error);
}
