#include <doctest.h>

#include "orbitkit/classify.hpp"
#include "support.hpp"

using namespace orbitkit;

TEST_SUITE("classify") {
  TEST_CASE("representatives classify to their own type") {
    for (const auto& g : test::small_algebras()) {
      CAPTURE(g->name());
      for (const OrbitType& t : admissible_types(*g)) {
        CAPTURE(t.t);
        CAPTURE(t.u);
        const LieElement x = orbit_rep(g, t.t, t.u);
        const Classification c = classify_nilpotent(x);
        REQUIRE(c.pseudoholomorphic);
        CHECK(c.type == t);
        const Classification cc = classify_nilpotent(random_conjugate(x, 4, 41));
        REQUIRE(cc.pseudoholomorphic);
        CHECK(cc.type == t);
      }
    }
  }

  TEST_CASE("positive scaling keeps the type, negation swaps it") {
    Rng rng(42);
    for (const auto& g : test::small_algebras()) {
      for (const OrbitType& t : admissible_types(*g)) {
        const LieElement x = orbit_rep(g, t.t, t.u);
        const double c = rng.uniform(0.01, 100.0);
        CHECK(classify_nilpotent({g, c * x.m}).type == t);
        CHECK(classify_nilpotent({g, -c * x.m}).type == OrbitType{t.u, t.t});
      }
    }
  }

  TEST_CASE("so(2,q) sums of the two triples") {
    const auto g = make_algebra(Family::so2q, {4});
    const Mat e1 = orbit_rep(g, 1, 0).m;
    const Mat e2 = standard_triples(*g)[1].e;
    CHECK(classify_nilpotent({g, e1 + e2}).type == OrbitType{2, 0});
    CHECK(classify_nilpotent({g, -e1 - e2}).type == OrbitType{0, 2});
    CHECK(classify_nilpotent({g, e1 - e2}).type == OrbitType{1, 1});
    CHECK(classify_nilpotent({g, e2}).type == OrbitType{1, 0});
  }

  TEST_CASE("elements outside the pseudoholomorphic set") {
    const auto g = make_algebra(Family::sp, {2});
    const Classification semi = classify_nilpotent({g, g->z});
    CHECK_FALSE(semi.pseudoholomorphic);
    CHECK_FALSE(semi.reason.empty());
    CHECK_THROWS_AS(is_holomorphic({g, g->z}), Error);
    // Principal nilpotent of sp(2,R): X^2 != 0.
    Mat x = Mat::Zero(4, 4);
    x(0, 1) = 1.0;
    x(3, 2) = -1.0;
    x(1, 3) = 1.0;
    REQUIRE(contains(*g, x));
    REQUIRE((x * x).norm() > 0.5);
    CHECK(is_nilpotent(x));
    CHECK_FALSE(classify_nilpotent({g, x}).pseudoholomorphic);
    CHECK(closure_stratum({g, x}) == -1);
    CHECK_THROWS_AS(classify_nilpotent({g, Mat::Identity(4, 4)}), Error);
  }

  TEST_CASE("holomorphic predicate") {
    const auto g = make_algebra(Family::u, {2, 2});
    CHECK(is_holomorphic(orbit_rep(g, 2, 0)));
    CHECK(is_holomorphic(orbit_rep(g, 0, 0)));
    CHECK_FALSE(is_holomorphic(orbit_rep(g, 1, 1)));
    CHECK_FALSE(is_holomorphic(orbit_rep(g, 0, 1)));
  }

  TEST_CASE("closure strata of holomorphic orbits are nested") {
    for (const auto& g : test::small_algebras()) {
      CAPTURE(g->name());
      const int r = g->split_rank;
      for (int s = 0; s <= r; ++s) {
        const LieElement x = random_conjugate(orbit_rep(g, s, 0), 3, 43);
        CHECK(closure_stratum(x) == s);
        for (int s2 = 0; s2 <= r; ++s2) {
          const ClosureReport rep = in_closure(x, s2);
          CHECK(rep.in_closure == (s2 >= s));
          if (s2 < s) CHECK(rep.failed.find("rank") != std::string::npos);
        }
      }
      for (const OrbitType& t : admissible_types(*g)) {
        if (t.u > 0) CHECK(closure_stratum(orbit_rep(g, t.t, t.u)) == -1);
      }
      CHECK_THROWS_AS(in_closure(orbit_rep(g, 0, 0), r + 1), Error);
    }
  }

  TEST_CASE("closure in the p+ model") {
    for (const auto& g : test::small_algebras()) {
      CAPTURE(g->name());
      for (int s = 0; s <= g->split_rank; ++s) {
        const PPlusElement w = ks_element(*g, s);
        const PPlusClosure rep = pplus_closure_report(*g, w, s);
        CHECK(rep.in_closure);
        if (g->family == Family::sostar) {
          CHECK(rep.rank == 2 * s);
        } else {
          CHECK(rep.rank == s);
        }
        if (s > 0) CHECK_FALSE(pplus_closure_report(*g, w, s - 1).in_closure);
      }
    }
    const auto g = make_algebra(Family::so2q, {3});
    PPlusElement w{Family::so2q, Mat::Zero(3, 1)};
    w.z(0, 0) = 1.0;
    w.z(1, 0) = cplx(0.0, 1.0);
    const PPlusClosure q = pplus_closure_report(*g, w, 1);
    CHECK(q.rank == 1);
    CHECK(q.quadric == 0.0);
    w.z(2, 0) = 1.0;
    CHECK(pplus_closure_report(*g, w, 1).rank == 2);
  }

  TEST_CASE("semisimple orbit of 2 eps z") {
    for (const auto& g : test::small_algebras()) {
      const LieElement x = random_conjugate({g, 2.0 * 0.7 * g->z}, 4, 44);
      CHECK(semisimple_orbit_check(x, 0.7));
      CHECK_FALSE(semisimple_orbit_check(x, 0.8));
    }
    CHECK_THROWS_AS(semisimple_orbit_check({make_algebra(Family::sp, {1}), Mat::Zero(2, 2)}, 0.0), Error);
  }

  TEST_CASE("random group elements preserve the algebra") {
    Rng rng(45);
    for (const auto& g : test::small_algebras()) {
      const GroupElement ge = random_group_element(*g, rng, 3);
      CHECK((ge.g * ge.g_inv - Mat::Identity(g->n, g->n)).norm() <= 1e-12);
      const Mat y = ge.g * random_element(*g, rng) * ge.g_inv;
      CHECK((y - project(*g, y)).norm() <= 1e-12);
    }
  }
}
