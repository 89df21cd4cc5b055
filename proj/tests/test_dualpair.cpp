#include <doctest.h>

#include "orbitkit/classify.hpp"
#include "orbitkit/dualpair.hpp"
#include "support.hpp"

using namespace orbitkit;

namespace {

Mat random_h_group(const DualPairConfig& cfg, Rng& rng) {
  Mat y = Mat::Zero(cfg.cols, cfg.cols);
  for (const Mat& b : h_basis(cfg)) y += 0.3 * rng.normal() * b;
  return exp_matrix(y);
}

Mat random_w(const DualPairConfig& cfg, Rng& rng) {
  Mat a = Mat::Zero(cfg.rows, cfg.cols);
  for (const Mat& b : w_basis(cfg)) a += rng.normal() * b;
  return a;
}

bool in_span(const std::vector<Mat>& basis, const Mat& m) {
  Mat r = m;
  for (const Mat& b : basis) r -= (b.adjoint() * m).trace().real() * b;
  return r.norm() <= 1e-10 * std::max(1.0, m.norm());
}

std::vector<DualPairConfig> configs() {
  return {make_dual_pair(DualPairCase::o_sp, 2, 0, {2}),      make_dual_pair(DualPairCase::o_sp, 1, 1, {1}),
          make_dual_pair(DualPairCase::u_u, 1, 1, {2, 1}),    make_dual_pair(DualPairCase::u_u, 2, 0, {2, 2}),
          make_dual_pair(DualPairCase::sp_sostar, 1, 0, {3}), make_dual_pair(DualPairCase::sp_sostar, 1, 1, {4}),
          make_dual_pair(DualPairCase::sp_so2q, 1, 0, {3})};
}

}  // namespace

TEST_SUITE("dualpair") {
  TEST_CASE("configuration shapes") {
    const DualPairConfig o = make_dual_pair(DualPairCase::o_sp, 2, 1, {2});
    CHECK(o.rows == 4);
    CHECK(o.cols == 3);
    CHECK_FALSE(o.compact());
    const DualPairConfig h = make_dual_pair(DualPairCase::sp_sostar, 2, 0, {3});
    CHECK(h.rows == 6);
    CHECK(h.cols == 4);
    CHECK(h.compact());
    CHECK_FALSE(make_dual_pair(DualPairCase::sp_so2q, 1, 0, {3}).compact());
    CHECK_THROWS_AS(make_dual_pair(DualPairCase::sp_so2q, 1, 1, {3}), Error);
    CHECK_THROWS_AS(make_dual_pair(DualPairCase::o_sp, -1, 0, {2}), Error);
    CHECK_THROWS_AS(dual_pair_case_from_string("g2-sl3"), Error);
    for (DualPairCase c : {DualPairCase::o_sp, DualPairCase::u_u, DualPairCase::sp_sostar, DualPairCase::sp_so2q})
      CHECK(dual_pair_case_from_string(to_string(c)) == c);
    for (const auto& cfg : configs()) CHECK(static_cast<int>(w_basis(cfg).size()) == cfg.w_real_dim());
  }

  TEST_CASE("dagger of a single vector in R^2") {
    const DualPairConfig cfg = make_dual_pair(DualPairCase::o_sp, 1, 0, {1});
    const double q = 0.7, p = -1.3;
    Mat a(2, 1);
    a << q, p;
    const Mat d = dagger(cfg, a);
    CHECK(d.rows() == 1);
    CHECK(d(0, 0) == cplx(p));
    CHECK(d(0, 1) == cplx(-q));
    CHECK(mu_h(cfg, a).norm() == 0.0);
    CHECK((mu_g(cfg, a) - rank_one_moment(a.real())).norm() <= 1e-15);
    CHECK_THROWS_AS(dagger(cfg, Mat::Zero(3, 1)), Error);
  }

  TEST_CASE("rank-one moment on R^4") {
    Eigen::VectorXd v(4);
    v << 1.0, 2.0, 3.0, 4.0;  // q1, q2, p1, p2
    Eigen::MatrixXd expect(4, 4);
    const Eigen::RowVector4d row(3.0, 4.0, -1.0, -2.0);  // (p1, p2, -q1, -q2)
    expect = v * row;
    CHECK((rank_one_moment(v).real() - expect).norm() == 0.0);
    CHECK(contains(*make_algebra(Family::sp, {2}), rank_one_moment(v)));
    CHECK_THROWS_AS(rank_one_moment(Eigen::VectorXd::Ones(3)), Error);
  }

  TEST_CASE("quadratic Hamiltonians") {
    Mat e = Mat::Zero(2, 2), f = Mat::Zero(2, 2), h = Mat::Zero(2, 2);
    e(0, 1) = 1.0;
    f(1, 0) = 1.0;
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
      const double q = rng.normal(), p = rng.normal();
      Eigen::VectorXd v(2);
      v << q, p;
      CHECK(quadratic_hamiltonian(e, v) == doctest::Approx(0.5 * p * p));
      CHECK(quadratic_hamiltonian(f, v) == doctest::Approx(-0.5 * q * q));
      CHECK(quadratic_hamiltonian(h, v) == doctest::Approx(p * q));
    }
    Mat l = Mat::Zero(4, 4);
    l(0, 1) = -1.0;
    l(1, 0) = 1.0;
    l(2, 3) = -1.0;
    l(3, 2) = 1.0;
    REQUIRE(contains(*make_algebra(Family::sp, {2}), l));
    for (int i = 0; i < 20; ++i) {
      const Eigen::VectorXd v = rng.normal_matrix(4, 1);
      CHECK(quadratic_hamiltonian(l, v) == doctest::Approx(v(0) * v(3) - v(1) * v(2)));
    }
    CHECK_THROWS_AS(quadratic_hamiltonian(l, Eigen::VectorXd::Ones(2)), Error);
  }

  TEST_CASE("quadratic Hamiltonians form a Lie algebra homomorphism") {
    const auto g = make_algebra(Family::sp, {3});
    const Mat j = quaternionic_structure(3);
    Rng rng(62);
    for (int i = 0; i < 20; ++i) {
      const Mat x = random_element(*g, rng);
      const Mat y = random_element(*g, rng);
      const Eigen::VectorXd v = rng.normal_matrix(6, 1);
      // Gradient of f_X is J X v; canonical bracket {q, p} = 1.
      const Eigen::VectorXcd gx = j * x * v.cast<cplx>();
      const Eigen::VectorXcd gy = j * y * v.cast<cplx>();
      const double pb = (gx.transpose() * (-j) * gy)(0).real();
      CHECK(pb == doctest::Approx(quadratic_hamiltonian(commutator(x, y), v)).epsilon(1e-10));
      CHECK(quadratic_hamiltonian(x, v) == doctest::Approx(0.5 * (rank_one_moment(v) * x).trace().real()));
    }
  }

  TEST_CASE("moment maps land in the right algebras and are equivariant") {
    Rng rng(63);
    for (const auto& cfg : configs()) {
      CAPTURE(to_string(cfg.kind));
      CAPTURE(cfg.target->name());
      const auto hb = h_basis(cfg);
      for (int i = 0; i < 10; ++i) {
        const Mat a = random_w(cfg, rng);
        const Mat mg = mu_g(cfg, a);
        const Mat mh = mu_h(cfg, a);
        CHECK(contains(*cfg.target, mg));
        CHECK(in_span(hb, mh));
        const Mat y = random_group_element(*cfg.target, rng, 2).g;
        const Mat x = random_h_group(cfg, rng);
        const Mat moved = y * a * x.inverse();
        CHECK((mu_g(cfg, moved) - y * mg * y.inverse()).norm() <= 1e-10 * std::max(1.0, mg.norm()));
        CHECK((mu_h(cfg, moved) - x * mh * x.inverse()).norm() <= 1e-10 * std::max(1.0, mh.norm()));
      }
    }
  }

  TEST_CASE("the symplectic form on W") {
    for (const auto& cfg : configs()) {
      const auto wb = w_basis(cfg);
      const int d = static_cast<int>(wb.size());
      Eigen::MatrixXd gram(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) gram(a, b) = omega_w(cfg, wb[a], wb[b]);
      CHECK((gram + gram.transpose()).norm() <= 1e-12);
      CHECK(matrix_rank(gram) == d);
    }
  }

  TEST_CASE("mu_H is a momentum map for the H action") {
    Rng rng(64);
    for (const auto& cfg : configs()) {
      CAPTURE(to_string(cfg.kind));
      const auto hb = h_basis(cfg);
      for (int i = 0; i < 5; ++i) {
        const Mat a = random_w(cfg, rng);
        const Mat b = random_w(cfg, rng);
        const Mat y = hb[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(hb.size()) - 1))];
        auto fy = [&](const Mat& m) {
          const cplx t = (mu_h(cfg, m) * y).trace();
          return 0.5 * (cfg.base == Algebra::H ? 0.5 * t.real() : t.real());
        };
        const double step = 1e-5;
        const double fd = (fy(a + step * b) - fy(a - step * b)) / (2 * step);
        CHECK(fd == doctest::Approx(omega_w(cfg, Mat(-a * y), b)).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("zero level samples") {
    for (const auto& cfg : {make_dual_pair(DualPairCase::o_sp, 2, 0, {3}), make_dual_pair(DualPairCase::u_u, 3, 0, {2, 2}),
                            make_dual_pair(DualPairCase::sp_sostar, 1, 0, {4})}) {
      CAPTURE(cfg.target->name());
      const int r = cfg.target->split_rank;
      int top = 0;
      for (const Mat& a : sample_zero_level(cfg, 100, 65)) {
        const double s = std::max(1.0, a.squaredNorm());
        CHECK(mu_h(cfg, a).norm() <= 1e-9 * s);
        const Mat g = mu_g(cfg, a);
        CHECK((g * g).norm() <= 1e-9 * std::max(1.0, g.squaredNorm()));
        const BForm b = b_x_form(*cfg.target, project(*cfg.target, g));
        CHECK(b.negative == 0);
        top = std::max(top, b.rank);
      }
      CHECK(top == std::min(r, cfg.s()));
    }
    CHECK_THROWS_AS(sample_zero_level(make_dual_pair(DualPairCase::sp_so2q, 1, 0, {3}), 1, 1), Error);
  }

  TEST_CASE("reduction histograms") {
    const ReductionHistogram h = reduce_and_classify(make_dual_pair(DualPairCase::o_sp, 3, 0, {2}), 200, 66);
    CHECK(h.samples == 200);
    CHECK(h.unclassified == 0);
    for (const auto& [t, n] : h.counts) CHECK(t.second == 0);
    CHECK(h.counts.count({0, 0}));
    CHECK(h.counts.count({1, 0}));
    CHECK(h.counts.count({2, 0}));

    const ReductionHistogram anti = reduce_and_classify(make_dual_pair(DualPairCase::o_sp, 0, 2, {2}), 200, 67);
    for (const auto& [t, n] : anti.counts) CHECK(t.first == 0);
    CHECK(anti.counts.count({0, 2}));

    const ReductionHistogram both = reduce_and_classify(make_dual_pair(DualPairCase::o_sp, 1, 1, {1}), 200, 68);
    CHECK(both.counts.count({1, 0}));
    CHECK(both.counts.count({0, 1}));

    const ReductionHistogram trivial = reduce_and_classify(make_dual_pair(DualPairCase::o_sp, 0, 0, {2}), 10, 69);
    CHECK(trivial.counts.size() == 1);
    CHECK(trivial.counts.count({0, 0}));
  }

  TEST_CASE("Sp(1,R) with so(2,q)") {
    const DualPairConfig cfg = make_dual_pair(DualPairCase::sp_so2q, 1, 0, {4});
    for (const Mat& a : sample_nilcone_level(cfg, 100, 70)) {
      const Mat h = mu_h(cfg, a);
      CHECK((h * h).norm() <= 1e-9 * std::max(1.0, std::pow(a.norm(), 4)));
      const Mat g = mu_g(cfg, a);
      CHECK((g * g * g).norm() <= 1e-9 * std::max(1.0, std::pow(g.norm(), 3)));
    }
    CHECK_THROWS_AS(sample_nilcone_level(make_dual_pair(DualPairCase::sp_so2q, 2, 0, {4}), 1, 1), Error);

    const auto [a1, a2] = so2q_reference_maps(cfg);
    const auto tr = standard_triples(*cfg.target);
    CHECK(mu_h(cfg, a1).norm() <= 1e-15);
    CHECK(mu_h(cfg, a2).norm() <= 1e-15);
    CHECK((mu_g(cfg, a1) + 2.0 * tr[0].e).norm() <= 1e-14);
    CHECK((mu_g(cfg, a2) + 2.0 * tr[1].e).norm() <= 1e-14);
  }

  TEST_CASE("invariant quadratics are spanned by mu_G") {
    for (const auto& cfg : {make_dual_pair(DualPairCase::o_sp, 1, 0, {1}), make_dual_pair(DualPairCase::o_sp, 2, 0, {2}),
                            make_dual_pair(DualPairCase::u_u, 1, 0, {2, 1}), make_dual_pair(DualPairCase::u_u, 1, 1, {1, 1})}) {
      CAPTURE(cfg.target->name());
      const InvariantQuadratics iq = invariant_quadratics_dim(cfg);
      CHECK(iq.dim == iq.dim_g);
      CHECK(iq.mu_span == iq.dim_g);
    }
    CHECK_THROWS_AS(invariant_quadratics_dim(make_dual_pair(DualPairCase::o_sp, 4, 0, {4})), Error);
  }

  TEST_CASE("semisimple reduction") {
    for (const auto& cfg : {make_dual_pair(DualPairCase::o_sp, 4, 0, {2}), make_dual_pair(DualPairCase::u_u, 2, 0, {1, 1}),
                            make_dual_pair(DualPairCase::sp_sostar, 2, 0, {2})}) {
      const SemisimpleReduction r = semisimple_reduction_check(cfg, 0.6, 10, 71);
      CHECK(r.passed);
      CHECK(r.samples == 10);
      CHECK(r.max_level_residual <= 1e-10);
    }
    CHECK_THROWS_AS(semisimple_reduction_check(make_dual_pair(DualPairCase::o_sp, 1, 1, {1}), 1.0, 1, 1), Error);
    CHECK_THROWS_AS(semisimple_reduction_check(make_dual_pair(DualPairCase::o_sp, 2, 0, {1}), 0.0, 1, 1), Error);
  }

  TEST_CASE("the level +eps J_V through an anti-isometry") {
    const double eps = 0.8;
    Rng rng(72);
    {
      const DualPairConfig cfg = make_dual_pair(DualPairCase::o_sp, 4, 0, {2});
      Mat r = Mat::Identity(4, 4);
      r.bottomRightCorner(2, 2) *= -1.0;
      const Mat y = random_group_element(*cfg.target, rng, 3).g;
      const Mat a = std::sqrt(eps) * y * r;
      CHECK((mu_h(cfg, a) - eps * cfg.target->J_V).norm() <= 1e-10);
      CHECK(semisimple_orbit_check({cfg.target, project(*cfg.target, mu_g(cfg, a))}, eps));
    }
    {
      const DualPairConfig cfg = make_dual_pair(DualPairCase::sp_sostar, 2, 0, {2});
      Mat r = Mat::Zero(4, 4);
      r.topLeftCorner(2, 2) = cplx(0.0, 1.0) * Mat::Identity(2, 2);
      r.bottomRightCorner(2, 2) = cplx(0.0, -1.0) * Mat::Identity(2, 2);
      const Mat y = random_group_element(*cfg.target, rng, 3).g;
      const Mat a = std::sqrt(eps) * y * r;
      CHECK((mu_h(cfg, a) - eps * cfg.target->J_V).norm() <= 1e-10);
      CHECK(semisimple_orbit_check({cfg.target, project(*cfg.target, mu_g(cfg, a))}, eps));
    }
  }
}
