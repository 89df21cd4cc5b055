#include <doctest.h>

#include "orbitkit/liealg.hpp"
#include "orbitkit/triples.hpp"
#include "support.hpp"

using namespace orbitkit;

namespace {

Mat real4(std::initializer_list<double> v) {
  Mat m(4, 4);
  auto it = v.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("dimensions and split ranks") {
    const auto sp2 = make_algebra(Family::sp, {2});
    CHECK(sp2->n == 4);
    CHECK(sp2->split_rank == 2);
    CHECK(sp2->dim == 10);
    const auto so23 = make_algebra(Family::so2q, {3});
    CHECK(so23->split_rank == 2);
    CHECK(so23->dim == 10);
    const auto u11 = make_algebra(Family::u, {1, 1});
    CHECK(u11->dim == 4);
    CHECK(u11->split_rank == 1);
    CHECK(make_algebra(Family::sostar, {3})->dim == 15);
    CHECK(make_algebra(Family::sostar, {5})->split_rank == 2);
    for (const auto& alg : test::small_algebras()) {
      CHECK(static_cast<int>(basis(*alg).size()) == alg->dim);
      for (const Mat& b : basis(*alg)) CHECK(contains(*alg, b));
      CHECK(contains(*alg, alg->z));
      if (alg->has_form) CHECK((alg->J_V * alg->J_V + Mat::Identity(alg->n, alg->n)).norm() == 0.0);
    }
  }

  TEST_CASE("invalid parameters throw") {
    CHECK_THROWS_AS(make_algebra(Family::so2q, {1}), Error);
    CHECK_THROWS_AS(make_algebra(Family::sp, {}), Error);
    CHECK_THROWS_AS(make_algebra(Family::u, {2}), Error);
    CHECK_THROWS_AS(family_from_string("e6"), Error);
  }

  TEST_CASE("membership via block equations") {
    const auto alg = make_algebra(Family::sp, {2});
    CHECK(contains(*alg, Mat::Zero(4, 4)));
    CHECK(contains(*alg, alg->z));
    // [[A, B], [C, -A^T]] with B symmetric but C not symmetric.
    Mat x = Mat::Zero(4, 4);
    x(0, 2) = 1.0;
    x(2, 1) = 1.0;
    CHECK_FALSE(contains(*alg, x));
    x(3, 0) = 1.0;
    CHECK(contains(*alg, x));
    CHECK_THROWS_AS(contains(*alg, Mat::Zero(3, 3)), Error);
    CHECK_THROWS_AS(make_element(alg, Mat::Identity(4, 4)), Error);
  }

  TEST_CASE("Cartan decomposition") {
    const auto alg = make_algebra(Family::sp, {2});
    const auto [zk, zp] = cartan_split({alg, alg->z});
    CHECK((zk.m - alg->z).norm() == 0.0);
    CHECK(zp.m.norm() == 0.0);

    Rng rng(21);
    const Eigen::MatrixXd a = rng.normal_matrix(2, 2);
    Eigen::MatrixXd b = rng.normal_matrix(2, 2);
    Eigen::MatrixXd c = rng.normal_matrix(2, 2);
    b = b + b.transpose().eval();
    c = c + c.transpose().eval();
    Eigen::MatrixXd x(4, 4);
    x << a, b, c, -a.transpose();
    const auto [xk, xp] = cartan_split({alg, x.cast<cplx>()});
    CHECK((xk.m.topLeftCorner(2, 2).real() - 0.5 * (a - a.transpose())).norm() <= 1e-15);
    CHECK((xk.m.topRightCorner(2, 2).real() - 0.5 * (b - c)).norm() <= 1e-15);
    CHECK((xk.m + xp.m - x.cast<cplx>()).norm() <= 1e-15);

    for (const auto& g : test::small_algebras()) {
      for (int i = 0; i < 20; ++i) {
        const Mat y = random_element(*g, rng);
        const auto [k, p] = cartan_split({g, y});
        CHECK(contains(*g, k.m));
        CHECK(contains(*g, p.m));
        CHECK(commutator(g->z, k.m).norm() <= 1e-12);
        if (g->has_form) CHECK((commutator(g->z, p.m) - g->J_V * p.m).norm() <= 1e-12);
      }
    }
  }

  TEST_CASE("Cartan relations and closure under brackets") {
    Rng rng(22);
    for (const auto& g : test::small_algebras()) {
      double closure = 0.0, jacobi = 0.0, kk = 0.0, kp = 0.0, pp = 0.0, cs = 0.0;
      for (int i = 0; i < 500; ++i) {
        const Mat x = random_element(*g, rng);
        const Mat y = random_element(*g, rng);
        const Mat br = commutator(x, y);
        closure = std::max(closure, (br - project(*g, br)).norm());
        if (i < 50) {
          const Mat w = random_element(*g, rng);
          jacobi = std::max(jacobi, (commutator(x, commutator(y, w)) + commutator(y, commutator(w, x)) +
                                     commutator(w, commutator(x, y)))
                                        .norm());
          kk = std::max(kk, p_part(commutator(k_part(x), k_part(y))).norm());
          kp = std::max(kp, k_part(commutator(k_part(x), p_part(y))).norm());
          pp = std::max(pp, p_part(commutator(p_part(x), p_part(y))).norm());
          cs = std::max(cs, (p_part(commutator(g->z, x)) - complex_structure(*g, p_part(x))).norm());
        }
      }
      CHECK(closure <= 1e-10);
      CHECK(jacobi <= 1e-10);
      CHECK(kk <= 1e-12);
      CHECK(kp <= 1e-12);
      CHECK(pp <= 1e-12);
      CHECK(cs <= 1e-12);
    }
  }

  TEST_CASE("b_x_form") {
    const auto alg = make_algebra(Family::sp, {2});
    const BForm zero = b_x_form({alg, Mat::Zero(4, 4)});
    CHECK(zero.rank == 0);
    CHECK(zero.signature == 0);
    for (const auto& g : test::small_algebras()) {
      if (!g->has_form) {
        CHECK_THROWS_AS(b_x_form({g, g->z}), Unsupported);
        continue;
      }
      const BForm bz = b_x_form({g, g->z});
      CHECK((bz.form - 0.5 * Mat::Identity(g->n, g->n)).norm() <= 1e-15);
      const int full = g->base == Algebra::H ? g->n / 2 : g->n;
      CHECK(bz.positive == full);
      CHECK(bz.signature == full);
    }
    const BForm e1 = b_x_form(orbit_rep(alg, 1, 0));
    CHECK(e1.rank == 1);
    CHECK(e1.signature == 1);
  }

  TEST_CASE("p to p+ is a complex-linear bijection") {
    Rng rng(23);
    for (const auto& g : test::small_algebras()) {
      CHECK(to_p_plus({g, Mat::Zero(g->n, g->n)}).z.norm() == 0.0);
      const auto [rows, cols] = pplus_shape(*g);
      for (int i = 0; i < 20; ++i) {
        const Mat xp = p_part(random_element(*g, rng));
        const PPlusElement w = to_p_plus({g, xp});
        CHECK(w.z.rows() == rows);
        CHECK(w.z.cols() == cols);
        CHECK((from_p_plus(g, w).m - xp).norm() <= 1e-12);
        const PPlusElement jw = to_p_plus({g, complex_structure(*g, xp)});
        CHECK((jw.z - cplx(0.0, 1.0) * w.z).norm() <= 1e-12);
        if (g->family == Family::sp) CHECK((w.z - w.z.transpose()).norm() <= 1e-12);
        if (g->family == Family::sostar) CHECK((w.z + w.z.transpose()).norm() <= 1e-12);
      }
    }
  }

  TEST_CASE("so(2,q): p-part of e1 in quadric coordinates") {
    const auto g = make_algebra(Family::so2q, {4});
    const Mat xp = p_part(orbit_rep(g, 1, 0).m);
    // Coordinates w_j = x_j + i y_j from the rows x, y of the 2 x q block.
    Eigen::VectorXcd xy(4);
    for (int j = 0; j < 4; ++j) xy(j) = xp(0, 2 + j) + cplx(0.0, 1.0) * xp(1, 2 + j);
    Eigen::VectorXcd expect(4);
    expect << cplx(0.0, 0.5), 0.5, 0.0, 0.0;
    CHECK((xy - expect).norm() <= 1e-15);
    // The complex-linear model is the conjugate coordinate system.
    const PPlusElement w = to_p_plus({g, xp});
    CHECK((w.z - xy.conjugate()).norm() <= 1e-15);
    CHECK(std::abs((w.z.transpose() * w.z)(0, 0)) <= 1e-15);
  }

  TEST_CASE("sp(2,R): Kostant-Sekiguchi image of the first triple has rank one") {
    const auto g = make_algebra(Family::sp, {2});
    const PPlusElement w = ks_element(*g, 1);
    CHECK((w.z - w.z.transpose()).norm() == 0.0);
    CHECK(matrix_rank(w.z) == 1);
  }

  TEST_CASE("brackets") {
    const auto sl2 = make_algebra(Family::sp, {1});
    Mat e = Mat::Zero(2, 2), f = Mat::Zero(2, 2), h = Mat::Zero(2, 2);
    e(0, 1) = 1.0;
    f(1, 0) = 1.0;
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    CHECK((bracket({sl2, e}, {sl2, f}).m - h).norm() == 0.0);
    CHECK(bracket({sl2, e}, {sl2, e}).m.norm() == 0.0);
    const auto u11 = make_algebra(Family::u, {1, 1});
    CHECK_THROWS_AS(bracket({sl2, e}, {u11, f}), Error);

    const auto so22 = make_algebra(Family::so2q, {2});
    const Mat x = real4({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
    const Mat y = real4({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
    const Mat a1 = real4({0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0});
    const Mat a2 = real4({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    const Mat b1 = real4({0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0});
    const Mat b2 = real4({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    for (const Mat* m : {&x, &y, &a1, &a2, &b1, &b2}) CHECK(contains(*so22, *m));
    CHECK((commutator(a1, a2) - 2.0 * x).norm() == 0.0);
    CHECK((commutator(x, a1) + 2.0 * a2).norm() == 0.0);
    CHECK((commutator(x, a2) - 2.0 * a1).norm() == 0.0);
    CHECK((commutator(b1, b2) - 2.0 * y).norm() == 0.0);
    CHECK((commutator(y, b1) + 2.0 * b2).norm() == 0.0);
    CHECK((commutator(y, b2) - 2.0 * b1).norm() == 0.0);
  }

  TEST_CASE("nilpotency test is relative") {
    Mat n = Mat::Zero(3, 3);
    n(0, 1) = 1e6;
    n(1, 2) = 1e6;
    CHECK(is_nilpotent(n));
    CHECK_FALSE(is_nilpotent(Mat::Identity(3, 3)));
  }

  TEST_CASE("null space of tall and wide systems") {
    Rng rng(24);
    const Eigen::MatrixXd basis = rng.normal_matrix(30, 4);
    // 400 x 30 system whose null space is the span of the 4 columns above.
    const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(30, 30) - basis * (basis.transpose() * basis).inverse() * basis.transpose();
    const Eigen::MatrixXd tall = rng.normal_matrix(400, 30) * proj;
    const Eigen::MatrixXd ns = null_space(tall);
    CHECK(ns.cols() == 4);
    CHECK((tall * ns).norm() <= 1e-10);
    const Eigen::MatrixXd wide = rng.normal_matrix(5, 12);
    CHECK(null_space(wide).cols() == 7);
    CHECK(null_space(Eigen::MatrixXd(0, 3)).cols() == 3);
    CHECK(matrix_rank(tall) == 26);
  }
}
