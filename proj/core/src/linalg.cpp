#include "orbitkit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

Inertia hermitian_inertia(const Mat& h, double rel_tol) {
  Inertia out;
  if (h.size() == 0) return out;
  const Mat sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  out.max_abs_eigenvalue = ev.cwiseAbs().maxCoeff();
  out.min_eigenvalue = ev.minCoeff();
  const double thr = rel_tol * out.max_abs_eigenvalue;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= thr || out.max_abs_eigenvalue == 0.0) continue;
    ++out.rank;
    if (ev(i) > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
  }
  return out;
}

namespace {

template <class M>
int rank_impl(const M& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(m);
  const auto sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++r;
  }
  return r;
}

}  // namespace

int matrix_rank(const Mat& m, double rel_tol) { return rank_impl(m, rel_tol); }
int matrix_rank(const Eigen::MatrixXd& m, double rel_tol) { return rank_impl(m, rel_tol); }

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  // Reduce tall systems to their square triangular factor before the SVD.
  Eigen::MatrixXd sq;
  if (m.rows() > n) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    sq = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    sq = m;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sq, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (top > 0.0 && sv(i) > rel_tol * top) ++r;
  }
  return svd.matrixV().rightCols(n - r);
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

cplx pfaffian(const Mat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("pfaffian needs a square matrix");
  if (n % 2 != 0) return 0.0;
  // Skew-symmetric Gaussian elimination with pivoting.
  Mat m = a;
  cplx result = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index piv = k + 1;
    double best = std::abs(m(k, k + 1));
    for (Eigen::Index j = k + 2; j < n; ++j) {
      if (std::abs(m(k, j)) > best) {
        best = std::abs(m(k, j));
        piv = j;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k + 1) {
      m.row(k + 1).swap(m.row(piv));
      m.col(k + 1).swap(m.col(piv));
      result = -result;
    }
    const cplx pivot = m(k, k + 1);
    result *= pivot;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const cplx tau = m(k, i) / pivot;
      m.row(i) -= tau * m.row(k + 1);
      m.col(i) -= tau * m.col(k + 1);
    }
  }
  return result;
}

Eigen::MatrixXd Rng::normal_matrix(int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

Mat Rng::complex_normal_matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = normal();
      m(i, j) = {re, im};
    }
  }
  return m;
}

}  // namespace orbitkit
