#include "orbitkit/liealg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace orbitkit {

namespace {

constexpr cplx kI(0.0, 1.0);

Mat block_j(int l) {
  Mat j = Mat::Zero(2 * l, 2 * l);
  j.topRightCorner(l, l) = -Mat::Identity(l, l);
  j.bottomLeftCorner(l, l) = Mat::Identity(l, l);
  return j;
}

double scale_of(const Mat& m) { return std::max(1.0, max_abs(m)); }

bool small(const Mat& m, double tol, double scale) { return m.size() == 0 || max_abs(m) <= tol * scale; }

bool is_real(const Mat& m, double tol, double scale) { return m.imag().cwiseAbs().maxCoeff() <= tol * scale; }

std::vector<Mat> gram_schmidt(const std::vector<Mat>& cands, double tol = 1e-10) {
  std::vector<Mat> out;
  for (const Mat& c : cands) {
    Mat v = c;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Mat& b : out) {
        const double coef = (b.adjoint() * v).trace().real();
        v -= coef * b;
      }
    }
    const double nv = v.norm();
    if (nv > tol) out.push_back(v / nv);
  }
  return out;
}

void require_params(const std::vector<int>& p, std::size_t count, const char* what) {
  if (p.size() != count) throw Error(std::string(what) + " takes " + std::to_string(count) + " parameter(s)");
  for (int v : p) {
    if (v <= 0) throw Error(std::string(what) + " parameters must be positive");
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::sp: return "sp";
    case Family::u: return "u";
    case Family::sostar: return "sostar";
    case Family::so2q: return "so2q";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  if (name == "sp") return Family::sp;
  if (name == "u") return Family::u;
  if (name == "sostar") return Family::sostar;
  if (name == "so2q") return Family::so2q;
  throw Error("unknown family '" + std::string(name) + "' (expected sp, u, sostar or so2q)");
}

std::string LieAlgebraDescriptor::name() const {
  switch (family) {
    case Family::sp: return "sp(" + std::to_string(params[0]) + ",R)";
    case Family::u: return "u(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
    case Family::sostar: return "so*(" + std::to_string(2 * params[0]) + ")";
    case Family::so2q: return "so(2," + std::to_string(params[0]) + ")";
  }
  return "?";
}

namespace {

struct DescriptorWithBasis : LieAlgebraDescriptor {
  std::vector<Mat> basis;
};

}  // namespace

AlgebraPtr make_algebra(Family family, std::vector<int> params) {
  auto d = std::make_shared<DescriptorWithBasis>();
  d->family = family;
  switch (family) {
    case Family::sp: {
      require_params(params, 1, "sp");
      const int l = params[0];
      d->n = 2 * l;
      d->base = Algebra::R;
      d->split_rank = l;
      d->dim = 2 * l * l + l;
      d->J_V = block_j(l);
      d->Q = d->J_V;
      d->z = 0.5 * d->J_V;
      d->pplus_scale = kI;
      break;
    }
    case Family::u: {
      require_params(params, 2, "u");
      const int p = params[0];
      const int q = params[1];
      d->n = p + q;
      d->base = Algebra::C;
      d->split_rank = std::min(p, q);
      d->dim = (p + q) * (p + q);
      d->J_V = Mat::Zero(p + q, p + q);
      for (int i = 0; i < p + q; ++i) d->J_V(i, i) = i < p ? kI : -kI;
      d->Q = d->J_V;
      d->z = 0.5 * d->J_V;
      d->pplus_scale = -1.0;
      break;
    }
    case Family::sostar: {
      require_params(params, 1, "sostar");
      const int n = params[0];
      if (n < 2) throw Error("sostar requires n >= 2");
      d->n = 2 * n;
      d->base = Algebra::H;
      d->split_rank = n / 2;
      d->dim = n * (2 * n - 1);
      d->J_V = quaternionic_structure(n);
      d->Q = d->J_V;
      d->z = 0.5 * d->J_V;
      d->pplus_scale = -1.0;
      break;
    }
    case Family::so2q: {
      if (params.size() == 2 && params[0] == 2) params.erase(params.begin());
      require_params(params, 1, "so2q");
      const int q = params[0];
      if (q < 2) throw Error("so2q requires q >= 2");
      d->n = q + 2;
      d->base = Algebra::R;
      d->split_rank = 2;
      d->dim = (q + 2) * (q + 1) / 2;
      d->has_form = false;
      d->Q = Mat::Identity(q + 2, q + 2);
      d->Q.bottomRightCorner(q, q) *= -1.0;
      d->z = Mat::Zero(q + 2, q + 2);
      d->z(0, 1) = 1.0;
      d->z(1, 0) = -1.0;
      d->pplus_scale = 1.0;
      break;
    }
  }
  d->params = params;

  d->basis = form_algebra_basis(d->Q, d->base);
  if (static_cast<int>(d->basis.size()) != d->dim) {
    throw Error("internal: basis of " + d->name() + " has dimension " + std::to_string(d->basis.size()) +
                ", expected " + std::to_string(d->dim));
  }
  return d;
}

std::vector<Mat> form_algebra_basis(const Mat& q, Algebra base) {
  LieAlgebraDescriptor d;
  d.n = static_cast<int>(q.rows());
  d.Q = q;
  d.base = base;
  std::vector<Mat> cands;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      Mat e = Mat::Zero(d.n, d.n);
      e(i, j) = 1.0;
      cands.push_back(project(d, e));
      cands.push_back(project(d, kI * e));
    }
  }
  return gram_schmidt(cands);
}

const std::vector<Mat>& basis(const LieAlgebraDescriptor& alg) {
  return static_cast<const DescriptorWithBasis&>(alg).basis;
}

Mat project(const LieAlgebraDescriptor& alg, const Mat& m) {
  const Mat qi = alg.Q.inverse();
  Mat x = 0.5 * (m - qi * m.adjoint() * alg.Q);
  if (alg.base == Algebra::R) x = x.real().cast<cplx>();
  if (alg.base == Algebra::H) {
    const Mat j = quaternionic_structure(alg.n / 2);
    x = 0.5 * (x + j * x.conjugate() * j.inverse());
  }
  return x;
}

bool contains(const LieAlgebraDescriptor& alg, const Mat& m, double tol) {
  if (m.rows() != alg.n || m.cols() != alg.n) {
    throw Error("matrix of size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                " does not fit " + alg.name() + " (size " + std::to_string(alg.n) + ")");
  }
  const double s = scale_of(m);
  switch (alg.family) {
    case Family::sp: {
      const int l = alg.params[0];
      if (!is_real(m, tol, s)) return false;
      const Mat a = m.topLeftCorner(l, l);
      const Mat b = m.topRightCorner(l, l);
      const Mat c = m.bottomLeftCorner(l, l);
      const Mat d = m.bottomRightCorner(l, l);
      return small(d + a.transpose(), tol, s) && small(b - b.transpose(), tol, s) &&
             small(c - c.transpose(), tol, s);
    }
    case Family::u: {
      const int p = alg.params[0];
      const int q = alg.params[1];
      const Mat a = m.topLeftCorner(p, p);
      const Mat b = m.topRightCorner(p, q);
      const Mat c = m.bottomLeftCorner(q, p);
      const Mat d = m.bottomRightCorner(q, q);
      return small(a + a.adjoint(), tol, s) && small(d + d.adjoint(), tol, s) && small(c - b.adjoint(), tol, s);
    }
    case Family::sostar: {
      const int n = alg.params[0];
      if (!has_quaternionic_structure(m, tol)) return false;
      const Mat a = m.topLeftCorner(n, n);
      const Mat b = -m.topRightCorner(n, n);
      return small(a + a.transpose(), tol, s) && small(b - b.adjoint(), tol, s);
    }
    case Family::so2q: {
      const int q = alg.params[0];
      if (!is_real(m, tol, s)) return false;
      const Mat a = m.topLeftCorner(2, 2);
      const Mat b = m.topRightCorner(2, q);
      const Mat c = m.bottomLeftCorner(q, 2);
      const Mat d = m.bottomRightCorner(q, q);
      return small(a + a.transpose(), tol, s) && small(d + d.transpose(), tol, s) &&
             small(c - b.transpose(), tol, s);
    }
  }
  return false;
}

bool contains(const LieAlgebraDescriptor& alg, const DAMatrix& m, double tol) {
  if (m.tag() != alg.base) throw Error("matrix is over the wrong base algebra for " + alg.name());
  return contains(alg, complex_rep(m), tol);
}

LieElement make_element(const AlgebraPtr& alg, Mat m, double tol) {
  if (!contains(*alg, m, tol)) throw Error("matrix is not an element of " + alg->name());
  return {alg, std::move(m)};
}

Mat k_part(const Mat& m) { return 0.5 * (m - m.adjoint()); }
Mat p_part(const Mat& m) { return 0.5 * (m + m.adjoint()); }

std::pair<LieElement, LieElement> cartan_split(const LieElement& x) {
  if (!contains(*x.alg, x.m)) throw Error("cartan_split: matrix is not an element of " + x.alg->name());
  return {{x.alg, k_part(x.m)}, {x.alg, p_part(x.m)}};
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat complex_structure(const LieAlgebraDescriptor& alg, const Mat& xp) { return commutator(alg.z, xp); }

Mat real_form_conjugate(const LieAlgebraDescriptor& alg, const Mat& w) {
  return -alg.Q.inverse() * w.adjoint() * alg.Q;
}

BForm b_x_form(const LieAlgebraDescriptor& alg, const Mat& x, double rel_tol) {
  if (!alg.has_form) throw Unsupported(alg.name() + " carries no hermitian form B");
  BForm out;
  out.form = -alg.J_V * x;
  const Inertia in = hermitian_inertia(out.form, rel_tol);
  const int div = alg.base == Algebra::H ? 2 : 1;
  out.rank = in.rank / div;
  out.positive = in.positive / div;
  out.negative = in.negative / div;
  out.signature = out.positive - out.negative;
  out.min_eigenvalue = in.min_eigenvalue;
  out.max_abs_eigenvalue = in.max_abs_eigenvalue;
  return out;
}

BForm b_x_form(const LieElement& x, double rel_tol) {
  if (!contains(*x.alg, x.m)) throw Error("b_x_form: matrix is not an element of " + x.alg->name());
  return b_x_form(*x.alg, x.m, rel_tol);
}

std::pair<int, int> pplus_shape(const LieAlgebraDescriptor& alg) {
  switch (alg.family) {
    case Family::sp: return {alg.params[0], alg.params[0]};
    case Family::u: return {alg.params[1], alg.params[0]};
    case Family::sostar: return {alg.params[0], alg.params[0]};
    case Family::so2q: return {alg.params[0], 1};
  }
  return {0, 0};
}

PPlusElement pplus_model(const LieAlgebraDescriptor& alg, const Mat& w) {
  const Mat wp = 0.5 * (w - alg.Q * w * alg.Q.inverse());
  PPlusElement out;
  out.family = alg.family;
  switch (alg.family) {
    case Family::sp: {
      const int l = alg.params[0];
      out.z = alg.pplus_scale * (wp.topLeftCorner(l, l) + kI * wp.topRightCorner(l, l));
      break;
    }
    case Family::u: {
      const int p = alg.params[0];
      const int q = alg.params[1];
      out.z = alg.pplus_scale * wp.topRightCorner(p, q).transpose();
      break;
    }
    case Family::sostar: {
      const int n = alg.params[0];
      out.z = alg.pplus_scale * (-kI * wp.topLeftCorner(n, n) + wp.topRightCorner(n, n));
      break;
    }
    case Family::so2q: {
      const int q = alg.params[0];
      out.z = alg.pplus_scale * (wp.block(0, 2, 1, q) - kI * wp.block(1, 2, 1, q)).transpose();
      break;
    }
  }
  return out;
}

PPlusElement to_p_plus(const LieElement& xp) { return pplus_model(*xp.alg, xp.m); }

Mat from_p_plus_matrix(const LieAlgebraDescriptor& alg, const PPlusElement& w) {
  const auto [rows, cols] = pplus_shape(alg);
  if (w.family != alg.family || w.z.rows() != rows || w.z.cols() != cols) {
    throw Error("p+ element does not match the model of " + alg.name());
  }
  const Mat y = w.z / alg.pplus_scale;
  const double s = scale_of(y);
  Mat x = Mat::Zero(alg.n, alg.n);
  switch (alg.family) {
    case Family::sp: {
      if (!small(y - y.transpose(), 1e-12, s)) throw Error("sp p+ model matrix must be symmetric");
      const int l = alg.params[0];
      const Mat sr = y.real().cast<cplx>();
      const Mat ti = y.imag().cast<cplx>();
      x.topLeftCorner(l, l) = sr;
      x.topRightCorner(l, l) = ti;
      x.bottomLeftCorner(l, l) = ti;
      x.bottomRightCorner(l, l) = -sr;
      break;
    }
    case Family::u: {
      const int p = alg.params[0];
      const int q = alg.params[1];
      const Mat b = y.transpose();
      x.topRightCorner(p, q) = b;
      x.bottomLeftCorner(q, p) = b.adjoint();
      break;
    }
    case Family::sostar: {
      if (!small(y + y.transpose(), 1e-12, s)) throw Error("so* p+ model matrix must be antisymmetric");
      const int n = alg.params[0];
      const Mat v = kI * y.real().cast<cplx>();
      const Mat wv = kI * y.imag().cast<cplx>();
      x.topLeftCorner(n, n) = v;
      x.topRightCorner(n, n) = wv;
      x.bottomLeftCorner(n, n) = wv;
      x.bottomRightCorner(n, n) = -v;
      break;
    }
    case Family::so2q: {
      const int q = alg.params[0];
      const Mat row_x = y.real().transpose().cast<cplx>();
      const Mat row_y = (-y.imag()).transpose().cast<cplx>();
      x.block(0, 2, 1, q) = row_x;
      x.block(1, 2, 1, q) = row_y;
      x.block(2, 0, q, 1) = row_x.transpose();
      x.block(2, 1, q, 1) = row_y.transpose();
      break;
    }
  }
  return x;
}

LieElement from_p_plus(const AlgebraPtr& alg, const PPlusElement& w) { return {alg, from_p_plus_matrix(*alg, w)}; }

std::vector<PPlusElement> pplus_units(const LieAlgebraDescriptor& alg) {
  std::vector<PPlusElement> out;
  const auto [rows, cols] = pplus_shape(alg);
  for (int j = 0; j < rows; ++j) {
    for (int k = 0; k < cols; ++k) {
      Mat unit = Mat::Zero(rows, cols);
      if (alg.family == Family::sp) {
        if (k < j) continue;
        unit(j, k) = 1.0;
        unit(k, j) = 1.0;
      } else if (alg.family == Family::sostar) {
        if (k <= j) continue;
        unit(j, k) = 1.0;
        unit(k, j) = -1.0;
      } else {
        unit(j, k) = 1.0;
      }
      out.push_back({alg.family, unit});
    }
  }
  return out;
}

Mat pplus_component(const LieAlgebraDescriptor& alg, const Mat& xp) {
  return 0.5 * (xp - kI * complex_structure(alg, xp));
}

std::vector<Mat> p_basis(const LieAlgebraDescriptor& alg) {
  std::vector<Mat> cands;
  for (const Mat& b : basis(alg)) cands.push_back(p_part(b));
  return gram_schmidt(cands);
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.alg != y.alg && (x.alg->family != y.alg->family || x.alg->params != y.alg->params)) {
    throw Error("bracket of elements from different algebras");
  }
  return {x.alg, commutator(x.m, y.m)};
}

cplx trace_c(const LieAlgebraDescriptor& alg, const Mat& m) {
  const cplx t = m.trace();
  return alg.base == Algebra::H ? 0.5 * t : t;
}

double trace_r(const LieAlgebraDescriptor& alg, const Mat& m) { return trace_c(alg, m).real(); }

Mat random_element(const LieAlgebraDescriptor& alg, Rng& rng, double norm) {
  const auto& b = basis(alg);
  Mat x = Mat::Zero(alg.n, alg.n);
  for (const Mat& e : b) x += rng.normal() * e;
  const double nx = x.norm();
  return nx > 0.0 ? Mat(x * (norm / nx)) : x;
}

Mat exp_matrix(const Mat& m) { return m.exp(); }

bool is_nilpotent(const Mat& x, double tol) {
  if (x.size() == 0) return true;
  const double nx = x.norm();
  if (nx == 0.0) return true;
  Eigen::ComplexEigenSolver<Mat> es(x, false);
  return es.eigenvalues().cwiseAbs().maxCoeff() <= std::sqrt(tol) * nx;
}

}  // namespace orbitkit
