#include "orbitkit/poisson.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

double half_trace_pairing(const LieAlgebraDescriptor& alg, const Mat& a, const Mat& b) {
  return 0.5 * trace_r(alg, a * b);
}

cplx half_trace_pairing_c(const LieAlgebraDescriptor& alg, const Mat& a, const Mat& b) {
  return 0.5 * trace_c(alg, a * b);
}

PoissonContext make_poisson_context(const AlgebraPtr& alg, std::vector<Mat> custom_basis) {
  PoissonContext ctx;
  ctx.alg = alg;
  ctx.basis = custom_basis.empty() ? basis(*alg) : std::move(custom_basis);
  const int d = static_cast<int>(ctx.basis.size());
  for (const Mat& b : ctx.basis) {
    if (!contains(*alg, b)) throw Error("poisson context: basis element outside " + alg->name());
  }
  ctx.pairing.resize(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) ctx.pairing(a, b) = half_trace_pairing(*alg, ctx.basis[a], ctx.basis[b]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(ctx.pairing);
  if (!lu.isInvertible()) throw Error("poisson context: half-trace pairing is degenerate on the basis");
  ctx.pairing_inv = lu.inverse();

  // Expansion coefficients in the basis: solve P c = (<b_k, m>)_k.
  ctx.structure.assign(static_cast<std::size_t>(d), Eigen::MatrixXd::Zero(d, d));
  Eigen::VectorXd rhs(d);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const Mat c = commutator(ctx.basis[a], ctx.basis[b]);
      for (int k = 0; k < d; ++k) rhs(k) = half_trace_pairing(*alg, ctx.basis[k], c);
      const Eigen::VectorXd coef = ctx.pairing_inv * rhs;
      for (int k = 0; k < d; ++k) {
        ctx.structure[k](a, b) = coef(k);
        ctx.structure[k](b, a) = -coef(k);
      }
    }
  }
  return ctx;
}

Eigen::VectorXd coordinates(const PoissonContext& ctx, const Mat& xi) {
  const int d = static_cast<int>(ctx.basis.size());
  Eigen::VectorXd rhs(d);
  for (int k = 0; k < d; ++k) rhs(k) = half_trace_pairing(*ctx.alg, ctx.basis[k], xi);
  return ctx.pairing_inv * rhs;
}

double jacobi_residual(const PoissonContext& ctx) {
  const int d = static_cast<int>(ctx.basis.size());
  double worst = 0.0;
  auto c = [&](int a, int b, int k) { return ctx.structure[k](a, b); };
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (int cc = b + 1; cc < d; ++cc) {
        for (int out = 0; out < d; ++out) {
          double s = 0.0;
          for (int e = 0; e < d; ++e) {
            s += c(a, b, e) * c(e, cc, out) + c(b, cc, e) * c(e, a, out) + c(cc, a, e) * c(e, b, out);
          }
          worst = std::max(worst, std::abs(s));
        }
      }
    }
  }
  return worst;
}

double lie_poisson_bracket(const PoissonContext& ctx, const Mat& a, const Mat& b, const Mat& xi) {
  return half_trace_pairing(*ctx.alg, commutator(a, b), xi);
}

namespace {

Mat dual_element(const PoissonContext& ctx, int i) {
  Mat d = Mat::Zero(ctx.alg->n, ctx.alg->n);
  for (std::size_t k = 0; k < ctx.basis.size(); ++k) d += ctx.pairing_inv(i, static_cast<int>(k)) * ctx.basis[k];
  return d;
}

}  // namespace

double coordinate_bracket(const PoissonContext& ctx, int i, int j, const Mat& xi) {
  return lie_poisson_bracket(ctx, dual_element(ctx, i), dual_element(ctx, j), xi);
}

double coordinate_bracket_structure(const PoissonContext& ctx, int i, int j, const Eigen::VectorXd& x) {
  // <[d_i, d_j], b_k> = sum_{a,b,c} Pinv_ia Pinv_jb c_ab^c P_ck
  const int d = static_cast<int>(ctx.basis.size());
  Eigen::VectorXd coef = Eigen::VectorXd::Zero(d);
  for (int c = 0; c < d; ++c) coef(c) = ctx.pairing_inv.row(i) * ctx.structure[c] * ctx.pairing_inv.row(j).transpose();
  const Eigen::VectorXd paired = ctx.pairing.transpose() * coef;
  return paired.dot(x);
}

std::vector<Mat> zeta_basis(const LieAlgebraDescriptor& alg) {
  std::vector<Mat> out;
  for (const PPlusElement& unit : pplus_units(alg)) out.push_back(pplus_component(alg, from_p_plus_matrix(alg, unit)));
  return out;
}

PPlusBrackets pplus_bracket_matrix(const PoissonContext& ctx, const Mat& xi) {
  const auto& alg = *ctx.alg;
  const std::vector<Mat> w = zeta_basis(alg);
  const auto m = static_cast<Eigen::Index>(w.size());
  PPlusBrackets out{Mat::Zero(m, m), Mat::Zero(m, m)};
  std::vector<Mat> wbar;
  wbar.reserve(w.size());
  for (const Mat& x : w) wbar.push_back(real_form_conjugate(alg, x));
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      out.zeta_zeta(j, k) = half_trace_pairing_c(alg, commutator(w[j], w[k]), xi);
      out.zeta_zetabar(j, k) = half_trace_pairing_c(alg, commutator(w[j], wbar[k]), xi);
    }
  }
  return out;
}

cplx evaluate(const LieAlgebraDescriptor& alg, const Polynomial& f, const Mat& xi) {
  cplx total = 0.0;
  for (const Monomial& mono : f) {
    cplx v = mono.coeff;
    for (const Mat& a : mono.factors) v *= half_trace_pairing_c(alg, a, xi);
    total += v;
  }
  return total;
}

cplx poisson_bracket(const LieAlgebraDescriptor& alg, const Polynomial& f, const Polynomial& g, const Mat& xi) {
  cplx total = 0.0;
  for (const Monomial& mf : f) {
    if (static_cast<int>(mf.factors.size()) > kMaxPolynomialDegree) throw Error("polynomial degree exceeds cap");
    std::vector<cplx> fv;
    for (const Mat& a : mf.factors) fv.push_back(half_trace_pairing_c(alg, a, xi));
    for (const Monomial& mg : g) {
      if (static_cast<int>(mg.factors.size()) > kMaxPolynomialDegree) throw Error("polynomial degree exceeds cap");
      std::vector<cplx> gv;
      for (const Mat& b : mg.factors) gv.push_back(half_trace_pairing_c(alg, b, xi));
      for (std::size_t i = 0; i < mf.factors.size(); ++i) {
        for (std::size_t j = 0; j < mg.factors.size(); ++j) {
          cplx term = mf.coeff * mg.coeff * half_trace_pairing_c(alg, commutator(mf.factors[i], mg.factors[j]), xi);
          for (std::size_t a = 0; a < fv.size(); ++a)
            if (a != i) term *= fv[a];
          for (std::size_t b = 0; b < gv.size(); ++b)
            if (b != j) term *= gv[b];
          total += term;
        }
      }
    }
  }
  return total;
}

double contraction_bracket(const ContractionModel& m, double x1, double x2) {
  if (m.eps < 0.0) throw Error("contraction parameter must be non-negative");
  return (m.sign >= 0 ? 1.0 : -1.0) * std::sqrt(m.eps * m.eps + x1 * x1 + x2 * x2);
}

MetricCurvature model_metric_and_curvature(const ContractionModel& m, cplx zeta) {
  if (m.eps < 0.0) throw Error("contraction parameter must be non-negative");
  const double r2 = std::norm(zeta);
  const double e2 = m.eps * m.eps;
  if (e2 + r2 == 0.0) throw Error("metric is singular at zeta = 0 when eps = 0");
  return {1.0 / std::sqrt(e2 + r2), -e2 / std::pow(e2 + r2, 2.5)};
}

std::pair<double, double> stereographic(double eps, double x1, double x2) {
  if (eps <= 0.0) throw Error("stereographic map needs eps > 0");
  const double x0 = std::sqrt(eps * eps + x1 * x1 + x2 * x2);
  const double d = 1.0 + x0 / eps;
  return {x1 / d, x2 / d};
}

double disc_model_bracket(double eps, double y1, double y2) {
  if (eps <= 0.0) throw Error("disc model needs eps > 0");
  const double r2 = y1 * y1 + y2 * y2;
  if (r2 >= eps * eps) throw Error("point lies outside the disc of radius eps");
  const double f = 1.0 - r2 / (eps * eps);
  return 0.25 * eps * f * f;
}

double s1_energy(const LieElement& x) {
  if (!contains(*x.alg, x.m)) throw Error("s1_energy: matrix is not an element of " + x.alg->name());
  return -0.5 * trace_r(*x.alg, x.alg->z * x.m);
}

std::vector<Mat> sl2_basis() {
  Mat e = Mat::Zero(2, 2);
  Mat f = Mat::Zero(2, 2);
  Mat h = Mat::Zero(2, 2);
  e(0, 1) = 1.0;
  f(1, 0) = 1.0;
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  return {e - f, e + f, h};
}

}  // namespace orbitkit
