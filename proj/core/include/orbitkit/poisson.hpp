#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

// Linear coordinates on g identified with g* through the half-trace pairing
// <a, b> = trace_r(ab) / 2.
struct PoissonContext {
  AlgebraPtr alg;
  std::vector<Mat> basis;
  Eigen::MatrixXd pairing;       // P_ab
  Eigen::MatrixXd pairing_inv;
  // structure[c](a, b) = c_ab^c with [b_a, b_b] = sum_c c_ab^c b_c
  std::vector<Eigen::MatrixXd> structure;
};

PoissonContext make_poisson_context(const AlgebraPtr& alg, std::vector<Mat> custom_basis = {});

double half_trace_pairing(const LieAlgebraDescriptor& alg, const Mat& a, const Mat& b);
cplx half_trace_pairing_c(const LieAlgebraDescriptor& alg, const Mat& a, const Mat& b);

// Coordinates of xi in the context basis.
Eigen::VectorXd coordinates(const PoissonContext& ctx, const Mat& xi);

// Largest |c_ab^e c_ec^d + cyclic|.
double jacobi_residual(const PoissonContext& ctx);

// {mu_a, mu_b}(xi) = <[a, b], xi>.
double lie_poisson_bracket(const PoissonContext& ctx, const Mat& a, const Mat& b, const Mat& xi);

// Bracket of the coordinate functions x_i, x_j at xi, directly and through
// the structure constants.
double coordinate_bracket(const PoissonContext& ctx, int i, int j, const Mat& xi);
double coordinate_bracket_structure(const PoissonContext& ctx, int i, int j, const Eigen::VectorXd& x);

// Elements w_j of p+ whose pairings zeta_j = <w_j, .> are the holomorphic coordinates.
std::vector<Mat> zeta_basis(const LieAlgebraDescriptor& alg);

struct PPlusBrackets {
  Mat zeta_zeta;      // [{zeta_j, zeta_k}]
  Mat zeta_zetabar;   // [{zeta_j, conj zeta_k}]
};

PPlusBrackets pplus_bracket_matrix(const PoissonContext& ctx, const Mat& xi);

// Products of linear functions <f_i, .> with a complex coefficient.
struct Monomial {
  cplx coeff = 1.0;
  std::vector<Mat> factors;
};
using Polynomial = std::vector<Monomial>;

inline constexpr int kMaxPolynomialDegree = 4;

cplx evaluate(const LieAlgebraDescriptor& alg, const Polynomial& f, const Mat& xi);
// Leibniz rule from the linear brackets.
cplx poisson_bracket(const LieAlgebraDescriptor& alg, const Polynomial& f, const Polynomial& g, const Mat& xi);

struct ContractionModel {
  double eps = 1.0;
  int sign = 1;
};

double contraction_bracket(const ContractionModel& m, double x1, double x2);

struct MetricCurvature {
  double metric = 0.0;
  double curvature = 0.0;
};

MetricCurvature model_metric_and_curvature(const ContractionModel& m, cplx zeta);

// (y1, y2) = (x1, x2) / (1 + x0 / eps), x0 = sqrt(eps^2 + x1^2 + x2^2).
std::pair<double, double> stereographic(double eps, double x1, double x2);
// Requires y1^2 + y2^2 < eps^2.
double disc_model_bracket(double eps, double y1, double y2);

// Momentum of the central circle, signed to be positive on holomorphic orbits.
double s1_energy(const LieElement& x);

// E - F, E + F, H in sp(1,R).
std::vector<Mat> sl2_basis();

}  // namespace orbitkit
