#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/classify.hpp"
#include "orbitkit/liealg.hpp"

namespace orbitkit {

enum class DualPairCase {
  o_sp,       // O(s', s'') with sp(l, R)
  u_u,        // U(s', s'') with u(p, q)
  sp_sostar,  // Sp(s', s'') with so*(2n)
  sp_so2q,    // Sp(s, R) with so(2, q)
};

std::string_view to_string(DualPairCase c);
DualPairCase dual_pair_case_from_string(std::string_view name);

// W = Hom(V^s, V) in the working representation: alpha is an n x m complex
// matrix (n = target size; m = s, 2s for quaternions or for Sp(s,R)).
struct DualPairConfig {
  DualPairCase kind = DualPairCase::o_sp;
  int s_prime = 0;
  int s_second = 0;
  AlgebraPtr target;
  Mat source_form;  // S = diag(I_s', -I_s'') (or its quaternionic/symplectic analogue)
  Algebra base = Algebra::R;
  int rows = 0;
  int cols = 0;

  int s() const { return s_prime + s_second; }
  bool compact() const { return kind != DualPairCase::sp_so2q && s_second == 0; }
  int w_real_dim() const;
};

DualPairConfig make_dual_pair(DualPairCase kind, int s_prime, int s_second, std::vector<int> target_params);

struct InterlacingMap {
  const DualPairConfig* config = nullptr;
  Mat alpha;
};

// alpha-dagger = S^-1 alpha^* J_V (source form inverse, adjoint, target form).
Mat dagger(const DualPairConfig& cfg, const Mat& alpha);
Mat mu_h(const DualPairConfig& cfg, const Mat& alpha);  // -alpha-dagger alpha
Mat mu_g(const DualPairConfig& cfg, const Mat& alpha);  // alpha alpha-dagger
double omega_w(const DualPairConfig& cfg, const Mat& alpha, const Mat& beta);

// Real basis of W, orthonormal for Re tr(A* B).
std::vector<Mat> w_basis(const DualPairConfig& cfg);
// Real basis of the Lie algebra of H acting on V^s.
std::vector<Mat> h_basis(const DualPairConfig& cfg);

// Quadratic Hamiltonians on the symplectic vector space R^{2m} with the form
// omega(a, b) = b^T J a.
double quadratic_hamiltonian(const Mat& x, const Eigen::VectorXd& v);
Mat rank_one_moment(const Eigen::VectorXd& v);

std::vector<Mat> sample_zero_level(const DualPairConfig& cfg, int count, std::uint64_t seed);
// Samples with mu_H(alpha) in the sp(1,R) nilcone (Sp(1,R), so(2,q) only).
std::vector<Mat> sample_nilcone_level(const DualPairConfig& cfg, int count, std::uint64_t seed);
// The two explicit interlacing maps whose images give the first two triples of so(2,q).
std::pair<Mat, Mat> so2q_reference_maps(const DualPairConfig& cfg);

struct ReductionHistogram {
  std::map<std::pair<int, int>, int> counts;
  int unclassified = 0;
  int samples = 0;
  double max_zero_level_residual = 0.0;
};

ReductionHistogram reduce_and_classify(const DualPairConfig& cfg, int count, std::uint64_t seed,
                                       const ClassifyOptions& opt = {});

struct InvariantQuadratics {
  int dim = 0;          // dimension of H-invariant quadratic forms on W
  int mu_span = 0;      // rank of the span of the components of mu_G
  int dim_g = 0;
};

InvariantQuadratics invariant_quadratics_dim(const DualPairConfig& cfg);

struct SemisimpleReduction {
  bool passed = false;
  int samples = 0;
  double max_level_residual = 0.0;  // ||mu_H(alpha) + eps J_V||
};

SemisimpleReduction semisimple_reduction_check(const DualPairConfig& cfg, double eps, int count, std::uint64_t seed);

}  // namespace orbitkit
