#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "orbitkit/divalg.hpp"

namespace orbitkit {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kRankThreshold = 1e-8;

struct Inertia {
  int rank = 0;
  int positive = 0;
  int negative = 0;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

// Eigenvalues with modulus <= rel_tol * (largest modulus) count as zero.
Inertia hermitian_inertia(const Mat& h, double rel_tol = kRankThreshold);

int matrix_rank(const Mat& m, double rel_tol = kRankThreshold);
int matrix_rank(const Eigen::MatrixXd& m, double rel_tol = kRankThreshold);

// Orthonormal basis of the null space (columns).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol = kRankThreshold);

double max_abs(const Mat& m);

// Pfaffian of a complex antisymmetric matrix of even size.
cplx pfaffian(const Mat& a);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }
  Eigen::MatrixXd normal_matrix(int rows, int cols);
  Mat complex_normal_matrix(int rows, int cols);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace orbitkit
