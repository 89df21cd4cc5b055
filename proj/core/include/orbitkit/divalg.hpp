#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace orbitkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

enum class Algebra { R, C, H, O, OC };

std::string_view to_string(Algebra tag);
Algebra algebra_from_string(std::string_view name);

// Number of real coefficients: 1, 2, 4, 8, 16.
int coeff_count(Algebra tag);

// Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)) on
// coefficient arrays of length 2^k. Conjugation negates every non-real
// coefficient and never touches the scalar type T, so for T = complex the
// product and conjugation are complex-linear.
namespace cd {

template <class T>
void conj_into(const T* a, T* out, std::size_t n) {
  out[0] = a[0];
  for (std::size_t i = 1; i < n; ++i) out[i] = -a[i];
}

// n <= 8.
template <class T>
void mul_into(const T* a, const T* b, T* out, std::size_t n) {
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t h = n / 2;
  const T* p = a;
  const T* q = a + h;
  const T* r = b;
  const T* s = b + h;
  std::array<T, 16> buf{};
  T* sc = buf.data();
  T* rc = sc + h;
  T* t1 = rc + h;
  T* t2 = t1 + h;
  conj_into(s, sc, h);
  conj_into(r, rc, h);
  mul_into(p, r, t1, h);
  mul_into(sc, q, t2, h);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  mul_into(s, p, t1, h);
  mul_into(q, rc, t2, h);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace cd

template <class T>
using Octonion = std::array<T, 8>;

template <class T>
Octonion<T> oct_mul(const Octonion<T>& a, const Octonion<T>& b) {
  Octonion<T> out{};
  cd::mul_into(a.data(), b.data(), out.data(), 8);
  return out;
}

template <class T>
Octonion<T> oct_conj(const Octonion<T>& a) {
  Octonion<T> out{};
  cd::conj_into(a.data(), out.data(), 8);
  return out;
}

// n(a) = a conj(a), a scalar in the base field.
template <class T>
T oct_norm(const Octonion<T>& a) {
  T s{};
  for (const T& x : a) s += x * x;
  return s;
}

// t(a) = a + conj(a).
template <class T>
T oct_trace(const Octonion<T>& a) {
  return T(2) * a[0];
}

struct AlgebraElement {
  Algebra tag = Algebra::R;
  // OC stores the real octonion followed by the imaginary octonion.
  std::vector<double> coeffs = {0.0};

  AlgebraElement() = default;
  AlgebraElement(Algebra t, std::vector<double> c);

  static AlgebraElement zero(Algebra tag);
  static AlgebraElement one(Algebra tag);
  // k-th real basis unit (1, e1, e2, ...).
  static AlgebraElement unit(Algebra tag, int k);

  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(double s, const AlgebraElement& a);

AlgebraElement da_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement da_conj(const AlgebraElement& a);
cplx da_norm(const AlgebraElement& a);
cplx da_trace(const AlgebraElement& a);
double da_abs_max(const AlgebraElement& a);

struct ConjNormTrace {
  AlgebraElement conj;
  cplx norm;
  cplx trace;
};

ConjNormTrace da_conj_norm_trace(const AlgebraElement& a);

Octonion<double> to_octonion(const AlgebraElement& a);
Octonion<cplx> to_complex_octonion(const AlgebraElement& a);
AlgebraElement from_octonion(const Octonion<double>& o);
AlgebraElement from_complex_octonion(const Octonion<cplx>& o);

// Matrix over R, C or H. Quaternion entries are stored as (a0, a1, a2, a3)
// meaning a0 + a1 I + a2 J + a3 K with K = IJ.
class DAMatrix {
 public:
  DAMatrix(Algebra tag, int rows, int cols);

  Algebra tag() const { return tag_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  AlgebraElement operator()(int i, int j) const;
  void set(int i, int j, const AlgebraElement& v);

  DAMatrix operator*(const DAMatrix& other) const;
  DAMatrix operator+(const DAMatrix& other) const;
  DAMatrix operator-(const DAMatrix& other) const;
  // Conjugate transpose over the base algebra.
  DAMatrix adjoint() const;

  static DAMatrix identity(Algebra tag, int n);
  // Inverse of complex_rep; for H the input must have quaternionic structure.
  static DAMatrix from_complex_rep(Algebra tag, const Mat& m, double tol = 1e-9);

 private:
  std::array<double, 4>& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::array<double, 4>& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Algebra tag_;
  int rows_;
  int cols_;
  std::vector<std::array<double, 4>> data_;
};

// R and C map to the same-size complex matrix. H maps an m x n matrix
// Z + W J to the 2m x 2n block matrix [[Z, -W], [conj W, conj Z]].
Mat complex_rep(const DAMatrix& m);

// The antiunitary structure matrix [[0,-I],[I,0]] of size 2n.
Mat quaternionic_structure(int n);

// True iff m (2n x 2n) is the complex representation of a quaternion matrix.
bool has_quaternionic_structure(const Mat& m, double tol);

}  // namespace orbitkit
