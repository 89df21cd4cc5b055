#include "orbitkit/divalg.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

std::string_view to_string(Algebra tag) {
  switch (tag) {
    case Algebra::R: return "R";
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
    case Algebra::OC: return "OC";
  }
  return "?";
}

Algebra algebra_from_string(std::string_view name) {
  if (name == "R") return Algebra::R;
  if (name == "C") return Algebra::C;
  if (name == "H") return Algebra::H;
  if (name == "O") return Algebra::O;
  if (name == "OC") return Algebra::OC;
  throw Error("unknown algebra tag '" + std::string(name) + "'");
}

int coeff_count(Algebra tag) {
  switch (tag) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
    case Algebra::OC: return 16;
  }
  return 0;
}

AlgebraElement::AlgebraElement(Algebra t, std::vector<double> c) : tag(t), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != coeff_count(tag)) {
    throw Error("algebra element of type " + std::string(to_string(tag)) + " needs " +
                std::to_string(coeff_count(tag)) + " coefficients, got " +
                std::to_string(coeffs.size()));
  }
}

AlgebraElement AlgebraElement::zero(Algebra tag) {
  return AlgebraElement(tag, std::vector<double>(static_cast<std::size_t>(coeff_count(tag)), 0.0));
}

AlgebraElement AlgebraElement::one(Algebra tag) { return unit(tag, 0); }

AlgebraElement AlgebraElement::unit(Algebra tag, int k) {
  const int dim = tag == Algebra::OC ? 8 : coeff_count(tag);
  if (k < 0 || k >= dim) throw Error("basis unit index out of range");
  AlgebraElement e = zero(tag);
  e.coeffs[static_cast<std::size_t>(k)] = 1.0;
  return e;
}

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.tag != b.tag) {
    throw Error("algebra tag mismatch: " + std::string(to_string(a.tag)) + " vs " +
                std::string(to_string(b.tag)));
  }
}

std::vector<cplx> as_complex_coeffs(const AlgebraElement& a) {
  if (a.tag == Algebra::OC) {
    std::vector<cplx> out(8);
    for (std::size_t i = 0; i < 8; ++i) out[i] = {a.coeffs[i], a.coeffs[8 + i]};
    return out;
  }
  return {a.coeffs.begin(), a.coeffs.end()};
}

AlgebraElement from_complex_coeffs(Algebra tag, const std::vector<cplx>& c) {
  AlgebraElement out = AlgebraElement::zero(tag);
  if (tag == Algebra::OC) {
    for (std::size_t i = 0; i < 8; ++i) {
      out.coeffs[i] = c[i].real();
      out.coeffs[8 + i] = c[i].imag();
    }
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) out.coeffs[i] = c[i].real();
  }
  return out;
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

AlgebraElement operator*(double s, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (double& c : out.coeffs) c *= s;
  return out;
}

AlgebraElement da_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  if (a.tag == Algebra::OC) {
    return from_complex_octonion(oct_mul(to_complex_octonion(a), to_complex_octonion(b)));
  }
  const std::size_t n = a.coeffs.size();
  AlgebraElement out = AlgebraElement::zero(a.tag);
  cd::mul_into(a.coeffs.data(), b.coeffs.data(), out.coeffs.data(), n);
  return out;
}

AlgebraElement da_conj(const AlgebraElement& a) {
  if (a.tag == Algebra::OC) return from_complex_octonion(oct_conj(to_complex_octonion(a)));
  AlgebraElement out = a;
  cd::conj_into(a.coeffs.data(), out.coeffs.data(), a.coeffs.size());
  return out;
}

cplx da_norm(const AlgebraElement& a) {
  cplx s = 0.0;
  for (const cplx& c : as_complex_coeffs(a)) s += c * c;
  return s;
}

cplx da_trace(const AlgebraElement& a) { return 2.0 * as_complex_coeffs(a)[0]; }

double da_abs_max(const AlgebraElement& a) {
  double m = 0.0;
  for (double c : a.coeffs) m = std::max(m, std::abs(c));
  return m;
}

ConjNormTrace da_conj_norm_trace(const AlgebraElement& a) {
  return {da_conj(a), da_norm(a), da_trace(a)};
}

Octonion<double> to_octonion(const AlgebraElement& a) {
  if (a.tag == Algebra::OC) throw Error("complex octonion cannot be narrowed to a real octonion");
  Octonion<double> o{};
  std::copy(a.coeffs.begin(), a.coeffs.end(), o.begin());
  return o;
}

Octonion<cplx> to_complex_octonion(const AlgebraElement& a) {
  Octonion<cplx> o{};
  const auto c = as_complex_coeffs(a);
  std::copy(c.begin(), c.end(), o.begin());
  return o;
}

AlgebraElement from_octonion(const Octonion<double>& o) {
  return AlgebraElement(Algebra::O, std::vector<double>(o.begin(), o.end()));
}

AlgebraElement from_complex_octonion(const Octonion<cplx>& o) {
  return from_complex_coeffs(Algebra::OC, std::vector<cplx>(o.begin(), o.end()));
}

DAMatrix::DAMatrix(Algebra tag, int rows, int cols)
    : tag_(tag), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (tag != Algebra::R && tag != Algebra::C && tag != Algebra::H) {
    throw Error("matrices are supported over R, C and H only");
  }
  if (rows <= 0 || cols <= 0) throw Error("matrix dimensions must be positive");
}

AlgebraElement DAMatrix::operator()(int i, int j) const {
  const auto& e = at(i, j);
  const int n = coeff_count(tag_);
  return AlgebraElement(tag_, std::vector<double>(e.begin(), e.begin() + n));
}

void DAMatrix::set(int i, int j, const AlgebraElement& v) {
  if (v.tag != tag_) throw Error("entry tag does not match matrix tag");
  auto& e = at(i, j);
  e.fill(0.0);
  std::copy(v.coeffs.begin(), v.coeffs.end(), e.begin());
}

DAMatrix DAMatrix::operator*(const DAMatrix& other) const {
  if (tag_ != other.tag_) throw Error("matrix tag mismatch");
  if (cols_ != other.rows_) throw Error("matrix shape mismatch in product");
  DAMatrix out(tag_, rows_, other.cols_);
  const std::size_t n = static_cast<std::size_t>(coeff_count(tag_));
  std::array<double, 4> tmp{};
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      auto& acc = out.at(i, j);
      for (int k = 0; k < cols_; ++k) {
        cd::mul_into(at(i, k).data(), other.at(k, j).data(), tmp.data(), n);
        for (std::size_t c = 0; c < n; ++c) acc[c] += tmp[c];
      }
    }
  }
  return out;
}

DAMatrix DAMatrix::operator+(const DAMatrix& other) const {
  if (tag_ != other.tag_ || rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error("matrix mismatch in sum");
  }
  DAMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) out.data_[i][c] += other.data_[i][c];
  }
  return out;
}

DAMatrix DAMatrix::operator-(const DAMatrix& other) const {
  if (tag_ != other.tag_ || rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error("matrix mismatch in difference");
  }
  DAMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) out.data_[i][c] -= other.data_[i][c];
  }
  return out;
}

DAMatrix DAMatrix::adjoint() const {
  DAMatrix out(tag_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(j, i, da_conj((*this)(i, j)));
  }
  return out;
}

DAMatrix DAMatrix::identity(Algebra tag, int n) {
  DAMatrix out(tag, n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, AlgebraElement::one(tag));
  return out;
}

DAMatrix DAMatrix::from_complex_rep(Algebra tag, const Mat& m, double tol) {
  if (tag == Algebra::R) {
    if (m.imag().cwiseAbs().maxCoeff() > tol) throw Error("matrix is not real");
    DAMatrix out(tag, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < out.rows_; ++i)
      for (int j = 0; j < out.cols_; ++j) out.at(i, j)[0] = m(i, j).real();
    return out;
  }
  if (tag == Algebra::C) {
    DAMatrix out(tag, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < out.rows_; ++i) {
      for (int j = 0; j < out.cols_; ++j) {
        out.at(i, j)[0] = m(i, j).real();
        out.at(i, j)[1] = m(i, j).imag();
      }
    }
    return out;
  }
  if (tag != Algebra::H) throw Error("matrices are supported over R, C and H only");
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) throw Error("complex representation has odd size");
  const int r = static_cast<int>(m.rows() / 2);
  const int c = static_cast<int>(m.cols() / 2);
  const Mat z = m.topLeftCorner(r, c);
  const Mat w = -m.topRightCorner(r, c);
  const double dev = std::max((m.bottomLeftCorner(r, c) - w.conjugate()).cwiseAbs().maxCoeff(),
                              (m.bottomRightCorner(r, c) - z.conjugate()).cwiseAbs().maxCoeff());
  if (dev > tol * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw Error("matrix lacks quaternionic structure");
  }
  DAMatrix out(tag, r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      out.at(i, j) = {z(i, j).real(), z(i, j).imag(), w(i, j).real(), w(i, j).imag()};
    }
  }
  return out;
}

Mat complex_rep(const DAMatrix& m) {
  const int r = m.rows();
  const int c = m.cols();
  if (m.tag() != Algebra::H) {
    Mat out(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        const auto e = m(i, j);
        out(i, j) = {e.coeffs[0], m.tag() == Algebra::C ? e.coeffs[1] : 0.0};
      }
    }
    return out;
  }
  Mat out = Mat::Zero(2 * r, 2 * c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      const auto e = m(i, j);
      const cplx z(e.coeffs[0], e.coeffs[1]);
      const cplx w(e.coeffs[2], e.coeffs[3]);
      out(i, j) = z;
      out(i, c + j) = -w;
      out(r + i, j) = std::conj(w);
      out(r + i, c + j) = std::conj(z);
    }
  }
  return out;
}

Mat quaternionic_structure(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return j;
}

bool has_quaternionic_structure(const Mat& m, double tol) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) return false;
  const Mat jl = quaternionic_structure(static_cast<int>(m.rows() / 2));
  const Mat jr = quaternionic_structure(static_cast<int>(m.cols() / 2));
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (jl * m.conjugate() - m * jr).cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace orbitkit
