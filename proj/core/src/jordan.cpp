#include "orbitkit/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

namespace {

using Oct = Octonion<cplx>;
using OctMatrix = std::array<std::array<Oct, 3>, 3>;

Oct scalar(cplx v) {
  Oct o{};
  o[0] = v;
  return o;
}

Oct add(const Oct& x, const Oct& y) {
  Oct o{};
  for (int i = 0; i < 8; ++i) o[i] = x[i] + y[i];
  return o;
}

OctMatrix to_matrix(const AlbertElement& x) {
  OctMatrix m{};
  m[0][0] = scalar(x.alpha[0]);
  m[1][1] = scalar(x.alpha[1]);
  m[2][2] = scalar(x.alpha[2]);
  m[0][1] = x.a[2];
  m[1][0] = oct_conj(x.a[2]);
  m[1][2] = x.a[0];
  m[2][1] = oct_conj(x.a[0]);
  m[2][0] = x.a[1];
  m[0][2] = oct_conj(x.a[1]);
  return m;
}

OctMatrix mul(const OctMatrix& x, const OctMatrix& y) {
  OctMatrix m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] = add(m[i][j], oct_mul(x[i][k], y[k][j]));
  return m;
}

void check_field(Algebra f) {
  if (f != Algebra::R && f != Algebra::C) throw Error("Albert element field must be R or C");
}

}  // namespace

AlbertElement AlbertElement::identity(Algebra field) { return diag(1.0, 1.0, 1.0, field); }

AlbertElement AlbertElement::diag(cplx a1, cplx a2, cplx a3, Algebra field) {
  check_field(field);
  AlbertElement x;
  x.field = field;
  x.alpha = {a1, a2, a3};
  return x;
}

AlbertElement operator+(const AlbertElement& x, const AlbertElement& y) {
  if (x.field != y.field) throw Error("Albert elements over different fields");
  AlbertElement out = x;
  for (int i = 0; i < 3; ++i) {
    out.alpha[i] += y.alpha[i];
    out.a[i] = add(x.a[i], y.a[i]);
  }
  return out;
}

AlbertElement operator*(cplx s, const AlbertElement& x) {
  AlbertElement out = x;
  for (int i = 0; i < 3; ++i) {
    out.alpha[i] *= s;
    for (cplx& c : out.a[i]) c *= s;
  }
  return out;
}

AlbertElement operator-(const AlbertElement& x, const AlbertElement& y) { return x + cplx(-1.0) * y; }

double max_abs(const AlbertElement& x) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    m = std::max(m, std::abs(x.alpha[i]));
    for (const cplx& c : x.a[i]) m = std::max(m, std::abs(c));
  }
  return m;
}

AlbertElement jordan_product(const AlbertElement& x, const AlbertElement& y) {
  check_field(x.field);
  if (x.field != y.field) throw Error("jordan_product: field mismatch");
  const OctMatrix mx = to_matrix(x);
  const OctMatrix my = to_matrix(y);
  const OctMatrix xy = mul(mx, my);
  const OctMatrix yx = mul(my, mx);
  auto sym = [&](int i, int j) {
    Oct o{};
    for (int k = 0; k < 8; ++k) o[k] = 0.5 * (xy[i][j][k] + yx[i][j][k]);
    return o;
  };
  AlbertElement out;
  out.field = x.field;
  for (int i = 0; i < 3; ++i) out.alpha[i] = sym(i, i)[0];
  out.a[0] = sym(1, 2);
  out.a[1] = sym(2, 0);
  out.a[2] = sym(0, 1);
  return out;
}

cplx generic_norm(const AlbertElement& x) {
  const auto& al = x.alpha;
  const auto& a = x.a;
  return al[0] * al[1] * al[2] + oct_trace(oct_mul(oct_mul(a[2], a[0]), a[1])) - al[0] * oct_norm(a[0]) -
         al[1] * oct_norm(a[1]) - al[2] * oct_norm(a[2]);
}

AlbertElement freudenthal_adjoint(const AlbertElement& x) {
  AlbertElement out;
  out.field = x.field;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    out.alpha[i] = x.alpha[j] * x.alpha[k] - oct_norm(x.a[i]);
    const Oct prod = oct_conj(oct_mul(x.a[j], x.a[k]));
    for (int c = 0; c < 8; ++c) out.a[i][c] = prod[c] - x.alpha[i] * x.a[i][c];
  }
  return out;
}

int albert_rank(const AlbertElement& x, double tol) {
  const double s = max_abs(x);
  if (s == 0.0) return 0;
  if (std::abs(generic_norm(x)) > tol * s * s * s) return 3;
  if (max_abs(freudenthal_adjoint(x)) > tol * s * s) return 2;
  return 1;
}

int jordan_rank_classical(const LieAlgebraDescriptor& alg, const PPlusElement& w, double rel_tol) {
  if (w.family != alg.family) throw Error("jordan_rank_classical: p+ element belongs to another family");
  switch (alg.family) {
    case Family::sp:
    case Family::u:
      return matrix_rank(w.z, rel_tol);
    case Family::sostar: {
      const int r = matrix_rank(w.z, rel_tol);
      if (r % 2 != 0) throw Error("internal: antisymmetric p+ matrix with odd rank " + std::to_string(r));
      return r / 2;
    }
    case Family::so2q: {
      const double nw = w.z.norm();
      if (nw == 0.0) return 0;
      const cplx quad = (w.z.transpose() * w.z)(0, 0);
      return std::abs(quad) <= rel_tol * nw * nw ? 1 : 2;
    }
  }
  return 0;
}

bool is_regular(const LieAlgebraDescriptor& alg) {
  switch (alg.family) {
    case Family::sp:
    case Family::so2q:
      return true;
    case Family::u:
      return alg.params[0] == alg.params[1];
    case Family::sostar:
      return alg.params[0] % 2 == 0;
  }
  return false;
}

cplx fundamental_invariant(const LieAlgebraDescriptor& alg, const PPlusElement& w) {
  if (w.family != alg.family) throw Error("fundamental_invariant: p+ element belongs to another family");
  switch (alg.family) {
    case Family::sp:
      return w.z.determinant();
    case Family::u:
      if (alg.params[0] != alg.params[1]) throw Unsupported("fundamental invariant needs u(p,p); got " + alg.name());
      return w.z.determinant();
    case Family::sostar:
      if (alg.params[0] % 2 != 0) throw Unsupported("fundamental invariant needs so*(4l); got " + alg.name());
      return pfaffian(w.z);
    case Family::so2q:
      return (w.z.transpose() * w.z)(0, 0);
  }
  return 0.0;
}

}  // namespace orbitkit
