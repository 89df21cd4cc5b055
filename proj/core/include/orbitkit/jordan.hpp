#pragma once

#include <array>

#include "orbitkit/divalg.hpp"
#include "orbitkit/liealg.hpp"

namespace orbitkit {

// Hermitian 3x3 octonion matrix
//   [[alpha1, a3, conj a2], [conj a3, alpha2, a1], [a2, conj a1, alpha3]]
// over K = R or C. For K = R every imaginary part is zero.
struct AlbertElement {
  Algebra field = Algebra::C;
  std::array<cplx, 3> alpha{};
  std::array<Octonion<cplx>, 3> a{};

  static AlbertElement identity(Algebra field = Algebra::C);
  static AlbertElement diag(cplx a1, cplx a2, cplx a3, Algebra field = Algebra::C);
};

AlbertElement operator+(const AlbertElement& x, const AlbertElement& y);
AlbertElement operator-(const AlbertElement& x, const AlbertElement& y);
AlbertElement operator*(cplx s, const AlbertElement& x);

double max_abs(const AlbertElement& x);

// x o y = (xy + yx) / 2.
AlbertElement jordan_product(const AlbertElement& x, const AlbertElement& y);

// nu(A) = a1 a2 a3 + t(a3 a1 a2) - sum alpha_i n(a_i).
cplx generic_norm(const AlbertElement& x);

// A# with A o A# = nu(A) I.
AlbertElement freudenthal_adjoint(const AlbertElement& x);

// 3 if nu != 0, 2 if A# != 0, 1 if A != 0, else 0 (relative tolerance).
int albert_rank(const AlbertElement& x, double tol = kDefaultTolerance);

int jordan_rank_classical(const LieAlgebraDescriptor& alg, const PPlusElement& w, double rel_tol = kRankThreshold);

// Determinant (sp, u(p,p)), Pfaffian (so*(4l)) or sum of squares (so(2,q)).
cplx fundamental_invariant(const LieAlgebraDescriptor& alg, const PPlusElement& w);
bool is_regular(const LieAlgebraDescriptor& alg);

}  // namespace orbitkit
