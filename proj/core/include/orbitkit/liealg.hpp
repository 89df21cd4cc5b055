#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/divalg.hpp"
#include "orbitkit/linalg.hpp"

namespace orbitkit {

enum class Family { sp, u, sostar, so2q };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

// Every algebra is realized inside complex N x N matrices. Real families have
// zero imaginary part; so*(2n) is carried by the 2n x 2n complex
// representation of its n x n quaternion matrices.
struct LieAlgebraDescriptor {
  Family family = Family::sp;
  std::vector<int> params;
  int n = 0;          // ambient working matrix size
  Algebra base = Algebra::R;
  int split_rank = 0;
  int dim = 0;
  bool has_form = true;  // false for so(2,q), which carries no hermitian form
  Mat J_V;               // empty when has_form is false
  Mat Q;                 // the algebra is {X : X* Q + Q X = 0} (plus reality constraints)
  Mat z;                 // H-element
  cplx pplus_scale = 1.0;

  std::string name() const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraDescriptor>;

AlgebraPtr make_algebra(Family family, std::vector<int> params);

struct LieElement {
  AlgebraPtr alg;
  Mat m;
};

// Wraps a matrix after checking membership.
LieElement make_element(const AlgebraPtr& alg, Mat m, double tol = kDefaultTolerance);

bool contains(const LieAlgebraDescriptor& alg, const Mat& m, double tol = kDefaultTolerance);
bool contains(const LieAlgebraDescriptor& alg, const DAMatrix& m, double tol = kDefaultTolerance);

// Orthogonal projection of an arbitrary complex matrix onto the algebra.
Mat project(const LieAlgebraDescriptor& alg, const Mat& m);

// Real basis, orthonormal for Re tr(A* B).
const std::vector<Mat>& basis(const LieAlgebraDescriptor& alg);

// Real orthonormal basis of {X : X* Q + Q X = 0} with the reality (R) or
// quaternionic (H, Q of even size) constraint of `base`.
std::vector<Mat> form_algebra_basis(const Mat& q, Algebra base);

std::pair<LieElement, LieElement> cartan_split(const LieElement& x);
Mat k_part(const Mat& m);
Mat p_part(const Mat& m);

// J_z on p, i.e. ad(z).
Mat complex_structure(const LieAlgebraDescriptor& alg, const Mat& xp);

// Conjugation of the complexified algebra fixing the real form.
Mat real_form_conjugate(const LieAlgebraDescriptor& alg, const Mat& w);

struct BForm {
  Mat form;
  int rank = 0;
  int signature = 0;
  int positive = 0;
  int negative = 0;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

// -J_V X with rank and signature counted over the base algebra.
BForm b_x_form(const LieElement& x, double rel_tol = kRankThreshold);
BForm b_x_form(const LieAlgebraDescriptor& alg, const Mat& x, double rel_tol = kRankThreshold);

struct PPlusElement {
  Family family = Family::sp;
  // Symmetric l x l (sp), q x p (u), antisymmetric n x n (so*), q x 1 (so(2,q)).
  Mat z;
};

// Complex-linear model map on the complexified p; kills p-minus.
PPlusElement pplus_model(const LieAlgebraDescriptor& alg, const Mat& w);
PPlusElement to_p_plus(const LieElement& xp);
LieElement from_p_plus(const AlgebraPtr& alg, const PPlusElement& w);
Mat from_p_plus_matrix(const LieAlgebraDescriptor& alg, const PPlusElement& w);
// Complex basis of the p+ model made of real unit patterns.
std::vector<PPlusElement> pplus_units(const LieAlgebraDescriptor& alg);
// The +i eigencomponent (w - i J_z w)/2 of a real p element.
Mat pplus_component(const LieAlgebraDescriptor& alg, const Mat& xp);

// Matrix shape of the p+ model.
std::pair<int, int> pplus_shape(const LieAlgebraDescriptor& alg);
// Real basis of p in the working representation.
std::vector<Mat> p_basis(const LieAlgebraDescriptor& alg);

LieElement bracket(const LieElement& x, const LieElement& y);
Mat commutator(const Mat& a, const Mat& b);

// Real trace for the base algebra: Re tr for R and C, half of it for H.
double trace_r(const LieAlgebraDescriptor& alg, const Mat& m);
cplx trace_c(const LieAlgebraDescriptor& alg, const Mat& m);

Mat random_element(const LieAlgebraDescriptor& alg, Rng& rng, double norm = 1.0);
Mat exp_matrix(const Mat& m);

// True iff all eigenvalues have modulus <= sqrt(tol) * ||X||.
bool is_nilpotent(const Mat& x, double tol = kDefaultTolerance);

}  // namespace orbitkit
