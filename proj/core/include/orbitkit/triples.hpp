#pragma once

#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

struct SL2Triple {
  Mat e;
  Mat f;
  Mat h;
};

struct TripleFlags {
  bool sl2 = false;
  bool invariant = false;
  bool h1 = false;
  bool zero = false;
  double residual = 0.0;  // largest residual over all identities checked
};

struct OrbitType {
  int t = 0;
  int u = 0;

  int rank() const { return t + u; }
  int signature() const { return t - u; }
  bool holomorphic() const { return u == 0; }
  bool antiholomorphic() const { return t == 0; }
  bool operator==(const OrbitType&) const = default;
};

// The r commuting H1-triples of the family.
std::vector<SL2Triple> standard_triples(const LieAlgebraDescriptor& alg);

// e_{t,u} = e_1 + ... + e_t - e_{t+1} - ... - e_{t+u}.
LieElement orbit_rep(const AlgebraPtr& alg, int t, int u);

// All (t,u) with t + u <= r, ordered by rank then t descending.
std::vector<OrbitType> admissible_types(const LieAlgebraDescriptor& alg);

// (e^s + f^s - i h^s) / 2 in the complexified algebra, and its p+ model image.
Mat ks_matrix(const LieAlgebraDescriptor& alg, int s);
PPlusElement ks_element(const LieAlgebraDescriptor& alg, int s);

TripleFlags check_triple(const Mat& e, const Mat& f, const Mat& h, const LieAlgebraDescriptor& alg,
                         double tol = kDefaultTolerance);
// Same identities against an explicit H-element.
TripleFlags check_triple(const Mat& e, const Mat& f, const Mat& h, const Mat& z, double tol = kDefaultTolerance);

// Image of an element of sp(r,R) (2r x 2r) under the embedding used to build
// the triples of u(p,q) and so*(2n), r = split rank.
Mat embed_split_sp(const LieAlgebraDescriptor& alg, const Mat& x);

}  // namespace orbitkit
