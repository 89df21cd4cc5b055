#pragma once

#include <cstdint>
#include <string>

#include "orbitkit/liealg.hpp"
#include "orbitkit/triples.hpp"

namespace orbitkit {

struct Classification {
  bool pseudoholomorphic = false;
  OrbitType type;
  std::string reason;  // set when not pseudoholomorphic
};

struct ClassifyOptions {
  double tol = kDefaultTolerance;       // nilpotency residuals, relative to ||X||^k
  double rank_tol = kRankThreshold;     // eigenvalue threshold, relative
};

Classification classify_nilpotent(const LieElement& x, const ClassifyOptions& opt = {});
bool is_holomorphic(const LieElement& x, const ClassifyOptions& opt = {});

struct ClosureReport {
  bool in_closure = false;
  bool rank_ok = false;
  bool nilpotent_ok = false;
  bool nonnegative_ok = false;
  int rank = 0;
  std::string failed;  // comma separated names of failed conditions
  std::string note;
};

ClosureReport in_closure(const LieElement& x, int s, const ClassifyOptions& opt = {});
// Smallest s with x in the closure of O_s, or -1.
int closure_stratum(const LieElement& x, const ClassifyOptions& opt = {});

struct PPlusClosure {
  bool in_closure = false;
  int rank = 0;            // matrix rank of the model (quadric class for so(2,q))
  double quadric = 0.0;    // |sum w_j^2| for so(2,q)
};

PPlusClosure pplus_closure_report(const LieAlgebraDescriptor& alg, const PPlusElement& w, int s,
                                  const ClassifyOptions& opt = {});

// Product of `steps` exponentials exp(xi_i), ||xi_i|| <= max_norm, and its inverse.
struct GroupElement {
  Mat g;
  Mat g_inv;
};
GroupElement random_group_element(const LieAlgebraDescriptor& alg, Rng& rng, int steps, double max_norm = 0.5);

LieElement random_conjugate(const LieElement& x, int steps, std::uint64_t seed);
LieElement random_conjugate(const LieElement& x, int steps, Rng& rng);

// Characteristic polynomial of x equals that of 2 eps z.
bool semisimple_orbit_check(const LieElement& x, double eps, double tol = 1e-7);

}  // namespace orbitkit
