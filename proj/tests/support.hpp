#pragma once

#include <vector>

#include "orbitkit/divalg.hpp"
#include "orbitkit/liealg.hpp"

namespace orbitkit::test {

inline AlgebraElement random_da(Algebra tag, Rng& rng) {
  std::vector<double> c(static_cast<std::size_t>(coeff_count(tag)));
  for (double& x : c) x = rng.normal();
  return AlgebraElement(tag, c);
}

inline double dist(const AlgebraElement& a, const AlgebraElement& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
  return m;
}

inline std::vector<AlgebraPtr> small_algebras() {
  return {make_algebra(Family::sp, {1}),     make_algebra(Family::sp, {2}),     make_algebra(Family::sp, {3}),
          make_algebra(Family::u, {1, 1}),   make_algebra(Family::u, {2, 1}),   make_algebra(Family::u, {2, 2}),
          make_algebra(Family::sostar, {2}), make_algebra(Family::sostar, {3}), make_algebra(Family::sostar, {4}),
          make_algebra(Family::so2q, {3}),   make_algebra(Family::so2q, {4})};
}

}  // namespace orbitkit::test
