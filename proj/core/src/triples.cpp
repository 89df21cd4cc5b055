#include "orbitkit/triples.hpp"

#include <algorithm>

namespace orbitkit {

namespace {

constexpr cplx kI(0.0, 1.0);

Mat sp_triple_part(int l, int k, int which) {
  Mat m = Mat::Zero(2 * l, 2 * l);
  switch (which) {
    case 0: m(k, l + k) = -1.0; break;  // kappa_k(-E)
    case 1: m(l + k, k) = -1.0; break;  // kappa_k(-F)
    default:
      m(k, k) = 1.0;                    // kappa_k(H)
      m(l + k, l + k) = -1.0;
      break;
  }
  return m;
}

Mat pad(const Mat& m, int n) {
  Mat out = Mat::Zero(n, n);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

Mat so22_generator(const char* name) {
  Mat m = Mat::Zero(4, 4);
  const std::string s(name);
  if (s == "X" || s == "Y") {
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    const double sign = s == "X" ? 1.0 : -1.0;
    m(2, 3) = sign;
    m(3, 2) = -sign;
  } else if (s == "A1") {
    m(0, 2) = 1.0;
    m(1, 3) = -1.0;
    m(2, 0) = 1.0;
    m(3, 1) = -1.0;
  } else if (s == "A2") {
    m(0, 3) = 1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = 1.0;
  } else if (s == "B1") {
    m(0, 3) = 1.0;
    m(1, 2) = -1.0;
    m(2, 1) = -1.0;
    m(3, 0) = 1.0;
  } else if (s == "B2") {
    m(0, 2) = 1.0;
    m(1, 3) = 1.0;
    m(2, 0) = 1.0;
    m(3, 1) = 1.0;
  }
  return m;
}

}  // namespace

Mat embed_split_sp(const LieAlgebraDescriptor& alg, const Mat& x) {
  const int r = alg.split_rank;
  if (x.rows() != 2 * r || x.cols() != 2 * r) throw Error("embed_split_sp: expected a matrix of size 2r");
  if (r == 0) return Mat::Zero(alg.n, alg.n);
  const Mat a = x.topLeftCorner(r, r);
  const Mat b = x.topRightCorner(r, r);
  const Mat c = x.bottomLeftCorner(r, r);
  const Mat a1 = 0.5 * (a - a.transpose());
  const Mat b1 = 0.5 * (b - c);
  const Mat a2 = 0.5 * (a + a.transpose());
  const Mat b2 = 0.5 * (b + c);
  switch (alg.family) {
    case Family::sp: return x;
    case Family::u: {
      const int p = alg.params[0];
      Mat out = Mat::Zero(alg.n, alg.n);
      out.block(0, 0, r, r) = a1 + kI * b1;
      out.block(0, p, r, r) = kI * a2 + b2;
      out.block(p, 0, r, r) = -kI * a2 + b2;
      out.block(p, p, r, r) = a1 - kI * b1;
      return out.conjugate();
    }
    case Family::sostar: {
      const int n = alg.params[0];
      Mat u = Mat::Zero(2 * r, 2 * r);
      Mat v = Mat::Zero(2 * r, 2 * r);
      u << a1, kI * b2, -kI * b2, a1;
      v << -b1, kI * a2, -kI * a2, -b1;
      const Mat up = pad(u, n);
      const Mat vp = pad(v, n);
      Mat out(2 * n, 2 * n);
      out << up, -vp, vp.conjugate(), up.conjugate();
      return out;
    }
    case Family::so2q: break;
  }
  throw Error("embed_split_sp: no such embedding for " + alg.name());
}

std::vector<SL2Triple> standard_triples(const LieAlgebraDescriptor& alg) {
  std::vector<SL2Triple> out;
  if (alg.family == Family::so2q) {
    const Mat x = so22_generator("X");
    const Mat y = so22_generator("Y");
    const Mat a1 = so22_generator("A1");
    const Mat a2 = so22_generator("A2");
    const Mat b1 = so22_generator("B1");
    const Mat b2 = so22_generator("B2");
    out.push_back({pad(0.5 * (a2 + x), alg.n), pad(0.5 * (a2 - x), alg.n), pad(a1, alg.n)});
    out.push_back({pad(0.5 * (b2 + y), alg.n), pad(0.5 * (b2 - y), alg.n), pad(b1, alg.n)});
    return out;
  }
  const int r = alg.split_rank;
  for (int k = 0; k < r; ++k) {
    out.push_back({embed_split_sp(alg, sp_triple_part(r, k, 0)), embed_split_sp(alg, sp_triple_part(r, k, 1)),
                   embed_split_sp(alg, sp_triple_part(r, k, 2))});
  }
  return out;
}

LieElement orbit_rep(const AlgebraPtr& alg, int t, int u) {
  if (t < 0 || u < 0 || t + u > alg->split_rank) {
    throw Error("type (" + std::to_string(t) + "," + std::to_string(u) + ") is not admissible for " + alg->name() +
                " (split rank " + std::to_string(alg->split_rank) + ")");
  }
  const auto triples = standard_triples(*alg);
  Mat x = Mat::Zero(alg->n, alg->n);
  for (int k = 0; k < t; ++k) x += triples[static_cast<std::size_t>(k)].e;
  for (int k = t; k < t + u; ++k) x -= triples[static_cast<std::size_t>(k)].e;
  return {alg, x};
}

std::vector<OrbitType> admissible_types(const LieAlgebraDescriptor& alg) {
  std::vector<OrbitType> out;
  for (int rank = 0; rank <= alg.split_rank; ++rank) {
    for (int t = rank; t >= 0; --t) out.push_back({t, rank - t});
  }
  return out;
}

Mat ks_matrix(const LieAlgebraDescriptor& alg, int s) {
  if (s < 0 || s > alg.split_rank) throw Error("ks_element: s out of range");
  const auto triples = standard_triples(alg);
  Mat x = Mat::Zero(alg.n, alg.n);
  for (int k = 0; k < s; ++k) {
    const auto& tr = triples[static_cast<std::size_t>(k)];
    x += 0.5 * (tr.e + tr.f - kI * tr.h);
  }
  return x;
}

PPlusElement ks_element(const LieAlgebraDescriptor& alg, int s) { return pplus_model(alg, ks_matrix(alg, s)); }

TripleFlags check_triple(const Mat& e, const Mat& f, const Mat& h, const Mat& z, double tol) {
  TripleFlags fl;
  const double scale = std::max({1.0, max_abs(e), max_abs(f), max_abs(h)});
  auto res = [&](const Mat& m) {
    const double r = max_abs(m);
    fl.residual = std::max(fl.residual, r);
    return r <= tol * scale;
  };
  fl.zero = max_abs(e) == 0.0 && max_abs(f) == 0.0 && max_abs(h) == 0.0;
  const bool r1 = res(commutator(h, e) - 2.0 * e);
  const bool r2 = res(commutator(h, f) + 2.0 * f);
  const bool r3 = res(commutator(e, f) - h);
  fl.sl2 = r1 && r2 && r3;
  const bool i1 = res(p_part(e - f));
  const bool i2 = res(k_part(e + f));
  const bool i3 = res(k_part(h));
  fl.invariant = i1 && i2 && i3;
  const bool h1a = res(commutator(z, e + f) - h);
  const bool h1b = res(commutator(z, h) + (e + f));
  fl.h1 = h1a && h1b;
  return fl;
}

TripleFlags check_triple(const Mat& e, const Mat& f, const Mat& h, const LieAlgebraDescriptor& alg, double tol) {
  return check_triple(e, f, h, alg.z, tol);
}

}  // namespace orbitkit
