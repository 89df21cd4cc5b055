#include "orbitkit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace orbitkit {

namespace {

double rel_power(const Mat& x, int k) {
  const double nx = x.norm();
  if (nx == 0.0) return 0.0;
  Mat p = x;
  for (int i = 1; i < k; ++i) p = p * x;
  return p.norm() / std::pow(nx, k);
}

Classification not_pseudo(std::string why) {
  Classification c;
  c.pseudoholomorphic = false;
  c.reason = std::move(why);
  return c;
}

Classification classify_so2q(const LieAlgebraDescriptor& alg, const Mat& x, const ClassifyOptions& opt) {
  Classification c;
  const double nx = x.norm();
  if (nx == 0.0) {
    c.pseudoholomorphic = true;
    return c;
  }
  const double pairing = (alg.z * x).trace().real();
  const bool pairing_defined = std::abs(pairing) > opt.rank_tol * nx;
  if (rel_power(x, 2) <= opt.tol) {
    if (!pairing_defined) return not_pseudo("square-zero element with vanishing z-pairing");
    c.pseudoholomorphic = true;
    c.type = pairing < 0 ? OrbitType{1, 0} : OrbitType{0, 1};
    return c;
  }
  if (rel_power(x, 3) <= opt.tol) {
    const Mat x2 = x * x;
    const Mat gx2 = alg.Q * x2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gx2 + gx2.transpose()).real());
    const Eigen::VectorXd ev = es.eigenvalues();
    Eigen::Index idx = 0;
    ev.cwiseAbs().maxCoeff(&idx);
    c.pseudoholomorphic = true;
    if (ev(idx) > 0) {
      c.type = {1, 1};
      return c;
    }
    if (!pairing_defined) return not_pseudo("rank-two element with vanishing z-pairing");
    c.type = pairing < 0 ? OrbitType{2, 0} : OrbitType{0, 2};
    return c;
  }
  return not_pseudo("X^3 is not zero");
}

}  // namespace

Classification classify_nilpotent(const LieElement& x, const ClassifyOptions& opt) {
  const auto& alg = *x.alg;
  if (!contains(alg, x.m, opt.tol)) throw Error("classify: matrix is not an element of " + alg.name());
  if (alg.family == Family::so2q) return classify_so2q(alg, x.m, opt);
  Classification c;
  if (x.m.norm() == 0.0) {
    c.pseudoholomorphic = true;
    return c;
  }
  if (rel_power(x.m, 2) > opt.tol) return not_pseudo("X^2 is not zero");
  const BForm b = b_x_form(alg, x.m, opt.rank_tol);
  c.pseudoholomorphic = true;
  c.type = {b.positive, b.negative};
  return c;
}

bool is_holomorphic(const LieElement& x, const ClassifyOptions& opt) {
  const Classification c = classify_nilpotent(x, opt);
  if (!c.pseudoholomorphic) throw Error("is_holomorphic: element is not pseudoholomorphic (" + c.reason + ")");
  return c.type.holomorphic();
}

ClosureReport in_closure(const LieElement& x, int s, const ClassifyOptions& opt) {
  const auto& alg = *x.alg;
  if (s < 0 || s > alg.split_rank) throw Error("in_closure: s out of range");
  ClosureReport rep;
  std::vector<std::string> failed;
  if (alg.family == Family::so2q) {
    const Classification c = classify_nilpotent(x, opt);
    rep.note = "so(2,q): rank class, power nilpotency and z-pairing discriminant";
    rep.rank = c.pseudoholomorphic ? c.type.rank() : -1;
    rep.rank_ok = c.pseudoholomorphic && c.type.rank() <= s;
    rep.nilpotent_ok = s == 0 ? x.m.norm() == 0.0 : rel_power(x.m, s + 1) <= opt.tol;
    rep.nonnegative_ok = c.pseudoholomorphic && c.type.holomorphic();
  } else {
    if (!contains(alg, x.m, opt.tol)) throw Error("in_closure: matrix is not an element of " + alg.name());
    const BForm b = b_x_form(alg, x.m, opt.rank_tol);
    rep.rank = b.rank;
    rep.rank_ok = b.rank <= s;
    rep.nilpotent_ok = is_nilpotent(x.m, opt.tol);
    rep.nonnegative_ok = b.min_eigenvalue >= -opt.rank_tol * b.max_abs_eigenvalue;
  }
  if (!rep.rank_ok) failed.emplace_back("rank");
  if (!rep.nilpotent_ok) failed.emplace_back("nilpotent");
  if (!rep.nonnegative_ok) failed.emplace_back("nonnegative");
  rep.in_closure = failed.empty();
  for (std::size_t i = 0; i < failed.size(); ++i) rep.failed += (i ? "," : "") + failed[i];
  return rep;
}

int closure_stratum(const LieElement& x, const ClassifyOptions& opt) {
  for (int s = 0; s <= x.alg->split_rank; ++s) {
    if (in_closure(x, s, opt).in_closure) return s;
  }
  return -1;
}

PPlusClosure pplus_closure_report(const LieAlgebraDescriptor& alg, const PPlusElement& w, int s,
                                  const ClassifyOptions& opt) {
  PPlusClosure out;
  if (alg.family == Family::so2q) {
    const double nw = w.z.norm();
    const cplx quad = (w.z.transpose() * w.z)(0, 0);
    out.quadric = std::abs(quad);
    if (nw == 0.0) {
      out.rank = 0;
    } else {
      out.rank = out.quadric <= opt.tol * nw * nw ? 1 : 2;
    }
    out.in_closure = out.rank <= s;
    return out;
  }
  out.rank = matrix_rank(w.z, opt.rank_tol);
  const int bound = alg.family == Family::sostar ? 2 * s : s;
  out.in_closure = out.rank <= bound;
  return out;
}

GroupElement random_group_element(const LieAlgebraDescriptor& alg, Rng& rng, int steps, double max_norm) {
  GroupElement ge{Mat::Identity(alg.n, alg.n), Mat::Identity(alg.n, alg.n)};
  for (int i = 0; i < steps; ++i) {
    const double nrm = max_norm * rng.uniform(0.5, 1.0);
    const Mat xi = random_element(alg, rng, nrm);
    ge.g = ge.g * exp_matrix(xi);
    ge.g_inv = exp_matrix(-xi) * ge.g_inv;
  }
  return ge;
}

LieElement random_conjugate(const LieElement& x, int steps, Rng& rng) {
  const GroupElement ge = random_group_element(*x.alg, rng, steps);
  Mat y = ge.g * x.m * ge.g_inv;
  return {x.alg, project(*x.alg, y)};
}

LieElement random_conjugate(const LieElement& x, int steps, std::uint64_t seed) {
  Rng rng(seed);
  return random_conjugate(x, steps, rng);
}

bool semisimple_orbit_check(const LieElement& x, double eps, double tol) {
  if (eps <= 0.0) throw Error("semisimple_orbit_check: eps must be positive");
  const Mat target = 2.0 * eps * x.alg->z;
  Eigen::ComplexEigenSolver<Mat> ex(x.m, false);
  Eigen::ComplexEigenSolver<Mat> et(target, false);
  const Eigen::VectorXcd a = ex.eigenvalues();
  const Eigen::VectorXcd b = et.eigenvalues();
  const double scale = std::max(eps, 1e-300);
  std::vector<bool> used(static_cast<std::size_t>(a.size()), false);
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index arg = -1;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double d = std::abs(a(j) - b(i));
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    if (arg < 0 || best > tol * scale) return false;
    used[static_cast<std::size_t>(arg)] = true;
  }
  return true;
}

}  // namespace orbitkit
