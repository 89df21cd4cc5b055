#include "orbitkit/dualpair.hpp"

#include <algorithm>
#include <cmath>

namespace orbitkit {

namespace {

constexpr cplx kI(0.0, 1.0);

Mat signature_form(int sp, int ss) {
  Mat s = Mat::Identity(sp + ss, sp + ss);
  s.bottomRightCorner(ss, ss) *= -1.0;
  return s;
}

Mat target_form(const DualPairConfig& cfg) { return cfg.target->has_form ? cfg.target->J_V : cfg.target->Q; }

Mat structure_project(Algebra base, const Mat& m) {
  if (base == Algebra::R) return m.real().cast<cplx>();
  if (base == Algebra::H) {
    const Mat jr = quaternionic_structure(static_cast<int>(m.rows() / 2));
    const Mat jc = quaternionic_structure(static_cast<int>(m.cols() / 2));
    return 0.5 * (m + jr * m.conjugate() * jc.inverse());
  }
  return m;
}

// Random matrix over the base algebra in the working representation, with
// logical shape r x c (quaternion matrices double both sides).
Mat random_base_matrix(Algebra base, int r, int c, Rng& rng) {
  if (r == 0 || c == 0) return Mat::Zero(base == Algebra::H ? 2 * r : r, base == Algebra::H ? 2 * c : c);
  if (base == Algebra::R) return rng.normal_matrix(r, c).cast<cplx>();
  if (base == Algebra::C) return rng.complex_normal_matrix(r, c);
  const Mat z = rng.complex_normal_matrix(r, c);
  const Mat w = rng.complex_normal_matrix(r, c);
  Mat out(2 * r, 2 * c);
  out << z, -w, w.conjugate(), z.conjugate();
  return out;
}

std::vector<Mat> gram_schmidt(const std::vector<Mat>& cands) {
  std::vector<Mat> out;
  for (const Mat& c : cands) {
    Mat v = c;
    for (int pass = 0; pass < 2; ++pass)
      for (const Mat& b : out) v -= (b.adjoint() * v).trace().real() * b;
    const double nv = v.norm();
    if (nv > 1e-10) out.push_back(v / nv);
  }
  return out;
}

// Columns spanning a maximal isotropic subspace of the target form.
Mat isotropic_frame(const DualPairConfig& cfg) {
  const auto& alg = *cfg.target;
  const int r = alg.split_rank;
  switch (alg.family) {
    case Family::sp: {
      Mat m = Mat::Zero(alg.n, r);
      for (int k = 0; k < r; ++k) m(k, k) = 1.0;
      return m;
    }
    case Family::u: {
      const int p = alg.params[0];
      Mat m = Mat::Zero(alg.n, r);
      for (int k = 0; k < r; ++k) {
        m(k, k) = 1.0;
        m(p + k, k) = 1.0;
      }
      return m;
    }
    case Family::sostar: {
      const int n = alg.params[0];
      DAMatrix q(Algebra::H, n, std::max(r, 1));
      for (int k = 0; k < r; ++k) {
        q.set(2 * k, k, AlgebraElement::one(Algebra::H));
        q.set(2 * k + 1, k, AlgebraElement::unit(Algebra::H, 1));
      }
      const Mat rep = complex_rep(q);
      if (r == 0) return Mat::Zero(2 * n, 0);
      return rep;
    }
    case Family::so2q: break;
  }
  throw Error("no isotropic frame for " + alg.name());
}

Mat random_h_element(const DualPairConfig& cfg, Rng& rng, double norm) {
  const auto hb = h_basis(cfg);
  Mat y = Mat::Zero(cfg.cols, cfg.cols);
  if (hb.empty()) return y;
  for (const Mat& b : hb) y += rng.normal() * b;
  const double ny = y.norm();
  return ny > 0 ? Mat(y * (norm / ny)) : y;
}

}  // namespace

std::string_view to_string(DualPairCase c) {
  switch (c) {
    case DualPairCase::o_sp: return "o-sp";
    case DualPairCase::u_u: return "u-u";
    case DualPairCase::sp_sostar: return "sp-sostar";
    case DualPairCase::sp_so2q: return "sp-so2q";
  }
  return "?";
}

DualPairCase dual_pair_case_from_string(std::string_view name) {
  if (name == "o-sp") return DualPairCase::o_sp;
  if (name == "u-u") return DualPairCase::u_u;
  if (name == "sp-sostar") return DualPairCase::sp_sostar;
  if (name == "sp-so2q") return DualPairCase::sp_so2q;
  throw Error("unknown dual pair case '" + std::string(name) + "' (expected o-sp, u-u, sp-sostar or sp-so2q)");
}

int DualPairConfig::w_real_dim() const {
  return base == Algebra::C ? 2 * rows * cols : rows * cols;
}

DualPairConfig make_dual_pair(DualPairCase kind, int s_prime, int s_second, std::vector<int> target_params) {
  if (s_prime < 0 || s_second < 0) throw Error("dual pair: s', s'' must be non-negative");
  DualPairConfig cfg;
  cfg.kind = kind;
  cfg.s_prime = s_prime;
  cfg.s_second = s_second;
  const int s = s_prime + s_second;
  switch (kind) {
    case DualPairCase::o_sp:
      cfg.target = make_algebra(Family::sp, std::move(target_params));
      cfg.base = Algebra::R;
      cfg.cols = s;
      cfg.source_form = signature_form(s_prime, s_second);
      break;
    case DualPairCase::u_u:
      cfg.target = make_algebra(Family::u, std::move(target_params));
      cfg.base = Algebra::C;
      cfg.cols = s;
      cfg.source_form = signature_form(s_prime, s_second);
      break;
    case DualPairCase::sp_sostar: {
      cfg.target = make_algebra(Family::sostar, std::move(target_params));
      cfg.base = Algebra::H;
      cfg.cols = 2 * s;
      const Mat sf = signature_form(s_prime, s_second);
      cfg.source_form = Mat::Zero(2 * s, 2 * s);
      cfg.source_form.topLeftCorner(s, s) = sf;
      cfg.source_form.bottomRightCorner(s, s) = sf;
      break;
    }
    case DualPairCase::sp_so2q: {
      if (s_second != 0) throw Error("Sp(s,R) dual pair takes s'' = 0");
      cfg.target = make_algebra(Family::so2q, std::move(target_params));
      cfg.base = Algebra::R;
      cfg.cols = 2 * s;
      cfg.source_form = Mat::Zero(2 * s, 2 * s);
      cfg.source_form.topRightCorner(s, s) = Mat::Identity(s, s);
      cfg.source_form.bottomLeftCorner(s, s) = -Mat::Identity(s, s);
      break;
    }
  }
  cfg.rows = cfg.target->n;
  return cfg;
}

Mat dagger(const DualPairConfig& cfg, const Mat& alpha) {
  if (alpha.rows() != cfg.rows || alpha.cols() != cfg.cols) {
    throw Error("interlacing map has shape " + std::to_string(alpha.rows()) + "x" + std::to_string(alpha.cols()) +
                ", expected " + std::to_string(cfg.rows) + "x" + std::to_string(cfg.cols));
  }
  if (cfg.cols == 0) return Mat::Zero(0, cfg.rows);
  return cfg.source_form.inverse() * alpha.adjoint() * target_form(cfg);
}

Mat mu_h(const DualPairConfig& cfg, const Mat& alpha) { return -dagger(cfg, alpha) * alpha; }

Mat mu_g(const DualPairConfig& cfg, const Mat& alpha) {
  if (cfg.cols == 0) return Mat::Zero(cfg.rows, cfg.rows);
  return alpha * dagger(cfg, alpha);
}

double omega_w(const DualPairConfig& cfg, const Mat& alpha, const Mat& beta) {
  const cplx t = (dagger(cfg, beta) * alpha).trace();
  return cfg.base == Algebra::H ? 0.5 * t.real() : t.real();
}

std::vector<Mat> w_basis(const DualPairConfig& cfg) {
  std::vector<Mat> cands;
  for (int i = 0; i < cfg.rows; ++i) {
    for (int j = 0; j < cfg.cols; ++j) {
      Mat e = Mat::Zero(cfg.rows, cfg.cols);
      e(i, j) = 1.0;
      cands.push_back(structure_project(cfg.base, e));
      cands.push_back(structure_project(cfg.base, kI * e));
    }
  }
  return gram_schmidt(cands);
}

std::vector<Mat> h_basis(const DualPairConfig& cfg) {
  if (cfg.cols == 0) return {};
  return form_algebra_basis(cfg.source_form, cfg.base);
}

double quadratic_hamiltonian(const Mat& x, const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  if (n % 2 != 0 || x.rows() != n || x.cols() != n) throw Error("quadratic_hamiltonian: shape mismatch");
  const Eigen::VectorXcd vc = v.cast<cplx>();
  const Mat j = quaternionic_structure(static_cast<int>(n / 2));
  const Eigen::VectorXcd xv = x * vc;
  return 0.5 * (vc.transpose() * j * xv)(0).real();
}

Mat rank_one_moment(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  if (n % 2 != 0) throw Error("rank_one_moment: vector of odd length");
  const Eigen::VectorXcd vc = v.cast<cplx>();
  const Mat j = quaternionic_structure(static_cast<int>(n / 2));
  return vc * (vc.transpose() * j);
}

std::vector<Mat> sample_zero_level(const DualPairConfig& cfg, int count, std::uint64_t seed) {
  if (cfg.kind == DualPairCase::sp_so2q) throw Error("use sample_nilcone_level for the Sp(s,R), so(2,q) pair");
  Rng rng(seed);
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const int s = cfg.s();
  const int r = cfg.target->split_rank;
  const Mat frame = isotropic_frame(cfg);
  for (int i = 0; i < count; ++i) {
    if (s == 0) {
      out.push_back(Mat::Zero(cfg.rows, cfg.cols));
      continue;
    }
    const int k = rng.uniform_int(0, std::min(r, s));
    Mat c;
    if (k == 0) {
      c = Mat::Zero(frame.cols(), cfg.cols);
    } else {
      c = random_base_matrix(cfg.base, r, k, rng) * random_base_matrix(cfg.base, k, s, rng);
    }
    const GroupElement y = random_group_element(*cfg.target, rng, 2);
    const Mat xinv = exp_matrix(-random_h_element(cfg, rng, 0.5));
    out.push_back(y.g * frame * c * xinv);
  }
  return out;
}

std::vector<Mat> sample_nilcone_level(const DualPairConfig& cfg, int count, std::uint64_t seed) {
  if (cfg.kind != DualPairCase::sp_so2q || cfg.s() != 1) {
    throw Error("nilcone sampling is defined for Sp(1,R) acting with so(2,q)");
  }
  Rng rng(seed);
  const int q = cfg.target->params[0];
  const int n = q + 2;
  std::vector<Mat> out;
  for (int i = 0; i < count; ++i) {
    const double th = rng.uniform(0.0, 2.0 * M_PI);
    Eigen::VectorXd u = rng.normal_matrix(q, 1);
    u.normalize();
    Eigen::VectorXd nul(n), kvec(n);
    nul << std::cos(th), std::sin(th), u;
    kvec << std::cos(th), std::sin(th), -u;
    const Eigen::MatrixXd g = cfg.target->Q.real();
    Eigen::MatrixXd a(n, 2);
    const int mode = rng.uniform_int(0, 9);
    if (mode < 6) {
      // Plane containing a null line: degenerate Gram matrix.
      Eigen::VectorXd x = rng.normal_matrix(n, 1);
      const double gxn = x.dot(g * nul);
      const double gkn = kvec.dot(g * nul);
      const Eigen::VectorXd v = x - (gxn / gkn) * kvec;
      const double c1 = rng.normal(), c2 = rng.normal(), c3 = rng.normal(), c4 = rng.normal();
      a.col(0) = c1 * v + c2 * nul;
      a.col(1) = c3 * v + c4 * nul;
    } else {
      // Totally isotropic plane.
      Eigen::MatrixXd uu = rng.normal_matrix(q, 2);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(uu);
      const Eigen::MatrixXd qm = qr.householderQ() * Eigen::MatrixXd::Identity(q, 2);
      Eigen::VectorXd n1(n), n2(n);
      n1 << 1.0, 0.0, qm.col(0);
      n2 << 0.0, 1.0, qm.col(1);
      const Eigen::MatrixXd mix = rng.normal_matrix(2, 2);
      a.col(0) = mix(0, 0) * n1 + mix(1, 0) * n2;
      a.col(1) = mix(0, 1) * n1 + mix(1, 1) * n2;
    }
    const GroupElement y = random_group_element(*cfg.target, rng, 2);
    const Mat xinv = exp_matrix(-random_h_element(cfg, rng, 0.5));
    out.push_back(y.g * a.cast<cplx>() * xinv);
  }
  return out;
}

std::pair<Mat, Mat> so2q_reference_maps(const DualPairConfig& cfg) {
  if (cfg.kind != DualPairCase::sp_so2q || cfg.s() != 1) throw Error("reference maps need Sp(1,R) with so(2,q)");
  Mat a1 = Mat::Zero(cfg.rows, 2);
  Mat a2 = Mat::Zero(cfg.rows, 2);
  a1(0, 0) = 1.0;
  a1(1, 1) = 1.0;
  a1(2, 0) = 1.0;
  a1(3, 1) = -1.0;
  a2(0, 1) = 1.0;
  a2(1, 0) = -1.0;
  a2(2, 0) = 1.0;
  a2(3, 1) = 1.0;
  return {a1, a2};
}

ReductionHistogram reduce_and_classify(const DualPairConfig& cfg, int count, std::uint64_t seed,
                                       const ClassifyOptions& opt) {
  ReductionHistogram hist;
  const std::vector<Mat> samples =
      cfg.kind == DualPairCase::sp_so2q ? sample_nilcone_level(cfg, count, seed) : sample_zero_level(cfg, count, seed);
  for (const Mat& a : samples) {
    ++hist.samples;
    if (cfg.kind != DualPairCase::sp_so2q) {
      const double scale = std::max(1.0, a.squaredNorm());
      hist.max_zero_level_residual = std::max(hist.max_zero_level_residual, max_abs(mu_h(cfg, a)) / scale);
    }
    const LieElement x{cfg.target, project(*cfg.target, mu_g(cfg, a))};
    const Classification c = classify_nilpotent(x, opt);
    if (!c.pseudoholomorphic) {
      ++hist.unclassified;
      continue;
    }
    ++hist.counts[{c.type.t, c.type.u}];
  }
  return hist;
}

InvariantQuadratics invariant_quadratics_dim(const DualPairConfig& cfg) {
  InvariantQuadratics out;
  out.dim_g = cfg.target->dim;
  const std::vector<Mat> wb = w_basis(cfg);
  const int d = static_cast<int>(wb.size());
  if (d > 24) throw Error("invariant_quadratics_dim: W has real dimension " + std::to_string(d) + " > 24");
  const int nsym = d * (d + 1) / 2;
  if (d == 0) return out;

  auto action_matrix = [&](auto&& act) {
    Eigen::MatrixXd l(d, d);
    for (int j = 0; j < d; ++j) {
      const Mat img = act(wb[j]);
      for (int i = 0; i < d; ++i) l(i, j) = (wb[i].adjoint() * img).trace().real();
    }
    return l;
  };
  auto sym_unit = [&](int idx) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(d, d);
    int c = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b, ++c) {
        if (c == idx) {
          e(a, b) = 1.0;
          e(b, a) = 1.0;
          return e;
        }
      }
    }
    return e;
  };

  std::vector<Eigen::MatrixXd> blocks;
  for (const Mat& y : h_basis(cfg)) {
    const Eigen::MatrixXd l = action_matrix([&](const Mat& a) { return Mat(-a * y); });
    Eigen::MatrixXd blk(d * d, nsym);
    for (int k = 0; k < nsym; ++k) {
      const Eigen::MatrixXd e = sym_unit(k);
      const Eigen::MatrixXd img = l.transpose() * e + e * l;
      blk.col(k) = Eigen::Map<const Eigen::VectorXd>(img.data(), d * d);
    }
    blocks.push_back(blk);
  }
  if (cfg.kind == DualPairCase::o_sp && cfg.s() > 0) {
    Mat refl = Mat::Identity(cfg.cols, cfg.cols);
    refl(0, 0) = -1.0;
    const Eigen::MatrixXd l = action_matrix([&](const Mat& a) { return Mat(a * refl); });
    Eigen::MatrixXd blk(d * d, nsym);
    for (int k = 0; k < nsym; ++k) {
      const Eigen::MatrixXd e = sym_unit(k);
      const Eigen::MatrixXd img = l.transpose() * e * l - e;
      blk.col(k) = Eigen::Map<const Eigen::VectorXd>(img.data(), d * d);
    }
    blocks.push_back(blk);
  }
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Eigen::MatrixXd sys(rows, nsym);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    sys.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  out.dim = static_cast<int>(null_space(sys, 1e-10).cols());

  // Components <b_a, mu_G(.)> as symmetric matrices on W.
  Eigen::MatrixXd comps(nsym, cfg.target->dim);
  const auto& gb = basis(*cfg.target);
  for (int a = 0; a < cfg.target->dim; ++a) {
    auto f = [&](const Mat& v) { return (gb[a].adjoint() * mu_g(cfg, v)).trace().real(); };
    int c = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j, ++c) {
        comps(c, a) = i == j ? f(wb[i]) : 0.5 * (f(wb[i] + wb[j]) - f(wb[i]) - f(wb[j]));
      }
    }
  }
  out.mu_span = matrix_rank(comps, 1e-10);
  return out;
}

SemisimpleReduction semisimple_reduction_check(const DualPairConfig& cfg, double eps, int count, std::uint64_t seed) {
  if (eps <= 0.0) throw Error("semisimple reduction needs eps > 0");
  if (!cfg.compact() || cfg.rows != cfg.cols) {
    throw Error("semisimple reduction needs the compact square case (V^s = V)");
  }
  Rng rng(seed);
  SemisimpleReduction out;
  out.passed = true;
  const Mat jv = cfg.target->J_V;
  for (int i = 0; i < count; ++i) {
    const GroupElement y = random_group_element(*cfg.target, rng, 2);
    const Mat alpha = std::sqrt(eps) * y.g;
    out.max_level_residual = std::max(out.max_level_residual, max_abs(mu_h(cfg, alpha) + eps * jv));
    const LieElement x{cfg.target, mu_g(cfg, alpha)};
    if (!semisimple_orbit_check(x, eps)) out.passed = false;
    ++out.samples;
  }
  return out;
}

}  // namespace orbitkit
