#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orbitkit/classify.hpp"
#include "orbitkit/dualpair.hpp"
#include "orbitkit/jordan.hpp"
#include "orbitkit/poisson.hpp"
#include "orbitkit/triples.hpp"

namespace orbitkit::cli {

using nlohmann::json;

namespace {

struct Suite {
  std::vector<Check> checks;
  void add(std::string name, bool passed, double residual, double bound, std::string property, json detail = {}) {
    checks.push_back({std::move(name), passed, residual, bound, std::move(property), std::move(detail)});
  }
};

int samples_or(const VerifyOptions& opt, int fallback) { return opt.samples.value_or(fallback); }

std::vector<AlgebraPtr> algebras(const VerifyOptions& opt) {
  if (opt.family) return {make_algebra(*opt.family, opt.params)};
  std::vector<AlgebraPtr> out;
  for (int l = 1; l <= 4; ++l) out.push_back(make_algebra(Family::sp, {l}));
  for (auto pq : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) out.push_back(make_algebra(Family::u, pq));
  for (int n = 2; n <= 4; ++n) out.push_back(make_algebra(Family::sostar, {n}));
  for (int q : {3, 4, 6}) out.push_back(make_algebra(Family::so2q, {q}));
  return out;
}

std::string type_name(const OrbitType& t) { return "(" + std::to_string(t.t) + "," + std::to_string(t.u) + ")"; }

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + salt;
  x ^= x >> 31;
  return x * 0xBF58476D1CE4E5B9ULL;
}

void suite_triples(const VerifyOptions& opt, Suite& s) {
  for (const auto& alg : algebras(opt)) {
    const auto tr = standard_triples(*alg);
    double worst = 0.0;
    bool ok = static_cast<int>(tr.size()) == alg->split_rank;
    for (const auto& t : tr) {
      const TripleFlags f = check_triple(t.e, t.f, t.h, *alg, opt.tol);
      ok = ok && f.sl2 && f.invariant && f.h1 && !f.zero;
      worst = std::max(worst, f.residual);
    }
    s.add(alg->name() + " triple relations", ok && worst <= opt.tol, worst, opt.tol,
          "sl2 relations, Cartan invariance and H1 conditions of the standard triples");
    double comm = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      for (std::size_t j = 0; j < tr.size(); ++j) {
        if (i == j) continue;
        for (const Mat* a : {&tr[i].e, &tr[i].f, &tr[i].h})
          for (const Mat* b : {&tr[j].e, &tr[j].f, &tr[j].h}) comm = std::max(comm, max_abs(commutator(*a, *b)));
      }
    }
    s.add(alg->name() + " triples commute", comm <= opt.tol, comm, opt.tol, "distinct standard triples commute");
  }
}

void suite_classify(const VerifyOptions& opt, Suite& s) {
  const int n = samples_or(opt, 100);
  const ClassifyOptions copt{opt.tol, kRankThreshold};
  for (const auto& alg : algebras(opt)) {
    const auto types = admissible_types(*alg);
    const int r = alg->split_rank;
    s.add(alg->name() + " type count", static_cast<int>(types.size()) == (r + 1) * (r + 2) / 2,
          0.0, 0.0, "(r+1)(r+2)/2 pseudoholomorphic nilpotent orbits");
    for (const OrbitType& t : types) {
      Rng rng(mix(opt.seed, static_cast<std::uint64_t>(alg->n * 100 + t.t * 10 + t.u)));
      const LieElement x = orbit_rep(alg, t.t, t.u);
      int wrong = 0;
      for (int i = 0; i < n; ++i) {
        const Classification c = classify_nilpotent(random_conjugate(x, 3, rng), copt);
        if (!c.pseudoholomorphic || !(c.type == t)) ++wrong;
      }
      for (double lambda : {0.1, 1.0, 10.0}) {
        const Classification c = classify_nilpotent({alg, lambda * x.m}, copt);
        if (!c.pseudoholomorphic || !(c.type == t)) ++wrong;
      }
      s.add(alg->name() + " conjugates of e" + type_name(t), wrong == 0, wrong, 0.0,
            "classification is invariant under conjugation and positive scaling", {{"samples", n}});
    }
    if (alg->family == Family::so2q) continue;
    // Holomorphic orbits are exactly the non-negative ones.
    Rng rng(mix(opt.seed, static_cast<std::uint64_t>(alg->n) + 7777));
    double worst_neg = 0.0;
    for (int t = 1; t <= r; ++t) {
      const LieElement x = orbit_rep(alg, t, 0);
      for (int i = 0; i < n; ++i) {
        const BForm b = b_x_form(random_conjugate(x, 3, rng));
        worst_neg = std::max(worst_neg, -b.min_eigenvalue / std::max(b.max_abs_eigenvalue, 1e-300));
      }
    }
    s.add(alg->name() + " holomorphic conjugates are non-negative", worst_neg <= 1e-8, worst_neg, 1e-8,
          "-J_V X is positive semidefinite on holomorphic orbits");
    if (r >= 2) {
      int both = 0;
      const LieElement x = orbit_rep(alg, 1, 1);
      for (int i = 0; i < n; ++i) {
        const BForm b = b_x_form(random_conjugate(x, 3, rng));
        if (b.positive > 0 && b.negative > 0) ++both;
      }
      s.add(alg->name() + " e(1,1) conjugates are indefinite", both == n, n - both, 0.0,
            "the form of a mixed orbit has eigenvalues of both signs");
    }
  }
}

void suite_closure(const VerifyOptions& opt, Suite& s) {
  const ClassifyOptions copt{opt.tol, kRankThreshold};
  for (const auto& alg : algebras(opt)) {
    const int r = alg->split_rank;
    int wrong = 0;
    int wrong_pplus = 0;
    for (int a = 0; a <= r; ++a) {
      const LieElement x = orbit_rep(alg, a, 0);
      const PPlusElement w = ks_element(*alg, a);
      for (int b = 0; b <= r; ++b) {
        if (in_closure(x, b, copt).in_closure != (b >= a)) ++wrong;
        if (pplus_closure_report(*alg, w, b, copt).in_closure != (b >= a)) ++wrong_pplus;
      }
      if (closure_stratum(x, copt) != a) ++wrong;
    }
    s.add(alg->name() + " closure order", wrong == 0, wrong, 0.0, "e(s,0) lies in the closure of O_s' iff s' >= s");
    s.add(alg->name() + " p+ determinantal ranks", wrong_pplus == 0, wrong_pplus, 0.0,
          "the Kostant-Sekiguchi image of e(s,0) has rank s");
    if (r >= 2) {
      const LieElement x = orbit_rep(alg, 1, 1);
      int hits = 0;
      for (int b = 0; b <= r; ++b) hits += in_closure(x, b, copt).in_closure ? 1 : 0;
      s.add(alg->name() + " e(1,1) outside every holomorphic closure", hits == 0, hits, 0.0,
            "mixed orbits are not in the holomorphic closures");
    }
    if (alg->family == Family::so2q) {
      Rng rng(mix(opt.seed, 4242 + static_cast<std::uint64_t>(alg->n)));
      const LieElement e1 = orbit_rep(alg, 1, 0);
      double worst = 0.0;
      const int n = samples_or(opt, 100);
      for (int i = 0; i < n; ++i) {
        const LieElement y = random_conjugate(e1, 3, rng);
        const PPlusElement w = to_p_plus({alg, p_part(y.m)});
        worst = std::max(worst, std::abs(fundamental_invariant(*alg, w)) / w.z.squaredNorm());
      }
      s.add(alg->name() + " quadric on conjugates of e1", worst <= 1e-9, worst, 1e-9,
            "the p+ projection of the minimal orbit lies on the quadric sum w_j^2 = 0", {{"samples", n}});
    }
  }
}

json histogram_json(const ReductionHistogram& h) {
  json counts = json::object();
  for (const auto& [k, v] : h.counts) counts["(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"] = v;
  return {{"counts", counts}, {"unclassified", h.unclassified}, {"samples", h.samples}};
}

void suite_reduction(const VerifyOptions& opt, Suite& s) {
  const int n = samples_or(opt, 500);
  struct Target {
    DualPairCase kind;
    std::vector<int> params;
  };
  const std::vector<Target> targets = {{DualPairCase::o_sp, {1}},       {DualPairCase::o_sp, {2}},
                                       {DualPairCase::o_sp, {3}},       {DualPairCase::u_u, {2, 1}},
                                       {DualPairCase::u_u, {2, 2}},     {DualPairCase::sp_sostar, {3}},
                                       {DualPairCase::sp_sostar, {4}}};
  for (const Target& t : targets) {
    std::set<std::pair<int, int>> support_prev;
    const int r = make_dual_pair(t.kind, 0, 0, t.params).target->split_rank;
    for (int sv = 1; sv <= r + 1; ++sv) {
      const DualPairConfig cfg = make_dual_pair(t.kind, sv, 0, t.params);
      const ReductionHistogram h = reduce_and_classify(cfg, n, mix(opt.seed, 31 * sv + cfg.rows));
      const int bound = std::min(r, sv);
      bool holo = h.unclassified == 0;
      int max_rank = 0;
      std::set<std::pair<int, int>> support;
      for (const auto& [k, v] : h.counts) {
        holo = holo && k.second == 0 && k.first <= bound;
        max_rank = std::max(max_rank, k.first + k.second);
        support.insert(k);
      }
      const std::string name = std::string(to_string(t.kind)) + " s=" + std::to_string(sv) + " " + cfg.target->name();
      s.add(name + " zero level", h.max_zero_level_residual <= opt.tol, h.max_zero_level_residual, opt.tol,
            "samples lie in the zero level of mu_H");
      s.add(name + " holomorphic images", holo, h.unclassified, 0.0,
            "mu_G maps the zero level into the closure of the holomorphic orbit of rank min(r,s)", histogram_json(h));
      s.add(name + " top rank attained", max_rank == bound, bound - max_rank, 0.0,
            "the top stratum of rank min(r,s) is reached");
      if (sv == r + 1) {
        s.add(name + " stable support", support == support_prev, 0.0, 0.0,
              "the histogram support stabilises once s exceeds the split rank");
      }
      support_prev = support;
    }
  }

  {
    const DualPairConfig cfg = make_dual_pair(DualPairCase::o_sp, 1, 1, {1});
    const ReductionHistogram h = reduce_and_classify(cfg, n, mix(opt.seed, 991));
    const bool both = h.counts.count({1, 0}) && h.counts.count({0, 1});
    s.add("o-sp O(1,1) sp(1,R) whole nilcone", both && h.unclassified == 0, h.unclassified, 0.0,
          "a non-compact group reaches both holomorphic and antiholomorphic orbits", histogram_json(h));
  }

  {
    const DualPairConfig cfg = make_dual_pair(DualPairCase::sp_so2q, 1, 0, {4});
    const int m = samples_or(opt, 200);
    double worst_cube = 0.0;
    double worst_level = 0.0;
    for (const Mat& a : sample_nilcone_level(cfg, m, mix(opt.seed, 1234))) {
      const Mat h = mu_h(cfg, a);
      worst_level = std::max(worst_level, (h * h).norm() / std::max(1.0, std::pow(a.norm(), 4)));
      const Mat g = mu_g(cfg, a);
      const double ng = g.norm();
      if (ng > 0) worst_cube = std::max(worst_cube, (g * g * g).norm() / std::pow(ng, 3));
    }
    s.add("sp-so2q mu_H nilpotent", worst_level <= opt.tol, worst_level, opt.tol,
          "sampled interlacing maps have mu_H in the sp(1,R) nilcone", {{"samples", m}});
    s.add("sp-so2q mu_G cube vanishes", worst_cube <= 1e-9, worst_cube, 1e-9,
          "mu_G maps the nilcone level into the rank-two nilpotent closure", {{"samples", m}});
    const auto [a1, a2] = so2q_reference_maps(cfg);
    const auto tr = standard_triples(*cfg.target);
    const Mat g1 = mu_g(cfg, a1);
    const Mat g2 = mu_g(cfg, a2);
    const double r1 = max_abs(g1 - tr[0].e);
    const double r2 = max_abs(g2 - tr[1].e);
    const double k1 = (tr[0].e.adjoint() * g1).trace().real() / tr[0].e.squaredNorm();
    const double k2 = (tr[1].e.adjoint() * g2).trace().real() / tr[1].e.squaredNorm();
    const double p1 = max_abs(g1 - k1 * tr[0].e);
    const double p2 = max_abs(g2 - k2 * tr[1].e);
    s.add("sp-so2q reference maps reproduce e1, e2", std::max(r1, r2) <= opt.tol, std::max(r1, r2), opt.tol,
          "mu_G of the explicit interlacing maps equals the first two triple generators entrywise",
          {{"factor_e1", k1}, {"factor_e2", k2}});
    s.add("sp-so2q reference maps proportional to e1, e2", std::max(p1, p2) <= opt.tol, std::max(p1, p2), opt.tol,
          "mu_G of the explicit interlacing maps is a multiple of e1, e2", {{"factor_e1", k1}, {"factor_e2", k2}});
  }
}

void suite_invariants(const VerifyOptions& opt, Suite& s) {
  struct Case {
    DualPairCase kind;
    int sp;
    std::vector<int> params;
    int expect;
  };
  for (const Case& c : std::vector<Case>{{DualPairCase::o_sp, 2, {2}, 10}, {DualPairCase::u_u, 1, {2, 1}, 9}}) {
    const DualPairConfig cfg = make_dual_pair(c.kind, c.sp, 0, c.params);
    const InvariantQuadratics iq = invariant_quadratics_dim(cfg);
    const std::string name = std::string(to_string(c.kind)) + " s=" + std::to_string(c.sp) + " " + cfg.target->name();
    s.add(name + " invariant quadratics", iq.dim == c.expect && iq.dim == iq.dim_g, iq.dim - c.expect, 0.0,
          "H-invariant quadratics on W have the dimension of g", {{"dim", iq.dim}, {"dim_g", iq.dim_g}});
    s.add(name + " mu_G components span", iq.mu_span == iq.dim, iq.dim - iq.mu_span, 0.0,
          "the components of mu_G span the invariant quadratics", {{"span", iq.mu_span}});
  }

  // Quadratic Hamiltonians on R^2 and the momentum property on R^4.
  {
    Rng rng(mix(opt.seed, 55));
    const auto b = sl2_basis();
    const Mat e = 0.5 * (b[1] + b[0]);
    const Mat f = 0.5 * (b[1] - b[0]);
    const Mat h = b[2];
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      Eigen::VectorXd v(2);
      v << rng.normal(), rng.normal();
      const double q = v(0), p = v(1);
      worst = std::max({worst, std::abs(quadratic_hamiltonian(e, v) - 0.5 * p * p),
                        std::abs(quadratic_hamiltonian(f, v) + 0.5 * q * q), std::abs(quadratic_hamiltonian(h, v) - p * q)});
    }
    s.add("sp(1,R) quadratic Hamiltonians", worst <= opt.tol, worst, opt.tol,
          "E, F, H act by the Hamiltonians p^2/2, -q^2/2, pq");

    const auto alg = make_algebra(Family::sp, {2});
    const Mat jinv = alg->J_V.inverse();
    double hom = 0.0;
    double mom = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Mat x = random_element(*alg, rng);
      const Mat y = random_element(*alg, rng);
      const Eigen::VectorXd v = rng.normal_matrix(4, 1);
      const Eigen::VectorXcd vc = v.cast<cplx>();
      const Eigen::VectorXcd gx = alg->J_V * x * vc;
      const Eigen::VectorXcd gy = alg->J_V * y * vc;
      const double pb = (gx.transpose() * jinv * gy)(0).real();
      hom = std::max(hom, std::abs(pb - quadratic_hamiltonian(commutator(x, y), v)));
      mom = std::max(mom, std::abs(quadratic_hamiltonian(x, v) - 0.5 * (x * rank_one_moment(v)).trace().real()));
    }
    s.add("sp(2,R) Hamiltonians respect brackets", hom <= opt.tol, hom, opt.tol,
          "X -> f_X is a Lie algebra homomorphism into the Poisson algebra");
    s.add("sp(2,R) momentum map", mom <= opt.tol, mom, opt.tol, "f_X(v) pairs X with the moment v v^T J");
  }

  // Semisimple reduction: level -eps J_V lands on the orbit of 2 eps z.
  struct Square {
    DualPairCase kind;
    int sp;
    std::vector<int> params;
  };
  for (const Square& c : std::vector<Square>{{DualPairCase::o_sp, 4, {2}},
                                             {DualPairCase::u_u, 3, {2, 1}},
                                             {DualPairCase::sp_sostar, 3, {3}}}) {
    const DualPairConfig cfg = make_dual_pair(c.kind, c.sp, 0, c.params);
    for (double eps : {0.5, 2.0}) {
      const SemisimpleReduction r = semisimple_reduction_check(cfg, eps, samples_or(opt, 20), mix(opt.seed, 77));
      s.add(std::string(to_string(c.kind)) + " " + cfg.target->name() + " semisimple level eps=" + json(eps).dump(),
            r.passed && r.max_level_residual <= 1e-8, r.max_level_residual, 1e-8,
            "the level -eps J_V reduces to the semisimple orbit of 2 eps z");
    }
  }
}

void suite_poisson(const VerifyOptions& opt, Suite& s) {
  const int n = samples_or(opt, 200);
  for (const auto& alg : algebras(opt)) {
    const PoissonContext ctx = make_poisson_context(alg);
    const double jac = jacobi_residual(ctx);
    s.add(alg->name() + " Jacobi", jac <= 1e-10, jac, 1e-10, "structure constants satisfy the Jacobi identity");
    Rng rng(mix(opt.seed, 600 + static_cast<std::uint64_t>(alg->n * 7 + (alg->family == Family::u ? 1 : 0))));
    double zz = 0.0;
    double two_ways = 0.0;
    double cr = 0.0;
    const auto w = zeta_basis(*alg);
    for (int i = 0; i < n; ++i) {
      const Mat xi = random_element(*alg, rng);
      zz = std::max(zz, max_abs(pplus_bracket_matrix(ctx, xi).zeta_zeta));
      if (i < 20) {
        const Eigen::VectorXd x = coordinates(ctx, xi);
        const int d = static_cast<int>(ctx.basis.size());
        for (int a = 0; a < std::min(d, 6); ++a)
          for (int b = 0; b < std::min(d, 6); ++b)
            two_ways = std::max(two_ways, std::abs(coordinate_bracket(ctx, a, b, xi) -
                                                   coordinate_bracket_structure(ctx, a, b, x)));
        // {zeta_j, f} for quadratic f in the zetas.
        for (std::size_t j = 0; j < w.size() && j < 3; ++j) {
          Polynomial zj{{1.0, {w[j]}}};
          Polynomial f;
          for (std::size_t a = 0; a < w.size() && a < 3; ++a) {
            f.push_back({cplx(1.0 + a, 0.5), {w[a]}});
            for (std::size_t b = a; b < w.size() && b < 3; ++b) f.push_back({cplx(0.3, -1.0 * b), {w[a], w[b]}});
          }
          cr = std::max(cr, std::abs(poisson_bracket(*alg, zj, f, xi)));
        }
      }
    }
    s.add(alg->name() + " p+ brackets vanish", zz <= 1e-12, zz, 1e-12,
          "the holomorphic coordinates Poisson-commute", {{"samples", n}});
    s.add(alg->name() + " Cauchy-Riemann brackets", cr <= 1e-12, cr, 1e-12,
          "holomorphic coordinates commute with holomorphic quadratics");
    s.add(alg->name() + " coordinate brackets two ways", two_ways <= 1e-10, two_ways, 1e-10,
          "direct trace and structure-constant brackets agree");
  }

  // sl(2,R) table in the basis x0 = E - F, x1 = E + F, x2 = H.
  const auto alg = make_algebra(Family::sp, {1});
  const PoissonContext ctx = make_poisson_context(alg, sl2_basis());
  Rng rng(mix(opt.seed, 808));
  double table = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Mat xi = random_element(*alg, rng);
    const Eigen::VectorXd x = coordinates(ctx, xi);
    table = std::max({table, std::abs(coordinate_bracket(ctx, 1, 2, xi) - 2.0 * x(0)),
                      std::abs(coordinate_bracket(ctx, 0, 2, xi) - 2.0 * x(1)),
                      std::abs(coordinate_bracket(ctx, 0, 1, xi) + 2.0 * x(2))});
  }
  s.add("sl(2,R) bracket table", table <= 1e-10, table, 1e-10,
        "{x1,x2} = 2 x0, {x0,x2} = 2 x1, {x0,x1} = -2 x2 under the half-trace pairing");
}

void suite_jordan(const VerifyOptions& opt, Suite& s) {
  const int n = samples_or(opt, 200);
  for (const auto& alg : algebras(opt)) {
    const int r = alg->split_rank;
    Rng rng(mix(opt.seed, 900 + static_cast<std::uint64_t>(alg->n)));
    int wrong = 0;
    int wrong_inv = 0;
    double worst_small = 0.0;
    const bool regular = is_regular(*alg);
    for (int sv = 0; sv <= r; ++sv) {
      const LieElement x = orbit_rep(alg, sv, 0);
      if (jordan_rank_classical(*alg, ks_element(*alg, sv)) != sv) ++wrong;
      for (int i = 0; i < n; ++i) {
        const LieElement y = random_conjugate(x, 3, rng);
        const PPlusElement w = to_p_plus({alg, p_part(y.m)});
        if (jordan_rank_classical(*alg, w) != sv) ++wrong;
        if (!regular) continue;
        const double scale = std::pow(w.z.norm(), alg->family == Family::so2q ? 2 : r);
        const double f = std::abs(fundamental_invariant(*alg, w)) / std::max(scale, 1e-300);
        if (sv < r) {
          worst_small = std::max(worst_small, f);
          if (f > 1e-9) ++wrong_inv;
        } else if (f <= 1e-9) {
          ++wrong_inv;
        }
      }
    }
    s.add(alg->name() + " rank-stratum correspondence", wrong == 0, wrong, 0.0,
          "the p+ projection of a conjugate of e(s,0) has Jordan rank s", {{"samples_per_stratum", n}});
    if (regular) {
      s.add(alg->name() + " fundamental invariant", wrong_inv == 0, worst_small, 1e-9,
            "the fundamental invariant vanishes exactly on sub-maximal rank");
      const Mat id = ks_element(*alg, r).z;
      const cplx f = fundamental_invariant(*alg, {alg->family, id});
      if (alg->family != Family::so2q) {
        s.add(alg->name() + " invariant of the identity pattern", std::abs(std::abs(f) - 1.0) <= 1e-12,
              std::abs(std::abs(f) - 1.0), 1e-12, "the identity pattern has invariant of modulus one");
      }
    }
  }

  // Albert algebra.
  Rng rng(mix(opt.seed, 1717));
  auto random_albert = [&](bool integer) {
    AlbertElement a;
    auto draw = [&]() { return integer ? cplx(rng.uniform_int(-3, 3), rng.uniform_int(-3, 3)) : cplx(rng.normal(), rng.normal()); };
    for (int i = 0; i < 3; ++i) {
      a.alpha[i] = draw();
      for (cplx& c : a.a[i]) c = draw();
    }
    return a;
  };
  const AlbertElement id = AlbertElement::identity();
  s.add("Albert norm of identity", generic_norm(id) == cplx(1.0), std::abs(generic_norm(id) - 1.0), 0.0,
        "nu(I) = 1");
  int inexact = 0;
  for (int i = 0; i < 50; ++i) {
    const AlbertElement a = random_albert(true);
    for (double lambda : {2.0, -3.0, 0.5}) {
      if (generic_norm(cplx(lambda) * a) != lambda * lambda * lambda * generic_norm(a)) ++inexact;
    }
  }
  s.add("Albert norm homogeneity", inexact == 0, inexact, 0.0, "nu(lambda A) = lambda^3 nu(A) exactly for rational lambda");
  double adj = 0.0, jid = 0.0, comm = 0.0;
  for (int i = 0; i < 50; ++i) {
    const AlbertElement a = random_albert(false);
    const AlbertElement b = random_albert(false);
    const double sc = std::pow(max_abs(a), 3);
    adj = std::max(adj, max_abs(jordan_product(a, freudenthal_adjoint(a)) - generic_norm(a) * id) / sc);
    const AlbertElement a2 = jordan_product(a, a);
    jid = std::max(jid, max_abs(jordan_product(a2, jordan_product(a, b)) - jordan_product(a, jordan_product(a2, b))) /
                            (sc * max_abs(a) * max_abs(b)));
    comm = std::max(comm, max_abs(jordan_product(a, b) - jordan_product(b, a)));
  }
  s.add("Albert adjoint identity", adj <= 1e-12, adj, 1e-12, "A o A# = nu(A) I");
  s.add("Albert Jordan identity", jid <= 1e-10, jid, 1e-10, "x^2 o (x o y) = x o (x^2 o y)");
  s.add("Albert commutativity", comm == 0.0, comm, 0.0, "x o y = y o x");
  const int r3 = albert_rank(id), r2 = albert_rank(AlbertElement::diag(1, 1, 0)), r1 = albert_rank(AlbertElement::diag(1, 0, 0)),
            r0 = albert_rank(AlbertElement::diag(0, 0, 0));
  s.add("Albert rank strata", r3 == 3 && r2 == 2 && r1 == 1 && r0 == 0, 0.0, 0.0, "ranks of diagonal idempotent sums",
        {{"ranks", {r0, r1, r2, r3}}});
  int drops = 0;
  for (int i = 0; i < 50; ++i) {
    const AlbertElement base = AlbertElement::diag(1.0, i % 3 == 0 ? 0.0 : 1.0, 0.0);
    const AlbertElement d = 1e-4 * random_albert(false);
    if (albert_rank(base + d) < albert_rank(base)) ++drops;
  }
  s.add("Albert rank lower semicontinuous", drops == 0, drops, 0.0, "small perturbations never lower the rank");
}

void suite_contraction(const VerifyOptions& opt, Suite& s) {
  const MetricCurvature mc = model_metric_and_curvature({1.0, 1}, 0.0);
  s.add("curvature at (1,0)", std::abs(mc.curvature + 1.0) <= 1e-15, std::abs(mc.curvature + 1.0), 1e-15,
        "the model metric has curvature -1 at the origin for eps = 1");
  Rng rng(mix(opt.seed, 3030));
  double flat = 0.0, change = 0.0, conv = 0.0;
  const int n = samples_or(opt, 100);
  for (int i = 0; i < n; ++i) {
    const cplx zeta(rng.normal(), rng.normal());
    flat = std::max(flat, std::abs(model_metric_and_curvature({0.0, 1}, zeta).curvature));
    const double eps = rng.uniform(0.2, 3.0);
    const double x1 = rng.normal() * 2.0, x2 = rng.normal() * 2.0;
    const double x0 = contraction_bracket({eps, 1}, x1, x2);
    const double d = 1.0 + x0 / eps;
    const double jac = 1.0 / (d * d) - (x1 * x1 + x2 * x2) / (eps * x0 * d * d * d);
    const auto [y1, y2] = stereographic(eps, x1, x2);
    change = std::max(change, std::abs(jac * x0 - disc_model_bracket(eps, y1, y2)) / std::max(1.0, std::abs(x0)));
    for (double e : {1.0, 0.1, 0.01, 0.0}) {
      const double gap = std::abs(contraction_bracket({e, 1}, x1, x2) - contraction_bracket({0.0, 1}, x1, x2));
      conv = std::max(conv, gap - e);
    }
  }
  s.add("curvature vanishes at eps = 0", flat == 0.0, flat, 0.0, "the contracted metric is flat");
  s.add("stereographic change of variables", change <= 1e-9, change, 1e-9,
        "the disc bracket is the pulled-back hyperboloid bracket", {{"samples", n}});
  s.add("contraction convergence", conv <= 1e-15, std::max(conv, 0.0), 1e-15, "|bracket_eps - bracket_0| <= eps");

  for (const auto& alg : algebras(opt)) {
    const int r = alg->split_rank;
    bool ok = std::abs(s1_energy(orbit_rep(alg, 0, 0))) == 0.0;
    for (int sv = 1; sv <= r; ++sv) {
      ok = ok && s1_energy(orbit_rep(alg, sv, 0)) > 0.0 && s1_energy(orbit_rep(alg, 0, sv)) < 0.0;
    }
    Rng r2(mix(opt.seed, 4040 + static_cast<std::uint64_t>(alg->n)));
    const LieElement e1 = orbit_rep(alg, 1, 0);
    for (int i = 0; i < 100; ++i) ok = ok && s1_energy(random_conjugate(e1, 3, r2)) > 0.0;
    s.add(alg->name() + " circle energy sign", ok, 0.0, 0.0,
          "the central circle momentum is positive on holomorphic and negative on antiholomorphic orbits");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"triples",    "classify", "closure", "reduction", "invariants",
                                                 "poisson",    "jordan",   "contraction"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt) {
  Suite s;
  if (suite == "triples") suite_triples(opt, s);
  else if (suite == "classify") suite_classify(opt, s);
  else if (suite == "closure") suite_closure(opt, s);
  else if (suite == "reduction") suite_reduction(opt, s);
  else if (suite == "invariants") suite_invariants(opt, s);
  else if (suite == "poisson") suite_poisson(opt, s);
  else if (suite == "jordan") suite_jordan(opt, s);
  else if (suite == "contraction") suite_contraction(opt, s);
  else throw Error("unknown suite '" + suite + "'");
  return s.checks;
}

json verify_report(const std::string& suite, const VerifyOptions& opt) {
  std::vector<std::string> todo = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json checks = json::array();
  bool all = true;
  for (const std::string& name : todo) {
    for (const Check& c : run_suite(name, opt)) {
      all = all && c.passed;
      json j = {{"suite", name}, {"name", c.name}, {"passed", c.passed}, {"residual", c.residual},
                {"bound", c.bound}, {"property", c.property}};
      if (!c.detail.is_null()) j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
  }
  return {{"suite", suite}, {"seed", opt.seed}, {"tolerance", opt.tol}, {"passed", all}, {"checks", checks}};
}

}  // namespace orbitkit::cli
