#include "app.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "orbitkit/classify.hpp"
#include "orbitkit/dualpair.hpp"
#include "orbitkit/jordan.hpp"
#include "orbitkit/poisson.hpp"
#include "orbitkit/triples.hpp"
#include "verify.hpp"

namespace orbitkit::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  std::optional<int> samples;
  std::string input;
  std::string output = "json";
};

double effective_tolerance(const Globals& g) {
  if (g.tolerance) return *g.tolerance;
  if (const char* env = std::getenv("ORBITKIT_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("ORBITKIT_TOL must be a positive number, got '" + std::string(env) + "'");
  }
  return kDefaultTolerance;
}

AlgebraPtr algebra_from_flags(const Globals& g) {
  if (g.family.empty()) throw UsageError("--family is required");
  try {
    return make_algebra(family_from_string(g.family), g.params);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0, b = 0;
    const int t = std::stoi(text.substr(0, comma), &a);
    const int u = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    return {t, u};
  } catch (const std::exception&) {
    throw UsageError(what + " must look like 't,u', got '" + text + "'");
  }
}

void emit_table(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object()) {
        emit_table(v, out, prefix + k + ".");
      } else {
        out << prefix << k << ": " << v.dump() << "\n";
      }
    }
  } else {
    out << j.dump() << "\n";
  }
}

void emit(const Globals& g, const json& j, std::ostream& out) {
  if (g.output == "table") {
    emit_table(j, out);
  } else {
    out << j.dump(2) << "\n";
  }
}

json classification_json(const LieElement& x, double tol) {
  const ClassifyOptions opt{tol, kRankThreshold};
  const Classification c = classify_nilpotent(x, opt);
  json j = {{"family", std::string(to_string(x.alg->family))}, {"params", x.alg->params},
            {"pseudoholomorphic", c.pseudoholomorphic}};
  if (c.pseudoholomorphic) {
    j["type"] = {c.type.t, c.type.u};
    j["holomorphic"] = c.type.holomorphic();
  } else {
    j["type"] = nullptr;
    j["holomorphic"] = false;
    j["reason"] = c.reason;
  }
  j["closure_max_s"] = closure_stratum(x, opt);
  return j;
}

json load_lie_element(const Globals& g, const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("family") && !g.family.empty()) j["family"] = g.family;
  if (!j.contains("params") && !g.family.empty()) j["params"] = g.params;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbitkit: holomorphic nilpotent orbits, momentum maps and Jordan invariants", "orbitkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--family", g.family, "sp, u, sostar or so2q");
  app.add_option("--params", g.params, "family parameters, e.g. 3 or 2,1")->delimiter(',');
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tolerance", g.tolerance, "numerical tolerance (default 1e-9, env ORBITKIT_TOL)");
  app.add_option("--samples", g.samples, "number of random samples");
  app.add_option("--input", g.input, "input JSON file");
  app.add_option("--output", g.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* classify = app.add_subcommand("classify", "classify a nilpotent element");

  auto* rep = app.add_subcommand("rep", "representative e_{t,u}");
  std::string type_text;
  rep->add_option("--type", type_text, "t,u")->required();

  auto* reduce = app.add_subcommand("reduce", "zero-level reduction histogram");
  std::string case_name = "o-sp";
  int sprime = 1, ssecond = 0;
  std::vector<int> target;
  reduce->add_option("--case", case_name, "o-sp, u-u, sp-sostar or sp-so2q");
  reduce->add_option("--sprime", sprime, "s'");
  reduce->add_option("--ssecond", ssecond, "s''");
  reduce->add_option("--target", target, "target algebra parameters")->delimiter(',')->required();

  auto* bracket = app.add_subcommand("bracket", "Lie-Poisson brackets at a point");
  std::string at;
  std::string pairs = "pplus";
  bracket->add_option("--at", at, "point xi as Lie element JSON");
  bracket->add_option("--pairs", pairs, "pplus or coords")->check(CLI::IsMember({"pplus", "coords"}));

  auto* jordan = app.add_subcommand("jordan", "Albert algebra invariants");
  std::string norm_file, rank_file;
  jordan->add_option("--norm", norm_file, "Albert element JSON");
  jordan->add_option("--rank", rank_file, "Albert element JSON");

  auto* ks = app.add_subcommand("ks", "Kostant-Sekiguchi element in the p+ model");
  int ks_s = 1;
  ks->add_option("--s", ks_s, "stratum index")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "triples, classify, closure, reduction, invariants, poisson, jordan, contraction or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const double tol = effective_tolerance(g);
    if (classify->parsed()) {
      if (g.input.empty()) throw UsageError("classify needs --input X.json");
      const LieElement x = decode_lie_element(load_lie_element(g, g.input), tol);
      emit(g, classification_json(x, tol), out);
    } else if (rep->parsed()) {
      const auto alg = algebra_from_flags(g);
      const auto [t, u] = parse_pair(type_text, "--type");
      const LieElement x = orbit_rep(alg, t, u);
      json j = encode_lie_element(x);
      j["type"] = {t, u};
      emit(g, j, out);
    } else if (reduce->parsed()) {
      const DualPairConfig cfg = make_dual_pair(dual_pair_case_from_string(case_name), sprime, ssecond, target);
      const ReductionHistogram h = reduce_and_classify(cfg, g.samples.value_or(500), g.seed, {tol, kRankThreshold});
      json counts = json::object();
      for (const auto& [k, v] : h.counts) counts["(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"] = v;
      emit(g,
           {{"case", std::string(to_string(cfg.kind))},
            {"sprime", sprime},
            {"ssecond", ssecond},
            {"target", cfg.target->name()},
            {"samples", h.samples},
            {"seed", g.seed},
            {"histogram", counts},
            {"unclassified", h.unclassified},
            {"max_zero_level_residual", h.max_zero_level_residual}},
           out);
    } else if (bracket->parsed()) {
      const std::string path = !at.empty() ? at : g.input;
      if (path.empty()) throw UsageError("bracket needs --at xi.json");
      const LieElement xi = decode_lie_element(load_lie_element(g, path), tol);
      const PoissonContext ctx = make_poisson_context(xi.alg);
      if (pairs == "pplus") {
        const PPlusBrackets b = pplus_bracket_matrix(ctx, xi.m);
        emit(g, {{"zeta_zeta", encode_matrix(b.zeta_zeta)}, {"zeta_zetabar", encode_matrix(b.zeta_zetabar)}}, out);
      } else {
        const int d = static_cast<int>(ctx.basis.size());
        Mat table(d, d);
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) table(a, b) = coordinate_bracket(ctx, a, b, xi.m);
        emit(g, {{"dim", d}, {"coordinate_brackets", encode_matrix(table)}}, out);
      }
    } else if (jordan->parsed()) {
      if (norm_file.empty() && rank_file.empty()) throw UsageError("jordan needs --norm A.json or --rank A.json");
      json j = json::object();
      if (!norm_file.empty()) j["norm"] = encode_scalar(generic_norm(decode_albert(read_json_file(norm_file))));
      if (!rank_file.empty()) {
        AlbertElement a = decode_albert(read_json_file(rank_file));
        a.field = Algebra::C;
        j["rank"] = albert_rank(a, tol);
      }
      emit(g, j, out);
    } else if (ks->parsed()) {
      const auto alg = algebra_from_flags(g);
      if (ks_s < 0 || ks_s > alg->split_rank) throw UsageError("--s must lie in [0, split rank]");
      const PPlusElement w = ks_element(*alg, ks_s);
      emit(g,
           {{"family", std::string(to_string(alg->family))},
            {"params", alg->params},
            {"s", ks_s},
            {"pplus", encode_matrix(w.z)},
            {"jordan_rank", jordan_rank_classical(*alg, w)}},
           out);
    } else if (verify->parsed()) {
      if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
      VerifyOptions opt;
      opt.seed = g.seed;
      opt.tol = tol;
      opt.samples = g.samples;
      if (!g.family.empty()) {
        opt.family = family_from_string(g.family);
        opt.params = g.params;
      }
      const json report = verify_report(suite, opt);
      if (g.output == "table") {
        for (const auto& c : report["checks"]) {
          out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << ": "
              << c["name"].get<std::string>() << " (residual " << c["residual"].dump() << ")\n";
        }
      } else {
        out << report.dump(2) << "\n";
      }
      return report["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace orbitkit::cli
