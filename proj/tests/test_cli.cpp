#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "app.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orbitkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = orbitkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("orbitkit_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rep and classify round trip") {
    const Result rep = run_cli({"rep", "--family", "sp", "--params", "3", "--type", "2,1"});
    REQUIRE(rep.code == 0);
    const json r = json::parse(rep.out);
    CHECK(r["type"] == json::array({2, 1}));
    CHECK(r["family"] == "sp");
    CHECK(r["matrix"].size() == 6);
    const std::string path = write_temp("rep21", r);
    const Result cls = run_cli({"classify", "--input", path});
    REQUIRE(cls.code == 0);
    const json c = json::parse(cls.out);
    CHECK(c["type"] == json::array({2, 1}));
    CHECK(c["holomorphic"] == false);
    CHECK(c["closure_max_s"] == -1);

    const json holo = json::parse(run_cli({"rep", "--family", "u", "--params", "2,2", "--type", "2,0"}).out);
    const json ch = json::parse(run_cli({"classify", "--input", write_temp("rep20", holo)}).out);
    CHECK(ch["type"] == json::array({2, 0}));
    CHECK(ch["holomorphic"] == true);
    CHECK(ch["closure_max_s"] == 2);
  }

  TEST_CASE("classify takes family and params from flags") {
    json m = json::object();
    m["matrix"] = json::array({json::array({0, 1}), json::array({0, 0})});
    const std::string path = write_temp("sl2", m);
    const Result res = run_cli({"classify", "--family", "sp", "--params", "1", "--input", path});
    REQUIRE(res.code == 0);
    const json c = json::parse(res.out);
    CHECK(c["pseudoholomorphic"] == true);
    CHECK(c["type"][0].get<int>() + c["type"][1].get<int>() == 1);
    const Result bad = run_cli({"classify", "--family", "sp", "--params", "1", "--input", write_temp("bad", json{{"matrix", {{1, 0}, {0, 1}}}})});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error") != std::string::npos);
  }

  TEST_CASE("reduce is deterministic and holomorphic") {
    const std::vector<std::string> args = {"reduce", "--case", "o-sp", "--sprime", "2", "--ssecond", "0",
                                           "--target", "3", "--samples", "200", "--seed", "7"};
    const Result a = run_cli(args);
    const Result b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["samples"] == 200);
    CHECK(j["unclassified"] == 0);
    for (const auto& [k, v] : j["histogram"].items()) CHECK(k.substr(k.size() - 3) == ",0)");
    CHECK(j["histogram"].contains("(2,0)"));
    CHECK(json::parse(run_cli({"reduce", "--case", "o-sp", "--target", "2", "--samples", "50", "--seed", "8"}).out) !=
          json::parse(run_cli({"reduce", "--case", "o-sp", "--target", "2", "--samples", "50", "--seed", "9"}).out));
  }

  TEST_CASE("bracket in p+") {
    const json z = json::parse(run_cli({"rep", "--family", "sostar", "--params", "3", "--type", "1,0"}).out);
    const Result res = run_cli({"bracket", "--at", write_temp("xi", z), "--pairs", "pplus"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    for (const auto& row : j["zeta_zeta"])
      for (const auto& v : row) CHECK((v.is_number() ? std::abs(v.get<double>()) : std::hypot(v[0].get<double>(), v[1].get<double>())) <= 1e-12);
    CHECK(j.contains("zeta_zetabar"));
    CHECK(run_cli({"bracket"}).code == 2);
  }

  TEST_CASE("jordan invariants") {
    const json one = {{"alpha", {1, 1, 1}}, {"a", {json::array(), json::array(), json::array()}}};
    json id = {{"alpha", {1, 1, 1}}};
    json zero_oct = json::array({0, 0, 0, 0, 0, 0, 0, 0});
    id["a"] = {zero_oct, zero_oct, zero_oct};
    const Result n = run_cli({"jordan", "--norm", write_temp("albert_id", id)});
    REQUIRE(n.code == 0);
    CHECK(json::parse(n.out)["norm"] == 1.0);
    json d = id;
    d["alpha"] = {1, 1, 0};
    const Result r = run_cli({"jordan", "--rank", write_temp("albert_d", d)});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rank"] == 2);
    CHECK(run_cli({"jordan"}).code == 2);
    CHECK(run_cli({"jordan", "--norm", write_temp("albert_bad", one)}).code == 1);
  }

  TEST_CASE("ks") {
    const Result res = run_cli({"ks", "--family", "sp", "--params", "2", "--s", "1"});
    REQUIRE(res.code == 0);
    CHECK(json::parse(res.out)["jordan_rank"] == 1);
    CHECK(run_cli({"ks", "--family", "sp", "--params", "2", "--s", "3"}).code == 2);
  }

  TEST_CASE("verify exit codes and determinism") {
    const Result a = run_cli({"verify", "--suite", "triples", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == run_cli({"verify", "--suite", "triples", "--seed", "1"}).out);
    const json j = json::parse(a.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() > 0);
    for (const auto& c : j["checks"]) CHECK(c.contains("property"));
    const Result t = run_cli({"verify", "--suite", "contraction", "--output", "table"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("PASS contraction:", 0) == 0);
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"rep", "--family", "sp", "--params", "2", "--type", "x"}).code == 2);
    CHECK(run_cli({"rep", "--family", "e6", "--params", "2", "--type", "1,0"}).code == 2);
    CHECK(run_cli({"rep", "--params", "2", "--type", "1,0"}).code == 2);
    CHECK(run_cli({"verify", "--output", "xml"}).code == 2);
    CHECK(run_cli({"rep", "--family", "sp", "--params", "2", "--type", "2,1"}).code == 1);
    const Result help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
  }

  TEST_CASE("tolerance from the environment") {
    ::setenv("ORBITKIT_TOL", "1e-7", 1);
    const json j = json::parse(run_cli({"verify", "--suite", "contraction"}).out);
    CHECK(j["tolerance"] == 1e-7);
    const json k = json::parse(run_cli({"verify", "--suite", "contraction", "--tolerance", "1e-6"}).out);
    CHECK(k["tolerance"] == 1e-6);
    ::setenv("ORBITKIT_TOL", "lots", 1);
    CHECK(run_cli({"verify", "--suite", "contraction"}).code == 2);
    ::unsetenv("ORBITKIT_TOL");
    CHECK(json::parse(run_cli({"verify", "--suite", "contraction"}).out)["tolerance"] == 1e-9);
  }
}
