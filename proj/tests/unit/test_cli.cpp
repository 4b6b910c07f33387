#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = gkz::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string example(const std::string& name) { return std::string(GKZ_EXAMPLES) + "/" + name; }

}  // namespace

TEST_CASE("toric reports c and both c' representations") {
  Outcome o = run({"toric", example("ex1.json")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body();
  CHECK(r["command"] == "toric");
  CHECK(r["result"]["status"] == "ok");
  CHECK(r["result"]["gorenstein_c"] == json({2, 1, 1}));
  CHECK(r["result"]["cprime_alternatives"].size() == 2);
  CHECK(r["input"]["digest"].get<std::string>().size() == 16);
}

TEST_CASE("text matrices with comments are accepted") {
  Outcome o = run({"toric", example("ex-b4.txt")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["gorenstein_c"] == json({0, 1}));
  CHECK(r["cprime"]["cprime"] == json({1, 1}));
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto args : std::vector<std::vector<std::string>>{{"toric", example("ex1.json")},
                                                         {"duality", example("ex-atilde.json")},
                                                         {"groebner", example("ideal-two.txt")}}) {
    Outcome a = run(args), b = run(args);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("digest is FNV-1a") {
  CHECK(gkz::cli::digest("") == "cbf29ce484222325");
  CHECK(gkz::cli::digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("bernstein exponent and its failure modes") {
  Outcome o = run({"bernstein", example("ex2.json")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["m"] == 2);
  CHECK(r["certified"] == true);
  CHECK(r["predecessor_fails"] == true);

  Outcome low = run({"bernstein", example("ex1.json"), "--bound", "1"});
  CHECK(low.code == gkz::cli::verdict_failure);
  CHECK(low.body()["result"]["error"]["kind"] == "BoundExceeded");
}

TEST_CASE("groebner keeps the non-pure generator") {
  Outcome o = run({"groebner", example("ideal-weyl.txt")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["basis"] == json({"w^2*d_w - 1"}));
  CHECK(r["unit_ideal"] == false);
  CHECK(r["spair_criterion"] == true);
}

TEST_CASE("build emits presentations and checks chart arguments") {
  Outcome o = run({"build", "gkz", example("ex2.json"), "--beta", "1,2"});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["flavor"] == "gkz");
  CHECK(r["beta"] == json({1, 2}));
  CHECK(r["generators"].size() == 2);

  CHECK(run({"build", "chart", example("ex2.json")}).code == gkz::cli::usage_error);
  CHECK(run({"build", "chart", example("ex2.json"), "--chart", "1"}).code == gkz::cli::ok);
}

TEST_CASE("duality reports the shift c0 + n") {
  Outcome o = run({"duality", example("ex-atilde.json")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["c_tilde"] == json({2, 1, 1}));
  CHECK(r["hodge_shift"] == 5);
  CHECK(r["facet_certificate"] == true);
}

TEST_CASE("strictness of the example morphisms") {
  CHECK(run({"strict", example("morphism-w.json")}).code == gkz::cli::ok);
  Outcome o = run({"strict", example("morphism-dual.json"), "--bound", "2"});
  CHECK(o.code == gkz::cli::ok);
  CHECK(o.body()["result"]["report"]["strict"] == true);
}

TEST_CASE("ishida reports mismatches with a failing exit code") {
  Outcome o = run({"ishida", example("a1.txt"), "--box", "-2:1"});
  CHECK(o.code == gkz::cli::verdict_failure);
  json r = o.body()["result"];
  CHECK(r["status"] == "verdict_failed");
  CHECK(r["hyperplane_match"] == true);
  CHECK(r["top_match"] == true);
  CHECK(r["d_squared_zero"] == true);
  CHECK(r["points"] == 64);
}

TEST_CASE("verify-hodge ledger totals") {
  Outcome o = run({"verify-hodge", example("ex2.json")});
  REQUIRE(o.code == gkz::cli::ok);
  json r = o.body()["result"];
  CHECK(r["ok"] == true);
  CHECK(r["shift_ledger"]["primal"]["total"] == 2);
  CHECK(r["shift_ledger"]["primal"]["expected"] == 2);
  CHECK(r["shift_ledger"]["dual"]["total"] == 5);
  CHECK(r["shift_ledger"]["dual"]["expected"] == 5);
}

TEST_CASE("--json writes the same report to a file") {
  std::string path = "test_cli_report.json";
  Outcome o = run({"toric", example("ex1.json"), "--json", path});
  REQUIRE(o.code == gkz::cli::ok);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(json::parse(buf.str()) == o.body());
  std::remove(path.c_str());
}

TEST_CASE("usage and IO errors exit with 1") {
  CHECK(run({}).code == gkz::cli::usage_error);
  CHECK(run({"frobnicate"}).code == gkz::cli::usage_error);
  CHECK(run({"toric", example("does-not-exist.json")}).code == gkz::cli::usage_error);
  CHECK(run({"groebner", example("ex1.json")}).code == gkz::cli::usage_error);
}
