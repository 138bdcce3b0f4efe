#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "charvar/cli.hpp"
#include "charvar/json_io.hpp"

using namespace charvar;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(CHARVAR_CORPUS_DIR) + "/" + name; }

}  // namespace

TEST_CASE("certify on the pencil configuration") {
  Run r = run({"certify", "--preset", "product-surface", "--genus", "2,2,2", "--nu", "pencil", "--r", "3", "--json"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["command"] == "certify");
  CHECK(j["result"]["conclusions"] == Json::array({"H_leq_r_infinite", "not_FP_r", "not_commensurable_FP_r"}));
  CHECK(j["result"]["evidence"]["method"] == "kunneth-product");
  CHECK(j["result"]["seed"] == 1);
}

TEST_CASE("betti on a genus-2 surface at a rational character") {
  Run r = run({"betti", "--preset", "surface", "--genus", "2", "--char", "2,3,5,7", "--json"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["profile"]["betti"] == Json::array({0, 2, 0}));
  Run t = run({"betti", "--preset", "surface", "--genus", "2", "--char", "2,3,5,7"});
  CHECK(t.out.find("betti: [0,2,0]") != std::string::npos);
}

TEST_CASE("pencil numerology report") {
  Run r = run({"pencil", "--genus", "2,2,2", "--json"});
  CHECK(r.code == 0);
  Json j = r.json()["result"];
  CHECK(j["critical_points"] == 8);
  CHECK(j["euler_X"] == -8);
  CHECK(j["finiteness_verdict"] == "F_2 but not FP_3");
}

TEST_CASE("hypothesis failures exit with 2") {
  CHECK(run({"certify", "--preset", "torus", "--nu", "1;0", "--r", "1"}).code == 2);
  Run z = run({"certify", "--preset", "torus", "--nu", "0;0", "--json"});
  CHECK(z.code == 2);
  CHECK(z.json()["error"]["code"] == "TrivialNu");
  CHECK(run({"bb", "--graph", corpus("two_edges.graph")}).code == 2);
}

TEST_CASE("module errors carry machine-readable codes") {
  Run a = run({"alexander", "--input", corpus("bad_syntax.pres"), "--json"});
  CHECK(a.code == 1);
  CHECK(a.json()["error"]["code"] == "SyntaxError");
  Run b = run({"certify", "--preset", "torus", "--nu", "2;0", "--json"});
  CHECK(b.code == 1);
  CHECK(b.json()["error"]["code"] == "NotSurjective");
  Run c = run({"betti", "--preset", "torus", "--char", "2", "--json"});
  CHECK(c.json()["error"]["code"] == "VariableCountMismatch");
  Run d = run({"kernel", "--preset", "product-surface", "--json"});
  CHECK(d.json()["error"]["code"] == "NotUnivariate");
  Run e = run({"betti", "--preset", "torus"});
  CHECK(e.code == 0);
  Run f = run({"window", "--preset", "free", "--factors", "2", "--radius", "6", "--memory-ceiling", "10", "--json"});
  CHECK(f.json()["error"]["code"] == "WindowTooLarge");
  Run g = run({"betti", "--preset", "nonsense"});
  CHECK(g.code == 1);
  CHECK(g.err.find("BadArgument") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"probe", "--preset", "torus", "--trials", "0"}).code == 1);
  CHECK(run({"window", "--preset", "torus", "--radius", "-3"}).code == 1);
  CHECK(run({"raag"}).code == 1);
  CHECK(run({"betti"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("memory ceiling from the environment") {
  ::setenv(cli::kMemoryCeilingEnv, "10", 1);
  Run r = run({"window", "--preset", "free", "--factors", "2", "--radius", "3", "--json"});
  ::unsetenv(cli::kMemoryCeilingEnv);
  CHECK(r.json()["error"]["code"] == "WindowTooLarge");
  Run ok = run({"window", "--preset", "free", "--factors", "2", "--radius", "6", "--json"});
  CHECK(ok.code == 0);
  Json growth = ok.json()["result"]["growth"];
  CHECK(growth[2]["slope"] == 1);
  CHECK(ok.json()["result"]["table"][5]["dims"][2] == 11);
}

TEST_CASE("kernel, window, oracle and graph commands") {
  Run k = run({"kernel", "--preset", "free", "--factors", "2", "--r", "2", "--json"});
  CHECK(k.code == 0);
  Json kj = k.json()["result"];
  CHECK(kj["degrees"][2]["free_rank"] == 1);
  CHECK(kj["consistent_with_certificate"] == true);

  Run w = run({"window", "--preset", "torus", "--nu", "1;0", "--radius", "5"});
  CHECK(w.code == 0);
  CHECK(w.out.find("(stabilized)") != std::string::npos);

  Run o = run({"oracle", "--preset", "surface", "--genus", "2", "--json"});
  CHECK(o.code == 0);
  CHECK(o.json()["result"]["cover_b1"] == 6);

  Run f = run({"flag", "--graph", "C4", "--json"});
  CHECK(f.json()["result"]["flag_complex"]["reduced_betti"] == Json::array({0, 1}));
  Run bb = run({"bb", "--graph", "K3", "--json"});
  CHECK(bb.code == 0);
  Run ra = run({"raag", "--graph", corpus("square.graph"), "--json"});
  CHECK(ra.json()["result"]["complex"]["ranks"] == Json::array({1, 4, 4}));
}

TEST_CASE("presets resolve to the expected groups") {
  Json s = run({"certify", "--preset", "stallings", "--json"}).json()["result"];
  CHECK(s["conclusions"].size() == 3);
  Json o = run({"certify", "--preset", "bb-octahedron", "--r", "3", "--json"}).json()["result"];
  CHECK(o["conclusions"].size() == 3);
  Json f = run({"jumploci", "--preset", "free", "--json"}).json()["result"];
  CHECK(f["fullness"]["status"] == "full");
  Json t = run({"jumploci", "--preset", "torus", "--char", "trivial", "--json"}).json()["result"];
  CHECK(t["membership"]["in_variety"] == true);
  CHECK(t["ideal"]["generators"] == Json::array({"t2 - 1", "t1 - 1"}));
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"probe", "--preset", "product-surface", "--trials", "20", "--seed", "7", "--json"},
      {"certify", "--preset", "stallings", "--seed", "3", "--json"},
      {"jumploci", "--input", corpus("trefoil.pres"), "--json"}};
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
  CHECK(run(cmds[0]).out != run({"probe", "--preset", "product-surface", "--trials", "20", "--seed", "8", "--json"}).out);
}

TEST_CASE("complex JSON round-trips") {
  GroupModel g = direct_product({surface_group(2), free_group(2)});
  TwistedComplex c = g.full_complex();
  TwistedComplex back = complex_from_json(Json::parse(to_json(c).dump()));
  CHECK(back.ranks() == c.ranks());
  for (std::size_t j = 1; j <= c.top_degree(); ++j) CHECK(back.differential(j) == c.differential(j));
}
