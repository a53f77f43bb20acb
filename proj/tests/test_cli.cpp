#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tgwa/fixedring.hpp"
#include "tgwa/scenario.hpp"

using namespace tgwa;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  Run r = run(args);
  REQUIRE(r.err.empty());
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("tgwa_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("listing and help") {
  Run r = run({"--list-scenarios"});
  CHECK(r.code == 0);
  std::string expect;
  for (const auto& n : builtin_names()) expect += n + "\n";
  CHECK(r.out == expect);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cartan and fixed-ring reports") {
  json c = structured({"cartan", "--scenario", "a2-simple"});
  CHECK(c["command"] == "cartan");
  CHECK(c["scenario"] == "a2-simple");
  CHECK(c["ok"] == true);
  CHECK(c["results"]["matrix"] == json::parse("[[2,-1],[-1,2]]"));
  CHECK(c["results"]["type"] == "A2");

  Run f = run({"fixed-ring", "--scenario", "weyl"});
  CHECK(f.code == 0);
  CHECK(contains(f.out, "tau1: h - 2\n"));
  CHECK(contains(f.out, "s1: h^2 + h\n"));
}

TEST_CASE("fixed-ring output round-trips") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"weyl", {}},
      {"weyl", {"--param", "n=2"}},
      {"quantized-weyl", {"--param", "n=3", "--param", "m=2,3,1"}},
      {"a2-simple", {}},
      {"a2-family", {"--param", "p=3"}},
      {"kleinian-fiber", {}},
      {"fiber-6-2", {"--param", "m=4"}},
      {"finite-orbit", {}},
      {"infinite-orbit-breaks", {}}};
  for (const auto& [name, extra] : cases) {
    CAPTURE(name);
    std::vector<std::string> args = {"fixed-ring", "--scenario", name};
    args.insert(args.end(), extra.begin(), extra.end());
    json j = structured(args);
    CHECK(j["ok"] == true);
    Scenario back = scenario_from_json(j["results"]["scenario"]);
    REQUIRE(back.datum);

    std::map<std::string, std::string> o;
    for (size_t k = 1; k < extra.size(); k += 2) {
      auto eq = extra[k].find('=');
      o[extra[k].substr(0, eq)] = extra[k].substr(eq + 1);
    }
    Scenario s = load_builtin(name, o);
    FixedRingResult f = fixed_datum(*s.datum, *s.phi);
    CHECK(same_datum(*back.datum, f.presentation ? *f.presentation : f.datum));

    std::string path = temp_file(name + ".json", j["results"]["scenario"].dump());
    CHECK(run({"check", "--scenario", path}).code == 0);
  }
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::vector<std::string>> cmds = {
      {"check", "--scenario", "quantized-weyl", "--param", "n=3"},
      {"cartan", "--scenario", "mu-q-family", "--param", "mu=zeta(5)"},
      {"fixed-ring", "--scenario", "finite-orbit", "--format", "structured"},
      {"tensor", "--scenario", "a2-simple", "--scenario", "kleinian-fiber"},
      {"mul", "--scenario", "weyl", "--param", "n=2", "X1+ h1", "X2- X1-"},
      {"normal-form", "--scenario", "quantized-weyl", "X2+ X1+ X1-"},
      {"ore", "--scenario", "quantized-weyl", "--format", "structured"},
      {"s-poly", "12", "zeta(5)", "1/3"},
      {"fiber-mul", "X2+", "X1+ 1/h"},
      {"c-power", "3", "--m", "3"},
      {"weight-modules", "--scenario", "infinite-orbit-breaks"},
      {"restrict", "--scenario", "finite-orbit", "--format", "structured"},
      {"cylinder", "--fixed", "--param", "m=3"},
      {"cylinder", "--format", "svg"}};
  for (const auto& c : cmds) {
    CAPTURE(c[0]);
    Run a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.err.empty());
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("structured output has sorted keys and the standard envelope") {
  Run r = run({"restrict", "--scenario", "infinite-orbit-breaks", "--format", "structured"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(r.out == j.dump(2) + "\n");
  for (const char* k : {"command", "ok", "results", "scenario"}) CHECK(j.contains(k));
  CHECK(j.size() == 4);
  CHECK(j["results"]["restrictions"].size() == 3);
  CHECK(j["results"]["restrictions"][1]["components"][0]["support"] == "0");
}

TEST_CASE("command results") {
  Run m = run({"mul", "--scenario", "weyl", "X-", "X+"});
  CHECK(m.out == "product: h\n");
  Run n = run({"normal-form", "--scenario", "weyl", "X+", "X-"});
  CHECK(n.out == "normal form: h - 1\n");
  json s = structured({"s-poly", "3", "-2", "1"});
  CHECK(s["results"]["recurrence"] == "-4");
  CHECK(s["results"]["closed_form"] == "-4");
  json c = structured({"c-power", "2", "--m", "2"});
  CHECK(c["ok"] == true);
  CHECK(c["results"]["c_phi"] == c["results"]["power"]);
  json cy = structured({"cylinder", "--fixed", "--param", "m=4"});
  CHECK(cy["results"]["unbounded_components"] == 2);
  json w = structured({"weight-modules", "--scenario", "finite-orbit"});
  CHECK(w["results"]["hom"]["M+ -> M-"] == 0);
  CHECK(w["ok"] == true);
}

TEST_CASE("exit codes") {
  // Assertion failures.
  std::string broken = temp_file("broken.json", R"({"datum": {"vars": ["h1", "h2"],
    "sigma": [["h1 - 1", "h2"], ["h1", "h2 - 1"]], "t": ["h1", "h2"], "mu": [["1", "2"], ["1", "1"]]}})");
  Run b = run({"check", "--scenario", broken});
  CHECK(b.code == 1);
  CHECK(contains(b.out, "FAIL cons1 12"));
  CHECK(contains(b.out, "result: FAIL"));
  CHECK(run({"check", "--scenario", "weyl", "--param", "n=2", "--param", "m=2,4"}).code == 1);
  // Computation errors.
  CHECK(run({"mul", "--scenario", "a2-simple", "X1+"}).code == 1);

  // Usage, parse, schema and unsupported-feature errors.
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"cartan"}).code == 2);
  CHECK(run({"cartan", "--scenario", "no-such-scenario"}).code == 2);
  CHECK(run({"cartan", "--scenario", "weyl", "--format", "xml"}).code == 2);
  CHECK(run({"cartan", "--scenario", "weyl", "--window", "0"}).code == 2);
  CHECK(run({"cartan", "--scenario", "weyl", "--param", "nokey"}).code == 2);
  CHECK(run({"s-poly", "x", "1", "1"}).code == 2);
  CHECK(run({"c-power"}).code == 2);
  Run syn = run({"check", "--scenario", temp_file("syntax.json", "{\"datum\": {\"vars\": [\"h\"],, }")});
  CHECK(syn.code == 2);
  CHECK(contains(syn.err, "SyntaxError"));
  CHECK(contains(syn.err, "line 1"));
  Run sch = run({"check", "--scenario", temp_file("schema.json", R"({"datum": {"vars": ["h"], "sigma": [["h-1"]],
    "t": ["h"], "mu": [["1", "1"]]}})")});
  CHECK(sch.code == 2);
  CHECK(contains(sch.err, "SchemaError"));
  Run na = run({"check", "--scenario", temp_file("affine.json", R"({"datum": {"vars": ["h"], "sigma": [["h^2"]],
    "t": ["h"], "mu": [["1"]]}})")});
  CHECK(na.code == 2);
  CHECK(contains(na.err, "UnsupportedFeature"));
  CHECK(run({"restrict", "--scenario", "weyl", "--param", "m=1"}).code == 0);
  CHECK(run({"fixed-ring", "--scenario", "sergeev"}).code == 2);
}

TEST_CASE("verify-paper") {
  Run r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK_FALSE(contains(r.out, "FAIL"));
  for (int id = 1; id <= 8; ++id) CHECK(contains(r.out, "PASS criterion " + std::to_string(id) + " "));
  CHECK(contains(r.out, "PASS infinite-orbit-breaks restrict\n"));
  CHECK(contains(r.out, "result: PASS\n"));
}
