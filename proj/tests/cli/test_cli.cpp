#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "oracles.hpp"
#include "seccoh/commands.hpp"
#include "suite.hpp"

using namespace seccoh;
using Json = nlohmann::ordered_json;

namespace {

const std::string kDir = SECCOH_SCENARIO_DIR;

Scenario load(const std::string& name) { return load_scenario(kDir + "/" + name + ".json"); }

Report run_on(const std::string& command, const std::string& scenario, RunOptions opt = {}) {
  opt.scenario_path = kDir + "/" + scenario + ".json";
  return run_file(command, opt);
}

// Minimal valid document to mutate in the rejection tests.
Json base_doc() {
  return Json::parse(R"({
    "schema": 1,
    "gamma": {"cyclic": 2},
    "coefficients": [{"name": "Z2", "group": {"cyclic": 2}}],
    "space": {"points": 2, "action": {"generator": [1, 0]}, "edges": [[0, 1]]},
    "cover": [{"name": "U", "points": [0, 1]}]
  })");
}

void rejects(const Json& doc, const std::string& prefix) {
  INFO(doc.dump());
  try {
    parse_scenario_text(doc.dump());
    FAIL("accepted an invalid scenario");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
    if (std::string(e.what()).rfind(prefix, 0) != 0) MESSAGE(std::string(e.what()));
  }
}

}  // namespace

TEST_CASE("example scenarios load") {
  for (const char* name : {"minimal", "bockstein-point", "split-point", "circle", "dihedral-point", "four-point"}) {
    INFO(name);
    Scenario sc = load(name);
    CHECK(sc.name == name);
    CHECK(sc.digest.size() == 16);
    CHECK(load(name).digest == sc.digest);
    for (const auto& [n, phi] : sc.cocycles) CHECK(is_tc1(phi));
  }
  Scenario circle = load("circle");
  auto reference = suite::circle(make_trivial_group());
  for (std::size_t p = 0; p <= 3; ++p) CHECK(circle.simplicial->cells(p).size() == reference->cells(p).size());
  REQUIRE(circle.refinements.size() == 1);
  CHECK(circle.refinements[0].maps.size() == 2);
  // The twist is the nonzero class of H^1.
  CohomologyGroup h1(circle.simplicial, circle.coefficient("C"), 1);
  CHECK(h1.class_of(circle.cocycle("twist")) == std::vector<Int>{1});
}

TEST_CASE("invalid scenarios are rejected with the offending path") {
  for (const auto& [file, prefix] : std::vector<std::pair<std::string, std::string>>{
           {"non-automorphism", "$.coefficients[0]: check_gamma_group failed"},
           {"not-a-cover", "$.cover: "},
           {"not-a-cocycle", "$.cocycles[0]: normalization"},
           {"unknown-key", "$.space.colour: unknown key"}}) {
    INFO(file);
    try {
      load_scenario(kDir + "/invalid/" + file + ".json");
      FAIL("accepted");
    } catch (const ScenarioError& e) {
      CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
    }
  }
  CHECK_THROWS_AS(load_scenario(kDir + "/missing.json"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("{ not json"), ScenarioError);

  Json d = base_doc();
  d["schema"] = 2;
  rejects(d, "$.schema");
  d = base_doc();
  d.erase("cover");
  rejects(d, "$.cover: missing");
  d = base_doc();
  d["space"]["action"] = {{"generator", {0, 0}}};
  rejects(d, "$.space.action: not a Gamma-set");
  d = base_doc();
  d["space"]["edges"] = {{0, 0}};
  rejects(d, "$.space.edges[0]");
  d = base_doc();
  d["space"]["points"] = 3;
  d["space"]["action"] = {{"generator", {1, 0, 2}}};
  d["space"]["edges"] = {{0, 2}};
  d["cover"] = {{{"name", "U"}, {"points", {0, 1, 2}}}};
  rejects(d, "$.space.action: not a Gamma-set");
  d = base_doc();
  d["coefficients"].push_back({{"name", "Z2"}, {"group", {{"cyclic", 3}}}});
  rejects(d, "$.coefficients[1].name: duplicate");
  d = base_doc();
  d["coefficients"][0]["group"] = {{"table", {{0, 1}, {1, 1}}}};
  rejects(d, "$.coefficients[0].group");
  d = base_doc();
  d["coefficients"][0]["group"] = {{"cyclic", 2}, {"dihedral", 3}};
  rejects(d, "$.coefficients[0].group: give exactly one");
  d = base_doc();
  d["cover"][0]["points"] = {0, "nowhere"};
  rejects(d, "$.cover[0].points[1]: unknown point");
  d = base_doc();
  d["extensions"] = {{{"name", "e"}, {"a", "Z2"}, {"b", "Z2"}, {"c", "Z2"}, {"alpha", {0, 1}}, {"beta", {0, 1}}}};
  rejects(d, "$.extensions[0]: ");
  d = base_doc();
  d["extensions"] = {{{"name", "e"}, {"a", "Z2"}, {"b", "Z5"}, {"c", "Z2"}, {"alpha", {0, 1}}, {"beta", {0, 1}}}};
  rejects(d, "$.extensions[0].b: ");
  // Two entries on one connected component must agree.
  d = base_doc();
  d["cocycles"] = {{{"name", "phi"}, {"coefficients", "Z2"}, {"degree", 0},
                    {"values", {{{"index", {"U"}}, {"point", 0}, {"value", 1}},
                                {{"index", {"U"}}, {"point", 1}, {"value", 0}}}}}};
  rejects(d, "$.cocycles[0].values[1]: conflicts");
  d["cocycles"][0]["values"][1]["value"] = 1;
  CHECK_NOTHROW(parse_scenario_text(d.dump()));
  d["cocycles"][0]["degree"] = 2;
  rejects(d, "$.cocycles[0].degree");
  d = base_doc();
  d["coefficients"].push_back({{"name", "Z3"}, {"group", {{"cyclic", 3}}}});
  d["cocycles"] = {{{"name", "phi"}, {"coefficients", "Z3"},
                    {"values", {{{"index", {"U", "U"}}, {"gamma", {1}}, {"point", 0}, {"value", 1}}}}}};
  // Z/2 -> Z/3 sending the generator to 1 is not a homomorphism.
  rejects(d, "$.cocycles[0]: cocycle condition");
  d = base_doc();
  d["refinements"] = {{{"name", "r"}, {"cover", {{{"name", "V"}, {"points", {0, 1}}}}},
                       {"maps", {{{"name", "m"}, {"map", {"W"}}}}}}};
  rejects(d, "$.refinements[0].maps[0].map[0]: unknown cover set");
}

TEST_CASE("cochains survive the JSON round trip") {
  Scenario sc = load("circle");
  auto m = sc.coefficient("B");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    Cochain phi = random_tc1(sc.simplicial, m, rng);
    std::ifstream in(kDir + "/circle.json");
    Json doc = Json::parse(in);
    Json entry = cochain_json(phi, "B");
    entry["name"] = "copy";
    doc["cocycles"] = Json::array({entry});
    Scenario back = parse_scenario_text(doc.dump());
    CHECK(back.cocycle("copy").values() == phi.values());
  }
}

TEST_CASE("cohomology command") {
  RunOptions opt;
  opt.degree = 2;
  opt.coefficients = "A";
  Report r = run_on("cohomology", "bockstein-point", opt);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.json["results"]["cohomology"][0]["groups"][0]["factors"] == Json::array({2}));

  // Non-abelian coefficients are skipped by default and rejected by name.
  Report all = run_on("cohomology", "dihedral-point");
  CHECK(all.exit_code == kExitOk);
  CHECK(all.json["results"]["cohomology"][1]["skipped"] == "non-abelian coefficients");
  opt.coefficients = "D8";
  CHECK(run_on("cohomology", "dihedral-point", opt).exit_code == kExitInput);
  opt = {};
  opt.degree = 9;
  CHECK(run_on("cohomology", "minimal", opt).exit_code == kExitInput);

  Report circle = run_on("cohomology", "circle");
  for (const auto& g : circle.json["results"]["cohomology"][0]["groups"])
    CHECK(g["factors"] == (g["degree"] == 2 ? Json::array() : Json::array({2})));
}

TEST_CASE("group-cohomology matches the bar-complex oracle") {
  for (const char* name : {"bockstein-point", "four-point", "dihedral-point"}) {
    Scenario sc = load(name);
    Report r = run(std::string("group-cohomology"), sc, RunOptions{});
    REQUIRE(r.exit_code == kExitOk);
    std::size_t i = 0;
    for (const auto& [cname, m] : sc.coefficients) {
      const Json& entry = r.json["results"]["cohomology"][i++];
      if (!m->g().is_abelian()) continue;
      for (const auto& g : entry["groups"]) {
        INFO(name << " " << cname << " p=" << g["degree"].get<int>());
        CHECK(g["order"].get<std::size_t>() == oracle::group_cohomology(*m, g["degree"].get<std::size_t>()).order);
      }
    }
  }
}

TEST_CASE("dd command") {
  RunOptions opt;
  opt.cocycle = "hom";
  Report split = run_on("dd", "split-point", opt);
  CHECK(split.exit_code == kExitOk);
  CHECK(split.json["results"]["classes"][0]["dd"] == Json::array({0}));
  CHECK(split.json["results"]["classes"][0]["liftable"] == true);
  Report bock = run_on("dd", "bockstein-point", opt);
  CHECK(bock.json["results"]["classes"][0]["dd"] == Json::array({1}));
  // Without a cocycle, every class of TC^1(C) is listed.
  Report every = run_on("dd", "bockstein-point");
  CHECK(every.json["results"]["classes"].size() == 2);
  opt.cocycle = "nope";
  CHECK(run_on("dd", "split-point", opt).exit_code == kExitInput);
  CHECK(run_on("dd", "minimal").exit_code == kExitInput);
}

TEST_CASE("lift command") {
  RunOptions opt;
  opt.oracle = "both";
  Report circle = run_on("lift", "circle", opt);
  CHECK(circle.exit_code == kExitOk);
  const Json& res = circle.json["results"];
  CHECK(res["exists"] == true);
  CHECK(res["classes"] == 2);
  CHECK(res["agreement"] == true);
  CHECK(res["brute"]["candidates"] == 512);

  Report bock = run_on("lift", "bockstein-point", opt);
  CHECK(bock.exit_code == kExitOk);
  CHECK(bock.json["results"]["exists"] == false);
  CHECK(bock.json["results"]["brute"]["candidates"] == 4);
  CHECK(bock.json["results"]["brute"]["liftings"] == 0);

  Report split = run_on("lift", "split-point", opt);
  CHECK(split.json["results"]["classes"] == 2);
  CHECK(split.json["results"]["agreement"] == true);

  Report dihedral = run_on("lift", "dihedral-point", opt);
  CHECK(dihedral.exit_code == kExitOk);
  CHECK(dihedral.json["results"]["agreement"] == true);

  opt.oracle = "brute";
  opt.budget = 100;
  Report limited = run_on("lift", "circle", opt);
  CHECK(limited.exit_code == kExitBudget);
  CHECK(limited.json["status"] == "budget_exceeded");
  opt.oracle = "guess";
  CHECK(run_on("lift", "circle", opt).exit_code == kExitInput);
}

TEST_CASE("verify and roundtrip commands") {
  for (const char* name : {"minimal", "bockstein-point", "split-point", "circle", "dihedral-point", "four-point"}) {
    INFO(name);
    Report v = run_on("verify", name);
    CHECK(v.exit_code == kExitOk);
    CHECK(v.json["results"]["failed"] == 0);
    CHECK(v.json["failures"].empty());
    Report rt = run_on("roundtrip", name);
    CHECK(rt.exit_code == kExitOk);
  }
  Report circle = run_on("verify", "circle");
  bool saw_homotopy = false;
  for (const auto& c : circle.json["results"]["checks"])
    saw_homotopy = saw_homotopy || c["check"].get<std::string>().rfind("refinement homotopy", 0) == 0;
  CHECK(saw_homotopy);
}

TEST_CASE("reports are deterministic and carry the seed") {
  RunOptions opt;
  opt.seed = 17;
  const std::string a = run_on("verify", "four-point", opt).json.dump();
  const std::string b = run_on("verify", "four-point", opt).json.dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  CHECK(j["options"]["seed"] == 17);
  CHECK(j["tool"]["version"] == kToolVersion);
  CHECK(j["scenario"]["digest"] == load("four-point").digest);
  CHECK(!j.contains("timing"));
  CHECK(run_on("unknown", "minimal").exit_code == kExitInput);
}
