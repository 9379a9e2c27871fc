#include "seccoh/commands.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "seccoh/bundles.hpp"

namespace seccoh {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for precondition failures detected here, reported with exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json ints(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(x);
  return out;
}

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Collects named checks for verify and the oracle comparisons.
struct Checks {
  Json items = Json::array();
  std::vector<std::string> failures;
  std::size_t budget_hits = 0;

  void add(const std::string& name, bool ok, Json detail = Json::object()) {
    Json item;
    item["check"] = name;
    item["status"] = ok ? "pass" : "fail";
    if (!detail.empty()) item["detail"] = std::move(detail);
    items.push_back(std::move(item));
    if (!ok) failures.push_back(name);
  }
  void budget(const std::string& name, const std::string& what) {
    Json item;
    item["check"] = name;
    item["status"] = "budget_exceeded";
    item["detail"] = what;
    items.push_back(std::move(item));
    ++budget_hits;
  }
  int exit_code() const {
    if (!failures.empty()) return kExitAssertion;
    return budget_hits ? kExitBudget : kExitOk;
  }
};

std::vector<std::pair<std::string, GammaGroupPtr>> selected_coefficients(const Scenario& sc, const RunOptions& opt) {
  if (opt.coefficients) return {{*opt.coefficients, sc.coefficient(*opt.coefficients)}};
  return sc.coefficients;
}

const CentralExtension& selected_extension(const Scenario& sc, const RunOptions& opt) {
  if (opt.extension) return sc.extension(*opt.extension);
  if (sc.extensions.empty()) throw InputError("this command needs an extension and the scenario defines none");
  return sc.extensions.front();
}

Json cohomology_json(const CohomologyGroup& h, const std::string& coeff) {
  Json j;
  j["degree"] = h.degree();
  j["factors"] = ints(h.factors());
  j["order"] = h.order();
  Json gens = Json::array();
  for (const auto& g : h.generators()) gens.push_back(cochain_json(g, coeff));
  j["generators"] = std::move(gens);
  j["census"] = {{"positions", h.cochain_positions()}, {"empty_indices", h.empty_indices()}};
  j["cocycle_factors"] = ints(h.cocycle_factors());
  j["coboundary_factors"] = ints(h.coboundary_factors());
  return j;
}

std::vector<std::size_t> degrees(const SimplicialCover& sc, const RunOptions& opt) {
  const std::size_t top = sc.max_degree() - 1;
  if (opt.degree) {
    if (*opt.degree > top)
      throw InputError("degree " + std::to_string(*opt.degree) + " exceeds the scenario's bound " + std::to_string(top));
    return {*opt.degree};
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p <= std::min<std::size_t>(2, top); ++p) out.push_back(p);
  return out;
}

Json cohomology_for(const SimplicialCoverPtr& cover, const Scenario& sc, const RunOptions& opt) {
  Json results = Json::array();
  for (const auto& [name, m] : selected_coefficients(sc, opt)) {
    Json entry;
    entry["coefficients"] = name;
    if (!m->g().is_abelian()) {
      if (opt.coefficients) throw InputError("coefficients '" + name + "' are not abelian");
      entry["skipped"] = "non-abelian coefficients";
      results.push_back(std::move(entry));
      continue;
    }
    Json groups = Json::array();
    for (std::size_t p : degrees(*cover, opt)) groups.push_back(cohomology_json(CohomologyGroup(cover, m, p), name));
    entry["groups"] = std::move(groups);
    results.push_back(std::move(entry));
  }
  return results;
}

Report cmd_cohomology(const Scenario& sc, const RunOptions& opt) {
  return {Json{{"cohomology", cohomology_for(sc.simplicial, sc, opt)}}, kExitOk};
}

Report cmd_group_cohomology(const Scenario& sc, const RunOptions& opt) {
  auto space = std::make_shared<const GammaSpace>(trivial_space_action(sc.gamma, 1));
  auto cover = std::make_shared<const Cover>(std::vector<std::string>{"X"}, std::vector<std::vector<std::size_t>>{{0}}, 1);
  auto pt = make_simplicial_cover(space, cover, sc.simplicial->max_degree());
  // Coefficients keep their Gamma-action; only the space changes.
  Json j;
  j["space"] = "point";
  j["cohomology"] = cohomology_for(pt, sc, opt);
  return {std::move(j), kExitOk};
}

// The cocycles a command acts on: the named one, or fallback.
std::vector<std::pair<std::string, Cochain>> chosen_cocycles(const Scenario& sc, const RunOptions& opt,
                                                             const GammaGroupPtr& coeff) {
  if (opt.cocycle) {
    const Cochain& phi = sc.cocycle(*opt.cocycle);
    if (coeff && phi.coeff() != coeff)
      throw InputError("cocycle '" + *opt.cocycle + "' does not take values in '" + sc.coefficient_name(coeff) + "'");
    if (phi.degree() != 1) throw InputError("cocycle '" + *opt.cocycle + "' is not of degree 1");
    return {{*opt.cocycle, phi}};
  }
  std::vector<std::pair<std::string, Cochain>> out;
  for (const auto& [name, phi] : sc.cocycles)
    if (phi.degree() == 1 && (!coeff || phi.coeff() == coeff)) out.emplace_back(name, phi);
  return out;
}

Json dd_json(const Cochain& phi, const CentralExtension& ext, const CohomologyGroup& h2a) {
  auto cls = delta1(phi, ext, h2a);
  return Json{{"dd", ints(cls)}, {"h2_factors", ints(h2a.factors())}, {"liftable", all_zero(cls)}};
}

Report cmd_dd(const Scenario& sc, const RunOptions& opt) {
  const CentralExtension& ext = selected_extension(sc, opt);
  const std::string cname = sc.coefficient_name(ext.c);
  CohomologyGroup h2a(sc.simplicial, ext.a, 2);
  Json j;
  j["extension"] = ext.name;
  Json rows = Json::array();
  if (opt.cocycle) {
    for (const auto& [name, phi] : chosen_cocycles(sc, opt, ext.c)) {
      Json row = dd_json(phi, ext, h2a);
      row["cocycle"] = name;
      rows.push_back(std::move(row));
    }
  } else {
    auto tc1 = enumerate_tc1(sc.simplicial, ext.c, opt.budget);
    j["tc1_cocycles"] = tc1.cocycles.size();
    for (std::size_t r : tc1.representatives) {
      Json row = dd_json(tc1.cocycles[r], ext, h2a);
      row["representative"] = cochain_json(tc1.cocycles[r], cname);
      rows.push_back(std::move(row));
    }
  }
  j["classes"] = std::move(rows);
  return {std::move(j), kExitOk};
}

Report cmd_lift(const Scenario& sc, const RunOptions& opt) {
  if (opt.oracle != "solve" && opt.oracle != "brute" && opt.oracle != "both")
    throw InputError("--oracle must be solve, brute or both");
  const CentralExtension& ext = selected_extension(sc, opt);
  const std::string bname = sc.coefficient_name(ext.b);
  auto chosen = chosen_cocycles(sc, opt, ext.c);
  std::string name = "identity";
  Cochain phi = Cochain::identity(sc.simplicial, ext.c, 1);
  if (!chosen.empty()) {
    name = chosen.front().first;
    phi = chosen.front().second;
  }
  Json j;
  j["extension"] = ext.name;
  j["cocycle"] = name;
  j["oracle"] = opt.oracle;
  Checks checks;
  std::optional<LiftingClassification> solved;
  std::optional<BruteForceLiftings> brute;
  if (opt.oracle != "brute") {
    solved = solve_liftings(phi, ext, opt.budget);
    Json s;
    s["dd"] = ints(solved->dd);
    s["h2_factors"] = ints(solved->h2_factors);
    s["exists"] = solved->exists;
    s["classes"] = solved->class_count();
    s["h1_order"] = solved->h1_order;
    s["canonical"] = solved->canonical;
    Json reps = Json::array();
    for (const auto& r : solved->representatives) reps.push_back(cochain_json(r, bname));
    s["representatives"] = std::move(reps);
    j["solve"] = std::move(s);
  }
  if (opt.oracle != "solve") {
    brute = enumerate_liftings_bruteforce(phi, ext, opt.budget);
    Json b;
    b["candidates"] = brute->candidates;
    b["liftings"] = brute->liftings.size();
    b["exists"] = !brute->liftings.empty();
    b["classes"] = brute->classes.size();
    Json reps = Json::array();
    for (const auto& r : brute->representatives) reps.push_back(cochain_json(r, bname));
    b["representatives"] = std::move(reps);
    j["brute"] = std::move(b);
  }
  if (solved && brute) {
    const bool agree = solved->exists == !brute->liftings.empty() &&
                       solved->class_count() == brute->classes.size() &&
                       (!solved->canonical || solved->representatives == brute->representatives);
    j["agreement"] = agree;
    checks.add("solve and brute force agree", agree);
  }
  j["exists"] = solved ? solved->exists : !brute->liftings.empty();
  j["classes"] = solved ? solved->class_count() : brute->classes.size();
  Report r{std::move(j), checks.exit_code()};
  r.json["failures"] = checks.failures;
  return r;
}

Report cmd_roundtrip(const Scenario& sc, const RunOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  Checks checks;
  std::vector<std::pair<std::string, Cochain>> targets = chosen_cocycles(sc, opt, nullptr);
  if (!opt.cocycle)
    for (const auto& [name, m] : sc.coefficients) targets.emplace_back("identity/" + name, Cochain::identity(sc.simplicial, m, 1));
  Json rows = Json::array();
  for (const auto& [name, phi] : targets) {
    Cochain mu = random_cochain(sc.simplicial, phi.coeff(), 0, rng);
    auto forward = roundtrip_check(phi, mu);
    CombinatorialBundle p(phi);
    auto backward = roundtrip_check(p, perturb_sections(p, canonical_sections(p), mu));
    Json row;
    row["cocycle"] = name;
    row["bundle_points"] = p.size();
    row["cocycle_to_bundle"] = {{"witnesses", forward.witnesses}, {"failures", forward.failures}};
    row["bundle_to_cocycle"] = {{"witnesses", backward.witnesses}, {"failures", backward.failures}};
    rows.push_back(std::move(row));
    checks.add("roundtrip " + name, forward.ok() && backward.ok());
  }
  Json j;
  j["roundtrips"] = std::move(rows);
  j["checks"] = checks.items;
  Report r{std::move(j), checks.exit_code()};
  r.json["failures"] = checks.failures;
  return r;
}

void verify_identities(const Scenario& sc, Checks& checks) {
  const std::size_t pmax = std::min<std::size_t>(3, sc.simplicial->max_degree());
  auto report = [&](const std::string& name, const IdentityReport& r) {
    Json d{{"checked", r.checked}};
    if (!r.ok()) d["first_counterexample"] = r.counterexamples.front();
    checks.add(name, r.ok(), std::move(d));
  };
  report("simplicial identities", verify_simplicial_identities(*sc.space, *sc.cover, pmax));
  report("cover compatibility", verify_face_compat(*sc.simplicial, pmax));
  for (const auto& [name, m] : sc.coefficients)
    report("twisting identities (" + name + ")", verify_twist_identities(*sc.space, m->action, pmax));
}

void verify_coboundary(const Scenario& sc, const RunOptions& opt, Checks& checks) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& [name, m] : sc.coefficients) {
    if (!m->g().is_abelian()) continue;
    for (std::size_t p = 0; p + 2 <= sc.simplicial->max_degree() && p <= 2; ++p) {
      std::size_t bad = 0;
      for (int k = 0; k < 100; ++k)
        bad += !coboundary(coboundary(random_cochain(sc.simplicial, m, p, rng))).is_identity();
      checks.add("coboundary squares to zero (" + name + ", p=" + std::to_string(p) + ")", bad == 0,
                 Json{{"samples", 100}, {"nonzero", bad}});
    }
  }
}

void verify_cohomology_bijection(const Scenario& sc, const RunOptions& opt, Checks& checks) {
  for (const auto& [name, m] : sc.coefficients) {
    if (!m->g().is_abelian()) continue;
    const std::string label = "TC against H (" + name + ")";
    try {
      auto c = tc1_h1_compare(sc.simplicial, m, opt.budget);
      checks.add(label, c.ok(),
                 Json{{"tc0", c.tc0_count}, {"h0_order", c.h0_order}, {"tc1_cocycles", c.tc1_cocycles},
                      {"tc1_classes", c.tc1_classes}, {"h1_order", c.h1_order}});
    } catch (const BudgetExceeded& e) {
      checks.budget(label, e.what());
    }
  }
}

Json exactness_json(const ExactnessReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes)
    nodes.push_back({{"node", n.node}, {"image", n.image_size}, {"kernel", n.kernel_size}, {"ok", n.ok}});
  return nodes;
}

void verify_extensions(const Scenario& sc, const RunOptions& opt, Checks& checks) {
  for (const auto& ext : sc.extensions) {
    const std::string tag = " (" + ext.name + ")";
    if (ext.is_abelian() && sc.simplicial->max_degree() >= 2) {
      const std::size_t pmax = std::min<std::size_t>(2, sc.simplicial->max_degree() - 2);
      auto les = les_exactness_check(sc.simplicial, ext, pmax);
      checks.add("long exact sequence" + tag, les.ok(), exactness_json(les));
    }
    try {
      auto six = six_term_exactness(sc.simplicial, ext, opt.budget);
      checks.add("six-term exactness" + tag, six.ok(), exactness_json(six));
    } catch (const BudgetExceeded& e) {
      checks.budget("six-term exactness" + tag, e.what());
    }
    try {
      auto tc1 = enumerate_tc1(sc.simplicial, ext.c, opt.budget);
      std::size_t disagreements = 0, liftable = 0;
      for (const auto& phi : tc1.cocycles) {
        auto solved = solve_liftings(phi, ext, opt.budget);
        auto brute = enumerate_liftings_bruteforce(phi, ext, opt.budget);
        liftable += solved.exists;
        disagreements += solved.exists != !brute.liftings.empty() ||
                         solved.class_count() != brute.classes.size() ||
                         (solved.canonical && solved.representatives != brute.representatives);
      }
      checks.add("lifting solver matches brute force" + tag, disagreements == 0,
                 Json{{"cocycles", tc1.cocycles.size()}, {"liftable", liftable}, {"disagreements", disagreements}});
    } catch (const BudgetExceeded& e) {
      checks.budget("lifting solver matches brute force" + tag, e.what());
    }
  }
}

void verify_roundtrips(const Scenario& sc, const RunOptions& opt, Checks& checks) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& [name, m] : sc.coefficients) {
    const std::string label = "bundle round trips (" + name + ")";
    try {
      std::vector<Cochain> phis{Cochain::identity(sc.simplicial, m, 1)};
      for (const auto& [cn, phi] : sc.cocycles)
        if (phi.coeff() == m && phi.degree() == 1) phis.push_back(phi);
      for (int k = 0; k < 5; ++k) phis.push_back(random_tc1(sc.simplicial, m, rng, opt.budget));
      std::size_t witnesses = 0, failed = 0;
      for (const auto& phi : phis) {
        Cochain mu = random_cochain(sc.simplicial, m, 0, rng);
        auto f = roundtrip_check(phi, mu);
        CombinatorialBundle p(phi);
        auto b = roundtrip_check(p, perturb_sections(p, canonical_sections(p), mu));
        witnesses += f.witnesses + b.witnesses;
        failed += !f.ok() + !b.ok();
      }
      checks.add(label, failed == 0, Json{{"cocycles", phis.size()}, {"witnesses", witnesses}});
    } catch (const BudgetExceeded& e) {
      checks.budget(label, e.what());
    }
  }
}

void verify_refinements(const Scenario& sc, const RunOptions& opt, Checks& checks) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& ref : sc.refinements) {
    for (std::size_t i = 0; i < ref.maps.size(); ++i)
      for (std::size_t k = i + 1; k < ref.maps.size(); ++k) {
        const Refinement& r = *ref.maps[i];
        const Refinement& s = *ref.maps[k];
        const std::string tag = " (" + ref.name + ": " + r.name() + ", " + s.name();
        for (const auto& [name, m] : sc.coefficients) {
          if (!m->g().is_abelian()) continue;
          std::size_t bad = 0;
          for (int n = 0; n < 100; ++n) {
            Cochain phi = random_cochain(sc.simplicial, m, 1, rng);
            Cochain lhs = difference(restrict_cochain(phi, s), restrict_cochain(phi, r));
            Cochain rhs = compose(homotopy(coboundary(phi), r, s), coboundary(homotopy(phi, r, s)));
            bad += !(lhs == rhs);
          }
          checks.add("refinement homotopy" + tag + ", " + name + ")", bad == 0, Json{{"samples", 100}, {"mismatches", bad}});
          auto act = refinement_action_check(r, s, m, 1);
          checks.add("refinements agree on H^1" + tag + ", " + name + ")", act.ok(), Json{{"generators", act.generators}});
        }
      }
  }
}

Report cmd_verify(const Scenario& sc, const RunOptions& opt) {
  Checks checks;
  verify_identities(sc, checks);
  verify_coboundary(sc, opt, checks);
  verify_cohomology_bijection(sc, opt, checks);
  verify_extensions(sc, opt, checks);
  verify_roundtrips(sc, opt, checks);
  verify_refinements(sc, opt, checks);
  Json j;
  j["checks"] = checks.items;
  j["passed"] = checks.items.size() - checks.failures.size() - checks.budget_hits;
  j["failed"] = checks.failures.size();
  j["budget_exceeded"] = checks.budget_hits;
  Report r{std::move(j), checks.exit_code()};
  r.json["failures"] = checks.failures;
  return r;
}

const char* status_name(int code) {
  switch (code) {
    case kExitOk: return "ok";
    case kExitAssertion: return "assertion_failed";
    case kExitInput: return "input_error";
    default: return "budget_exceeded";
  }
}

Json header(const std::string& command, const RunOptions& opt) {
  Json j;
  j["tool"] = {{"name", "seccoh"}, {"version", kToolVersion}};
  j["report_schema"] = kReportSchema;
  j["command"] = command;
  Json o;
  o["scenario"] = opt.scenario_path;
  if (opt.degree) o["degree"] = *opt.degree;
  if (opt.extension) o["extension"] = *opt.extension;
  if (opt.cocycle) o["cocycle"] = *opt.cocycle;
  if (opt.coefficients) o["coefficients"] = *opt.coefficients;
  o["oracle"] = opt.oracle;
  o["seed"] = opt.seed;
  o["budget"] = opt.budget;
  j["options"] = std::move(o);
  return j;
}

Report finish(Json head, Report body) {
  Json failures = body.json.contains("failures") ? body.json["failures"] : Json::array();
  body.json.erase("failures");
  head["results"] = std::move(body.json);
  head["status"] = status_name(body.exit_code);
  head["failures"] = std::move(failures);
  return {std::move(head), body.exit_code};
}

Report error_report(Json head, int code, const std::string& what) {
  head["results"] = nullptr;
  head["status"] = status_name(code);
  head["failures"] = Json::array({what});
  return {std::move(head), code};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"cohomology", "group-cohomology", "dd", "lift", "verify", "roundtrip"};
  return names;
}

Json cochain_json(const Cochain& phi, const std::string& coefficients) {
  Json j;
  j["coefficients"] = coefficients;
  j["degree"] = phi.degree();
  Json values = Json::array();
  for (const auto& e : sparse_entries(phi)) {
    Json v;
    v["index"] = e.index;
    v["gamma"] = e.gammas;
    v["point"] = e.point;
    v["value"] = e.value;
    values.push_back(std::move(v));
  }
  j["values"] = std::move(values);
  return j;
}

Report run(const std::string& command, const Scenario& sc, const RunOptions& opt) {
  Json head = header(command, opt);
  head["scenario"] = {{"name", sc.name}, {"digest", sc.digest}};
  try {
    if (command == "cohomology") return finish(head, cmd_cohomology(sc, opt));
    if (command == "group-cohomology") return finish(head, cmd_group_cohomology(sc, opt));
    if (command == "dd") return finish(head, cmd_dd(sc, opt));
    if (command == "lift") return finish(head, cmd_lift(sc, opt));
    if (command == "verify") return finish(head, cmd_verify(sc, opt));
    if (command == "roundtrip") return finish(head, cmd_roundtrip(sc, opt));
    return error_report(head, kExitInput, "unknown command '" + command + "'");
  } catch (const BudgetExceeded& e) {
    return error_report(head, kExitBudget, e.what());
  } catch (const std::invalid_argument& e) {
    return error_report(head, kExitInput, e.what());
  } catch (const std::out_of_range& e) {
    return error_report(head, kExitInput, e.what());
  } catch (const std::exception& e) {
    return error_report(head, kExitAssertion, e.what());
  }
}

Report run_file(const std::string& command, const RunOptions& opt) {
  try {
    return run(command, load_scenario(opt.scenario_path), opt);
  } catch (const ScenarioError& e) {
    return error_report(header(command, opt), kExitInput, e.what());
  }
}

}  // namespace seccoh
