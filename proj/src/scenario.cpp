#include "seccoh/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "seccoh/nonabelian.hpp"

namespace seccoh {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ScenarioError(path + ": " + msg); }

void keys(const Json& j, const std::string& path, const std::set<std::string>& allowed,
          const std::set<std::string>& required) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(path + "." + k, "unknown key");
  for (const auto& k : required)
    if (!j.contains(k)) fail(path + "." + k, "missing required key");
}

std::size_t as_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<Elem> elems(const Json& j, const std::string& path, std::size_t bound) {
  std::vector<Elem> out;
  std::size_t i = 0;
  for (const auto& v : array_at(j, path)) {
    const std::string p = path + "[" + std::to_string(i++) + "]";
    const std::size_t x = as_index(v, p);
    if (x >= bound) fail(p, "element " + std::to_string(x) + " out of range (order " + std::to_string(bound) + ")");
    out.push_back(Elem(x));
  }
  return out;
}

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

GroupPtr parse_group(const Json& j, const std::string& path) {
  keys(j, path, {"cyclic", "dihedral", "product", "table", "labels"}, {});
  std::size_t kinds = j.contains("cyclic") + j.contains("dihedral") + j.contains("product") + j.contains("table");
  if (kinds != 1) fail(path, "give exactly one of cyclic, dihedral, product, table");
  if (j.contains("labels") && !j.contains("table")) fail(path + ".labels", "labels are only accepted with a table");
  if (j.contains("cyclic")) {
    const std::size_t n = as_index(j["cyclic"], path + ".cyclic");
    return guarded(path, [&] { return make_cyclic(n); });
  }
  if (j.contains("dihedral")) {
    const std::size_t n = as_index(j["dihedral"], path + ".dihedral");
    return guarded(path, [&] {
      auto z2 = make_cyclic(2);
      auto zn = make_cyclic(n);
      return semidirect_product(z2, zn, inversion_action(z2, zn));
    });
  }
  if (j.contains("product")) {
    const Json& parts = array_at(j["product"], path + ".product");
    if (parts.empty()) fail(path + ".product", "needs at least one factor");
    GroupPtr acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      GroupPtr f = parse_group(parts[i], path + ".product[" + std::to_string(i) + "]");
      acc = acc ? guarded(path, [&] { return make_direct_product(*acc, *f); }) : f;
    }
    return acc;
  }
  const Json& rows = array_at(j["table"], path + ".table");
  const std::size_t n = rows.size();
  std::vector<Elem> table;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = elems(rows[r], path + ".table[" + std::to_string(r) + "]", n);
    if (row.size() != n) fail(path + ".table[" + std::to_string(r) + "]", "row length must equal the group order");
    table.insert(table.end(), row.begin(), row.end());
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : array_at(j["labels"], path + ".labels")) labels.push_back(as_string(l, path + ".labels"));
  return guarded(path, [&] { return std::make_shared<const FiniteGroup>(n, table, labels); });
}

bool is_cyclic_gamma(const FiniteGroup& gamma) {
  const std::size_t n = gamma.order();
  return n == 1 || (gamma.element_order(1) == n && gamma.identity() == 0 && [&] {
           Elem cur = 0;
           for (std::size_t k = 0; k < n; ++k, cur = gamma.mul(cur, 1))
             if (cur != Elem(k)) return false;
           return true;
         }());
}

// Maps per element of Gamma, for a group action on a set of size n.
std::vector<std::vector<std::size_t>> parse_permutations(const Json& j, const std::string& path,
                                                         const FiniteGroup& gamma, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(gamma.order());
  if (j.is_string()) {
    if (j.get<std::string>() != "trivial") fail(path, "expected \"trivial\", {generator} or {table}");
    for (auto& p : out)
      for (std::size_t x = 0; x < n; ++x) p.push_back(x);
    return out;
  }
  keys(j, path, {"generator", "table"}, {});
  if (j.contains("generator") == j.contains("table")) fail(path, "give exactly one of generator, table");
  if (j.contains("generator")) {
    if (!is_cyclic_gamma(gamma)) fail(path + ".generator", "generator form needs Gamma = Z/n");
    auto gen = elems(j["generator"], path + ".generator", n);
    if (gen.size() != n) fail(path + ".generator", "needs one image per point");
    std::vector<std::size_t> cur(n);
    for (std::size_t x = 0; x < n; ++x) cur[x] = x;
    for (auto& p : out) {
      p = cur;
      for (auto& x : cur) x = gen[x];
    }
    return out;
  }
  const Json& rows = array_at(j["table"], path + ".table");
  if (rows.size() != gamma.order()) fail(path + ".table", "needs one map per element of Gamma");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto row = elems(rows[k], path + ".table[" + std::to_string(k) + "]", n);
    if (row.size() != n) fail(path + ".table[" + std::to_string(k) + "]", "needs one image per point");
    out[k].assign(row.begin(), row.end());
  }
  return out;
}

GammaAction parse_action(const Json& j, const std::string& path, const GroupPtr& gamma, const GroupPtr& g) {
  if (j.is_string() && j.get<std::string>() == "inversion")
    return guarded(path, [&] { return inversion_action(gamma, g); });
  if (j.is_object() && j.contains("conjugation")) {
    keys(j, path, {"conjugation"}, {});
    const std::size_t e = as_index(j["conjugation"], path + ".conjugation");
    if (e >= g->order()) fail(path + ".conjugation", "element out of range");
    if (!is_cyclic_gamma(*gamma)) fail(path + ".conjugation", "conjugation form needs Gamma = Z/n");
    std::vector<Elem> img(g->order());
    for (Elem x = 0; x < img.size(); ++x) img[x] = g->mul(g->mul(Elem(e), x), g->inv(Elem(e)));
    return guarded(path, [&] { return cyclic_action(gamma, g, img); });
  }
  auto perms = parse_permutations(j, path, *gamma, g->order());
  std::vector<std::vector<Elem>> p(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) p[k].assign(perms[k].begin(), perms[k].end());
  return guarded(path, [&] { return GammaAction(gamma, g, p); });
}

std::size_t parse_point(const Json& j, const std::string& path, const GammaSpace& space) {
  if (j.is_string()) {
    for (std::size_t x = 0; x < space.points(); ++x)
      if (space.label(x) == j.get<std::string>()) return x;
    fail(path, "unknown point '" + j.get<std::string>() + "'");
  }
  const std::size_t x = as_index(j, path);
  if (x >= space.points()) fail(path, "point out of range");
  return x;
}

std::shared_ptr<const Cover> parse_cover(const Json& j, const std::string& path, const GammaSpace& space) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t i = 0;
  for (const auto& s : array_at(j, path)) {
    const std::string p = path + "[" + std::to_string(i++) + "]";
    keys(s, p, {"name", "points"}, {"name", "points"});
    names.push_back(as_string(s["name"], p + ".name"));
    std::vector<std::size_t> pts;
    std::size_t k = 0;
    for (const auto& x : array_at(s["points"], p + ".points"))
      pts.push_back(parse_point(x, p + ".points[" + std::to_string(k++) + "]", space));
    sets.push_back(std::move(pts));
  }
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) fail(path, "cover set names must be distinct");
  return guarded(path, [&] { return std::make_shared<const Cover>(names, sets, space.points()); });
}

std::size_t label_of(const Json& j, const std::string& path, const Cover& cover) {
  if (j.is_string()) {
    auto a = cover.find(j.get<std::string>());
    if (!a) fail(path, "unknown cover set '" + j.get<std::string>() + "'");
    return *a;
  }
  const std::size_t a = as_index(j, path);
  if (a >= cover.size()) fail(path, "cover set index out of range");
  return a;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

GammaGroupPtr Scenario::coefficient(const std::string& n) const {
  for (const auto& [k, v] : coefficients)
    if (k == n) return v;
  throw ScenarioError("coefficients: no entry named '" + n + "'");
}

std::string Scenario::coefficient_name(const GammaGroupPtr& g) const {
  for (const auto& [k, v] : coefficients)
    if (v == g) return k;
  return g->name;
}

const CentralExtension& Scenario::extension(const std::string& n) const {
  for (const auto& e : extensions)
    if (e.name == n) return e;
  throw ScenarioError("extensions: no entry named '" + n + "'");
}

const Cochain& Scenario::cocycle(const std::string& n) const {
  for (const auto& [k, v] : cocycles)
    if (k == n) return v;
  throw ScenarioError("cocycles: no entry named '" + n + "'");
}

Scenario parse_scenario_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("$: malformed JSON: ") + e.what());
  }
  keys(j, "$",
       {"schema", "name", "description", "gamma", "coefficients", "space", "cover", "max_degree", "cocycles",
        "extensions", "refinements"},
       {"schema", "gamma", "coefficients", "space", "cover"});
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kScenarioSchema)
    fail("$.schema", "unsupported schema version (expected " + std::to_string(kScenarioSchema) + ")");

  Scenario sc;
  sc.name = j.contains("name") ? as_string(j["name"], "$.name") : "scenario";
  if (j.contains("description")) as_string(j["description"], "$.description");
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) h = (h ^ c) * 1099511628211ull;
  sc.digest = hex64(h);

  sc.gamma = parse_group(j["gamma"], "$.gamma");

  {
    const Json& cs = array_at(j["coefficients"], "$.coefficients");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = "$.coefficients[" + std::to_string(i) + "]";
      keys(cs[i], p, {"name", "group", "action"}, {"name", "group"});
      const std::string name = as_string(cs[i]["name"], p + ".name");
      for (const auto& [k, v] : sc.coefficients)
        if (k == name) fail(p + ".name", "duplicate coefficient name '" + name + "'");
      GroupPtr g = parse_group(cs[i]["group"], p + ".group");
      GammaAction act = cs[i].contains("action") ? parse_action(cs[i]["action"], p + ".action", sc.gamma, g)
                                                 : trivial_action(sc.gamma, g);
      sc.coefficients.emplace_back(name, guarded(p, [&] { return make_gamma_group(name, g, act); }));
    }
  }

  {
    const Json& s = j["space"];
    keys(s, "$.space", {"points", "labels", "action", "edges"}, {"points"});
    const std::size_t n = as_index(s["points"], "$.space.points");
    if (n == 0) fail("$.space.points", "X must be nonempty");
    std::vector<std::string> labels;
    if (s.contains("labels")) {
      for (const auto& l : array_at(s["labels"], "$.space.labels")) labels.push_back(as_string(l, "$.space.labels"));
      if (labels.size() != n) fail("$.space.labels", "needs one label per point");
    }
    auto action = s.contains("action") ? parse_permutations(s["action"], "$.space.action", *sc.gamma, n)
                                       : parse_permutations(Json("trivial"), "$.space.action", *sc.gamma, n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (s.contains("edges")) {
      std::size_t i = 0;
      for (const auto& e : array_at(s["edges"], "$.space.edges")) {
        const std::string p = "$.space.edges[" + std::to_string(i++) + "]";
        auto ends = elems(e, p, n);
        if (ends.size() != 2) fail(p, "an edge has two endpoints");
        if (ends[0] == ends[1]) fail(p, "loops are not allowed");
        edges.emplace_back(ends[0], ends[1]);
      }
    }
    auto space = guarded("$.space",
                         [&] { return std::make_shared<const GammaSpace>(sc.gamma, n, action, labels, edges); });
    auto rep = space->check();
    if (!rep.ok()) fail("$.space.action", "not a Gamma-set: " + rep.summary());
    sc.space = space;
  }

  sc.cover = parse_cover(j["cover"], "$.cover", *sc.space);
  std::size_t max_degree = SimplicialCover::kDefaultMaxDegree;
  if (j.contains("max_degree")) {
    max_degree = as_index(j["max_degree"], "$.max_degree");
    if (max_degree < 2) fail("$.max_degree", "must be at least 2");
  }
  sc.simplicial = guarded("$.cover", [&] { return make_simplicial_cover(sc.space, sc.cover, max_degree); });

  if (j.contains("extensions")) {
    const Json& es = array_at(j["extensions"], "$.extensions");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = "$.extensions[" + std::to_string(i) + "]";
      keys(es[i], p, {"name", "a", "b", "c", "alpha", "beta"}, {"name", "a", "b", "c", "alpha", "beta"});
      const std::string name = as_string(es[i]["name"], p + ".name");
      for (const auto& e : sc.extensions)
        if (e.name == name) fail(p + ".name", "duplicate extension name '" + name + "'");
      auto pick = [&](const char* k) {
        const std::string want = as_string(es[i][k], p + "." + k);
        for (const auto& [n, g] : sc.coefficients)
          if (n == want) return g;
        fail(p + "." + k, "no coefficients named '" + want + "'");
      };
      auto a = pick("a"), b = pick("b"), c = pick("c");
      auto alpha = elems(es[i]["alpha"], p + ".alpha", b->g().order());
      auto beta = elems(es[i]["beta"], p + ".beta", c->g().order());
      sc.extensions.push_back(guarded(p, [&] { return make_central_extension(name, a, b, c, alpha, beta); }));
    }
  }

  if (j.contains("cocycles")) {
    const Json& cs = array_at(j["cocycles"], "$.cocycles");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = "$.cocycles[" + std::to_string(i) + "]";
      keys(cs[i], p, {"name", "coefficients", "degree", "values"}, {"name", "coefficients"});
      const std::string name = as_string(cs[i]["name"], p + ".name");
      for (const auto& [k, v] : sc.cocycles)
        if (k == name) fail(p + ".name", "duplicate cocycle name '" + name + "'");
      const std::string cname = as_string(cs[i]["coefficients"], p + ".coefficients");
      GammaGroupPtr m;
      for (const auto& [n, g] : sc.coefficients)
        if (n == cname) m = g;
      if (!m) fail(p + ".coefficients", "no coefficients named '" + cname + "'");
      const std::size_t degree = cs[i].contains("degree") ? as_index(cs[i]["degree"], p + ".degree") : 1;
      if (degree > 1) fail(p + ".degree", "only degree 0 and 1 cocycles are supported");
      const DegreeCensus& census = sc.simplicial->cells(degree);
      std::vector<Elem> values(census.size(), m->g().identity());
      std::vector<bool> set(census.size(), false);
      if (cs[i].contains("values")) {
        const Json& vs = array_at(cs[i]["values"], p + ".values");
        for (std::size_t k = 0; k < vs.size(); ++k) {
          const std::string q = p + ".values[" + std::to_string(k) + "]";
          keys(vs[k], q, {"index", "gamma", "point", "value"}, {"index", "point", "value"});
          MultiIndex a;
          std::size_t t = 0;
          for (const auto& l : array_at(vs[k]["index"], q + ".index"))
            a.labels.push_back(label_of(l, q + ".index[" + std::to_string(t++) + "]", *sc.cover));
          if (a.labels.size() != degree + 1) fail(q + ".index", "needs degree + 1 cover sets");
          SimplexPoint x;
          if (vs[k].contains("gamma"))
            x.gammas = elems(vs[k]["gamma"], q + ".gamma", sc.gamma->order());
          else
            x.gammas.assign(degree, sc.gamma->identity());
          if (x.gammas.size() != degree) fail(q + ".gamma", "needs one Gamma element per degree");
          x.base = parse_point(vs[k]["point"], q + ".point", *sc.space);
          auto pos = census.position(a, x);
          if (!pos) fail(q, "point " + to_string(x, *sc.space) + " is not in " + to_string(a, *sc.cover));
          const std::size_t v = as_index(vs[k]["value"], q + ".value");
          if (v >= m->g().order()) fail(q + ".value", "element out of range");
          if (set[*pos] && values[*pos] != Elem(v))
            fail(q, "conflicts with an earlier entry on the same component");
          values[*pos] = Elem(v);
          set[*pos] = true;
        }
      }
      Cochain phi(sc.simplicial, m, degree, values);
      TcReport rep = degree == 0 ? check_tc0(phi) : check_tc1(phi);
      if (!rep.ok()) fail(p, rep.violations.front());
      sc.cocycles.emplace_back(name, std::move(phi));
    }
  }

  if (j.contains("refinements")) {
    const Json& rs = array_at(j["refinements"], "$.refinements");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string p = "$.refinements[" + std::to_string(i) + "]";
      keys(rs[i], p, {"name", "cover", "maps"}, {"name", "cover", "maps"});
      NamedRefinement r;
      r.name = as_string(rs[i]["name"], p + ".name");
      auto fine = parse_cover(rs[i]["cover"], p + ".cover", *sc.space);
      r.fine = guarded(p + ".cover", [&] { return make_simplicial_cover(sc.space, fine, max_degree); });
      const Json& ms = array_at(rs[i]["maps"], p + ".maps");
      for (std::size_t k = 0; k < ms.size(); ++k) {
        const std::string q = p + ".maps[" + std::to_string(k) + "]";
        keys(ms[k], q, {"name", "map"}, {"name", "map"});
        std::vector<std::size_t> map;
        std::size_t t = 0;
        for (const auto& l : array_at(ms[k]["map"], q + ".map"))
          map.push_back(label_of(l, q + ".map[" + std::to_string(t++) + "]", *sc.cover));
        const std::string mname = as_string(ms[k]["name"], q + ".name");
        r.maps.push_back(guarded(q, [&] { return std::make_shared<const Refinement>(sc.simplicial, r.fine, map, mname); }));
      }
      sc.refinements.push_back(std::move(r));
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

std::vector<CochainEntry> sparse_entries(const Cochain& phi) {
  std::vector<CochainEntry> out;
  const DegreeCensus& c = phi.census();
  const SimplicialCover& sc = *phi.cover();
  for (std::size_t pos = 0; pos < phi.size(); ++pos) {
    if (phi[pos] == phi.coeff()->g().identity()) continue;
    CochainEntry e;
    for (std::size_t a : c.index_at(pos).labels) e.index.push_back(sc.cover().label(a));
    e.gammas = c.point_at(pos).gammas;
    e.point = sc.space().label(c.point_at(pos).base);
    e.value = phi[pos];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace seccoh
