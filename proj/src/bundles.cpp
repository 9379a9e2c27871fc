#include "seccoh/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace seccoh {

namespace {

constexpr std::size_t npos = std::size_t(-1);

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller root so every root is the least member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

Elem value1(const Cochain& phi, std::size_t b, std::size_t a, Elem gamma, std::size_t x) {
  return phi.value_at(MultiIndex{{b, a}}, SimplexPoint{{gamma}, x});
}

Elem value0(const Cochain& mu, std::size_t a, std::size_t x) {
  return mu.value_at(MultiIndex{{a}}, SimplexPoint{{}, x});
}

std::string triple_text(const CombinatorialBundle& p, const BundleTriple& t) {
  return "[" + p.cover().cover().label(t.patch) + ", " + p.cover().space().label(t.point) + ", " +
         p.structure().g().label(t.g) + "]";
}

}  // namespace

CombinatorialBundle::CombinatorialBundle(Cochain phi) : phi_(std::move(phi)) {
  if (phi_.degree() != 1) throw CochainError("bundle_from_cocycle: degree-1 cochain expected");
  auto rep = check_tc1(phi_);
  if (!rep.ok()) throw CochainError("bundle_from_cocycle: not a 1-cocycle: " + rep.violations.front());
  const SimplicialCover& sc = *phi_.cover();
  const Cover& U = sc.cover();
  const GammaSpace& X = sc.space();
  const FiniteGroup& g = phi_.coeff()->g();
  const FiniteGroup& gam = sc.gamma();
  order_ = g.order();

  slot_.assign(U.size() * X.points(), npos);
  std::vector<BundleTriple> triples;
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t x = 0; x < X.points(); ++x) {
      if (!U.contains(a, x)) continue;
      slot_[a * X.points() + x] = triples.size();
      for (Elem h = 0; h < order_; ++h) triples.push_back({a, x, h});
    }

  UnionFind uf(triples.size());
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t b = 0; b < U.size(); ++b)
      for (std::size_t x = 0; x < X.points(); ++x) {
        if (!U.contains(a, x) || !U.contains(b, x)) continue;
        const Elem t = value1(phi_, b, a, gam.identity(), x);
        for (Elem h = 0; h < order_; ++h) uf.unite(triple_id(a, x, h), triple_id(b, x, g.mul(t, h)));
      }

  class_.assign(triples.size(), npos);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (class_[r] == npos) {
      class_[r] = reps_.size();
      reps_.push_back(triples[r]);
      members_.emplace_back();
    }
    class_[i] = class_[r];
    members_[class_[i]].push_back(triples[i]);
  }

  right_.resize(reps_.size() * order_);
  for (std::size_t p = 0; p < reps_.size(); ++p)
    for (Elem h = 0; h < order_; ++h)
      right_[p * order_ + h] = class_of(reps_[p].patch, reps_[p].point, g.mul(reps_[p].g, h));

  gamma_.resize(gam.order() * reps_.size());
  for (Elem c = 0; c < gam.order(); ++c)
    for (std::size_t p = 0; p < reps_.size(); ++p) {
      const std::size_t y = X.act(c, reps_[p].point);
      std::size_t b = 0;
      while (!U.contains(b, y)) ++b;
      gamma_[c * reps_.size() + p] = translate(c, reps_[p], b);
    }
}

std::size_t CombinatorialBundle::triple_id(std::size_t patch, std::size_t x, Elem g) const {
  const std::size_t n = cover().space().points();
  if (patch >= cover().cover().size() || x >= n || g >= order_)
    throw std::out_of_range("bundle triple out of range");
  const std::size_t base = slot_[patch * n + x];
  if (base == npos) throw std::out_of_range("bundle triple: point not in the patch");
  return base + g;
}

std::size_t CombinatorialBundle::class_of(std::size_t patch, std::size_t x, Elem g) const {
  return class_[triple_id(patch, x, g)];
}

std::size_t CombinatorialBundle::translate(Elem gamma, const BundleTriple& t, std::size_t patch) const {
  const FiniteGammaGroup& m = structure();
  const std::size_t y = cover().space().act(gamma, t.point);
  return class_of(patch, y, m.g().mul(value1(phi_, patch, t.patch, gamma, t.point), m.act(gamma, t.g)));
}

ValidationReport CombinatorialBundle::check() const {
  ValidationReport rep;
  const SimplicialCover& sc = cover();
  const GammaSpace& X = sc.space();
  const Cover& U = sc.cover();
  const FiniteGammaGroup& m = structure();
  const FiniteGroup& g = m.g();
  const FiniteGroup& gam = sc.gamma();
  const std::size_t n = reps_.size();

  std::vector<std::size_t> fiber(X.points(), 0);
  for (std::size_t p = 0; p < n; ++p) ++fiber[project(p)];
  for (std::size_t x = 0; x < X.points(); ++x)
    if (fiber[x] != order_)
      rep.add("fiber over " + X.label(x) + " has " + std::to_string(fiber[x]) + " points, expected |G|");

  for (std::size_t p = 0; p < n; ++p) {
    const std::string at = triple_text(*this, reps_[p]);
    std::set<std::size_t> orbit;
    for (Elem h = 0; h < order_; ++h) {
      const std::size_t q = act_right(p, h);
      orbit.insert(q);
      if (project(q) != project(p)) rep.add("right action leaves the fiber at " + at);
      for (Elem k = 0; k < order_; ++k)
        if (act_right(q, k) != act_right(p, g.mul(h, k))) rep.add("right action is not an action at " + at);
    }
    if (orbit.size() != order_) rep.add("right action is not free and transitive at " + at);
    if (act_gamma(gam.identity(), p) != p) rep.add("identity of Gamma acts nontrivially at " + at);
    for (Elem c = 0; c < gam.order(); ++c) {
      const std::size_t q = act_gamma(c, p);
      if (project(q) != X.act(c, project(p))) rep.add("projection is not Gamma-equivariant at " + at);
      for (Elem h = 0; h < order_; ++h)
        if (act_gamma(c, act_right(p, h)) != act_right(q, m.act(c, h)))
          rep.add("gamma(p g) = (gamma p)(gamma g) fails at " + at);
      for (Elem d = 0; d < gam.order(); ++d)
        if (act_gamma(gam.mul(d, c), p) != act_gamma(d, q)) rep.add("Gamma-action is not an action at " + at);
      // Every member and every admissible patch must agree.
      const std::size_t y = X.act(c, project(p));
      for (const BundleTriple& t : members_[p])
        for (std::size_t b = 0; b < U.size(); ++b)
          if (U.contains(b, y) && translate(c, t, b) != q)
            rep.add("Gamma-action depends on the chosen patch at " + triple_text(*this, t));
    }
  }
  return rep;
}

std::size_t CombinatorialBundle::connected_components() const {
  const SimplicialCover& sc = cover();
  const Cover& U = sc.cover();
  UnionFind uf(reps_.size());
  for (const auto& [x, y] : sc.space().edges())
    for (std::size_t a = 0; a < U.size(); ++a) {
      if (!U.contains(a, x) || !U.contains(a, y)) continue;
      for (Elem h = 0; h < order_; ++h) uf.unite(class_of(a, x, h), class_of(a, y, h));
    }
  std::set<std::size_t> roots;
  for (std::size_t p = 0; p < reps_.size(); ++p) roots.insert(uf.find(p));
  return roots.size();
}

// --- Sections ------------------------------------------------------------------

SectionFamily canonical_sections(const CombinatorialBundle& p) {
  const Cover& U = p.cover().cover();
  const std::size_t n = p.cover().space().points();
  SectionFamily s(U.size(), std::vector<std::size_t>(n, npos));
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t x : U.set(a)) s[a][x] = p.class_of(a, x, p.structure().g().identity());
  return s;
}

SectionFamily perturb_sections(const CombinatorialBundle& p, const SectionFamily& s, const Cochain& mu) {
  if (mu.degree() != 0 || mu.coeff().get() != &p.structure() || mu.cover().get() != &p.cover())
    throw CochainError("perturb_sections: degree-0 cochain on the bundle's cover and group expected");
  SectionFamily out = s;
  const Cover& U = p.cover().cover();
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t x : U.set(a)) out[a][x] = p.act_right(s[a][x], value0(mu, a, x));
  return out;
}

ValidationReport check_sections(const CombinatorialBundle& p, const SectionFamily& s) {
  ValidationReport rep;
  const Cover& U = p.cover().cover();
  if (s.size() != U.size()) {
    rep.add("section family has the wrong number of patches");
    return rep;
  }
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t x : U.set(a)) {
      if (x >= s[a].size() || s[a][x] >= p.size())
        rep.add("section over " + U.label(a) + " is undefined at " + p.cover().space().label(x));
      else if (p.project(s[a][x]) != x)
        rep.add("section over " + U.label(a) + " misses the fiber at " + p.cover().space().label(x));
    }
  return rep;
}

Cochain cocycle_from_sections(const CombinatorialBundle& p, const SectionFamily& s) {
  auto rep = check_sections(p, s);
  if (!rep.ok()) throw CochainError("cocycle_from_sections: " + rep.violations.front());
  const SimplicialCover& sc = p.cover();
  const DegreeCensus& c1 = sc.cells(1);
  const GammaSpace& X = sc.space();
  const FiniteGroup& g = p.structure().g();
  std::vector<Elem> values(c1.size());
  for (std::size_t q = 0; q < c1.size(); ++q) {
    const std::size_t b = c1.index_at(q).labels[0], a = c1.index_at(q).labels[1];
    std::optional<Elem> found;
    for (const SimplexPoint& pt : c1.component(q)) {
      const Elem gamma = pt.gammas[0];
      const std::size_t lhs = p.act_gamma(gamma, s[a][pt.base]);
      const std::size_t base = s[b][X.act(gamma, pt.base)];
      std::optional<Elem> h;
      for (Elem k = 0; k < g.order() && !h; ++k)
        if (p.act_right(base, k) == lhs) h = k;
      if (!h) throw std::logic_error("cocycle_from_sections: fibers are not torsors");
      if (found && *found != *h)
        throw CochainError("cocycle_from_sections: sections are not constant on a component of " +
                           to_string(c1.index_at(q), sc.cover()));
      found = h;
    }
    values[q] = *found;
  }
  Cochain out(p.cocycle().cover(), p.cocycle().coeff(), 1, std::move(values));
  auto tc = check_tc1(out);
  if (!tc.ok()) throw std::logic_error("cocycle_from_sections: result is not a 1-cocycle: " + tc.violations.front());
  return out;
}

// --- Morphisms ---------------------------------------------------------------------

ValidationReport check_bundle_morphism(const CombinatorialBundle& from, const CombinatorialBundle& to,
                                       const BundleMap& map, const GroupHom& hom) {
  ValidationReport rep;
  if (&from.cover() != &to.cover()) {
    rep.add("bundles live on different covers");
    return rep;
  }
  if (map.size() != from.size()) {
    rep.add("map has the wrong size");
    return rep;
  }
  const FiniteGroup& gam = from.cover().gamma();
  for (std::size_t p = 0; p < from.size(); ++p) {
    const std::string at = triple_text(from, from.representative(p));
    if (map[p] >= to.size()) {
      rep.add("map leaves the target at " + at);
      continue;
    }
    if (to.project(map[p]) != from.project(p)) rep.add("map does not cover the identity at " + at);
    for (Elem h = 0; h < from.structure().g().order(); ++h)
      if (map[from.act_right(p, h)] != to.act_right(map[p], hom(h))) rep.add("F(p g) != F(p) g at " + at);
    for (Elem c = 0; c < gam.order(); ++c)
      if (map[from.act_gamma(c, p)] != to.act_gamma(c, map[p])) rep.add("F(gamma p) != gamma F(p) at " + at);
  }
  return rep;
}

ValidationReport check_bundle_iso(const CombinatorialBundle& from, const CombinatorialBundle& to,
                                  const BundleMap& map) {
  if (from.structure().group != to.structure().group) {
    ValidationReport rep;
    rep.add("bundles have different structure groups");
    return rep;
  }
  ValidationReport rep = check_bundle_morphism(from, to, map, identity_hom(from.structure().group));
  std::set<std::size_t> image(map.begin(), map.end());
  if (map.size() != to.size() || image.size() != to.size()) rep.add("map is not a bijection");
  return rep;
}

BundleMap map_from_equivalence(const CombinatorialBundle& from, const CombinatorialBundle& to, const Cochain& mu) {
  const FiniteGroup& g = from.structure().g();
  BundleMap out(from.size());
  for (std::size_t p = 0; p < from.size(); ++p) {
    std::optional<std::size_t> img;
    for (const BundleTriple& t : from.members(p)) {
      const std::size_t q = to.class_of(t.patch, t.point, g.mul(value0(mu, t.patch, t.point), t.g));
      if (img && *img != q) throw std::logic_error("equivalence does not induce a map of total spaces");
      img = q;
    }
    out[p] = *img;
  }
  return out;
}

BundleMap map_through(const CombinatorialBundle& lifted, const CombinatorialBundle& base, const GroupHom& beta) {
  BundleMap out(lifted.size());
  for (std::size_t p = 0; p < lifted.size(); ++p) {
    std::optional<std::size_t> img;
    for (const BundleTriple& t : lifted.members(p)) {
      const std::size_t q = base.class_of(t.patch, t.point, beta(t.g));
      if (img && *img != q) throw std::logic_error("structure map does not induce a map of total spaces");
      img = q;
    }
    out[p] = *img;
  }
  return out;
}

BundleIsoResult bundle_iso_check(const CombinatorialBundle& p1, const CombinatorialBundle& p2, std::uint64_t budget) {
  BundleIsoResult out;
  auto eq = find_equivalence(p1.cocycle(), p2.cocycle(), budget);
  out.status = eq.status;
  if (eq.status != SearchStatus::found) return out;
  out.witness = eq.witness;
  out.map = map_from_equivalence(p1, p2, *eq.witness);
  auto rep = check_bundle_iso(p1, p2, *out.map);
  if (!rep.ok()) throw std::logic_error("bundle_iso_check: constructed map fails: " + rep.violations.front());
  return out;
}

// --- Round trips -----------------------------------------------------------------

RoundTripReport roundtrip_check(const Cochain& phi, const Cochain& perturbation) {
  RoundTripReport out;
  CombinatorialBundle p(phi);
  auto axioms = p.check();
  for (const auto& v : axioms.violations) out.failures.push_back("bundle axiom: " + v);
  const SectionFamily s = canonical_sections(p);
  if (cocycle_from_sections(p, s) == phi)
    ++out.witnesses;
  else
    out.failures.push_back("canonical sections do not recover the cocycle");
  const Cochain moved = cocycle_from_sections(p, perturb_sections(p, s, perturbation));
  if (is_equivalence(perturbation, moved, phi))
    ++out.witnesses;
  else
    out.failures.push_back("perturbed sections do not give an equivalent cocycle through the perturbation");
  return out;
}

RoundTripReport roundtrip_check(const Cochain& phi) {
  return roundtrip_check(phi, Cochain::identity(phi.cover(), phi.coeff(), 0));
}

RoundTripReport roundtrip_check(const CombinatorialBundle& p, const SectionFamily& s) {
  RoundTripReport out;
  const Cochain phi = cocycle_from_sections(p, s);
  CombinatorialBundle back(phi);
  BundleMap map(back.size());
  for (std::size_t c = 0; c < back.size(); ++c) {
    std::optional<std::size_t> img;
    for (const BundleTriple& t : back.members(c)) {
      const std::size_t q = p.act_right(s[t.patch][t.point], t.g);
      if (img && *img != q) {
        out.failures.push_back("[a, x, g] -> s_a(x) g is not well defined");
        return out;
      }
      img = q;
    }
    map[c] = *img;
  }
  auto rep = check_bundle_iso(back, p, map);
  for (const auto& v : rep.violations) out.failures.push_back("reconstruction map: " + v);
  if (rep.ok()) ++out.witnesses;
  return out;
}

// --- Lifting ---------------------------------------------------------------------

std::vector<Int> dd(const Cochain& phi, const CentralExtension& ext) {
  CohomologyGroup h2a(phi.cover(), ext.a, 2);
  return delta1(phi, ext, h2a);
}

std::vector<Int> dd(const CombinatorialBundle& p, const CentralExtension& ext) { return dd(p.cocycle(), ext); }

namespace {

bool lifts(const Cochain& psi, const Cochain& phi, const GroupHom& beta) {
  for (std::size_t pos = 0; pos < phi.size(); ++pos)
    if (beta(psi[pos]) != phi[pos]) return false;
  return true;
}

}  // namespace

LiftingClassification solve_liftings(const Cochain& phi, const CentralExtension& ext, std::uint64_t budget) {
  if (phi.degree() != 1 || phi.coeff() != ext.c) throw CochainError("solve_liftings: C-valued 1-cochain expected");
  const SimplicialCoverPtr& cover = phi.cover();
  CohomologyGroup h1a(cover, ext.a, 1), h2a(cover, ext.a, 2);
  LiftingClassification out;
  out.h1_order = h1a.order();
  out.h2_factors = h2a.factors();
  out.dd = delta1(phi, ext, h2a);
  const bool zero = out.dd == std::vector<Int>(out.dd.size(), 0);

  const Cochain psi0 = lift_pointwise(phi, ext, ext.section);
  const Cochain nu = delta1_cocycle(psi0, ext);
  auto omega = h2a.primitive(invert(nu));
  if (zero != omega.has_value()) throw std::logic_error("solve_liftings: DD disagrees with solvability");
  out.exists = zero;
  if (!zero) return out;

  std::vector<Cochain> found;
  for (const auto& h : h1a.elements()) {
    Cochain psi = compose(psi0, map_coefficients(ext.alpha, compose(*omega, h1a.representative(h)), ext.b));
    if (!is_tc1(psi) || !lifts(psi, phi, ext.beta)) throw std::logic_error("solve_liftings: solution is not a lifting");
    found.push_back(std::move(psi));
  }

  const std::size_t n0 = cover->cells(0).size();
  double k0 = 1;
  for (std::size_t i = 0; i < n0; ++i) k0 *= double(ext.b->g().order());
  std::vector<Cochain> reps;
  if (k0 <= double(budget)) {
    auto keep = [&](const Cochain& w) { return lifts(w, phi, ext.beta); };
    for (const auto& psi : found) {
      Cochain least = least_in_orbit(psi, budget, keep);
      if (std::find(reps.begin(), reps.end(), least) == reps.end()) reps.push_back(std::move(least));
    }
  } else if (ext.b->g().is_abelian()) {
    out.canonical = false;
    CohomologyGroup h1b(cover, ext.b, 1);
    std::set<std::vector<Int>> seen;
    for (const auto& psi : found)
      if (seen.insert(h1b.class_of(psi)).second) reps.push_back(psi);
  } else {
    throw BudgetExceeded("solve_liftings: |K^0(B)| exceeds the budget of " + std::to_string(budget));
  }
  std::sort(reps.begin(), reps.end(), [](const Cochain& l, const Cochain& r) { return l.values() < r.values(); });
  out.representatives = std::move(reps);
  return out;
}

BruteForceLiftings enumerate_liftings_bruteforce(const Cochain& phi, const CentralExtension& ext, std::uint64_t bound) {
  if (phi.degree() != 1 || phi.coeff() != ext.c)
    throw CochainError("enumerate_liftings_bruteforce: C-valued 1-cochain expected");
  std::vector<std::vector<Elem>> fibers(phi.size());
  double total = 1;
  for (std::size_t pos = 0; pos < phi.size(); ++pos) {
    for (Elem b = 0; b < ext.b->g().order(); ++b)
      if (ext.beta(b) == phi[pos]) fibers[pos].push_back(b);
    total *= double(fibers[pos].size());
  }
  if (total > double(bound))
    throw BudgetExceeded("brute-force lifting: " + std::to_string(std::uint64_t(total)) +
                         " candidates exceed the bound of " + std::to_string(bound));
  BruteForceLiftings out;
  out.candidates = std::uint64_t(total);
  std::vector<std::size_t> idx(phi.size(), 0);
  std::vector<Elem> v(phi.size());
  for (;;) {
    for (std::size_t pos = 0; pos < v.size(); ++pos) v[pos] = fibers[pos][idx[pos]];
    Cochain psi(phi.cover(), ext.b, 1, v);
    if (is_tc1(psi)) out.liftings.push_back(std::move(psi));
    std::size_t i = idx.size();
    while (i-- > 0) {
      if (++idx[i] < fibers[i].size()) break;
      idx[i] = 0;
    }
    if (i == std::size_t(-1)) break;
  }
  for (std::size_t i = 0; i < out.liftings.size(); ++i) {
    bool placed = false;
    for (auto& cls : out.classes) {
      auto r = find_equivalence(out.liftings[cls.front()], out.liftings[i]);
      if (r.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("brute-force lifting: equivalence search exceeded its budget");
      if (r.status == SearchStatus::found) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({i});
  }
  for (const auto& cls : out.classes) out.representatives.push_back(out.liftings[cls.front()]);
  return out;
}

}  // namespace seccoh
