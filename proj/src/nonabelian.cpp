#include "seccoh/nonabelian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "csp.hpp"

namespace seccoh {

namespace {

std::string where(const SimplicialCover& sc, std::size_t p, std::size_t pos) {
  const DegreeCensus& c = sc.cells(p);
  return to_string(c.index_at(pos), sc.cover()) + " at " + to_string(c.point_at(pos), sc.space());
}

std::string coords_key(const std::vector<Int>& c) {
  std::string s;
  for (Int x : c) s += std::to_string(x) + ",";
  return s;
}

void require_same(const Cochain& l, const Cochain& r, const char* what) {
  if (l.cover() != r.cover() || l.coeff() != r.coeff() || l.degree() != r.degree())
    throw CochainError(std::string(what) + ": cochains live on different covers, coefficients or degrees");
}

// (delta_1 mu) phi (delta_0 mu)^-1 straight from the face tables.
std::vector<Elem> gauge_values(const SimplicialCover& sc, const FiniteGammaGroup& m,
                               const std::vector<Elem>& mu, const std::vector<Elem>& phi) {
  const FiniteGroup& g = m.g();
  std::vector<Elem> out(phi.size());
  for (std::size_t q = 0; q < phi.size(); ++q) {
    const Elem d0 = m.act(sc.twist_at(1, q, 0), mu[sc.face(1, q, 0)]);
    const Elem d1 = mu[sc.face(1, q, 1)];
    out[q] = g.mul(g.mul(d1, phi[q]), g.inv(d0));
  }
  return out;
}

bool next_values(std::vector<Elem>& v, std::size_t n) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < n) return true;
    v[i] = 0;
  }
  return false;
}

double space_size(std::size_t base, std::size_t exp) {
  double s = 1;
  for (std::size_t i = 0; i < exp; ++i) s *= double(base);
  return s;
}

void require_identity_zero(const FiniteGroup& g) {
  if (g.identity() != 0) throw CochainError("enumeration assumes the identity is element 0");
}

detail::FiniteCsp tc1_problem(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff) {
  const SimplicialCover& sc = *cover;
  const FiniteGroup& g = coeff->g();
  const std::size_t n = sc.cells(1).size();
  std::vector<Elem> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
  std::vector<std::vector<Elem>> domains(n, all);
  for (std::size_t pos : normalized_positions(sc)) domains[pos] = {g.identity()};
  detail::FiniteCsp csp(std::move(domains));
  const DegreeCensus& hi = sc.cells(2);
  for (std::size_t r = 0; r < hi.size(); ++r) {
    const std::size_t f0 = sc.face(2, r, 0), f1 = sc.face(2, r, 1), f2 = sc.face(2, r, 2);
    const Elem t = sc.twist_at(2, r, 0);
    const FiniteGammaGroup* m = coeff.get();
    csp.add_constraint({f0, f1, f2}, [m, f0, f1, f2, t](const std::vector<Elem>& v) {
      const FiniteGroup& gg = m->g();
      return gg.mul(gg.inv(v[f1]), gg.mul(v[f2], m->act(t, v[f0]))) == gg.identity();
    });
  }
  return csp;
}

}  // namespace

std::string value_key(const Cochain& phi) {
  std::string s;
  s.reserve(phi.size() * 4);
  for (Elem x : phi.values())
    for (int b = 0; b < 4; ++b) s.push_back(char((std::uint64_t(x) >> (8 * b)) & 0xff));
  return s;
}

std::vector<std::size_t> normalized_positions(const SimplicialCover& sc) {
  std::vector<std::size_t> out;
  const DegreeCensus& c = sc.cells(1);
  const Elem one = sc.gamma().identity();
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    const auto& a = c.index_at(pos).labels;
    if (a[0] == a[1] && c.point_at(pos).gammas[0] == one) out.push_back(pos);
  }
  return out;
}

TcReport check_tc0(const Cochain& mu) {
  if (mu.degree() != 0) throw CochainError("check_tc0: degree-0 cochain expected");
  const SimplicialCover& sc = *mu.cover();
  const FiniteGammaGroup& m = *mu.coeff();
  TcReport rep;
  for (std::size_t q = 0; q < sc.cells(1).size(); ++q) {
    ++rep.checked;
    const Elem d0 = m.act(sc.twist_at(1, q, 0), mu[sc.face(1, q, 0)]);
    const Elem d1 = mu[sc.face(1, q, 1)];
    if (d0 != d1)
      rep.violations.push_back("invariance mu_b(g x) = g mu_a(x) fails at " + where(sc, 1, q));
  }
  return rep;
}

bool is_tc0(const Cochain& mu) { return check_tc0(mu).ok(); }

TcReport check_tc1(const Cochain& phi) {
  if (phi.degree() != 1) throw CochainError("check_tc1: degree-1 cochain expected");
  const SimplicialCover& sc = *phi.cover();
  const FiniteGammaGroup& m = *phi.coeff();
  const FiniteGroup& g = m.g();
  TcReport rep;
  for (std::size_t pos : normalized_positions(sc)) {
    ++rep.checked;
    if (phi[pos] != g.identity())
      rep.violations.push_back("normalization phi_aa(1, x) = 1 fails at " + where(sc, 1, pos));
  }
  for (std::size_t r = 0; r < sc.cells(2).size(); ++r) {
    ++rep.checked;
    const Elem d0 = m.act(sc.twist_at(2, r, 0), phi[sc.face(2, r, 0)]);
    const Elem d1 = phi[sc.face(2, r, 1)];
    const Elem d2 = phi[sc.face(2, r, 2)];
    if (g.mul(g.inv(d1), g.mul(d2, d0)) != g.identity())
      rep.violations.push_back("cocycle condition phi_ca(g'g, x) = phi_cb(g', g x) g'phi_ba(g, x) fails at " +
                               where(sc, 2, r));
  }
  return rep;
}

bool is_tc1(const Cochain& phi) { return check_tc1(phi).ok(); }

Cochain gauge(const Cochain& mu, const Cochain& phi) {
  if (mu.degree() != 0 || phi.degree() != 1) throw CochainError("gauge: expects degrees 0 and 1");
  if (mu.cover() != phi.cover() || mu.coeff() != phi.coeff())
    throw CochainError("gauge: cochains live on different covers or coefficients");
  return Cochain(phi.cover(), phi.coeff(), 1, gauge_values(*phi.cover(), *phi.coeff(), mu.values(), phi.values()));
}

bool is_equivalence(const Cochain& mu, const Cochain& phi1, const Cochain& phi2) {
  require_same(phi1, phi2, "is_equivalence");
  return gauge(mu, phi1) == phi2;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::inequivalent: return "proven_inequivalent";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

EquivalenceResult find_equivalence(const Cochain& phi1, const Cochain& phi2, std::uint64_t budget) {
  require_same(phi1, phi2, "find_equivalence");
  if (phi1.degree() != 1) throw CochainError("find_equivalence: degree-1 cochains expected");
  for (const Cochain* phi : {&phi1, &phi2}) {
    auto rep = check_tc1(*phi);
    if (!rep.ok()) throw CochainError("find_equivalence: input is not a 1-cocycle: " + rep.violations.front());
  }
  const SimplicialCoverPtr& cover = phi1.cover();
  const GammaGroupPtr& coeff = phi1.coeff();
  const SimplicialCover& sc = *cover;
  const FiniteGammaGroup& m = *coeff;
  const FiniteGroup& g = m.g();
  const std::size_t n0 = sc.cells(0).size();

  EquivalenceResult out;
  auto by_cohomology = [&]() {
    CohomologyGroup h1(cover, coeff, 1);
    out.via_cohomology = true;
    if (h1.class_of(phi1) != h1.class_of(phi2)) {
      out.status = SearchStatus::inequivalent;
      return out;
    }
    // phi1 - phi2 = delta_0 mu - delta_1 mu = delta mu.
    auto mu = h1.primitive(difference(phi1, phi2));
    if (!mu || !is_equivalence(*mu, phi1, phi2))
      throw std::logic_error("find_equivalence: equal classes without a primitive");
    out.status = SearchStatus::found;
    out.witness = *mu;
    return out;
  };
  if (g.is_abelian() && space_size(g.order(), n0) > double(budget)) return by_cohomology();

  std::vector<Elem> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
  detail::FiniteCsp csp(std::vector<std::vector<Elem>>(n0, all));
  const auto& v1 = phi1.values();
  const auto& v2 = phi2.values();
  for (std::size_t q = 0; q < sc.cells(1).size(); ++q) {
    const std::size_t f0 = sc.face(1, q, 0), f1 = sc.face(1, q, 1);
    const Elem t = sc.twist_at(1, q, 0);
    const Elem a = v1[q], b = v2[q];
    csp.add_constraint({f0, f1}, [&m, f0, f1, t, a, b](const std::vector<Elem>& mu) {
      const FiniteGroup& gg = m.g();
      return gg.mul(mu[f1], a) == gg.mul(b, m.act(t, mu[f0]));
    });
  }
  std::optional<std::vector<Elem>> hit;
  auto outcome = csp.solve(
      budget,
      [&](const std::vector<Elem>& mu) {
        hit = mu;
        return false;
      },
      &out.nodes);
  if (outcome == detail::FiniteCsp::Outcome::budget) {
    if (g.is_abelian()) return by_cohomology();
    out.status = SearchStatus::budget_exceeded;
    return out;
  }
  if (hit) {
    out.status = SearchStatus::found;
    out.witness = Cochain(cover, coeff, 0, *hit);
  } else {
    out.status = SearchStatus::inequivalent;
  }
  return out;
}

// --- Connecting maps ---------------------------------------------------------

namespace {

Cochain to_a(const Cochain& nu, const CentralExtension& ext, const char* what) {
  const FiniteGroup& c = ext.c->g();
  for (std::size_t pos = 0; pos < nu.size(); ++pos)
    if (ext.beta(nu[pos]) != c.identity())
      throw std::logic_error(std::string(what) + ": beta(nu) != 1 at " + where(*nu.cover(), nu.degree(), pos));
  return pullback_alpha(nu, ext);
}

void require_h(const CohomologyGroup& h, const CentralExtension& ext, std::size_t p, const char* what) {
  if (h.degree() != p || h.coeff() != ext.a)
    throw CochainError(std::string(what) + ": target must be H^" + std::to_string(p) + "(A)");
}

}  // namespace

Cochain delta0_cocycle(const Cochain& eta, const CentralExtension& ext) {
  if (eta.degree() != 0 || eta.coeff() != ext.b) throw CochainError("delta0: B-valued degree-0 cochain expected");
  Cochain nu = compose(invert(twisted_pullback(1, eta)), twisted_pullback(0, eta));
  Cochain a = to_a(nu, ext, "delta0");
  if (!coboundary(a).is_identity()) throw std::logic_error("delta0: nu is not a 1-cocycle");
  return a;
}

std::vector<Int> delta0(const Cochain& mu, const CentralExtension& ext, const CohomologyGroup& h1a,
                        const Section& section) {
  if (mu.degree() != 0 || mu.coeff() != ext.c) throw CochainError("delta0: C-valued degree-0 cochain expected");
  require_h(h1a, ext, 1, "delta0");
  auto rep = check_tc0(mu);
  if (!rep.ok()) throw CochainError("delta0: input is not in TC^0: " + rep.violations.front());
  return h1a.class_of(delta0_cocycle(lift_pointwise(mu, ext, section), ext));
}

std::vector<Int> delta0(const Cochain& mu, const CentralExtension& ext, const CohomologyGroup& h1a) {
  return delta0(mu, ext, h1a, ext.section);
}

Cochain delta1_cocycle(const Cochain& psi, const CentralExtension& ext) {
  if (psi.degree() != 1 || psi.coeff() != ext.b) throw CochainError("delta1: B-valued degree-1 cochain expected");
  Cochain nu = compose(compose(invert(twisted_pullback(1, psi)), twisted_pullback(2, psi)),
                       twisted_pullback(0, psi));
  Cochain a = to_a(nu, ext, "delta1");
  Cochain check = compose(compose(compose(twisted_pullback(0, a), invert(twisted_pullback(1, a))),
                                  twisted_pullback(2, a)),
                          invert(twisted_pullback(3, a)));
  if (!check.is_identity()) throw std::logic_error("delta1: nu fails the 2-cocycle condition");
  return a;
}

std::vector<Int> delta1_with_lift(const Cochain& phi, const Cochain& psi, const CentralExtension& ext,
                                  const CohomologyGroup& h2a) {
  if (phi.degree() != 1 || phi.coeff() != ext.c) throw CochainError("delta1: C-valued degree-1 cochain expected");
  if (psi.cover() != phi.cover()) throw CochainError("delta1: lift lives on a different cover");
  require_h(h2a, ext, 2, "delta1");
  auto rep = check_tc1(phi);
  if (!rep.ok()) throw CochainError("delta1: input is not a 1-cocycle: " + rep.violations.front());
  for (std::size_t pos = 0; pos < phi.size(); ++pos)
    if (ext.beta(psi[pos]) != phi[pos])
      throw CochainError("delta1: psi does not lift phi at " + where(*phi.cover(), 1, pos));
  return h2a.class_of(delta1_cocycle(psi, ext));
}

std::vector<Int> delta1(const Cochain& phi, const CentralExtension& ext, const CohomologyGroup& h2a,
                        const Section& section) {
  if (phi.coeff() != ext.c) throw CochainError("delta1: C-valued degree-1 cochain expected");
  return delta1_with_lift(phi, lift_pointwise(phi, ext, section), ext, h2a);
}

std::vector<Int> delta1(const Cochain& phi, const CentralExtension& ext, const CohomologyGroup& h2a) {
  return delta1(phi, ext, h2a, ext.section);
}

// --- Enumeration ---------------------------------------------------------------

std::vector<Cochain> enumerate_tc0(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                   std::uint64_t budget) {
  const SimplicialCover& sc = *cover;
  const FiniteGammaGroup& m = *coeff;
  const std::size_t n0 = sc.cells(0).size();
  std::vector<Elem> all(m.g().order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
  detail::FiniteCsp csp(std::vector<std::vector<Elem>>(n0, all));
  for (std::size_t q = 0; q < sc.cells(1).size(); ++q) {
    const std::size_t f0 = sc.face(1, q, 0), f1 = sc.face(1, q, 1);
    const Elem t = sc.twist_at(1, q, 0);
    csp.add_constraint({f0, f1}, [&m, f0, f1, t](const std::vector<Elem>& mu) {
      return mu[f1] == m.act(t, mu[f0]);
    });
  }
  std::vector<Cochain> out;
  auto outcome = csp.solve(budget, [&](const std::vector<Elem>& mu) {
    out.emplace_back(cover, coeff, 0, mu);
    return true;
  });
  if (outcome == detail::FiniteCsp::Outcome::budget)
    throw BudgetExceeded("TC^0 enumeration exceeded the budget of " + std::to_string(budget) + " nodes");
  return out;
}

std::optional<std::size_t> TcClasses::find(const Cochain& phi) const {
  auto it = lookup.find(value_key(phi));
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t TcClasses::class_of(const Cochain& phi) const {
  auto i = find(phi);
  if (!i) throw CochainError("class_of: not a 1-cocycle of the enumerated set");
  return class_id[*i];
}

std::size_t TcClasses::basepoint() const {
  if (cocycles.empty()) throw std::logic_error("empty TC^1");
  return class_of(Cochain::identity(cocycles.front().cover(), cocycles.front().coeff(), 1));
}

TcClasses enumerate_tc1(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff, std::uint64_t budget) {
  require_identity_zero(coeff->g());
  const std::size_t n0 = cover->cells(0).size();
  if (space_size(coeff->g().order(), n0) > double(budget))
    throw BudgetExceeded("TC^1 classes: |K^0| exceeds the budget of " + std::to_string(budget));
  detail::FiniteCsp csp = tc1_problem(cover, coeff);
  TcClasses out;
  auto outcome = csp.solve(budget, [&](const std::vector<Elem>& v) {
    out.lookup.emplace(value_key(Cochain(cover, coeff, 1, v)), out.cocycles.size());
    out.cocycles.emplace_back(cover, coeff, 1, v);
    return true;
  });
  if (outcome == detail::FiniteCsp::Outcome::budget)
    throw BudgetExceeded("TC^1 enumeration exceeded the budget of " + std::to_string(budget) + " nodes");

  const std::size_t none = std::size_t(-1);
  out.class_id.assign(out.cocycles.size(), none);
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    if (out.class_id[i] != none) continue;
    const std::size_t cls = out.representatives.size();
    out.representatives.push_back(i);
    std::vector<Elem> mu(n0, 0);
    do {
      if (++work > budget)
        throw BudgetExceeded("TC^1 orbit sweep exceeded the budget of " + std::to_string(budget));
      std::vector<Elem> w = gauge_values(*cover, *coeff, mu, out.cocycles[i].values());
      auto j = out.find(Cochain(cover, coeff, 1, std::move(w)));
      if (!j) throw std::logic_error("gauge transform left TC^1");
      out.class_id[*j] = cls;
    } while (next_values(mu, coeff->g().order()));
  }
  return out;
}

Cochain least_in_orbit(const Cochain& phi, std::uint64_t budget, const std::function<bool(const Cochain&)>& keep) {
  if (phi.degree() != 1) throw CochainError("least_in_orbit: degree-1 cochain expected");
  require_identity_zero(phi.coeff()->g());
  const std::size_t n0 = phi.cover()->cells(0).size();
  if (space_size(phi.coeff()->g().order(), n0) > double(budget))
    throw BudgetExceeded("orbit canonicalization: |K^0| exceeds the budget of " + std::to_string(budget));
  std::optional<std::vector<Elem>> best;
  std::vector<Elem> mu(n0, 0);
  do {
    Cochain w(phi.cover(), phi.coeff(), 1, gauge_values(*phi.cover(), *phi.coeff(), mu, phi.values()));
    if (keep && !keep(w)) continue;
    if (!best || w.values() < *best) best = w.values();
  } while (next_values(mu, phi.coeff()->g().order()));
  if (!best) throw CochainError("least_in_orbit: no orbit element passes the filter");
  return Cochain(phi.cover(), phi.coeff(), 1, *best);
}

Cochain random_tc1(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff, std::mt19937_64& rng,
                   std::uint64_t budget) {
  detail::FiniteCsp csp = tc1_problem(cover, coeff);
  std::vector<std::vector<Elem>> all;
  auto outcome = csp.solve(budget, [&](const std::vector<Elem>& v) {
    all.push_back(v);
    return true;
  });
  if (outcome == detail::FiniteCsp::Outcome::budget)
    throw BudgetExceeded("TC^1 sampling exceeded the budget of " + std::to_string(budget) + " nodes");
  return Cochain(cover, coeff, 1, all[rng() % all.size()]);
}

TcCohomologyComparison tc1_h1_compare(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                      std::uint64_t budget) {
  if (!coeff->g().is_abelian()) throw CochainError("tc1_h1_compare needs abelian coefficients");
  TcCohomologyComparison out;
  CohomologyGroup h0(cover, coeff, 0), h1(cover, coeff, 1);
  out.h0_order = h0.order();
  out.h1_order = h1.order();

  auto tc0 = enumerate_tc0(cover, coeff, budget);
  out.tc0_count = tc0.size();
  std::set<std::vector<Int>> h0_hit;
  for (const auto& mu : tc0) h0_hit.insert(h0.class_of(mu));
  out.tc0_bijective = h0_hit.size() == tc0.size() && tc0.size() == h0.order();

  TcClasses tc1 = enumerate_tc1(cover, coeff, budget);
  out.tc1_cocycles = tc1.cocycles.size();
  out.tc1_classes = tc1.class_count();
  std::vector<std::vector<Int>> rep_class;
  std::set<std::vector<Int>> h1_hit;
  for (std::size_t r : tc1.representatives) {
    rep_class.push_back(h1.class_of(tc1.cocycles[r]));
    h1_hit.insert(rep_class.back());
  }
  bool consistent = true;
  for (std::size_t i = 0; i < tc1.cocycles.size(); ++i)
    consistent = consistent && h1.class_of(tc1.cocycles[i]) == rep_class[tc1.class_id[i]];
  out.tc1_bijective = consistent && h1_hit.size() == tc1.class_count() && tc1.class_count() == h1.order();
  return out;
}

ExactnessReport six_term_exactness(const SimplicialCoverPtr& cover, const CentralExtension& ext,
                                   std::uint64_t budget) {
  CohomologyGroup h0a(cover, ext.a, 0), h1a(cover, ext.a, 1), h2a(cover, ext.a, 2);
  auto tc0b = enumerate_tc0(cover, ext.b, budget);
  auto tc0c = enumerate_tc0(cover, ext.c, budget);
  TcClasses tc1b = enumerate_tc1(cover, ext.b, budget);
  TcClasses tc1c = enumerate_tc1(cover, ext.c, budget);

  using Keys = std::set<std::string>;
  auto node = [](std::string name, const Keys& image, const Keys& kernel) {
    return ExactnessNode{std::move(name), image.size(), kernel.size(), image == kernel};
  };
  auto zero_coords = [](const CohomologyGroup& h) { return std::vector<Int>(h.factors().size(), 0); };

  ExactnessReport rep;
  {
    Keys image{coords_key(zero_coords(h0a))}, kernel;
    for (const auto& h : h0a.elements())
      if (map_coefficients(ext.alpha, h0a.representative(h), ext.b).is_identity()) kernel.insert(coords_key(h));
    rep.nodes.push_back(node("H^0(A)", image, kernel));
  }
  {
    Keys image, kernel;
    for (const auto& h : h0a.elements())
      image.insert(value_key(map_coefficients(ext.alpha, h0a.representative(h), ext.b)));
    for (const auto& eta : tc0b)
      if (map_coefficients(ext.beta, eta, ext.c).is_identity()) kernel.insert(value_key(eta));
    rep.nodes.push_back(node("TC^0(B)", image, kernel));
  }
  {
    Keys image, kernel;
    for (const auto& eta : tc0b) image.insert(value_key(map_coefficients(ext.beta, eta, ext.c)));
    for (const auto& mu : tc0c)
      if (delta0(mu, ext, h1a) == zero_coords(h1a)) kernel.insert(value_key(mu));
    rep.nodes.push_back(node("TC^0(C)", image, kernel));
  }
  const std::size_t base_b = tc1b.basepoint(), base_c = tc1c.basepoint();
  {
    Keys image, kernel;
    for (const auto& mu : tc0c) image.insert(coords_key(delta0(mu, ext, h1a)));
    for (const auto& h : h1a.elements())
      if (tc1b.class_of(map_coefficients(ext.alpha, h1a.representative(h), ext.b)) == base_b)
        kernel.insert(coords_key(h));
    rep.nodes.push_back(node("H^1(A)", image, kernel));
  }
  {
    Keys image, kernel;
    for (const auto& h : h1a.elements())
      image.insert(std::to_string(tc1b.class_of(map_coefficients(ext.alpha, h1a.representative(h), ext.b))));
    for (std::size_t c = 0; c < tc1b.class_count(); ++c) {
      const Cochain& r = tc1b.cocycles[tc1b.representatives[c]];
      if (tc1c.class_of(map_coefficients(ext.beta, r, ext.c)) == base_c) kernel.insert(std::to_string(c));
    }
    rep.nodes.push_back(node("TC^1(B)", image, kernel));
  }
  {
    Keys image, kernel;
    for (std::size_t c = 0; c < tc1b.class_count(); ++c) {
      const Cochain& r = tc1b.cocycles[tc1b.representatives[c]];
      image.insert(std::to_string(tc1c.class_of(map_coefficients(ext.beta, r, ext.c))));
    }
    for (std::size_t c = 0; c < tc1c.class_count(); ++c) {
      const Cochain& r = tc1c.cocycles[tc1c.representatives[c]];
      if (delta1(r, ext, h2a) == zero_coords(h2a)) kernel.insert(std::to_string(c));
    }
    rep.nodes.push_back(node("TC^1(C)", image, kernel));
  }
  return rep;
}

}  // namespace seccoh
