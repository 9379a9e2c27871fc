#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "seccoh/nonabelian.hpp"
#include "suite.hpp"

using namespace seccoh;

namespace {

// Degree-1 cochain on a one-point cover whose value at (g, pt) is f(g).
Cochain on_point(SimplicialCoverPtr sc, GammaGroupPtr m, const std::vector<Elem>& f) {
  std::vector<Elem> v(sc->cells(1).size());
  for (std::size_t pos = 0; pos < v.size(); ++pos) v[pos] = f[sc->cells(1).point_at(pos).gammas[0]];
  return Cochain(sc, m, 1, v);
}

std::vector<Int> zero(const CohomologyGroup& h) { return std::vector<Int>(h.factors().size(), 0); }

// Random cochain with values in the image of alpha, as an A-valued cochain.
Cochain random_a(SimplicialCoverPtr sc, const CentralExtension& ext, std::size_t p, std::mt19937_64& rng) {
  return random_cochain(sc, ext.a, p, rng);
}

Section random_section(const CentralExtension& ext, std::mt19937_64& rng) {
  Section s(ext.c->g().order());
  for (Elem c = 0; c < s.size(); ++c) {
    std::vector<Elem> fiber;
    for (Elem b = 0; b < ext.b->g().order(); ++b)
      if (ext.beta(b) == c) fiber.push_back(b);
    s[c] = fiber[rng() % fiber.size()];
  }
  return s;
}

struct Case {
  std::string name;
  SimplicialCoverPtr cover;
  CentralExtension ext;
};

std::vector<Case> extension_cases() {
  auto z2 = make_cyclic(2);
  auto triv = make_trivial_group();
  auto pt = suite::point_cover(z2);
  auto circle = suite::circle(triv);
  return {
      {"pt bockstein", pt, suite::bockstein(z2)},
      {"pt bockstein-neg", pt, suite::bockstein(z2, true)},
      {"pt split", pt, suite::split(z2)},
      {"pt dihedral", pt, suite::dihedral(z2)},
      {"pt dihedral-conj", pt, suite::dihedral(z2, true)},
      {"circle bockstein", circle, suite::bockstein(triv)},
      {"circle dihedral", circle, suite::dihedral(triv)},
  };
}

}  // namespace

TEST_CASE("degree-0 cocycles") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  auto z3n = suite::cyclic_coeff(z2, 3, true);
  CHECK(is_tc0(Cochain::identity(pt, z3n, 0)));
  CHECK_FALSE(is_tc0(Cochain(pt, z3n, 0, {1})));
  auto rep = check_tc0(Cochain(pt, z3n, 0, {1}));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().find("invariance") != std::string::npos);

  // Trivial Gamma on the circle: constant on overlaps means globally constant.
  auto triv = make_trivial_group();
  auto circle = suite::circle(triv);
  auto z2t = suite::cyclic_coeff(triv, 2, false);
  auto tc0 = enumerate_tc0(circle, z2t);
  CHECK(tc0.size() == 2);
  for (const auto& mu : oracle::all_cochains(circle, z2t, 0)) {
    std::set<Elem> vals(mu.values().begin(), mu.values().end());
    CHECK(is_tc0(mu) == (vals.size() == 1));
  }
}

TEST_CASE("degree-1 cocycles on a point") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  auto m = suite::cyclic_coeff(z2, 2, false);
  CHECK(is_tc1(Cochain::identity(pt, m, 1)));
  CHECK(is_tc1(on_point(pt, m, {0, 1})));
  auto bad = check_tc1(on_point(pt, m, {1, 1}));
  CHECK_FALSE(bad.ok());
  CHECK(bad.violations.front().find("normalization") != std::string::npos);
  CHECK_FALSE(is_tc1(on_point(pt, m, {1, 0})));
}

TEST_CASE("face-table check agrees with pointwise evaluation") {
  auto z2 = make_cyclic(2);
  auto triv = make_trivial_group();
  auto pt = suite::point_cover(z2);
  std::vector<std::pair<SimplicialCoverPtr, GammaGroupPtr>> cases = {
      {pt, suite::cyclic_coeff(z2, 2, false)},
      {pt, suite::cyclic_coeff(z2, 3, true)},
      {pt, suite::cyclic_coeff(z2, 4, true)},
      {pt, suite::dihedral(z2).b},
      {pt, suite::dihedral(z2, true).b},
      {suite::circle(triv), suite::cyclic_coeff(triv, 2, false)},
  };
  for (const auto& [sc, m] : cases) {
    INFO(m->name);
    std::size_t hits = 0;
    for (const auto& phi : oracle::all_cochains(sc, m, 1)) {
      const bool ok = is_tc1(phi);
      CHECK(ok == oracle::transition_cocycle(phi));
      hits += ok;
    }
    CHECK(hits > 0);
  }
  // Larger scenario: seeded random cochains plus every enumerated cocycle.
  auto four = suite::four_point(z2);
  auto m = suite::cyclic_coeff(z2, 2, false);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto phi = random_cochain(four, m, 1, rng);
    CHECK(is_tc1(phi) == oracle::transition_cocycle(phi));
  }
  for (const auto& phi : enumerate_tc1(four, m).cocycles) CHECK(oracle::transition_cocycle(phi));
}

TEST_CASE("equivalence search") {
  auto z2 = make_cyclic(2);
  auto triv = make_trivial_group();
  auto circle = suite::circle(triv);
  auto m = suite::cyclic_coeff(triv, 2, false);
  auto tc1 = enumerate_tc1(circle, m);
  REQUIRE(tc1.class_count() == 2);
  const Cochain& a = tc1.cocycles[tc1.representatives[0]];
  const Cochain& b = tc1.cocycles[tc1.representatives[1]];
  auto self = find_equivalence(b, b);
  REQUIRE(self.status == SearchStatus::found);
  CHECK(self.witness->is_identity());
  auto diff = find_equivalence(a, b);
  CHECK(diff.status == SearchStatus::inequivalent);
  CHECK_FALSE(diff.via_cohomology);
  CHECK(diff.nodes <= 8 * 2);
  CHECK_FALSE(oracle::equivalent(a, b));

  auto small = find_equivalence(a, b, 1);
  CHECK(small.status == SearchStatus::inequivalent);
  CHECK(small.via_cohomology);
  auto d8 = suite::dihedral(triv).b;
  auto d8_tc = enumerate_tc1(circle, d8);
  CHECK(find_equivalence(d8_tc.cocycles[1], d8_tc.cocycles[2], 1).status == SearchStatus::budget_exceeded);

  // Search, H^1 and the brute-force oracle agree on every pair.
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    auto all = enumerate_tc1(s.cover, s.coeff);
    CohomologyGroup h1(s.cover, s.coeff, 1);
    const std::size_t n = std::min<std::size_t>(all.cocycles.size(), 12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Cochain& p = all.cocycles[i];
        const Cochain& q = all.cocycles[j];
        auto r = find_equivalence(p, q);
        const bool same = h1.class_of(p) == h1.class_of(q);
        CHECK((r.status == SearchStatus::found) == same);
        CHECK((all.class_id[i] == all.class_id[j]) == same);
        if (r.witness) CHECK(oracle::equivalence_witness(*r.witness, p, q));
        auto forced = find_equivalence(p, q, 0);
        CHECK(forced.via_cohomology);
        CHECK((forced.status == SearchStatus::found) == same);
        if (forced.witness) CHECK(oracle::equivalence_witness(*forced.witness, p, q));
      }
  }
  // Non-abelian classes agree with the oracle.
  auto pt = suite::point_cover(z2);
  auto d8c = suite::dihedral(z2, true).b;
  auto classes = enumerate_tc1(pt, d8c);
  for (std::size_t i = 0; i < classes.cocycles.size(); ++i)
    for (std::size_t j = 0; j < classes.cocycles.size(); ++j)
      CHECK(oracle::equivalent(classes.cocycles[i], classes.cocycles[j]) ==
            (classes.class_id[i] == classes.class_id[j]));
  CHECK_THROWS_AS(find_equivalence(on_point(pt, suite::cyclic_coeff(z2, 2, false), {1, 1}),
                                   on_point(pt, suite::cyclic_coeff(z2, 2, false), {0, 0})),
                  CochainError);
}

TEST_CASE("classes of TC match abelian cohomology") {
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    auto rep = tc1_h1_compare(s.cover, s.coeff);
    CHECK(rep.ok());
    CHECK(rep.tc0_count == rep.h0_order);
    CHECK(rep.tc1_classes == rep.h1_order);
  }
  auto z2 = make_cyclic(2);
  auto triv = make_trivial_group();
  CHECK(tc1_h1_compare(suite::point_cover(z2), suite::cyclic_coeff(z2, 2, false)).tc1_classes == 2);
  CHECK(tc1_h1_compare(suite::circle(triv), suite::cyclic_coeff(triv, 2, false)).tc1_classes == 2);
  auto one = make_gamma_group("1", triv, trivial_action(triv, triv));
  auto rep = tc1_h1_compare(suite::circle(triv), one);
  CHECK(rep.tc1_classes == 1);
  CHECK(rep.h1_order == 1);
}

TEST_CASE("connecting map in degree 0") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  auto ext = suite::bockstein(z2, true);
  CohomologyGroup h1a(pt, ext.a, 1);
  Cochain mu(pt, ext.c, 0, {1});
  REQUIRE(is_tc0(mu));
  auto cls = delta0(mu, ext, h1a);
  // Both preimages of 1 give the same class.
  for (Elem b : {Elem(1), Elem(3)}) {
    Cochain eta(pt, ext.b, 0, {b});
    CHECK(h1a.class_of(delta0_cocycle(eta, ext)) == cls);
  }
  // -1 != 1 in Z/4 with negation, so mu does not lift to TC^0(B) and the class is nonzero.
  CHECK(cls != zero(h1a));
  auto split = suite::split(z2);
  CohomologyGroup h1s(pt, split.a, 1);
  for (const auto& m : enumerate_tc0(pt, split.c)) CHECK(delta0(m, split, h1s) == zero(h1s));
}

TEST_CASE("connecting map in degree 1") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  auto ext = suite::bockstein(z2);
  CohomologyGroup h2a(pt, ext.a, 2);
  REQUIRE(h2a.factors() == std::vector<Int>{2});
  Cochain phi = on_point(pt, ext.c, {0, 1});
  REQUIRE(is_tc1(phi));
  CHECK(delta1(phi, ext, h2a) == std::vector<Int>{1});
  // None of the pointwise lifts is a cocycle.
  std::size_t lifts = 0, cocycles = 0;
  for (const auto& psi : oracle::all_cochains(pt, ext.b, 1)) {
    bool lifts_phi = true;
    for (std::size_t pos = 0; pos < psi.size(); ++pos) lifts_phi = lifts_phi && ext.beta(psi[pos]) == phi[pos];
    if (!lifts_phi) continue;
    ++lifts;
    cocycles += is_tc1(psi);
  }
  CHECK(lifts == 4);
  CHECK(cocycles == 0);
  CHECK(delta1(Cochain::identity(pt, ext.c, 1), ext, h2a) == zero(h2a));
  CHECK_THROWS_AS(delta1(on_point(pt, ext.c, {1, 1}), ext, h2a), CochainError);
}

TEST_CASE("connecting maps are well defined") {
  for (const auto& c : extension_cases()) {
    INFO(c.name);
    const CentralExtension& ext = c.ext;
    CohomologyGroup h1a(c.cover, ext.a, 1), h2a(c.cover, ext.a, 2);
    auto tc1 = enumerate_tc1(c.cover, ext.c);
    std::mt19937_64 rng(17);
    for (std::size_t i = 0; i < tc1.cocycles.size(); ++i) {
      const Cochain& phi = tc1.cocycles[i];
      const auto cls = delta1(phi, ext, h2a);
      // Constant on classes.
      CHECK(delta1(tc1.cocycles[tc1.representatives[tc1.class_id[i]]], ext, h2a) == cls);
      for (int k = 0; k < 10; ++k) {
        CHECK(delta1(phi, ext, h2a, random_section(ext, rng)) == cls);
        Cochain psi = compose(lift_pointwise(phi, ext, ext.section),
                              map_coefficients(ext.alpha, random_a(c.cover, ext, 1, rng), ext.b));
        CHECK(delta1_with_lift(phi, psi, ext, h2a) == cls);
        Cochain mu = random_cochain(c.cover, ext.c, 0, rng);
        CHECK(delta1(gauge(mu, phi), ext, h2a) == cls);
      }
    }
    for (const auto& mu : enumerate_tc0(c.cover, ext.c)) {
      const auto cls = delta0(mu, ext, h1a);
      for (int k = 0; k < 10; ++k) {
        Cochain eta = compose(lift_pointwise(mu, ext, random_section(ext, rng)),
                              map_coefficients(ext.alpha, random_a(c.cover, ext, 0, rng), ext.b));
        CHECK(h1a.class_of(delta0_cocycle(eta, ext)) == cls);
      }
    }
  }
}

TEST_CASE("abelian connecting map agrees") {
  auto z2 = make_cyclic(2);
  auto triv = make_trivial_group();
  std::vector<Case> cases = {{"pt", suite::point_cover(z2), suite::bockstein(z2)},
                             {"pt neg", suite::point_cover(z2), suite::bockstein(z2, true)},
                             {"pt split", suite::point_cover(z2), suite::split(z2)},
                             {"circle", suite::circle(triv), suite::bockstein(triv)},
                             {"four-point", suite::four_point(z2), suite::bockstein(z2, true)}};
  for (const auto& c : cases) {
    INFO(c.name);
    CohomologyGroup h2a(c.cover, c.ext.a, 2);
    for (const auto& phi : enumerate_tc1(c.cover, c.ext.c).cocycles)
      CHECK(delta1(phi, c.ext, h2a) == connecting_abelian(phi, c.ext, h2a));
  }
}

TEST_CASE("six-term sequence is exact") {
  for (const auto& c : extension_cases()) {
    INFO(c.name);
    auto rep = six_term_exactness(c.cover, c.ext);
    CHECK(rep.nodes.size() == 6);
    for (const auto& n : rep.nodes) {
      INFO(n.node);
      CHECK(n.ok);
    }
  }
  auto z2 = make_cyclic(2);
  CHECK(six_term_exactness(suite::four_point(z2), suite::bockstein(z2, true)).ok());
}

TEST_CASE("budgets") {
  auto triv = make_trivial_group();
  auto circle = suite::circle(triv);
  auto d8 = suite::dihedral(triv).b;
  CHECK_THROWS_AS(enumerate_tc1(circle, d8, 100), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_tc0(circle, d8, 2), BudgetExceeded);
  std::mt19937_64 rng(1);
  CHECK(is_tc1(random_tc1(circle, d8, rng)));
}
