#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seccoh/abelian_cohomology.hpp"
#include "suite.hpp"

using namespace seccoh;

namespace {

std::vector<Int> factors_of(const SimplicialCoverPtr& sc, const GammaGroupPtr& g, std::size_t p) {
  return CohomologyGroup(sc, g, p).factors();
}

void check_against_oracle(const SimplicialCoverPtr& sc, const GammaGroupPtr& g, std::size_t p) {
  CohomologyGroup h(sc, g, p);
  auto o = oracle::cech_cohomology(sc, g, p);
  REQUIRE(o.has_value());
  CHECK(h.order() == o->order);
  if (o->has_torsion)
    CHECK(oracle::torsion_from_factors(h.factors(), std::int64_t(g->g().exponent())) == o->torsion);
}

// Every section of beta: one preimage per element of C, identity fixed.
std::vector<Section> all_sections(const CentralExtension& ext) {
  const std::size_t nc = ext.c->g().order();
  std::vector<std::vector<Elem>> fibers(nc);
  for (Elem b = 0; b < ext.b->g().order(); ++b) fibers[ext.beta(b)].push_back(b);
  std::vector<Section> out{Section(nc, 0)};
  for (Elem c = 0; c < nc; ++c) {
    std::vector<Section> next;
    for (const auto& s : out)
      for (Elem b : fibers[c]) {
        if (c == ext.c->g().identity() && b != ext.b->g().identity()) continue;
        auto t = s;
        t[c] = b;
        next.push_back(t);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("linearized coboundary matches the cochain coboundary") {
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    for (std::size_t p = 0; p <= 2; ++p) {
      HomPresentation d = linearize_coboundary(s.cover, s.coeff, p);
      CHECK(d.well_defined());
      CochainCoordinates src(s.cover, s.coeff, p), tgt(s.cover, s.coeff, p + 1);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Cochain phi = random_cochain(s.cover, s.coeff, p, seed);
        CHECK(d.apply(src.encode(phi)) == tgt.encode(coboundary(phi)));
        CHECK(src.decode(src.encode(phi)) == phi);
        HomPresentation d2 = linearize_coboundary(s.cover, s.coeff, p + 1);
        for (Int x : d2.apply(d.apply(src.encode(phi)))) CHECK(x == 0);
      }
    }
  }
  auto triv = make_trivial_group();
  HomPresentation z = linearize_coboundary(suite::point_cover(triv), suite::cyclic_coeff(triv, 2, false), 0);
  CHECK(z.matrix.at(0, 0) == 0);
  auto z2 = make_cyclic(2);
  HomPresentation d0 = linearize_coboundary(suite::point_cover(z2), suite::cyclic_coeff(z2, 2, false), 0);
  for (std::size_t r = 0; r < d0.matrix.rows(); ++r) CHECK(d0.matrix.at(r, 0) == 0);
}

TEST_CASE("group cohomology of Z/2 on a point") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  auto triv2 = suite::cyclic_coeff(z2, 2, false);
  auto neg3 = suite::cyclic_coeff(z2, 3, true);
  for (std::size_t p = 0; p <= 2; ++p) {
    CHECK(factors_of(pt, triv2, p) == std::vector<Int>{2});
    CHECK(factors_of(pt, neg3, p).empty());
  }
  // Further modules against the inhomogeneous-complex oracle.
  auto z4 = make_cyclic(4);
  auto v4 = make_direct_product(*z2, *z2);
  std::vector<GammaGroupPtr> mods = {triv2, neg3, suite::cyclic_coeff(z2, 4, true),
                                     suite::cyclic_coeff(z2, 4, false),
                                     make_gamma_group("V4-swap", v4, cyclic_action(z2, v4, {0, 2, 1, 3}))};
  for (const auto& m : mods)
    for (std::size_t p = 0; p <= 2; ++p) {
      INFO(m->name, " p=", p);
      CohomologyGroup h(pt, m, p);
      auto o = oracle::group_cohomology(*m, p);
      CHECK(h.order() == o.order);
      CHECK(oracle::torsion_from_factors(h.factors(), std::int64_t(m->g().exponent())) == o.torsion);
    }
  // Z/3 acting on a point, coefficients Z/3 trivial and Z/2 x Z/2 rotated.
  auto z3 = make_cyclic(3);
  auto pt3 = suite::point_cover(z3);
  auto rot = make_gamma_group("V4-rot", v4, cyclic_action(z3, v4, {0, 2, 3, 1}));
  for (const auto& m : {suite::cyclic_coeff(z3, 3, false), rot})
    for (std::size_t p = 0; p <= 2; ++p) {
      CohomologyGroup h(pt3, m, p);
      CHECK(h.order() == oracle::group_cohomology(*m, p).order);
    }
}

TEST_CASE("circle nerve") {
  auto triv = make_trivial_group();
  auto sc = suite::circle(triv);
  auto z2 = suite::cyclic_coeff(triv, 2, false);
  CHECK(factors_of(sc, z2, 0) == std::vector<Int>{2});
  CHECK(factors_of(sc, z2, 1) == std::vector<Int>{2});
  CHECK(factors_of(sc, z2, 2).empty());
  auto z4 = suite::cyclic_coeff(triv, 4, false);
  CHECK(factors_of(sc, z4, 1) == std::vector<Int>{4});
  for (std::size_t p = 0; p <= 2; ++p) check_against_oracle(sc, z2, p);
}

TEST_CASE("cohomology agrees with enumeration on the suite") {
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    const std::size_t pmax = s.name.find("four-point") != std::string::npos ? 1 : 2;
    for (std::size_t p = 0; p <= pmax; ++p) check_against_oracle(s.cover, s.coeff, p);
  }
}

TEST_CASE("class reduction") {
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    for (std::size_t p = 1; p <= 2; ++p) {
      CohomologyGroup h(s.cover, s.coeff, p);
      for (std::size_t i = 0; i < h.generators().size(); ++i) {
        CHECK(coboundary(h.generators()[i]).is_identity());
        auto c = h.class_of(h.generators()[i]);
        for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
      }
      const std::vector<Int> zero(h.factors().size(), 0);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Cochain mu = random_cochain(s.cover, s.coeff, p - 1, seed);
        Cochain dmu = coboundary(mu);
        CHECK(h.class_of(dmu) == zero);
        auto prim = h.primitive(dmu);
        REQUIRE(prim.has_value());
        CHECK(coboundary(*prim) == dmu);
        for (const auto& x : h.elements()) {
          Cochain rep = h.representative(x);
          CHECK(h.class_of(rep) == x);
          CHECK(h.class_of(compose(rep, dmu)) == x);
          if (x != zero) CHECK_FALSE(h.primitive(rep).has_value());
        }
      }
      // Additivity on pairs of elements.
      for (const auto& x : h.elements())
        for (const auto& y : h.elements()) {
          auto c = h.class_of(compose(h.representative(x), h.representative(y)));
          for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == (x[i] + y[i]) % h.factors()[i]);
        }
    }
  }
  auto z2 = make_cyclic(2);
  auto sc = suite::point_cover(z2);
  auto g = suite::cyclic_coeff(z2, 2, false);
  CohomologyGroup h1(sc, g, 1);
  CHECK_THROWS_AS(h1.class_of(Cochain(sc, g, 1, {1, 0})), CochainError);
  CHECK_FALSE(h1.is_cocycle(Cochain(sc, g, 1, {1, 0})));
  CHECK(h1.is_cocycle(Cochain(sc, g, 1, {0, 1})));
  auto ext = suite::dihedral(z2);
  CHECK_THROWS_AS(CohomologyGroup(sc, ext.b, 1), CochainError);
}

TEST_CASE("census sizes and subgroup factors") {
  auto z2 = make_cyclic(2);
  auto sc = suite::point_cover(z2);
  CohomologyGroup h(sc, suite::cyclic_coeff(z2, 2, false), 2);
  CHECK(h.cochain_positions() == 4);
  CHECK(h.empty_indices() == 0);
  // |Z^2| / |B^2| = |H^2|.
  std::size_t z = 1, b = 1;
  for (Int f : h.cocycle_factors()) z *= std::size_t(f);
  for (Int f : h.coboundary_factors()) b *= std::size_t(f);
  CHECK(z == b * h.order());
}

TEST_CASE("connecting map") {
  auto z2 = make_cyclic(2);
  auto sc = suite::point_cover(z2);
  auto ext = suite::bockstein(z2);
  CohomologyGroup h1c(sc, ext.c, 1), h2a(sc, ext.a, 2);
  REQUIRE(h1c.generators().size() == 1);
  Cochain phi(sc, ext.c, 1, {0, 1});
  CHECK(h1c.class_of(phi) == std::vector<Int>{1});
  for (const auto& s : all_sections(ext)) CHECK(connecting_abelian(phi, ext, h2a, s) == std::vector<Int>{1});
  CHECK(connecting_abelian(coboundary(Cochain(sc, ext.c, 0, {1})), ext, h2a) == std::vector<Int>{0});

  // Split extension: every connecting map vanishes.
  auto split = suite::split(z2);
  for (std::size_t p = 0; p <= 2; ++p) {
    CohomologyGroup hc(sc, split.c, p), ha(sc, split.a, p + 1);
    for (const auto& x : hc.elements())
      for (const auto& s : all_sections(split))
        CHECK(connecting_abelian(hc.representative(x), split, ha, s) == std::vector<Int>(ha.factors().size(), 0));
  }
}

TEST_CASE("long exact sequence") {
  auto z2 = make_cyclic(2);
  auto pt = suite::point_cover(z2);
  for (const auto& ext : {suite::bockstein(z2), suite::bockstein(z2, true), suite::split(z2)}) {
    INFO(ext.name);
    ExactnessReport rep = les_exactness_check(pt, ext, 2);
    CHECK(rep.nodes.size() == 9);
    CHECK(rep.ok());
  }
  CHECK(factors_of(pt, suite::bockstein(z2, true).b, 1) == std::vector<Int>{2});
  auto triv = make_trivial_group();
  CHECK(les_exactness_check(suite::circle(triv), suite::bockstein(triv), 1).ok());
  CHECK(les_exactness_check(suite::four_point(z2), suite::bockstein(z2, true), 1).ok());
}

TEST_CASE("refinement invariance") {
  auto triv = make_trivial_group();
  auto ref = suite::circle_refinement(triv);
  auto z2 = suite::cyclic_coeff(triv, 2, false);
  for (std::size_t p = 0; p <= 2; ++p) {
    auto rep = refinement_action_check(*ref.r, *ref.s, z2, p);
    CHECK(rep.ok());
  }
  CHECK(refinement_action_check(*ref.r, *ref.s, z2, 1).generators == 1);
  CHECK(refinement_action_check(*ref.r, *ref.r, z2, 1).ok());
  // Refining keeps H^1 of the circle.
  CHECK(CohomologyGroup(ref.fine, z2, 1).factors() == std::vector<Int>{2});
}
