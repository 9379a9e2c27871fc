#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seccoh/cochain.hpp"
#include "suite.hpp"

using namespace seccoh;

TEST_CASE("twisted pullbacks: small examples") {
  auto z2 = make_cyclic(2);
  auto sc = suite::point_cover(z2);
  auto g4 = suite::cyclic_coeff(z2, 4, true);
  Cochain mu(sc, g4, 0, {1});
  Cochain d0 = twisted_pullback(0, mu);
  const DegreeCensus& c1 = sc->cells(1);
  CHECK(d0.value_at(c1.index_at(0), SimplexPoint{{1}, 0}) == 3);
  CHECK(d0.value_at(c1.index_at(0), SimplexPoint{{0}, 0}) == 1);
  CHECK(twisted_pullback(1, mu).values() == std::vector<Elem>{1, 1});
  for (std::size_t i = 0; i <= 2; ++i)
    CHECK(twisted_pullback(i, Cochain::identity(sc, g4, 1)).is_identity());

  // Trivial theta on Z/2: delta mu vanishes.
  auto g2 = suite::cyclic_coeff(z2, 2, false);
  CHECK(coboundary(Cochain(sc, g2, 0, {1})).is_identity());
  CHECK(coboundary(Cochain::identity(sc, g2, 2)).is_identity());
}

TEST_CASE("degree-1 pullback matches the transition-cocycle factor") {
  // (delta_0 phi)_(c,b,a)(g1, g2, x) = g1 . phi_(b,a)(g2, x)
  auto z2 = make_cyclic(2);
  auto sc = suite::four_point(z2);
  auto coeff = suite::cyclic_coeff(z2, 4, true);
  Cochain phi = random_cochain(sc, coeff, 1, std::uint64_t{5});
  Cochain d0 = twisted_pullback(0, phi);
  const DegreeCensus& c2 = sc->cells(2);
  for (std::size_t pos = 0; pos < c2.size(); ++pos) {
    const auto& a = c2.index_at(pos).labels;
    const auto& x = c2.point_at(pos);
    Elem inner = phi.value_at(MultiIndex{{a[1], a[2]}}, SimplexPoint{{x.gammas[1]}, x.base});
    CHECK(d0[pos] == coeff->act(x.gammas[0], inner));
  }
}

TEST_CASE("coboundary squares to zero and pullbacks satisfy the simplicial identity") {
  for (const auto& s : suite::scenarios()) {
    INFO(s.name);
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Cochain phi = random_cochain(s.cover, s.coeff, p, seed);
        CHECK(coboundary(coboundary(phi)).is_identity());
      }
    for (std::size_t p = 0; p <= 1; ++p) {
      Cochain phi = random_cochain(s.cover, s.coeff, p, std::uint64_t{99});
      for (std::size_t j = 1; j <= p + 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          CHECK(twisted_pullback(j, twisted_pullback(i, phi)) ==
                twisted_pullback(i, twisted_pullback(j - 1, phi)));
    }
  }
}

TEST_CASE("pullbacks are homomorphisms, also for non-abelian coefficients") {
  auto z2 = make_cyclic(2);
  auto ext = suite::dihedral(z2, true);
  auto sc = suite::four_point(z2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Cochain a = random_cochain(sc, ext.b, 1, seed);
    Cochain b = random_cochain(sc, ext.b, 1, seed + 100);
    CHECK(compose(a, invert(a)).is_identity());
    for (std::size_t i = 0; i <= 2; ++i)
      CHECK(twisted_pullback(i, compose(a, b)) == compose(twisted_pullback(i, a), twisted_pullback(i, b)));
  }
  CHECK_THROWS_AS(coboundary(Cochain::identity(sc, ext.b, 0)), CochainError);
}

TEST_CASE("random cochains are reproducible") {
  auto z2 = make_cyclic(2);
  auto sc = suite::four_point(z2);
  auto coeff = suite::cyclic_coeff(z2, 4, true);
  CHECK(random_cochain(sc, coeff, 1, std::uint64_t{1}) == random_cochain(sc, coeff, 1, std::uint64_t{1}));
  CHECK_FALSE(random_cochain(sc, coeff, 1, std::uint64_t{1}) == random_cochain(sc, coeff, 1, std::uint64_t{2}));
  CHECK(random_cochain(sc, coeff, 2, std::uint64_t{1}).size() == sc->cells(2).size());
}

TEST_CASE("coefficient maps commute with pullbacks") {
  auto z2 = make_cyclic(2);
  auto ext = suite::bockstein(z2, true);
  auto sc = suite::four_point(z2);
  Cochain one(sc, ext.a, 0, std::vector<Elem>(sc->cells(0).size(), 1));
  CHECK(map_coefficients(ext.alpha, one, ext.b).values() == std::vector<Elem>(sc->cells(0).size(), 2));
  CHECK(map_coefficients(identity_hom(ext.b->group), one.coeff() == ext.a ? Cochain::identity(sc, ext.b, 0)
                                                                             : one,
                         ext.b) == Cochain::identity(sc, ext.b, 0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Cochain phi = random_cochain(sc, ext.b, 1, seed);
    Cochain mapped = map_coefficients(ext.beta, phi, ext.c);
    for (std::size_t i = 0; i <= 2; ++i)
      CHECK(map_coefficients(ext.beta, twisted_pullback(i, phi), ext.c) == twisted_pullback(i, mapped));
    CHECK(map_coefficients(ext.beta, coboundary(phi), ext.c) == coboundary(mapped));
  }
  // Negation on Z/4 does not commute with the identity into trivial Z/4.
  auto plain = suite::cyclic_coeff(z2, 4, false);
  CHECK_THROWS_AS(map_coefficients(identity_hom(ext.b->group), Cochain::identity(sc, ext.b, 0), plain),
                  CochainError);
}

TEST_CASE("restriction and the refinement homotopy") {
  auto triv = make_trivial_group();
  auto ref = suite::circle_refinement(triv);
  auto coeff = suite::cyclic_coeff(triv, 2, false);
  auto coeff4 = suite::cyclic_coeff(triv, 4, false);
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (const auto& c : {coeff, coeff4})
      for (std::size_t p = 1; p <= 2; ++p) {
        Cochain phi = random_cochain(ref.coarse, c, p, seed);
        CHECK(restrict_cochain(coboundary(phi), *ref.r) == coboundary(restrict_cochain(phi, *ref.r)));
        Cochain lhs = difference(restrict_cochain(phi, *ref.s), restrict_cochain(phi, *ref.r));
        Cochain rhs = compose(homotopy(coboundary(phi), *ref.r, *ref.s), coboundary(homotopy(phi, *ref.r, *ref.s)));
        CHECK(lhs == rhs);
        Cochain same = compose(homotopy(coboundary(phi), *ref.r, *ref.r), coboundary(homotopy(phi, *ref.r, *ref.r)));
        CHECK(same.is_identity());
      }
  Cochain constant(ref.coarse, coeff, 0, std::vector<Elem>(ref.coarse->cells(0).size(), 1));
  CHECK(restrict_cochain(constant, *ref.r) == restrict_cochain(constant, *ref.s));
  Refinement id(ref.coarse, ref.coarse, {0, 1, 2});
  Cochain phi = random_cochain(ref.coarse, coeff, 1, std::uint64_t{4});
  CHECK(restrict_cochain(phi, id) == phi);
}

TEST_CASE("lifts and alpha pullbacks") {
  auto z2 = make_cyclic(2);
  auto ext = suite::bockstein(z2);
  auto sc = suite::point_cover(z2);
  Cochain phi(sc, ext.c, 1, {0, 1});
  Cochain psi = lift_pointwise(phi, ext, ext.section);
  CHECK(psi.values() == std::vector<Elem>{0, 1});
  CHECK(pullback_alpha(Cochain(sc, ext.b, 1, {2, 0}), ext).values() == std::vector<Elem>{1, 0});
  CHECK_THROWS_AS(pullback_alpha(psi, ext), CochainError);
}
