// Hand-built scenarios shared by the unit and acceptance tests.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "seccoh/cochain.hpp"
#include "seccoh/finite_group.hpp"
#include "seccoh/gamma_space.hpp"

namespace suite {

using namespace seccoh;

struct Scenario {
  std::string name;
  SimplicialCoverPtr cover;
  GammaGroupPtr coeff;
};

inline std::shared_ptr<const GammaSpace> make_space(
    GroupPtr gamma, std::size_t points, std::vector<std::vector<std::size_t>> action = {},
    std::vector<std::pair<std::size_t, std::size_t>> edges = {}) {
  if (action.empty()) action = trivial_space_action(gamma, points).action();
  return std::make_shared<const GammaSpace>(gamma, points, std::move(action), std::vector<std::string>{},
                                            std::move(edges));
}

inline SimplicialCoverPtr point_cover(GroupPtr gamma, std::size_t max_degree = 4) {
  auto space = make_space(gamma, 1);
  auto cover = std::make_shared<const Cover>(std::vector<std::string>{"U"},
                                             std::vector<std::vector<std::size_t>>{{0}}, 1);
  return make_simplicial_cover(space, cover, max_degree);
}

inline GammaGroupPtr cyclic_coeff(GroupPtr gamma, std::size_t n, bool negate) {
  auto g = make_cyclic(n);
  GammaAction act = negate ? inversion_action(gamma, g) : trivial_action(gamma, g);
  return make_gamma_group("Z" + std::to_string(n) + (negate ? "-" : ""), g, act);
}

/// Three points p01, p12, p02 joined in a triangle, covered by three connected
/// sets meeting pairwise in single points, never all three.
inline std::shared_ptr<const Cover> circle_cover() {
  return std::make_shared<const Cover>(std::vector<std::string>{"U0", "U1", "U2"},
                                       std::vector<std::vector<std::size_t>>{{0, 2}, {0, 1}, {1, 2}}, 3);
}

struct CircleRefinement {
  SimplicialCoverPtr coarse;
  SimplicialCoverPtr fine;
  std::shared_ptr<const Refinement> r;
  std::shared_ptr<const Refinement> s;
};

inline std::shared_ptr<const GammaSpace> circle_space(GroupPtr gamma) {
  return make_space(gamma, 3, {}, {{0, 1}, {1, 2}, {0, 2}});
}

inline CircleRefinement circle_refinement(GroupPtr gamma) {
  auto space = circle_space(gamma);
  CircleRefinement out;
  out.coarse = make_simplicial_cover(space, circle_cover(), 4);
  // The coarse sets again plus the three overlap points; r and s send each
  // overlap point to different coarse sets containing it.
  auto fine = std::make_shared<const Cover>(
      std::vector<std::string>{"V0", "V1", "V2", "V3", "V4", "V5"},
      std::vector<std::vector<std::size_t>>{{0, 2}, {0, 1}, {1, 2}, {0}, {1}, {2}}, 3);
  out.fine = make_simplicial_cover(space, fine, 4);
  out.r = std::make_shared<const Refinement>(out.coarse, out.fine,
                                             std::vector<std::size_t>{0, 1, 2, 0, 1, 0}, "r");
  out.s = std::make_shared<const Refinement>(out.coarse, out.fine,
                                             std::vector<std::size_t>{0, 1, 2, 1, 2, 2}, "s");
  return out;
}

inline SimplicialCoverPtr circle(GroupPtr gamma) {
  return make_simplicial_cover(circle_space(gamma), circle_cover(), 4);
}

/// Z/2 acting on four points by 0<->3, 1<->2, covered by {0,1} and {1,2,3}.
inline SimplicialCoverPtr four_point(GroupPtr z2) {
  auto space = make_space(z2, 4, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  auto cover = std::make_shared<const Cover>(std::vector<std::string>{"U0", "U1"},
                                             std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2, 3}}, 4);
  return make_simplicial_cover(space, cover, 4);
}

inline std::vector<Scenario> scenarios() {
  auto triv = make_trivial_group();
  auto z2 = make_cyclic(2);
  return {
      {"trivial-gamma point Z2", point_cover(triv), cyclic_coeff(triv, 2, false)},
      {"Z2 on point, Z2 trivial", point_cover(z2), cyclic_coeff(z2, 2, false)},
      {"Z2 on point, Z3 negation", point_cover(z2), cyclic_coeff(z2, 3, true)},
      {"Z2 on point, Z4 negation", point_cover(z2), cyclic_coeff(z2, 4, true)},
      {"circle nerve, Z2", circle(triv), cyclic_coeff(triv, 2, false)},
      {"four-point Z2-set, Z2", four_point(z2), cyclic_coeff(z2, 2, false)},
  };
}

// Central extensions ------------------------------------------------------

/// Z/2 -(x2)-> Z/4 -(mod 2)-> Z/2, optionally with negation on Z/4.
inline CentralExtension bockstein(GroupPtr gamma, bool negate_b = false) {
  auto a = cyclic_coeff(gamma, 2, false);
  auto b = cyclic_coeff(gamma, 4, negate_b);
  auto c = cyclic_coeff(gamma, 2, false);
  return make_central_extension(negate_b ? "bockstein-neg" : "bockstein", a, b, c, {0, 2},
                                {0, 1, 0, 1});
}

/// Z/2 -> Z/2 x Z/2 -> Z/2, alpha into the second factor, beta the first
/// projection.
inline CentralExtension split(GroupPtr gamma) {
  auto a = cyclic_coeff(gamma, 2, false);
  auto z2 = make_cyclic(2);
  auto prod = make_direct_product(*z2, *z2);
  auto b = make_gamma_group("Z2xZ2", prod, trivial_action(gamma, prod));
  auto c = cyclic_coeff(gamma, 2, false);
  return make_central_extension("split", a, b, c, {0, 1}, {0, 0, 1, 1});
}

/// Z/2 -> D8 = Z/2 |x Z/4 -> Z/2 x Z/2, with (t, g) -> (t, g mod 2). When
/// conjugate is set, Gamma acts on D8 by conjugation with (1, 0).
inline CentralExtension dihedral(GroupPtr gamma, bool conjugate = false) {
  auto z2 = make_cyclic(2);
  auto z4 = make_cyclic(4);
  auto d8 = semidirect_product(z2, z4, inversion_action(z2, z4));
  auto a = cyclic_coeff(gamma, 2, false);
  GammaAction bact = trivial_action(gamma, d8);
  if (conjugate) {
    std::vector<Elem> conj(8);
    const Elem t = 4;  // (1, 0)
    for (Elem x = 0; x < 8; ++x) conj[x] = d8->mul(d8->mul(t, x), d8->inv(t));
    bact = cyclic_action(gamma, d8, conj);
  }
  auto b = make_gamma_group(conjugate ? "D8-conj" : "D8", d8, bact);
  auto v4 = make_direct_product(*z2, *z2);
  auto c = make_gamma_group("Z2xZ2", v4, trivial_action(gamma, v4));
  std::vector<Elem> beta(8);
  for (Elem x = 0; x < 8; ++x) beta[x] = (x / 4) * 2 + (x % 4) % 2;
  return make_central_extension(conjugate ? "dihedral-conj" : "dihedral", a, b, c, {0, 2}, beta);
}

/// Cochain on the same cover with coefficients swapped (values must fit).
inline Cochain with_values(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t p,
                           std::vector<Elem> values) {
  return Cochain(std::move(cover), std::move(coeff), p, std::move(values));
}

}  // namespace suite
