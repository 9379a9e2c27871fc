// Cohomology of the semi-equivariant cochain complex with abelian
// coefficients, as explicit finite abelian groups.
//
// A cochain of degree p is encoded by the coordinates of its values under the
// coefficient group's AbelianPresentation: coordinate pos*k + j is the j-th
// coordinate of the value at census position pos (k = rank). All linear
// algebra happens in (Z/e)^n with e the exponent of G; the projection onto
// (+) Z/m_j is reduction of coordinate j mod m_j.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seccoh/cochain.hpp"
#include "seccoh/modular_linalg.hpp"

namespace seccoh {

class CochainCoordinates {
 public:
  /// Throws CochainError for non-abelian coefficients.
  CochainCoordinates(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return moduli_.size(); }
  /// Exponent of the coefficient group (1 for the trivial group).
  Int modulus() const { return e_; }
  /// Per-coordinate orders m_j.
  const std::vector<Int>& moduli() const { return moduli_; }
  const AbelianPresentation& presentation() const { return pres_; }

  std::vector<Int> encode(const Cochain& phi) const;
  /// Accepts any representative in (Z/e)^n.
  Cochain decode(const std::vector<Int>& v) const;

 private:
  SimplicialCoverPtr cover_;
  GammaGroupPtr coeff_;
  std::size_t degree_;
  AbelianPresentation pres_;
  Int e_;
  std::vector<Int> moduli_;
};

/// An additive map (+) Z/src_j -> (+) Z/tgt_i as an integer matrix mod e.
struct HomPresentation {
  std::vector<Int> source_moduli;
  std::vector<Int> target_moduli;
  ModMatrix matrix;

  /// Applies the matrix and reduces each entry mod its target modulus.
  std::vector<Int> apply(const std::vector<Int>& v) const;
  /// Columns respect source orders: m_src * column == 0 mod target moduli.
  bool well_defined() const;
};

/// Matrix of the coboundary K^p -> K^{p+1}, assembled from the face tables.
HomPresentation linearize_coboundary(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                     std::size_t p);

class CohomologyGroup {
 public:
  /// H^p for p + 1 <= the cover's degree bound. Throws CochainError for
  /// non-abelian coefficients and SimplicialIndexError past the bound.
  CohomologyGroup(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t p);

  std::size_t degree() const { return p_; }
  const SimplicialCoverPtr& cover() const { return cover_; }
  const GammaGroupPtr& coeff() const { return coeff_; }
  /// Invariant factors, each > 1 and dividing the next. Empty for H = 0.
  const std::vector<Int>& factors() const { return quotient_->factors(); }
  /// One cocycle per invariant factor.
  const std::vector<Cochain>& generators() const { return generators_; }
  std::size_t order() const { return quotient_->order(); }

  bool is_cocycle(const Cochain& phi) const;
  /// Factor coordinates of the class of phi. Throws CochainError if phi is
  /// not a cocycle.
  std::vector<Int> class_of(const Cochain& phi) const;
  /// sum_i c_i gen_i.
  Cochain representative(const std::vector<Int>& coords) const;
  /// Every element's coordinates, in mixed-radix order.
  std::vector<std::vector<Int>> elements() const;
  /// Some mu of degree p-1 with delta mu = phi, if phi is a coboundary.
  std::optional<Cochain> primitive(const Cochain& phi) const;

  /// Census sizes of the degree-p cochain group.
  std::size_t cochain_positions() const { return cover_->cells(p_).size(); }
  std::size_t empty_indices() const { return cover_->cells(p_).empty_indices(); }
  /// Invariant factors of the cocycle and coboundary subgroups of K^p.
  std::vector<Int> cocycle_factors() const;
  std::vector<Int> coboundary_factors() const;
  const CochainCoordinates& coordinates() const { return coords_; }

 private:
  SimplicialCoverPtr cover_;
  GammaGroupPtr coeff_;
  std::size_t p_;
  CochainCoordinates coords_;
  HomPresentation delta_;                    // K^p -> K^{p+1}
  std::optional<HomPresentation> delta_prev_;  // K^{p-1} -> K^p
  std::vector<std::vector<Int>> z_gens_;  // lifted to (Z/e)^n, including ker of projection
  std::vector<std::vector<Int>> b_gens_;
  std::optional<ModuleQuotient> quotient_;
  std::optional<SmithForm> prev_smith_;  // scaled delta_prev_, for primitive()
  std::vector<Cochain> generators_;
};

/// The connecting map of the long exact sequence on a p-cocycle with values
/// in C: lift through the section, apply the coboundary, pull back through
/// alpha, reduce in h_next = H^{p+1}(A). All of A, B, C must be abelian.
std::vector<Int> connecting_abelian(const Cochain& phi, const CentralExtension& ext,
                                    const CohomologyGroup& h_next, const Section& section);
std::vector<Int> connecting_abelian(const Cochain& phi, const CentralExtension& ext,
                                    const CohomologyGroup& h_next);

struct ExactnessNode {
  std::string node;  // e.g. "H^1(B)"
  std::size_t image_size = 0;
  std::size_t kernel_size = 0;
  bool ok = false;
};

struct ExactnessReport {
  std::vector<ExactnessNode> nodes;
  bool ok() const;
};

/// im = ker at H^p(A), H^p(B), H^p(C) for p <= pmax, by enumerating the
/// finite groups. Needs H^{pmax+1}(A), hence degree bound >= pmax + 2.
ExactnessReport les_exactness_check(const SimplicialCoverPtr& cover, const CentralExtension& ext,
                                    std::size_t pmax);

struct RefinementActionReport {
  std::size_t generators = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// class_of(r_* gen) == class_of(s_* gen) in H^p of the fine cover, for each
/// generator of H^p of the coarse cover.
RefinementActionReport refinement_action_check(const Refinement& r, const Refinement& s,
                                               const GammaGroupPtr& coeff, std::size_t p);

/// Mixed-radix enumeration of (+) Z/f_i.
std::vector<std::vector<Int>> enumerate_coordinates(const std::vector<Int>& factors);

}  // namespace seccoh
