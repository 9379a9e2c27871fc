// Cochains on the simplicial cover with values in a Gamma-group, the twisted
// pullbacks between degrees, and the abelian coboundary.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seccoh/finite_group.hpp"
#include "seccoh/gamma_space.hpp"

namespace seccoh {

class CochainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense value table over the degree-p census: values()[pos] is the value at
/// (index_at(pos), point_at(pos)).
class Cochain {
 public:
  Cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
          std::vector<Elem> values);
  static Cochain identity(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const SimplicialCoverPtr& cover() const { return cover_; }
  const GammaGroupPtr& coeff() const { return coeff_; }
  const DegreeCensus& census() const { return cover_->cells(degree_); }
  std::size_t size() const { return values_.size(); }

  Elem operator[](std::size_t pos) const { return values_[pos]; }
  Elem& operator[](std::size_t pos) { return values_[pos]; }
  const std::vector<Elem>& values() const { return values_; }
  /// Throws CochainError if x is not a point of U_a.
  Elem value_at(const MultiIndex& a, const SimplexPoint& x) const;
  bool is_identity() const;

  friend bool operator==(const Cochain& l, const Cochain& r) {
    return l.cover_ == r.cover_ && l.coeff_ == r.coeff_ && l.degree_ == r.degree_ &&
           l.values_ == r.values_;
  }

 private:
  SimplicialCoverPtr cover_;
  GammaGroupPtr coeff_;
  std::size_t degree_;
  std::vector<Elem> values_;
};

/// delta_i phi for 0 <= i <= p+1.
Cochain twisted_pullback(std::size_t i, const Cochain& phi);
/// Alternating sum of the p+2 twisted pullbacks. Abelian coefficients only.
Cochain coboundary(const Cochain& phi);

Cochain compose(const Cochain& left, const Cochain& right);
Cochain invert(const Cochain& phi);
/// left * right^{-1}; in additive notation left - right.
Cochain difference(const Cochain& left, const Cochain& right);
Cochain power(const Cochain& phi, std::int64_t k);

/// phi over ref.coarse() restricted along the refining map to ref.fine().
Cochain restrict_cochain(const Cochain& phi, const Refinement& ref);

/// Pointwise hom. Throws CochainError unless hom is Gamma-equivariant from
/// phi's coefficients to target.
Cochain map_coefficients(const GroupHom& hom, const Cochain& phi, GammaGroupPtr target);

/// Refinement homotopy h^p for two refining maps onto the same fine cover:
/// (h phi)_{b} = sum_k (-1)^k phi_{(r b_0..r b_k, s b_k..s b_{p-1})} o e_k.
/// Satisfies s_* phi - r_* phi = h(delta phi) + delta(h phi).
Cochain homotopy(const Cochain& phi, const Refinement& r, const Refinement& s);

/// Uniform values drawn as rng() % |G| in census order (std::mt19937_64).
Cochain random_cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
                       std::mt19937_64& rng);
Cochain random_cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
                       std::uint64_t seed);

/// Pointwise s o phi for a C-valued cochain, landing in B.
Cochain lift_pointwise(const Cochain& phi, const CentralExtension& ext, const Section& section);
/// Pointwise alpha^{-1} of a B-valued cochain with values in alpha(A).
/// Throws CochainError if some value is outside the image.
Cochain pullback_alpha(const Cochain& nu, const CentralExtension& ext);

}  // namespace seccoh
