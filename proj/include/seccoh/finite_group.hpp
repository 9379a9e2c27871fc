// Finite groups given by multiplication tables, homomorphisms, actions by
// automorphisms, abelian presentations and central extension data.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seccoh {

/// Index of a group element inside its multiplication table.
using Elem = std::uint32_t;

/// A list of violated conditions. Empty means the object is valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string msg) { violations.push_back(std::move(msg)); }
  void merge(const ValidationReport& other, const std::string& prefix = {});
  std::string summary() const;
};

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Axiom checks are exhaustive up to `exhaustive_bound` elements. Larger groups
/// get `samples` random associativity triples from a fixed seed.
struct AxiomCheckLimits {
  std::size_t exhaustive_bound = 256;
  std::size_t samples = 200000;
};

class FiniteGroup {
 public:
  /// `table` is row-major n x n: table[a*n+b] = a*b. Throws GroupError if the
  /// table is not a group.
  FiniteGroup(std::size_t n, std::vector<Elem> table,
              std::vector<std::string> labels = {},
              AxiomCheckLimits limits = {});

  std::size_t order() const { return n_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  std::size_t element_order(Elem a) const;
  bool is_abelian() const { return abelian_; }
  /// Least common multiple of element orders.
  std::size_t exponent() const;
  const std::vector<Elem>& table() const { return table_; }
  std::string label(Elem a) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Exhaustive (or sampled) check of the group axioms for a raw table.
  static ValidationReport check_table(std::size_t n, const std::vector<Elem>& table,
                                      AxiomCheckLimits limits = {});

 private:
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
  Elem identity_ = 0;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Z/n under addition, identity 0.
GroupPtr make_cyclic(std::size_t n);
GroupPtr make_direct_product(const FiniteGroup& g, const FiniteGroup& h);
GroupPtr make_trivial_group();

class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Elem operator()(Elem g) const { return images_[g]; }
  const std::vector<Elem>& images() const { return images_; }

  ValidationReport check() const;
  bool injective() const;
  bool surjective() const;
  /// Elements mapping to the identity.
  std::vector<Elem> kernel() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

GroupHom identity_hom(const GroupPtr& g);

/// Action of Gamma on a group G by permutations of G's elements.
/// perms[gamma][g] is theta_gamma(g).
class GammaAction {
 public:
  GammaAction(GroupPtr gamma, GroupPtr target, std::vector<std::vector<Elem>> perms);

  const GroupPtr& gamma() const { return gamma_; }
  const GroupPtr& target() const { return target_; }
  Elem apply(Elem gamma, Elem g) const { return perms_[gamma][g]; }
  const std::vector<Elem>& automorphism(Elem gamma) const { return perms_[gamma]; }
  const std::vector<std::vector<Elem>>& perms() const { return perms_; }
  bool is_trivial() const;

 private:
  GroupPtr gamma_;
  GroupPtr target_;
  std::vector<std::vector<Elem>> perms_;
};

GammaAction trivial_action(const GroupPtr& gamma, const GroupPtr& g);
/// For cyclic Gamma = Z/n: theta_k = (image of the generator)^k. Throws if
/// the generator image does not have order dividing n.
GammaAction cyclic_action(const GroupPtr& gamma, const GroupPtr& g,
                          const std::vector<Elem>& generator_image);
/// g -> g^{-1} raised to the power gamma, for cyclic Gamma. Only an
/// automorphism when G is abelian; check_gamma_group reports otherwise.
GammaAction inversion_action(const GroupPtr& gamma, const GroupPtr& g);

/// Reports non-automorphisms, failure of gamma -> theta_gamma to be a
/// homomorphism, and theta_1 != id. Throws GroupError on dimension mismatch.
ValidationReport check_gamma_group(const FiniteGroup& gamma, const FiniteGroup& g,
                                   const GammaAction& theta);

/// A coefficient object (G, theta).
struct FiniteGammaGroup {
  std::string name;
  GroupPtr group;
  GammaAction action;

  const FiniteGroup& g() const { return *group; }
  const FiniteGroup& gamma() const { return *action.gamma(); }
  Elem act(Elem gamma, Elem x) const { return action.apply(gamma, x); }
};

using GammaGroupPtr = std::shared_ptr<const FiniteGammaGroup>;

/// Validates and wraps. Throws GroupError with the report on failure.
GammaGroupPtr make_gamma_group(std::string name, GroupPtr group, GammaAction action);

/// Outer semidirect product on pairs (gamma, g), index gamma*|G| + g, with
/// (g1, h1)(g2, h2) = (g1 g2, h1 theta_{g1}(h2)).
GroupPtr semidirect_product(const GroupPtr& gamma, const GroupPtr& g, const GammaAction& theta);

/// phi(theta_gamma x) = vartheta_gamma(phi(x)) for every gamma and x.
ValidationReport check_equivariant(const GroupHom& hom, const FiniteGammaGroup& source,
                                   const FiniteGammaGroup& target);

/// Coordinates G -> (+) Z/n_i with n_1 | n_2 | ... and every n_i > 1.
class AbelianPresentation {
 public:
  /// Throws GroupError("coefficients must be abelian") for non-abelian input.
  explicit AbelianPresentation(const FiniteGroup& g);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  const std::vector<std::int64_t>& encode(Elem g) const { return coords_[g]; }
  Elem decode(const std::vector<std::int64_t>& coords) const;
  /// Element with coordinate vector e_i.
  Elem basis(std::size_t i) const { return basis_[i]; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<Elem> basis_;
  std::vector<std::vector<std::int64_t>> coords_;
  const FiniteGroup* group_;
  std::vector<Elem> decode_table_;  // mixed-radix index -> element
};

/// One chosen preimage per element of C.
using Section = std::vector<Elem>;

/// Least-index preimage, except that the identity always maps to the identity.
/// Throws GroupError if beta is not surjective.
Section section_of(const GroupHom& beta);

struct CentralExtension {
  std::string name;
  GammaGroupPtr a;
  GammaGroupPtr b;
  GammaGroupPtr c;
  GroupHom alpha;
  GroupHom beta;
  Section section;

  /// alpha^{-1} on the image of alpha.
  Elem alpha_preimage(Elem b_elem) const;
  bool is_abelian() const;
};

ValidationReport check_central_extension(const CentralExtension& ext);

/// Builds, fills the canonical section and validates. Throws GroupError.
CentralExtension make_central_extension(std::string name, GammaGroupPtr a, GammaGroupPtr b,
                                        GammaGroupPtr c, std::vector<Elem> alpha,
                                        std::vector<Elem> beta);

}  // namespace seccoh
