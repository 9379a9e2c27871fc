// Combinatorial semi-equivariant principal bundles built from transition
// cocycles, cocycles read back from local sections, bundle isomorphisms, and
// the classification of liftings through a central extension.
//
// P^phi is the set of triples (a, x, g) with x in U_a, modulo
//   (a, x, g) ~ (b, x, phi_ba(1, x) g),
// with right action [a, x, g] h = [a, x, g h] and Gamma-action
//   gamma [a, x, g] = [b, gamma x, phi_ba(gamma, x) (gamma g)]
// for the least b with gamma x in U_b.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seccoh/nonabelian.hpp"

namespace seccoh {

struct BundleTriple {
  std::size_t patch = 0;
  std::size_t point = 0;
  Elem g = 0;
  friend bool operator==(const BundleTriple&, const BundleTriple&) = default;
};

class CombinatorialBundle {
 public:
  /// Throws CochainError unless phi is a 1-cocycle.
  explicit CombinatorialBundle(Cochain phi);

  const Cochain& cocycle() const { return phi_; }
  const SimplicialCover& cover() const { return *phi_.cover(); }
  const FiniteGammaGroup& structure() const { return *phi_.coeff(); }
  /// Number of points of the total space.
  std::size_t size() const { return reps_.size(); }

  /// Class of (a, x, g). Throws std::out_of_range if x is not in U_a.
  std::size_t class_of(std::size_t patch, std::size_t x, Elem g) const;
  /// Least triple of the class.
  const BundleTriple& representative(std::size_t p) const { return reps_[p]; }
  const std::vector<BundleTriple>& members(std::size_t p) const { return members_[p]; }
  std::size_t project(std::size_t p) const { return reps_[p].point; }
  std::size_t act_right(std::size_t p, Elem g) const { return right_[p * order_ + g]; }
  std::size_t act_gamma(Elem gamma, std::size_t p) const { return gamma_[gamma * reps_.size() + p]; }

  /// Projection equivariance, semi-equivariance gamma(pg) = (gamma p)(gamma g),
  /// free and transitive fibers, the Gamma-action axioms, and the audit that
  /// every admissible patch and member gives the same gamma-translate.
  ValidationReport check() const;
  /// Classes joined when they have representatives (a, x, g), (a, y, g) with
  /// x, y adjacent points of U_a.
  std::size_t connected_components() const;

 private:
  Cochain phi_;
  std::size_t order_;
  std::vector<std::size_t> slot_;  // (patch * |X| + x) -> first triple id, or npos
  std::vector<std::size_t> class_;  // triple id -> class
  std::vector<BundleTriple> reps_;
  std::vector<std::vector<BundleTriple>> members_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> gamma_;
  std::size_t triple_id(std::size_t patch, std::size_t x, Elem g) const;
  std::size_t translate(Elem gamma, const BundleTriple& t, std::size_t patch) const;
};

/// s[a][x] is a point of the total space over x, for x in U_a (entries for
/// other x are ignored).
using SectionFamily = std::vector<std::vector<std::size_t>>;

/// s_a(x) = [a, x, 1].
SectionFamily canonical_sections(const CombinatorialBundle& p);
/// s'_a(x) = s_a(x) mu_a(x) for a degree-0 cochain mu.
SectionFamily perturb_sections(const CombinatorialBundle& p, const SectionFamily& s, const Cochain& mu);
ValidationReport check_sections(const CombinatorialBundle& p, const SectionFamily& s);

/// phi_ba(gamma, x) = the g with gamma s_a(x) = s_b(gamma x) g. Throws
/// CochainError if the sections fail or are not constant on components;
/// throws std::logic_error if the result is not a 1-cocycle.
Cochain cocycle_from_sections(const CombinatorialBundle& p, const SectionFamily& s);

/// A map of total spaces, one image per class of the source.
using BundleMap = std::vector<std::size_t>;

/// Covers the identity of X, F(p g) = F(p) hom(g) and F(gamma p) = gamma F(p).
ValidationReport check_bundle_morphism(const CombinatorialBundle& from, const CombinatorialBundle& to,
                                       const BundleMap& map, const GroupHom& hom);
/// Morphism over the identity hom that is also bijective.
ValidationReport check_bundle_iso(const CombinatorialBundle& from, const CombinatorialBundle& to,
                                  const BundleMap& map);
/// [a, x, g] -> [a, x, mu_a(x) g] for mu: cocycle(from) ~ cocycle(to).
/// Throws std::logic_error if the formula is not well defined on classes.
BundleMap map_from_equivalence(const CombinatorialBundle& from, const CombinatorialBundle& to,
                               const Cochain& mu);
/// [a, x, b] -> [a, x, beta(b)] from a lifted bundle to the one it lifts.
BundleMap map_through(const CombinatorialBundle& lifted, const CombinatorialBundle& base, const GroupHom& beta);

struct BundleIsoResult {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<Cochain> witness;
  std::optional<BundleMap> map;
};
/// Searches for an equivalence of the underlying cocycles and turns it into
/// a verified isomorphism.
BundleIsoResult bundle_iso_check(const CombinatorialBundle& p1, const CombinatorialBundle& p2,
                                 std::uint64_t budget = kDefaultBudget);

struct RoundTripReport {
  std::size_t witnesses = 0;  // constructive witnesses verified
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// phi -> P^phi -> cocycle: canonical sections give phi back exactly, and
/// sections perturbed by mu give a cocycle equivalent to phi through mu.
RoundTripReport roundtrip_check(const Cochain& phi, const Cochain& perturbation);
RoundTripReport roundtrip_check(const Cochain& phi);
/// (P, s) -> phi^s -> P^{phi^s}: [a, x, g] -> s_a(x) g is an isomorphism onto P.
RoundTripReport roundtrip_check(const CombinatorialBundle& p, const SectionFamily& s);

/// DD(P) = Delta^1 of the bundle's cocycle, in H^2(A).
std::vector<Int> dd(const CombinatorialBundle& p, const CentralExtension& ext);
std::vector<Int> dd(const Cochain& phi, const CentralExtension& ext);

struct LiftingClassification {
  std::vector<Int> dd;
  std::vector<Int> h2_factors;
  bool exists = false;
  /// The least lifting in each equivalence class, sorted.
  std::vector<Cochain> representatives;
  std::size_t class_count() const { return representatives.size(); }
  std::size_t h1_order = 0;
  /// False when the classes were separated through H^1(B) because K^0(B)
  /// was too large to canonicalize; representatives are then not minimal.
  bool canonical = true;
};

/// Liftings of phi through beta: psi = (s o phi) alpha(omega) with
/// delta omega = -nu, one per element of H^1(A), merged by equivalence.
LiftingClassification solve_liftings(const Cochain& phi, const CentralExtension& ext,
                                     std::uint64_t budget = kDefaultBudget);

struct BruteForceLiftings {
  std::uint64_t candidates = 0;
  std::vector<Cochain> liftings;  // lexicographic order
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Cochain> representatives;  // least lifting of each class
};

/// Every pointwise lift of phi, filtered to 1-cocycles and grouped by
/// find_equivalence. Throws BudgetExceeded if |A|^N > bound.
BruteForceLiftings enumerate_liftings_bruteforce(const Cochain& phi, const CentralExtension& ext,
                                                 std::uint64_t bound = kDefaultBudget);

}  // namespace seccoh
