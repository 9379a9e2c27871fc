// Degree-0 and degree-1 transition cocycles with possibly non-abelian
// coefficients, their equivalence, the connecting maps of a central
// extension, and exhaustive enumeration of the pointed sets TC^0 and TC^1.
//
// Conventions, at a degree-1 point (g, x) of U_(b,a):
//   delta_0 mu = g . mu_a(x),   delta_1 mu = mu_b(g x).
// A 1-cocycle satisfies (delta_1 phi)^-1 (delta_2 phi) (delta_0 phi) = 1, i.e.
//   phi_ca(g' g, x) = phi_cb(g', g x) . g' phi_ba(g, x),
// plus phi_aa(1, x) = 1. An equivalence mu: phi1 ~ phi2 satisfies
//   (delta_1 mu) phi1 = phi2 (delta_0 mu).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "seccoh/abelian_cohomology.hpp"
#include "seccoh/cochain.hpp"

namespace seccoh {

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 20;

struct TcReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// (delta_1 mu)^-1 (delta_0 mu) = 1 at every degree-1 position.
TcReport check_tc0(const Cochain& mu);
bool is_tc0(const Cochain& mu);
/// Normalization plus the degree-2 condition at every degree-2 position.
TcReport check_tc1(const Cochain& phi);
bool is_tc1(const Cochain& phi);

/// Degree-1 positions (a, a) with g = 1, which a cocycle must send to 1.
std::vector<std::size_t> normalized_positions(const SimplicialCover& cover);

/// mu . phi := (delta_1 mu) phi (delta_0 mu)^-1, so that mu: phi ~ mu . phi.
Cochain gauge(const Cochain& mu, const Cochain& phi);
bool is_equivalence(const Cochain& mu, const Cochain& phi1, const Cochain& phi2);

enum class SearchStatus { found, inequivalent, budget_exceeded };
std::string to_string(SearchStatus s);

struct EquivalenceResult {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<Cochain> witness;
  std::uint64_t nodes = 0;
  /// Decided by comparing classes in H^1 rather than by search.
  bool via_cohomology = false;
};

/// Depth-first search over K^0 in lexicographic order; the first witness
/// found is the least one. If the search would exceed `budget` nodes and the
/// coefficients are abelian, H^1 decides instead. Throws CochainError if
/// either input is not a 1-cocycle or they live on different covers.
EquivalenceResult find_equivalence(const Cochain& phi1, const Cochain& phi2,
                                   std::uint64_t budget = kDefaultBudget);

/// nu = (delta_1 eta)^-1 (delta_0 eta) pulled back to A. Throws
/// std::logic_error if beta(nu) != 1 or nu fails the cocycle condition.
Cochain delta0_cocycle(const Cochain& eta, const CentralExtension& ext);
/// Class of delta0_cocycle(section o mu) in h1a = H^1(A). Throws CochainError
/// unless mu is in TC^0(C).
std::vector<Int> delta0(const Cochain& mu, const CentralExtension& ext, const CohomologyGroup& h1a,
                        const Section& section);
std::vector<Int> delta0(const Cochain& mu, const CentralExtension& ext, const CohomologyGroup& h1a);

/// nu = (delta_1 psi)^-1 (delta_2 psi) (delta_0 psi) pulled back to A, after
/// asserting beta(nu) = 1 and the 2-cocycle condition in the order
/// (delta_0 nu)(delta_1 nu)^-1 (delta_2 nu)(delta_3 nu)^-1 = 1. Violations
/// throw std::logic_error.
Cochain delta1_cocycle(const Cochain& psi, const CentralExtension& ext);
/// Class in h2a = H^2(A) for the lift psi of phi. Throws CochainError unless
/// phi is a 1-cocycle and beta o psi = phi.
std::vector<Int> delta1_with_lift(const Cochain& phi, const Cochain& psi, const CentralExtension& ext,
                                  const CohomologyGroup& h2a);
std::vector<Int> delta1(const Cochain& phi, const CentralExtension& ext, const CohomologyGroup& h2a,
                        const Section& section);
std::vector<Int> delta1(const Cochain& phi, const CentralExtension& ext, const CohomologyGroup& h2a);

/// Every degree-0 cocycle, in lexicographic order. Throws BudgetExceeded.
std::vector<Cochain> enumerate_tc0(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                   std::uint64_t budget = kDefaultBudget);

/// All 1-cocycles grouped into equivalence classes.
struct TcClasses {
  std::vector<Cochain> cocycles;         // lexicographic order
  std::vector<std::size_t> class_id;     // per cocycle
  std::vector<std::size_t> representatives;  // least cocycle of each class
  std::size_t class_count() const { return representatives.size(); }
  /// Index of a cocycle in `cocycles`, if it is one.
  std::optional<std::size_t> find(const Cochain& phi) const;
  /// Class of a cocycle; throws CochainError if phi is not a cocycle.
  std::size_t class_of(const Cochain& phi) const;
  std::size_t basepoint() const;

  std::unordered_map<std::string, std::size_t> lookup;
};

/// Enumerates TC^1 and its classes under the action of K^0. Throws
/// BudgetExceeded if the search or the orbit sweep exceeds `budget`.
TcClasses enumerate_tc1(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                        std::uint64_t budget = kDefaultBudget);

/// Least cochain of the form mu . phi over all mu in K^0 that also passes
/// `keep` (all of them if keep is empty). Throws BudgetExceeded if
/// |K^0| > budget.
Cochain least_in_orbit(const Cochain& phi, std::uint64_t budget,
                       const std::function<bool(const Cochain&)>& keep = {});

/// Uniform draw from the exhaustive enumeration of TC^1.
Cochain random_tc1(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff, std::mt19937_64& rng,
                   std::uint64_t budget = kDefaultBudget);

/// Abelian coefficients: classes of TC^1 against H^1, and TC^0 against H^0.
struct TcCohomologyComparison {
  std::size_t tc0_count = 0;
  std::size_t h0_order = 0;
  std::size_t tc1_cocycles = 0;
  std::size_t tc1_classes = 0;
  std::size_t h1_order = 0;
  bool tc0_bijective = false;
  bool tc1_bijective = false;
  bool ok() const { return tc0_bijective && tc1_bijective; }
};
TcCohomologyComparison tc1_h1_compare(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                      std::uint64_t budget = kDefaultBudget);

/// Exactness of
///   H^0(A) -> TC^0(B) -> TC^0(C) -> H^1(A) -> TC^1(B) -> TC^1(C) -> H^2(A)
/// as pointed sets: at each of the six inner nodes the image of the incoming
/// map equals the preimage of the basepoint under the outgoing one. Needs a
/// degree bound of at least 3.
ExactnessReport six_term_exactness(const SimplicialCoverPtr& cover, const CentralExtension& ext,
                                   std::uint64_t budget = kDefaultBudget);

/// Text key of a cochain's values, for hashing.
std::string value_key(const Cochain& phi);

}  // namespace seccoh
