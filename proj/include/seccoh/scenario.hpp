// JSON scenario files: Gamma, coefficient Gamma-groups, a finite Gamma-set
// with a cover, and optional cocycles, central extensions and refinements.
// Every object is validated eagerly; unknown keys are errors.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seccoh/cochain.hpp"
#include "seccoh/finite_group.hpp"
#include "seccoh/gamma_space.hpp"

namespace seccoh {

/// Input error. The message starts with the JSON path of the offending field.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kScenarioSchema = 1;

struct NamedRefinement {
  std::string name;
  SimplicialCoverPtr fine;
  std::vector<std::shared_ptr<const Refinement>> maps;
};

struct Scenario {
  std::string name;
  std::string digest;  // FNV-1a of the compact JSON text, hex
  GroupPtr gamma;
  std::shared_ptr<const GammaSpace> space;
  std::shared_ptr<const Cover> cover;
  SimplicialCoverPtr simplicial;
  std::vector<std::pair<std::string, GammaGroupPtr>> coefficients;  // file order
  std::vector<CentralExtension> extensions;
  std::vector<std::pair<std::string, Cochain>> cocycles;
  std::vector<NamedRefinement> refinements;

  /// Lookups throw ScenarioError naming the missing entry.
  GammaGroupPtr coefficient(const std::string& name) const;
  std::string coefficient_name(const GammaGroupPtr& g) const;
  const CentralExtension& extension(const std::string& name) const;
  const Cochain& cocycle(const std::string& name) const;
};

Scenario parse_scenario_text(const std::string& text);
/// Throws ScenarioError if the file cannot be read or fails validation.
Scenario load_scenario(const std::string& path);

/// Sparse description of a cochain: one entry per census position whose
/// value is not the identity, in census order.
struct CochainEntry {
  std::vector<std::string> index;
  std::vector<Elem> gammas;
  std::string point;
  Elem value;
};
std::vector<CochainEntry> sparse_entries(const Cochain& phi);

}  // namespace seccoh
