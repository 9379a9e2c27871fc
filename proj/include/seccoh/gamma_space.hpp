// Finite Gamma-sets, covers, the simplicial space Gamma^p x X with its face,
// degeneracy and twisting maps, and the simplicial cover indexed by A^p.
//
// Point-sequence convention: for x^p = (g_1, ..., g_p, x) the associated
// sequence is x_i = g_{i+1} ... g_p x, so x_p = x and x_0 = g_1 ... g_p x.
// A point lies in U_{(a_0, ..., a_p)} iff x_i is in U_{a_i} for every i.
// In degree 1 this gives (g, x) in U_{(b, a)} iff x in U_a and g x in U_b.
//
// X may carry an undirected edge list. Cochains are then locally constant:
// one value per connected component of each U_{a^p}, where (g, x) and (g, y)
// are connected when x and y are joined by edges inside the slice. Without
// edges every point is its own component.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seccoh/finite_group.hpp"

namespace seccoh {

class GammaSpace {
 public:
  /// action[gamma][x] is sigma_gamma(x). Only ranges are checked here; call
  /// check() for the action axioms.
  GammaSpace(GroupPtr gamma, std::size_t points, std::vector<std::vector<std::size_t>> action,
             std::vector<std::string> labels = {},
             std::vector<std::pair<std::size_t, std::size_t>> edges = {});

  const GroupPtr& gamma() const { return gamma_; }
  const FiniteGroup& gamma_group() const { return *gamma_; }
  std::size_t points() const { return points_; }
  std::size_t act(Elem gamma, std::size_t x) const { return action_[gamma][x]; }
  const std::vector<std::vector<std::size_t>>& action() const { return action_; }
  std::string label(std::size_t x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return neighbors_[x]; }

  /// Permutation and group-action axioms; every sigma_gamma must also map
  /// edges to edges.
  ValidationReport check() const;

 private:
  GroupPtr gamma_;
  std::size_t points_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

GammaSpace trivial_space_action(GroupPtr gamma, std::size_t points);

class Cover {
 public:
  /// Throws std::invalid_argument for empty sets, out-of-range points or sets
  /// that do not cover X.
  Cover(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> sets,
        std::size_t points);

  std::size_t size() const { return labels_.size(); }
  std::size_t points() const { return points_; }
  bool contains(std::size_t a, std::size_t x) const { return member_[a * points_ + x]; }
  const std::vector<std::size_t>& set(std::size_t a) const { return sets_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> sets_;
  std::size_t points_;
  std::vector<bool> member_;
};

struct SimplexPoint {
  std::vector<Elem> gammas;  // (g_1, ..., g_p)
  std::size_t base = 0;      // x

  std::size_t degree() const { return gammas.size(); }
  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
};

struct MultiIndex {
  std::vector<std::size_t> labels;  // (a_0, ..., a_p)

  std::size_t degree() const { return labels.empty() ? 0 : labels.size() - 1; }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

std::string to_string(const SimplexPoint& x, const GammaSpace& space);
std::string to_string(const MultiIndex& a, const Cover& cover);

class SimplicialIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

SimplexPoint face_point(std::size_t i, const SimplexPoint& x, const GammaSpace& space);
SimplexPoint degeneracy_point(std::size_t i, const SimplexPoint& x, const FiniteGroup& gamma);
/// The Gamma-element whose automorphism twists the i-th pullback: g_1 for
/// i = 0, the identity otherwise.
Elem twist_element(std::size_t i, const SimplexPoint& x, const FiniteGroup& gamma);
/// theta^{x}_i as a permutation of G's elements.
const std::vector<Elem>& twist(std::size_t i, const SimplexPoint& x, const GammaAction& theta);
std::size_t point_sequence(const SimplexPoint& x, std::size_t i, const GammaSpace& space);
bool member(const SimplexPoint& x, const MultiIndex& a, const GammaSpace& space,
            const Cover& cover);

MultiIndex face_index(std::size_t i, const MultiIndex& a);
MultiIndex degeneracy_index(std::size_t i, const MultiIndex& a);

/// One nonempty U_{a^p} with its points in lexicographic order.
struct Cell {
  MultiIndex index;
  std::vector<SimplexPoint> points;
  std::size_t offset = 0;     // first position of this cell
  std::size_t positions = 0;  // number of components
};

/// All nonempty cells of one degree, in lexicographic multi-index order.
/// Positions enumerate (cell, component) pairs, components ordered by their
/// least point, and are the cochain coordinates.
class DegreeCensus {
 public:
  std::size_t degree() const { return degree_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return positions_; }
  /// Multi-indices whose U_{a^p} is empty (skipped, zero coordinates).
  std::size_t empty_indices() const { return empty_indices_; }
  std::size_t total_indices() const { return total_indices_; }
  /// Position of the component of U_a containing x.
  std::optional<std::size_t> position(const MultiIndex& a, const SimplexPoint& x) const;
  const MultiIndex& index_at(std::size_t pos) const { return cells_[cell_of_[pos]].index; }
  /// Least point of the component.
  const SimplexPoint& point_at(std::size_t pos) const { return points_[pos]; }
  const std::vector<SimplexPoint>& component(std::size_t pos) const { return components_[pos]; }
  /// Number of (cell, point) pairs, counting every point of every component.
  std::size_t point_pairs() const { return point_pairs_; }
  std::size_t cell_of(std::size_t pos) const { return cell_of_[pos]; }

 private:
  friend class SimplicialCover;
  std::size_t degree_ = 0;
  std::vector<Cell> cells_;
  std::size_t positions_ = 0;
  std::size_t empty_indices_ = 0;
  std::size_t total_indices_ = 0;
  std::vector<std::size_t> cell_of_;
  std::vector<SimplexPoint> points_;
  std::vector<std::vector<SimplexPoint>> components_;
  std::size_t point_pairs_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::uint64_t label_radix_ = 1;
  std::uint64_t gamma_radix_ = 1;
  std::uint64_t space_points_ = 1;
  std::uint64_t point_count_ = 1;  // |Gamma|^p * |X|
  std::optional<std::uint64_t> key(const MultiIndex& a, const SimplexPoint& x) const;
};

/// The simplicial cover U^p of X^p for p = 0..max_degree, with face tables.
class SimplicialCover {
 public:
  static constexpr std::size_t kDefaultMaxDegree = 4;

  SimplicialCover(std::shared_ptr<const GammaSpace> space, std::shared_ptr<const Cover> cover,
                  std::size_t max_degree = kDefaultMaxDegree);

  const GammaSpace& space() const { return *space_; }
  const std::shared_ptr<const GammaSpace>& space_ptr() const { return space_; }
  const Cover& cover() const { return *cover_; }
  const std::shared_ptr<const Cover>& cover_ptr() const { return cover_; }
  const FiniteGroup& gamma() const { return space_->gamma_group(); }
  std::size_t max_degree() const { return max_degree_; }

  /// Throws SimplicialIndexError beyond max_degree.
  const DegreeCensus& cells(std::size_t p) const;
  /// Position in degree p-1 of the i-th face of position pos in degree p.
  std::size_t face(std::size_t p, std::size_t pos, std::size_t i) const;
  /// The Gamma element twisting the i-th pullback at degree-p position pos.
  Elem twist_at(std::size_t p, std::size_t pos, std::size_t i) const;

 private:
  std::shared_ptr<const GammaSpace> space_;
  std::shared_ptr<const Cover> cover_;
  std::size_t max_degree_;
  std::vector<DegreeCensus> census_;
  std::vector<std::vector<std::size_t>> faces_;  // faces_[p][pos*(p+1)+i]
};

using SimplicialCoverPtr = std::shared_ptr<const SimplicialCover>;

SimplicialCoverPtr make_simplicial_cover(std::shared_ptr<const GammaSpace> space,
                                         std::shared_ptr<const Cover> cover,
                                         std::size_t max_degree = SimplicialCover::kDefaultMaxDegree);

/// A refining map r: B -> A with V_b inside U_{r(b)}.
class Refinement {
 public:
  /// Throws std::invalid_argument if the containment fails or the covers
  /// live on different spaces.
  Refinement(SimplicialCoverPtr coarse, SimplicialCoverPtr fine, std::vector<std::size_t> map,
             std::string name = {});

  const SimplicialCoverPtr& coarse() const { return coarse_; }
  const SimplicialCoverPtr& fine() const { return fine_; }
  std::size_t operator()(std::size_t b) const { return map_[b]; }
  const std::vector<std::size_t>& map() const { return map_; }
  const std::string& name() const { return name_; }
  MultiIndex apply(const MultiIndex& b) const;

  /// For every position of the fine degree-p census, the coarse position of
  /// (r(b^p), x^p). Throws if some point falls outside U_{r(b^p)}.
  std::vector<std::size_t> induced(std::size_t p) const;

 private:
  SimplicialCoverPtr coarse_;
  SimplicialCoverPtr fine_;
  std::vector<std::size_t> map_;
  std::string name_;
};

/// Counterexamples found by an exhaustive identity scan; empty means pass.
struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

IdentityReport verify_simplicial_identities(const GammaSpace& space, const Cover& cover,
                                            std::size_t pmax);
IdentityReport verify_twist_identities(const GammaSpace& space, const GammaAction& theta,
                                       std::size_t pmax);
/// Cover compatibility d_i(U_a) in U_{d_i a} at every point, and that faces
/// of one component land in one component.
IdentityReport verify_face_compat(const SimplicialCover& cover, std::size_t pmax);

/// Every point of Gamma^p x X in lexicographic order.
std::vector<SimplexPoint> all_points(const GammaSpace& space, std::size_t p);
std::vector<MultiIndex> all_indices(std::size_t labels, std::size_t p);

}  // namespace seccoh
