#include "seccoh/gamma_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace seccoh {

namespace {

constexpr std::size_t kMissing = std::numeric_limits<std::size_t>::max();

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint32_t>::max())
      throw std::length_error("simplicial cover too large for the configured degree bound");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t index_code(const MultiIndex& a, std::size_t labels) {
  std::uint64_t c = 0;
  for (std::size_t l : a.labels) c = c * labels + l;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

GammaSpace::GammaSpace(GroupPtr gamma, std::size_t points,
                       std::vector<std::vector<std::size_t>> action,
                       std::vector<std::string> labels,
                       std::vector<std::pair<std::size_t, std::size_t>> edges)
    : gamma_(std::move(gamma)),
      points_(points),
      action_(std::move(action)),
      labels_(std::move(labels)),
      edges_(std::move(edges)),
      neighbors_(points_) {
  if (points_ == 0) throw std::invalid_argument("Gamma-space needs at least one point");
  if (action_.size() != gamma_->order())
    throw std::invalid_argument("space action must list one permutation per element of Gamma");
  for (const auto& p : action_) {
    if (p.size() != points_) throw std::invalid_argument("space action permutation has wrong length");
    for (std::size_t v : p)
      if (v >= points_) throw std::invalid_argument("space action image out of range");
  }
  if (!labels_.empty() && labels_.size() != points_)
    throw std::invalid_argument("point label count does not match point count");
  for (auto& [u, v] : edges_) {
    if (u >= points_ || v >= points_) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    if (u == v) continue;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
}

std::string GammaSpace::label(std::size_t x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

ValidationReport GammaSpace::check() const {
  ValidationReport rep;
  const FiniteGroup& g = *gamma_;
  for (std::size_t x = 0; x < points_; ++x)
    if (act(g.identity(), x) != x) {
      rep.add("sigma_1 is not the identity");
      break;
    }
  for (Elem c = 0; c < g.order(); ++c) {
    std::vector<bool> seen(points_, false);
    for (std::size_t v : action_[c]) seen[v] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      rep.add("sigma_" + g.label(c) + " is not a permutation");
  }
  for (Elem c1 = 0; c1 < g.order(); ++c1)
    for (Elem c2 = 0; c2 < g.order(); ++c2)
      for (std::size_t x = 0; x < points_; ++x)
        if (act(g.mul(c1, c2), x) != act(c1, act(c2, x))) {
          rep.add("sigma is not a group action at (" + g.label(c1) + "," + g.label(c2) + ")");
          return rep;
        }
  for (Elem c = 0; c < g.order(); ++c)
    for (auto [u, v] : edges_) {
      std::pair<std::size_t, std::size_t> img{act(c, u), act(c, v)};
      if (img.first > img.second) std::swap(img.first, img.second);
      if (!std::binary_search(edges_.begin(), edges_.end(), img)) {
        rep.add("sigma_" + g.label(c) + " does not preserve the edge " + label(u) + "-" + label(v));
        return rep;
      }
    }
  return rep;
}

GammaSpace trivial_space_action(GroupPtr gamma, std::size_t points) {
  std::vector<std::size_t> id(points);
  std::iota(id.begin(), id.end(), std::size_t{0});
  const std::size_t n = gamma->order();
  return GammaSpace(std::move(gamma), points, std::vector<std::vector<std::size_t>>(n, id));
}

// ---------------------------------------------------------------------------

Cover::Cover(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> sets,
             std::size_t points)
    : labels_(std::move(labels)), sets_(std::move(sets)), points_(points), member_() {
  if (labels_.size() != sets_.size()) throw std::invalid_argument("cover label count mismatch");
  if (labels_.empty()) throw std::invalid_argument("cover must have at least one set");
  member_.assign(labels_.size() * points_, false);
  for (std::size_t a = 0; a < sets_.size(); ++a) {
    if (sets_[a].empty()) throw std::invalid_argument("cover set '" + labels_[a] + "' is empty");
    std::sort(sets_[a].begin(), sets_[a].end());
    sets_[a].erase(std::unique(sets_[a].begin(), sets_[a].end()), sets_[a].end());
    for (std::size_t x : sets_[a]) {
      if (x >= points_)
        throw std::invalid_argument("cover set '" + labels_[a] + "' names point " +
                                    std::to_string(x) + " outside X");
      member_[a * points_ + x] = true;
    }
  }
  for (std::size_t x = 0; x < points_; ++x) {
    bool covered = false;
    for (std::size_t a = 0; a < sets_.size() && !covered; ++a) covered = contains(a, x);
    if (!covered) throw std::invalid_argument("cover does not cover point " + std::to_string(x));
  }
  for (std::size_t a = 0; a < labels_.size(); ++a)
    for (std::size_t b = a + 1; b < labels_.size(); ++b)
      if (labels_[a] == labels_[b]) throw std::invalid_argument("duplicate cover label " + labels_[a]);
}

std::optional<std::size_t> Cover::find(const std::string& label) const {
  for (std::size_t a = 0; a < labels_.size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string to_string(const SimplexPoint& x, const GammaSpace& space) {
  std::ostringstream os;
  os << "(";
  for (Elem g : x.gammas) os << space.gamma_group().label(g) << ",";
  os << space.label(x.base) << ")";
  return os.str();
}

std::string to_string(const MultiIndex& a, const Cover& cover) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.labels.size(); ++i) os << (i ? "," : "") << cover.label(a.labels[i]);
  os << ")";
  return os.str();
}

SimplexPoint face_point(std::size_t i, const SimplexPoint& x, const GammaSpace& space) {
  const std::size_t p = x.degree();
  if (p == 0 || i > p) throw SimplicialIndexError("face map index out of range");
  SimplexPoint y;
  y.base = x.base;
  if (i == 0) {
    y.gammas.assign(x.gammas.begin() + 1, x.gammas.end());
  } else if (i < p) {
    y.gammas = x.gammas;
    y.gammas[i - 1] = space.gamma_group().mul(x.gammas[i - 1], x.gammas[i]);
    y.gammas.erase(y.gammas.begin() + static_cast<std::ptrdiff_t>(i));
  } else {
    y.gammas.assign(x.gammas.begin(), x.gammas.end() - 1);
    y.base = space.act(x.gammas[p - 1], x.base);
  }
  return y;
}

SimplexPoint degeneracy_point(std::size_t i, const SimplexPoint& x, const FiniteGroup& gamma) {
  if (i > x.degree()) throw SimplicialIndexError("degeneracy map index out of range");
  SimplexPoint y = x;
  y.gammas.insert(y.gammas.begin() + static_cast<std::ptrdiff_t>(i), gamma.identity());
  return y;
}

Elem twist_element(std::size_t i, const SimplexPoint& x, const FiniteGroup& gamma) {
  if (i > x.degree()) throw SimplicialIndexError("twist index out of range");
  return (i == 0 && x.degree() > 0) ? x.gammas[0] : gamma.identity();
}

const std::vector<Elem>& twist(std::size_t i, const SimplexPoint& x, const GammaAction& theta) {
  return theta.automorphism(twist_element(i, x, *theta.gamma()));
}

std::size_t point_sequence(const SimplexPoint& x, std::size_t i, const GammaSpace& space) {
  const std::size_t p = x.degree();
  if (i > p) throw SimplicialIndexError("point sequence index out of range");
  std::size_t pt = x.base;
  for (std::size_t k = p; k > i; --k) pt = space.act(x.gammas[k - 1], pt);
  return pt;
}

bool member(const SimplexPoint& x, const MultiIndex& a, const GammaSpace& space,
            const Cover& cover) {
  if (a.labels.size() != x.degree() + 1) throw SimplicialIndexError("degree mismatch in member");
  std::size_t pt = x.base;
  const std::size_t p = x.degree();
  for (std::size_t k = p + 1; k-- > 0;) {
    if (k < p) pt = space.act(x.gammas[k], pt);
    if (!cover.contains(a.labels[k], pt)) return false;
  }
  return true;
}

MultiIndex face_index(std::size_t i, const MultiIndex& a) {
  if (a.labels.size() < 2 || i >= a.labels.size())
    throw SimplicialIndexError("index face map out of range");
  MultiIndex b = a;
  b.labels.erase(b.labels.begin() + static_cast<std::ptrdiff_t>(i));
  return b;
}

MultiIndex degeneracy_index(std::size_t i, const MultiIndex& a) {
  if (i >= a.labels.size()) throw SimplicialIndexError("index degeneracy map out of range");
  MultiIndex b = a;
  b.labels.insert(b.labels.begin() + static_cast<std::ptrdiff_t>(i), a.labels[i]);
  return b;
}

std::vector<SimplexPoint> all_points(const GammaSpace& space, std::size_t p) {
  const std::size_t ng = space.gamma_group().order(), m = space.points();
  const std::uint64_t total = checked_power(ng, p) * m;
  std::vector<SimplexPoint> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    SimplexPoint x;
    x.gammas.resize(p);
    std::uint64_t c = code;
    x.base = c % m;
    c /= m;
    for (std::size_t k = p; k-- > 0;) {
      x.gammas[k] = Elem(c % ng);
      c /= ng;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<MultiIndex> all_indices(std::size_t labels, std::size_t p) {
  const std::uint64_t total = checked_power(labels, p + 1);
  std::vector<MultiIndex> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    MultiIndex a;
    a.labels.resize(p + 1);
    std::uint64_t c = code;
    for (std::size_t k = p + 1; k-- > 0;) {
      a.labels[k] = c % labels;
      c /= labels;
    }
    out.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> DegreeCensus::key(const MultiIndex& a, const SimplexPoint& x) const {
  if (a.labels.size() != degree_ + 1 || x.degree() != degree_) return std::nullopt;
  std::uint64_t ic = 0;
  for (std::size_t l : a.labels) {
    if (l >= label_radix_) return std::nullopt;
    ic = ic * label_radix_ + l;
  }
  std::uint64_t pc = 0;
  for (Elem g : x.gammas) {
    if (g >= gamma_radix_) return std::nullopt;
    pc = pc * gamma_radix_ + g;
  }
  if (x.base >= space_points_) return std::nullopt;
  pc = pc * space_points_ + x.base;
  return ic * point_count_ + pc;
}

std::optional<std::size_t> DegreeCensus::position(const MultiIndex& a, const SimplexPoint& x) const {
  auto k = key(a, x);
  if (!k) return std::nullopt;
  auto it = lookup_.find(*k);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SimplicialCover::SimplicialCover(std::shared_ptr<const GammaSpace> space,
                                 std::shared_ptr<const Cover> cover, std::size_t max_degree)
    : space_(std::move(space)), cover_(std::move(cover)), max_degree_(max_degree) {
  if (cover_->points() != space_->points())
    throw std::invalid_argument("cover and Gamma-space have different point counts");
  const std::size_t nl = cover_->size(), ng = gamma().order(), m = space_->points();
  census_.resize(max_degree_ + 1);
  faces_.resize(max_degree_ + 1);
  for (std::size_t p = 0; p <= max_degree_; ++p) {
    DegreeCensus& dc = census_[p];
    dc.degree_ = p;
    dc.label_radix_ = nl;
    dc.gamma_radix_ = ng;
    dc.space_points_ = m;
    dc.point_count_ = checked_power(ng, p) * m;
    dc.total_indices_ = checked_power(nl, p + 1);
    // (index code, point code) for every point of every nonempty U_{a^p}.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    std::vector<SimplexPoint> pts = all_points(*space_, p);
    std::vector<std::size_t> seq(p + 1);
    for (std::uint64_t pc = 0; pc < pts.size(); ++pc) {
      for (std::size_t i = 0; i <= p; ++i) seq[i] = point_sequence(pts[pc], i, *space_);
      // Enumerate all index tuples with a_i containing seq[i].
      std::vector<std::vector<std::size_t>> choices(p + 1);
      bool any = true;
      for (std::size_t i = 0; i <= p && any; ++i) {
        for (std::size_t a = 0; a < nl; ++a)
          if (cover_->contains(a, seq[i])) choices[i].push_back(a);
        any = !choices[i].empty();
      }
      if (!any) continue;
      std::vector<std::size_t> digit(p + 1, 0);
      for (;;) {
        std::uint64_t ic = 0;
        for (std::size_t i = 0; i <= p; ++i) ic = ic * nl + choices[i][digit[i]];
        entries.emplace_back(ic, pc);
        std::size_t k = p + 1;
        while (k-- > 0) {
          if (++digit[k] < choices[k].size()) break;
          digit[k] = 0;
        }
        if (k == std::numeric_limits<std::size_t>::max()) break;
      }
    }
    std::sort(entries.begin(), entries.end());
    dc.point_pairs_ = entries.size();
    // Group by cell, then split each cell into components: points with the
    // same Gamma-prefix whose bases are joined by edges inside the slice.
    std::vector<std::size_t> parent(m), rank(m);
    std::vector<char> in_slice(m, 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t lo = 0; lo < entries.size();) {
      const std::uint64_t ic = entries[lo].first;
      std::size_t hi = lo;
      while (hi < entries.size() && entries[hi].first == ic) ++hi;
      Cell cell;
      cell.index.labels.resize(p + 1);
      std::uint64_t c = ic;
      for (std::size_t k = p + 1; k-- > 0;) {
        cell.index.labels[k] = c % nl;
        c /= nl;
      }
      cell.offset = dc.points_.size();
      const std::size_t cell_id = dc.cells_.size();
      // Slices share the prefix pc / m and are contiguous since bases vary fastest.
      for (std::size_t s0 = lo; s0 < hi;) {
        const std::uint64_t prefix = entries[s0].second / m;
        std::size_t s1 = s0;
        while (s1 < hi && entries[s1].second / m == prefix) ++s1;
        for (std::size_t e = s0; e < s1; ++e) {
          const std::size_t x = entries[e].second % m;
          parent[x] = x;
          rank[x] = 0;
          in_slice[x] = 1;
        }
        for (std::size_t e = s0; e < s1; ++e) {
          const std::size_t x = entries[e].second % m;
          for (std::size_t y : space_->neighbors(x)) {
            if (!in_slice[y]) continue;
            std::size_t rx = find(x), ry = find(y);
            if (rx == ry) continue;
            if (rank[rx] < rank[ry]) std::swap(rx, ry);
            parent[ry] = rx;
            if (rank[rx] == rank[ry]) ++rank[rx];
          }
        }
        // Components in order of their least point.
        std::vector<std::size_t> root_pos(m, kMissing);
        for (std::size_t e = s0; e < s1; ++e) {
          const std::uint64_t pc = entries[e].second;
          const std::size_t root = find(pc % m);
          if (root_pos[root] == kMissing) {
            root_pos[root] = dc.points_.size();
            dc.points_.push_back(pts[pc]);
            dc.components_.emplace_back();
            dc.cell_of_.push_back(cell_id);
          }
          const std::size_t pos = root_pos[root];
          dc.components_[pos].push_back(pts[pc]);
          dc.lookup_.emplace(ic * dc.point_count_ + pc, pos);
          cell.points.push_back(pts[pc]);
        }
        for (std::size_t e = s0; e < s1; ++e) in_slice[entries[e].second % m] = 0;
        s0 = s1;
      }
      cell.positions = dc.points_.size() - cell.offset;
      dc.cells_.push_back(std::move(cell));
      lo = hi;
    }
    dc.positions_ = dc.points_.size();
    dc.empty_indices_ = dc.total_indices_ - dc.cells_.size();

    if (p == 0) continue;
    const DegreeCensus& lower = census_[p - 1];
    auto& f = faces_[p];
    f.assign(dc.positions_ * (p + 1), kMissing);
    for (std::size_t pos = 0; pos < dc.positions_; ++pos) {
      const MultiIndex& a = dc.index_at(pos);
      const SimplexPoint& x = dc.point_at(pos);
      for (std::size_t i = 0; i <= p; ++i) {
        auto q = lower.position(face_index(i, a), face_point(i, x, *space_));
        if (q) f[pos * (p + 1) + i] = *q;
      }
    }
  }
}

const DegreeCensus& SimplicialCover::cells(std::size_t p) const {
  if (p > max_degree_)
    throw SimplicialIndexError("degree " + std::to_string(p) + " exceeds the degree bound " +
                               std::to_string(max_degree_));
  return census_[p];
}

std::size_t SimplicialCover::face(std::size_t p, std::size_t pos, std::size_t i) const {
  if (p == 0 || p > max_degree_ || i > p) throw SimplicialIndexError("face out of range");
  std::size_t q = faces_[p][pos * (p + 1) + i];
  if (q == kMissing)
    throw std::logic_error("face of " + to_string(census_[p].index_at(pos), *cover_) +
                           " leaves the simplicial cover (d_i(U_a) not inside U_{d_i a})");
  return q;
}

Elem SimplicialCover::twist_at(std::size_t p, std::size_t pos, std::size_t i) const {
  return twist_element(i, cells(p).point_at(pos), gamma());
}

SimplicialCoverPtr make_simplicial_cover(std::shared_ptr<const GammaSpace> space,
                                         std::shared_ptr<const Cover> cover, std::size_t max_degree) {
  return std::make_shared<const SimplicialCover>(std::move(space), std::move(cover), max_degree);
}

// ---------------------------------------------------------------------------

Refinement::Refinement(SimplicialCoverPtr coarse, SimplicialCoverPtr fine,
                       std::vector<std::size_t> map, std::string name)
    : coarse_(std::move(coarse)), fine_(std::move(fine)), map_(std::move(map)), name_(std::move(name)) {
  if (coarse_->space_ptr() != fine_->space_ptr())
    throw std::invalid_argument("refinement covers must live on the same Gamma-space");
  const Cover& u = coarse_->cover();
  const Cover& v = fine_->cover();
  if (map_.size() != v.size()) throw std::invalid_argument("refining map needs one entry per set of V");
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (map_[b] >= u.size()) throw std::invalid_argument("refining map target out of range");
    for (std::size_t x : v.set(b))
      if (!u.contains(map_[b], x))
        throw std::invalid_argument("refining map: V_" + v.label(b) + " is not inside U_" +
                                    u.label(map_[b]));
  }
  if (fine_->max_degree() > coarse_->max_degree())
    throw std::invalid_argument("refined cover has a larger degree bound than the coarse one");
}

MultiIndex Refinement::apply(const MultiIndex& b) const {
  MultiIndex a = b;
  for (auto& l : a.labels) l = map_[l];
  return a;
}

std::vector<std::size_t> Refinement::induced(std::size_t p) const {
  const DegreeCensus& fine = fine_->cells(p);
  const DegreeCensus& coarse = coarse_->cells(p);
  std::vector<std::size_t> out(fine.size());
  for (std::size_t pos = 0; pos < fine.size(); ++pos) {
    auto q = coarse.position(apply(fine.index_at(pos)), fine.point_at(pos));
    if (!q)
      throw std::invalid_argument("induced refinement: V_" +
                                  to_string(fine.index_at(pos), fine_->cover()) +
                                  " not contained in U_" +
                                  to_string(apply(fine.index_at(pos)), coarse_->cover()));
    out[pos] = *q;
  }
  return out;
}

// ---------------------------------------------------------------------------

IdentityReport verify_simplicial_identities(const GammaSpace& space, const Cover& cover,
                                            std::size_t pmax) {
  IdentityReport rep;
  const FiniteGroup& g = space.gamma_group();
  auto fail = [&](const std::string& what, const std::string& at) {
    if (rep.counterexamples.size() < 64) rep.counterexamples.push_back(what + " at " + at);
  };
  for (std::size_t p = 0; p <= pmax; ++p) {
    for (const SimplexPoint& x : all_points(space, p)) {
      const std::string at = to_string(x, space);
      if (p >= 2)
        for (std::size_t j = 1; j <= p; ++j)
          for (std::size_t i = 0; i < j; ++i) {
            ++rep.checked;
            if (face_point(i, face_point(j, x, space), space) !=
                face_point(j - 1, face_point(i, x, space), space))
              fail("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                       std::to_string(j - 1) + " d_" + std::to_string(i),
                   at);
          }
      for (std::size_t j = 0; j <= p; ++j) {
        const SimplexPoint ej = degeneracy_point(j, x, g);
        for (std::size_t i = 0; i <= j; ++i) {
          ++rep.checked;
          if (degeneracy_point(i, ej, g) != degeneracy_point(j + 1, degeneracy_point(i, x, g), g))
            fail("e_" + std::to_string(i) + " e_" + std::to_string(j) + " != e_" +
                     std::to_string(j + 1) + " e_" + std::to_string(i),
                 at);
        }
        for (std::size_t i = 0; i <= p + 1; ++i) {
          ++rep.checked;
          const SimplexPoint lhs = face_point(i, ej, space);
          SimplexPoint rhs;
          if (i < j)
            rhs = degeneracy_point(j - 1, face_point(i, x, space), g);
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = degeneracy_point(j, face_point(i - 1, x, space), g);
          if (lhs != rhs) fail("d_" + std::to_string(i) + " e_" + std::to_string(j) + " identity", at);
        }
      }
    }
    for (const MultiIndex& a : all_indices(cover.size(), p)) {
      const std::string at = to_string(a, cover);
      if (p >= 1)
        for (std::size_t j = 1; j <= p; ++j)
          for (std::size_t i = 0; i < j; ++i) {
            if (p < 2) break;
            ++rep.checked;
            if (face_index(i, face_index(j, a)) != face_index(j - 1, face_index(i, a)))
              fail("index d_" + std::to_string(i) + " d_" + std::to_string(j), at);
          }
      for (std::size_t j = 0; j <= p; ++j) {
        const MultiIndex ej = degeneracy_index(j, a);
        for (std::size_t i = 0; i <= j; ++i) {
          ++rep.checked;
          if (degeneracy_index(i, ej) != degeneracy_index(j + 1, degeneracy_index(i, a)))
            fail("index e_" + std::to_string(i) + " e_" + std::to_string(j), at);
        }
        for (std::size_t i = 0; i <= p + 1; ++i) {
          ++rep.checked;
          const MultiIndex lhs = face_index(i, ej);
          MultiIndex rhs;
          if (i < j)
            rhs = degeneracy_index(j - 1, face_index(i, a));
          else if (i == j || i == j + 1)
            rhs = a;
          else
            rhs = degeneracy_index(j, face_index(i - 1, a));
          if (lhs != rhs) fail("index d_" + std::to_string(i) + " e_" + std::to_string(j), at);
        }
      }
    }
  }
  return rep;
}

IdentityReport verify_twist_identities(const GammaSpace& space, const GammaAction& theta,
                                       std::size_t pmax) {
  IdentityReport rep;
  const FiniteGroup& g = space.gamma_group();
  const std::size_t n = theta.target()->order();
  auto compose = [&](const std::vector<Elem>& f, const std::vector<Elem>& h) {
    std::vector<Elem> out(n);
    for (Elem v = 0; v < n; ++v) out[v] = f[h[v]];
    return out;
  };
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  for (std::size_t p = 0; p <= pmax; ++p) {
    for (const SimplexPoint& x : all_points(space, p)) {
      const std::string at = to_string(x, space);
      // Double pullbacks land in degree >= 2.
      for (std::size_t j = 1; p >= 2 && j <= p; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          ++rep.checked;
          auto lhs = compose(twist(j, x, theta), twist(i, face_point(j, x, space), theta));
          auto rhs = compose(twist(i, x, theta), twist(j - 1, face_point(i, x, space), theta));
          if (lhs != rhs && rep.counterexamples.size() < 64)
            rep.counterexamples.push_back("twist identity (i=" + std::to_string(i) +
                                          ", j=" + std::to_string(j) + ") at " + at);
        }
      if (p == 0) continue;
      // Degeneracy identities for theta on e_j(x), x of degree p >= 1.
      for (std::size_t j = 0; j <= p; ++j) {
        const SimplexPoint ej = degeneracy_point(j, x, g);
        for (std::size_t i = 0; i <= p + 1; ++i) {
          ++rep.checked;
          const auto& lhs = twist(i, ej, theta);
          const std::vector<Elem>& rhs =
              i < j ? twist(i, x, theta) : (i == j || i == j + 1) ? id : twist(i - 1, x, theta);
          if (lhs != rhs && rep.counterexamples.size() < 64)
            rep.counterexamples.push_back("degenerate twist identity (i=" + std::to_string(i) +
                                          ", j=" + std::to_string(j) + ") at " + at);
        }
      }
    }
  }
  return rep;
}

IdentityReport verify_face_compat(const SimplicialCover& cover, std::size_t pmax) {
  IdentityReport rep;
  auto fail = [&](std::string msg) {
    if (rep.counterexamples.size() < 64) rep.counterexamples.push_back(std::move(msg));
  };
  for (std::size_t p = 1; p <= std::min(pmax, cover.max_degree()); ++p) {
    const DegreeCensus& dc = cover.cells(p);
    const DegreeCensus& lower = cover.cells(p - 1);
    for (std::size_t pos = 0; pos < dc.size(); ++pos) {
      const MultiIndex& a = dc.index_at(pos);
      for (std::size_t i = 0; i <= p; ++i) {
        const MultiIndex da = face_index(i, a);
        std::optional<std::size_t> target;
        for (const SimplexPoint& x : dc.component(pos)) {
          ++rep.checked;
          const SimplexPoint dx = face_point(i, x, cover.space());
          if (!member(dx, da, cover.space(), cover.cover())) {
            fail("d_" + std::to_string(i) + " maps " + to_string(x, cover.space()) + " in U_" +
                 to_string(a, cover.cover()) + " outside U_" + to_string(da, cover.cover()));
            continue;
          }
          auto q = lower.position(da, dx);
          if (!target) target = q;
          if (q != target)
            fail("d_" + std::to_string(i) + " splits the component of " +
                 to_string(dc.point_at(pos), cover.space()) + " in U_" + to_string(a, cover.cover()));
        }
      }
    }
  }
  return rep;
}

}  // namespace seccoh
