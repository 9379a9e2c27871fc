#include "seccoh/cochain.hpp"

#include <string>

namespace seccoh {

namespace {

void require_abelian(const Cochain& phi, const char* op) {
  if (!phi.coeff()->g().is_abelian())
    throw CochainError(std::string(op) +
                       " needs abelian coefficients; use the twisted pullbacks directly");
}

void require_same(const Cochain& l, const Cochain& r) {
  if (l.degree() != r.degree()) throw CochainError("cochain degree mismatch");
  if (l.cover() != r.cover()) throw CochainError("cochains live on different covers");
  if (l.coeff() != r.coeff()) throw CochainError("cochains have different coefficients");
}

}  // namespace

Cochain::Cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
                 std::vector<Elem> values)
    : cover_(std::move(cover)), coeff_(std::move(coeff)), degree_(degree), values_(std::move(values)) {
  if (coeff_->action.gamma()->order() != cover_->gamma().order())
    throw CochainError("coefficient Gamma-group and space use different Gamma");
  if (values_.size() != cover_->cells(degree_).size())
    throw CochainError("cochain value table does not match the degree-" + std::to_string(degree_) +
                       " census");
  const std::size_t n = coeff_->g().order();
  for (Elem v : values_)
    if (v >= n) throw CochainError("cochain value out of range");
}

Cochain Cochain::identity(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree) {
  const std::size_t n = cover->cells(degree).size();
  const Elem one = coeff->g().identity();
  return Cochain(std::move(cover), std::move(coeff), degree, std::vector<Elem>(n, one));
}

Elem Cochain::value_at(const MultiIndex& a, const SimplexPoint& x) const {
  auto pos = census().position(a, x);
  if (!pos)
    throw CochainError("point " + to_string(x, cover_->space()) + " is not in U_" +
                       to_string(a, cover_->cover()));
  return values_[*pos];
}

bool Cochain::is_identity() const {
  const Elem one = coeff_->g().identity();
  for (Elem v : values_)
    if (v != one) return false;
  return true;
}

Cochain twisted_pullback(std::size_t i, const Cochain& phi) {
  const std::size_t p = phi.degree() + 1;
  if (i > p) throw SimplicialIndexError("twisted pullback index out of range");
  const SimplicialCover& sc = *phi.cover();
  const DegreeCensus& dc = sc.cells(p);
  std::vector<Elem> out(dc.size());
  for (std::size_t pos = 0; pos < dc.size(); ++pos)
    out[pos] = phi.coeff()->act(sc.twist_at(p, pos, i), phi[sc.face(p, pos, i)]);
  return Cochain(phi.cover(), phi.coeff(), p, std::move(out));
}

Cochain coboundary(const Cochain& phi) {
  require_abelian(phi, "coboundary");
  const FiniteGroup& g = phi.coeff()->g();
  Cochain acc = Cochain::identity(phi.cover(), phi.coeff(), phi.degree() + 1);
  for (std::size_t i = 0; i <= phi.degree() + 1; ++i) {
    Cochain term = twisted_pullback(i, phi);
    for (std::size_t pos = 0; pos < acc.size(); ++pos)
      acc[pos] = g.mul(acc[pos], i % 2 == 0 ? term[pos] : g.inv(term[pos]));
  }
  return acc;
}

Cochain compose(const Cochain& left, const Cochain& right) {
  require_same(left, right);
  const FiniteGroup& g = left.coeff()->g();
  Cochain out = left;
  for (std::size_t pos = 0; pos < out.size(); ++pos) out[pos] = g.mul(left[pos], right[pos]);
  return out;
}

Cochain invert(const Cochain& phi) {
  const FiniteGroup& g = phi.coeff()->g();
  Cochain out = phi;
  for (std::size_t pos = 0; pos < out.size(); ++pos) out[pos] = g.inv(phi[pos]);
  return out;
}

Cochain difference(const Cochain& left, const Cochain& right) { return compose(left, invert(right)); }

Cochain power(const Cochain& phi, std::int64_t k) {
  const FiniteGroup& g = phi.coeff()->g();
  Cochain out = phi;
  for (std::size_t pos = 0; pos < out.size(); ++pos) out[pos] = g.pow(phi[pos], k);
  return out;
}

Cochain restrict_cochain(const Cochain& phi, const Refinement& ref) {
  if (phi.cover() != ref.coarse()) throw CochainError("restriction: cochain is not on the coarse cover");
  const std::vector<std::size_t> map = ref.induced(phi.degree());
  std::vector<Elem> out(map.size());
  for (std::size_t pos = 0; pos < map.size(); ++pos) out[pos] = phi[map[pos]];
  return Cochain(ref.fine(), phi.coeff(), phi.degree(), std::move(out));
}

Cochain map_coefficients(const GroupHom& hom, const Cochain& phi, GammaGroupPtr target) {
  if (hom.source() != phi.coeff()->group || hom.target() != target->group)
    throw CochainError("coefficient map does not match the cochain's coefficient groups");
  ValidationReport rep = check_equivariant(hom, *phi.coeff(), *target);
  if (!rep.ok()) throw CochainError("coefficient map is not Gamma-equivariant: " + rep.summary());
  std::vector<Elem> out(phi.size());
  for (std::size_t pos = 0; pos < phi.size(); ++pos) out[pos] = hom(phi[pos]);
  return Cochain(phi.cover(), std::move(target), phi.degree(), std::move(out));
}

Cochain homotopy(const Cochain& phi, const Refinement& r, const Refinement& s) {
  require_abelian(phi, "homotopy");
  if (phi.degree() == 0) throw CochainError("homotopy needs degree >= 1");
  if (r.fine() != s.fine() || r.coarse() != s.coarse() || phi.cover() != r.coarse())
    throw CochainError("homotopy: refining maps must share both covers with the cochain");
  const std::size_t p = phi.degree();
  const FiniteGroup& g = phi.coeff()->g();
  const FiniteGroup& gamma = r.fine()->gamma();
  const DegreeCensus& fine = r.fine()->cells(p - 1);
  const DegreeCensus& coarse = phi.census();
  std::vector<Elem> out(fine.size(), g.identity());
  for (std::size_t pos = 0; pos < fine.size(); ++pos) {
    const MultiIndex& b = fine.index_at(pos);
    const SimplexPoint& y = fine.point_at(pos);
    Elem acc = g.identity();
    for (std::size_t k = 0; k < p; ++k) {
      MultiIndex a;
      a.labels.reserve(p + 1);
      for (std::size_t j = 0; j <= k; ++j) a.labels.push_back(r(b.labels[j]));
      for (std::size_t j = k; j < p; ++j) a.labels.push_back(s(b.labels[j]));
      auto q = coarse.position(a, degeneracy_point(k, y, gamma));
      if (!q) throw std::logic_error("homotopy: degenerate point left the cover");
      acc = g.mul(acc, k % 2 == 0 ? phi[*q] : g.inv(phi[*q]));
    }
    out[pos] = acc;
  }
  return Cochain(r.fine(), phi.coeff(), p - 1, std::move(out));
}

Cochain random_cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
                       std::mt19937_64& rng) {
  const std::size_t n = cover->cells(degree).size();
  const std::uint64_t order = coeff->g().order();
  std::vector<Elem> values(n);
  for (auto& v : values) v = static_cast<Elem>(rng() % order);
  return Cochain(std::move(cover), std::move(coeff), degree, std::move(values));
}

Cochain random_cochain(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_cochain(std::move(cover), std::move(coeff), degree, rng);
}

Cochain lift_pointwise(const Cochain& phi, const CentralExtension& ext, const Section& section) {
  if (phi.coeff() != ext.c) throw CochainError("lift: cochain does not take values in C");
  std::vector<Elem> out(phi.size());
  for (std::size_t pos = 0; pos < phi.size(); ++pos) out[pos] = section[phi[pos]];
  return Cochain(phi.cover(), ext.b, phi.degree(), std::move(out));
}

Cochain pullback_alpha(const Cochain& nu, const CentralExtension& ext) {
  if (nu.coeff() != ext.b) throw CochainError("pullback: cochain does not take values in B");
  std::vector<Elem> inverse(ext.b->g().order(), Elem(-1));
  for (Elem x = 0; x < ext.a->g().order(); ++x) inverse[ext.alpha(x)] = x;
  std::vector<Elem> out(nu.size());
  for (std::size_t pos = 0; pos < nu.size(); ++pos) {
    out[pos] = inverse[nu[pos]];
    if (out[pos] == Elem(-1))
      throw CochainError("value at " + to_string(nu.census().index_at(pos), nu.cover()->cover()) +
                         " " + to_string(nu.census().point_at(pos), nu.cover()->space()) +
                         " is not in the image of alpha");
  }
  return Cochain(nu.cover(), ext.a, nu.degree(), std::move(out));
}

}  // namespace seccoh
