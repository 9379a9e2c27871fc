#include "seccoh/abelian_cohomology.hpp"

#include <map>
#include <set>

namespace seccoh {

namespace {

AbelianPresentation presentation_or_throw(const GammaGroupPtr& coeff) {
  if (!coeff->g().is_abelian())
    throw CochainError("coefficients must be abelian for linear cohomology");
  return AbelianPresentation(coeff->g());
}

// Rows scaled by e / m_row: (scaled * v)_row == 0 mod e iff (D v)_row == 0 mod m_row.
ModMatrix scaled_rows(const HomPresentation& h) {
  ModMatrix m = h.matrix;
  const Int e = m.modulus();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int s = e / h.target_moduli[r];
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = mul_mod(m.at(r, c), s, e);
  }
  return m;
}

std::vector<std::vector<Int>> projection_kernel(const std::vector<Int>& moduli, Int e) {
  std::vector<std::vector<Int>> out;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] == e) continue;
    std::vector<Int> v(moduli.size(), 0);
    v[j] = moduli[j];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CochainCoordinates::CochainCoordinates(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t degree)
    : cover_(std::move(cover)),
      coeff_(std::move(coeff)),
      degree_(degree),
      pres_(presentation_or_throw(coeff_)),
      e_(pres_.factors().empty() ? 1 : pres_.factors().back()) {
  const std::size_t n = cover_->cells(degree_).size();
  moduli_.reserve(n * pres_.rank());
  for (std::size_t pos = 0; pos < n; ++pos)
    for (Int m : pres_.factors()) moduli_.push_back(m);
}

std::vector<Int> CochainCoordinates::encode(const Cochain& phi) const {
  if (phi.degree() != degree_ || phi.cover() != cover_ || phi.coeff() != coeff_)
    throw CochainError("cochain does not match the coordinate system");
  const std::size_t k = pres_.rank();
  std::vector<Int> v(moduli_.size());
  for (std::size_t pos = 0; pos < phi.size(); ++pos) {
    const auto& c = pres_.encode(phi[pos]);
    for (std::size_t j = 0; j < k; ++j) v[pos * k + j] = c[j];
  }
  return v;
}

Cochain CochainCoordinates::decode(const std::vector<Int>& v) const {
  if (v.size() != moduli_.size()) throw CochainError("coordinate vector has wrong length");
  const std::size_t k = pres_.rank();
  const std::size_t n = cover_->cells(degree_).size();
  std::vector<Elem> values(n);
  std::vector<Int> c(k);
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t j = 0; j < k; ++j) c[j] = mod_reduce(v[pos * k + j], moduli_[pos * k + j]);
    values[pos] = pres_.decode(c);
  }
  return Cochain(cover_, coeff_, degree_, std::move(values));
}

// ---------------------------------------------------------------------------

std::vector<Int> HomPresentation::apply(const std::vector<Int>& v) const {
  std::vector<Int> w = matrix.apply(v);
  for (std::size_t r = 0; r < w.size(); ++r) w[r] = mod_reduce(w[r], target_moduli[r]);
  return w;
}

bool HomPresentation::well_defined() const {
  const Int e = matrix.modulus();
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      if (mod_reduce(mul_mod(matrix.at(r, c), source_moduli[c], e), target_moduli[r]) != 0) return false;
  return true;
}

HomPresentation linearize_coboundary(const SimplicialCoverPtr& cover, const GammaGroupPtr& coeff,
                                     std::size_t p) {
  CochainCoordinates src(cover, coeff, p);
  CochainCoordinates tgt(cover, coeff, p + 1);
  const AbelianPresentation& pres = src.presentation();
  const std::size_t k = pres.rank();
  const Int e = src.modulus();
  const FiniteGroup& gamma = cover->gamma();

  // twist[g][j'][j] = coordinate j' of theta_g(basis j).
  std::vector<std::vector<std::vector<Int>>> twist(gamma.order(), std::vector<std::vector<Int>>(k, std::vector<Int>(k)));
  for (Elem g = 0; g < gamma.order(); ++g)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = pres.encode(coeff->act(g, pres.basis(j)));
      for (std::size_t jj = 0; jj < k; ++jj) twist[g][jj][j] = c[jj];
    }

  HomPresentation h{src.moduli(), tgt.moduli(), ModMatrix(tgt.dim(), src.dim(), e)};
  const DegreeCensus& dc = cover->cells(p + 1);
  for (std::size_t pos = 0; pos < dc.size(); ++pos)
    for (std::size_t i = 0; i <= p + 1; ++i) {
      const std::size_t q = cover->face(p + 1, pos, i);
      const auto& t = twist[cover->twist_at(p + 1, pos, i)];
      for (std::size_t jj = 0; jj < k; ++jj)
        for (std::size_t j = 0; j < k; ++j) {
          if (t[jj][j] == 0) continue;
          h.matrix.add(pos * k + jj, q * k + j, i % 2 == 0 ? t[jj][j] : -t[jj][j]);
        }
    }
  return h;
}

// ---------------------------------------------------------------------------

CohomologyGroup::CohomologyGroup(SimplicialCoverPtr cover, GammaGroupPtr coeff, std::size_t p)
    : cover_(std::move(cover)),
      coeff_(std::move(coeff)),
      p_(p),
      coords_(cover_, coeff_, p),
      delta_(linearize_coboundary(cover_, coeff_, p)) {
  const Int e = coords_.modulus();
  const std::size_t n = coords_.dim();
  const auto proj_kernel = projection_kernel(coords_.moduli(), e);

  z_gens_ = kernel_mod(scaled_rows(delta_));
  z_gens_.insert(z_gens_.end(), proj_kernel.begin(), proj_kernel.end());

  b_gens_ = proj_kernel;
  if (p_ > 0) {
    delta_prev_ = linearize_coboundary(cover_, coeff_, p_ - 1);
    for (std::size_t c = 0; c < delta_prev_->matrix.cols(); ++c) {
      std::vector<Int> col = delta_prev_->matrix.column(c);
      bool nonzero = false;
      for (Int x : col) nonzero = nonzero || x != 0;
      if (nonzero) b_gens_.push_back(std::move(col));
    }
    prev_smith_.emplace(smith_mod(scaled_rows(*delta_prev_), true, true));
  }
  quotient_.emplace(n, e, z_gens_, b_gens_);
  for (const auto& g : quotient_->generators()) generators_.push_back(coords_.decode(g));
}

bool CohomologyGroup::is_cocycle(const Cochain& phi) const {
  for (Int x : delta_.apply(coords_.encode(phi)))
    if (x != 0) return false;
  return true;
}

std::vector<Int> CohomologyGroup::class_of(const Cochain& phi) const {
  if (!is_cocycle(phi))
    throw CochainError("class_of: cochain of degree " + std::to_string(p_) + " is not a cocycle");
  auto c = quotient_->coordinates(coords_.encode(phi));
  if (!c) throw std::logic_error("class_of: cocycle outside the computed kernel");
  return *c;
}

Cochain CohomologyGroup::representative(const std::vector<Int>& coords) const {
  if (coords.size() != factors().size()) throw CochainError("class coordinates have wrong length");
  const Int e = coords_.modulus();
  std::vector<Int> v(coords_.dim(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t r = 0; r < v.size(); ++r)
      v[r] = mod_reduce(v[r] + mul_mod(mod_reduce(coords[i], e), quotient_->generators()[i][r], e), e);
  return coords_.decode(v);
}

std::vector<std::vector<Int>> CohomologyGroup::elements() const {
  return enumerate_coordinates(factors());
}

std::optional<Cochain> CohomologyGroup::primitive(const Cochain& phi) const {
  if (p_ == 0) throw CochainError("primitive: degree 0 has no cochains below it");
  std::vector<Int> y = coords_.encode(phi);
  const Int e = coords_.modulus();
  for (std::size_t r = 0; r < y.size(); ++r) y[r] = mul_mod(y[r], e / coords_.moduli()[r], e);
  auto x = solve_smith(*prev_smith_, y);
  if (!x) return std::nullopt;
  return CochainCoordinates(cover_, coeff_, p_ - 1).decode(*x);
}

std::vector<Int> CohomologyGroup::cocycle_factors() const {
  const auto pk = projection_kernel(coords_.moduli(), coords_.modulus());
  return ModuleQuotient(coords_.dim(), coords_.modulus(), z_gens_, pk).factors();
}

std::vector<Int> CohomologyGroup::coboundary_factors() const {
  const auto pk = projection_kernel(coords_.moduli(), coords_.modulus());
  return ModuleQuotient(coords_.dim(), coords_.modulus(), b_gens_, pk).factors();
}

std::vector<std::vector<Int>> enumerate_coordinates(const std::vector<Int>& factors) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> c(factors.size(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = factors.size();
    while (i-- > 0) {
      if (++c[i] < factors[i]) break;
      c[i] = 0;
    }
    if (i == std::size_t(-1)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Int> connecting_abelian(const Cochain& phi, const CentralExtension& ext,
                                    const CohomologyGroup& h_next, const Section& section) {
  if (!ext.is_abelian()) throw CochainError("connecting_abelian needs abelian A, B and C");
  if (h_next.degree() != phi.degree() + 1 || h_next.coeff() != ext.a)
    throw CochainError("connecting_abelian: target must be H^{p+1}(A)");
  Cochain psi = lift_pointwise(phi, ext, section);
  Cochain nu = coboundary(psi);
  return h_next.class_of(pullback_alpha(nu, ext));
}

std::vector<Int> connecting_abelian(const Cochain& phi, const CentralExtension& ext,
                                    const CohomologyGroup& h_next) {
  return connecting_abelian(phi, ext, h_next, ext.section);
}

bool ExactnessReport::ok() const {
  for (const auto& n : nodes)
    if (!n.ok) return false;
  return !nodes.empty();
}

ExactnessReport les_exactness_check(const SimplicialCoverPtr& cover, const CentralExtension& ext,
                                    std::size_t pmax) {
  if (!ext.is_abelian()) throw CochainError("les_exactness_check needs abelian A, B and C");
  std::vector<CohomologyGroup> ha, hb, hc;
  for (std::size_t p = 0; p <= pmax + 1; ++p) {
    ha.emplace_back(cover, ext.a, p);
    if (p <= pmax) {
      hb.emplace_back(cover, ext.b, p);
      hc.emplace_back(cover, ext.c, p);
    }
  }
  using Coords = std::vector<Int>;
  auto induced = [](const CohomologyGroup& src, const CohomologyGroup& tgt, const GroupHom& hom) {
    std::map<Coords, Coords> m;
    for (const auto& x : src.elements())
      m[x] = tgt.class_of(map_coefficients(hom, src.representative(x), tgt.coeff()));
    return m;
  };
  auto compare = [](const std::string& name, const std::map<Coords, Coords>* into,
                    const std::map<Coords, Coords>* out, const CohomologyGroup& here) {
    std::set<Coords> image, kernel;
    const Coords zero(here.factors().size(), 0);
    if (into)
      for (const auto& [x, y] : *into) image.insert(y);
    else
      image.insert(zero);
    for (const auto& [x, y] : *out)
      if (y == Coords(y.size(), 0)) kernel.insert(x);
    return ExactnessNode{name, image.size(), kernel.size(), image == kernel};
  };

  ExactnessReport rep;
  std::optional<std::map<Coords, Coords>> prev_delta;
  for (std::size_t p = 0; p <= pmax; ++p) {
    const std::string d = std::to_string(p);
    auto a_to_b = induced(ha[p], hb[p], ext.alpha);
    auto b_to_c = induced(hb[p], hc[p], ext.beta);
    std::map<Coords, Coords> delta;
    for (const auto& x : hc[p].elements())
      delta[x] = connecting_abelian(hc[p].representative(x), ext, ha[p + 1]);
    rep.nodes.push_back(compare("H^" + d + "(A)", prev_delta ? &*prev_delta : nullptr, &a_to_b, ha[p]));
    rep.nodes.push_back(compare("H^" + d + "(B)", &a_to_b, &b_to_c, hb[p]));
    rep.nodes.push_back(compare("H^" + d + "(C)", &b_to_c, &delta, hc[p]));
    prev_delta = std::move(delta);
  }
  return rep;
}

RefinementActionReport refinement_action_check(const Refinement& r, const Refinement& s,
                                               const GammaGroupPtr& coeff, std::size_t p) {
  CohomologyGroup coarse(r.coarse(), coeff, p);
  CohomologyGroup fine(r.fine(), coeff, p);
  RefinementActionReport rep;
  for (std::size_t i = 0; i < coarse.generators().size(); ++i) {
    ++rep.generators;
    const Cochain& g = coarse.generators()[i];
    auto cr = fine.class_of(restrict_cochain(g, r));
    auto cs = fine.class_of(restrict_cochain(g, s));
    if (cr != cs) rep.mismatches.push_back("generator " + std::to_string(i) + " maps to different classes");
  }
  return rep;
}

}  // namespace seccoh
