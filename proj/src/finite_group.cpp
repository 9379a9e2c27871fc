#include "seccoh/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "seccoh/modular_linalg.hpp"

namespace seccoh {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FiniteGroup

ValidationReport FiniteGroup::check_table(std::size_t n, const std::vector<Elem>& table,
                                          AxiomCheckLimits limits) {
  ValidationReport rep;
  if (n == 0) {
    rep.add("group must have at least one element");
    return rep;
  }
  if (table.size() != n * n) {
    rep.add("multiplication table must have n*n = " + std::to_string(n * n) + " entries");
    return rep;
  }
  for (Elem v : table)
    if (v >= n) {
      rep.add("multiplication table entry out of range: " + std::to_string(v));
      return rep;
    }
  auto mul = [&](Elem a, Elem b) { return table[std::size_t(a) * n + b]; };

  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) id = e;
  }
  if (!id) {
    rep.add("no identity element");
    return rep;
  }
  for (Elem a = 0; a < n; ++a) {
    bool has_inv = false;
    for (Elem b = 0; b < n && !has_inv; ++b) has_inv = mul(a, b) == *id && mul(b, a) == *id;
    if (!has_inv) rep.add("element " + std::to_string(a) + " has no inverse");
  }
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      rep.add("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ")");
      return false;
    }
    return true;
  };
  if (n <= limits.exhaustive_bound) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!check_triple(a, b, c)) return rep;
  } else {
    std::mt19937_64 rng(0x5eccULL);
    for (std::size_t s = 0; s < limits.samples; ++s)
      if (!check_triple(Elem(rng() % n), Elem(rng() % n), Elem(rng() % n))) return rep;
  }
  return rep;
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> table, std::vector<std::string> labels,
                         AxiomCheckLimits limits)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  ValidationReport rep = check_table(n_, table_, limits);
  if (!rep.ok()) throw GroupError("invalid group table: " + rep.summary());
  if (!labels_.empty() && labels_.size() != n_)
    throw GroupError("label count does not match group order");
  for (Elem e = 0; e < n_; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inverse_.resize(n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
  for (Elem a = 0; a < n_ && abelian_; ++a)
    for (Elem b = a + 1; b < n_ && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = identity_;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::string FiniteGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = Elem((a + b) % n);
  return std::make_shared<const FiniteGroup>(n, std::move(t));
}

GroupPtr make_trivial_group() { return make_cyclic(1); }

GroupPtr make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(Elem(a / nh)) + "," + h.label(Elem(a % nh)) + ")";
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = Elem(g.mul(Elem(a / nh), Elem(b / nh)) * nh + h.mul(Elem(a % nh), Elem(b % nh)));
  }
  return std::make_shared<const FiniteGroup>(n, std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->order())
    throw GroupError("homomorphism image list must have one entry per source element");
  for (Elem v : images_)
    if (v >= target_->order()) throw GroupError("homomorphism image out of range");
}

ValidationReport GroupHom::check() const {
  ValidationReport rep;
  if (images_[source_->identity()] != target_->identity()) rep.add("identity not preserved");
  for (Elem x = 0; x < source_->order(); ++x)
    for (Elem y = 0; y < source_->order(); ++y)
      if (images_[source_->mul(x, y)] != target_->mul(images_[x], images_[y])) {
        rep.add("not a homomorphism at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        return rep;
      }
  return rep;
}

bool GroupHom::injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem v : images_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool GroupHom::surjective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem v : images_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem x = 0; x < source_->order(); ++x)
    if (images_[x] == target_->identity()) k.push_back(x);
  return k;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> im(g->order());
  std::iota(im.begin(), im.end(), Elem{0});
  return GroupHom(g, g, std::move(im));
}

// ---------------------------------------------------------------------------
// GammaAction

GammaAction::GammaAction(GroupPtr gamma, GroupPtr target, std::vector<std::vector<Elem>> perms)
    : gamma_(std::move(gamma)), target_(std::move(target)), perms_(std::move(perms)) {
  if (perms_.size() != gamma_->order())
    throw GroupError("action must list one map per element of Gamma");
  for (const auto& p : perms_) {
    if (p.size() != target_->order()) throw GroupError("action map has wrong length");
    for (Elem v : p)
      if (v >= target_->order()) throw GroupError("action image out of range");
  }
}

bool GammaAction::is_trivial() const {
  for (const auto& p : perms_)
    for (Elem g = 0; g < p.size(); ++g)
      if (p[g] != g) return false;
  return true;
}

GammaAction trivial_action(const GroupPtr& gamma, const GroupPtr& g) {
  std::vector<Elem> id(g->order());
  std::iota(id.begin(), id.end(), Elem{0});
  return GammaAction(gamma, g, std::vector<std::vector<Elem>>(gamma->order(), id));
}

GammaAction cyclic_action(const GroupPtr& gamma, const GroupPtr& g,
                          const std::vector<Elem>& generator_image) {
  const std::size_t n = gamma->order();
  if (generator_image.size() != g->order()) throw GroupError("generator image has wrong length");
  // Gamma must be the cyclic group with element k = k * generator.
  if (n > 1 && gamma->element_order(1) != n)
    throw GroupError("generator-image actions need Gamma = Z/n with generator index 1");
  std::vector<std::vector<Elem>> perms(n);
  std::vector<Elem> cur(g->order());
  std::iota(cur.begin(), cur.end(), Elem{0});
  Elem k = gamma->identity();
  for (std::size_t i = 0; i < n; ++i) {
    perms[k] = cur;
    std::vector<Elem> next(cur.size());
    for (std::size_t x = 0; x < cur.size(); ++x) next[x] = generator_image[cur[x]];
    cur = std::move(next);
    k = gamma->mul(k, n > 1 ? Elem{1} : gamma->identity());
  }
  for (std::size_t x = 0; x < cur.size(); ++x)
    if (cur[x] != x) throw GroupError("generator image order does not divide |Gamma|");
  return GammaAction(gamma, g, std::move(perms));
}

GammaAction inversion_action(const GroupPtr& gamma, const GroupPtr& g) {
  std::vector<Elem> inv(g->order());
  for (Elem x = 0; x < g->order(); ++x) inv[x] = g->inv(x);
  return cyclic_action(gamma, g, inv);
}

ValidationReport check_gamma_group(const FiniteGroup& gamma, const FiniteGroup& g,
                                   const GammaAction& theta) {
  if (theta.gamma()->order() != gamma.order() || theta.target()->order() != g.order())
    throw GroupError("action dimensions do not match the groups");
  ValidationReport rep;
  const std::size_t ng = gamma.order(), n = g.order();
  for (Elem x = 0; x < n; ++x)
    if (theta.apply(gamma.identity(), x) != x) {
      rep.add("theta_1 is not the identity");
      break;
    }
  for (Elem c = 0; c < ng; ++c) {
    const auto& p = theta.automorphism(c);
    std::vector<bool> seen(n, false);
    bool bijective = true;
    for (Elem v : p) {
      if (seen[v]) bijective = false;
      seen[v] = true;
    }
    bool hom = true;
    for (Elem x = 0; x < n && hom; ++x)
      for (Elem y = 0; y < n && hom; ++y) hom = p[g.mul(x, y)] == g.mul(p[x], p[y]);
    if (!bijective || !hom)
      rep.add("theta_" + gamma.label(c) + " is not an automorphism");
  }
  for (Elem c1 = 0; c1 < ng; ++c1)
    for (Elem c2 = 0; c2 < ng; ++c2) {
      const Elem c12 = gamma.mul(c1, c2);
      for (Elem x = 0; x < n; ++x)
        if (theta.apply(c12, x) != theta.apply(c1, theta.apply(c2, x))) {
          rep.add("gamma -> theta_gamma is not a homomorphism at (" + gamma.label(c1) + "," +
                  gamma.label(c2) + ")");
          c1 = Elem(ng);
          c2 = Elem(ng);
          break;
        }
    }
  return rep;
}

GammaGroupPtr make_gamma_group(std::string name, GroupPtr group, GammaAction action) {
  ValidationReport rep = check_gamma_group(*action.gamma(), *group, action);
  if (!rep.ok()) throw GroupError("check_gamma_group failed for '" + name + "': " + rep.summary());
  return std::make_shared<const FiniteGammaGroup>(
      FiniteGammaGroup{std::move(name), std::move(group), std::move(action)});
}

GroupPtr semidirect_product(const GroupPtr& gamma, const GroupPtr& g, const GammaAction& theta) {
  ValidationReport rep = check_gamma_group(*gamma, *g, theta);
  if (!rep.ok()) throw GroupError("semidirect product needs a valid action: " + rep.summary());
  const std::size_t ng = gamma->order(), nh = g->order(), n = ng * nh;
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem c1 = Elem(a / nh), h1 = Elem(a % nh);
    labels[a] = "(" + gamma->label(c1) + "," + g->label(h1) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c2 = Elem(b / nh), h2 = Elem(b % nh);
      t[a * n + b] = Elem(gamma->mul(c1, c2) * nh + g->mul(h1, theta.apply(c1, h2)));
    }
  }
  return std::make_shared<const FiniteGroup>(n, std::move(t), std::move(labels));
}

ValidationReport check_equivariant(const GroupHom& hom, const FiniteGammaGroup& source,
                                   const FiniteGammaGroup& target) {
  ValidationReport rep;
  const FiniteGroup& gamma = source.gamma();
  for (Elem c = 0; c < gamma.order(); ++c)
    for (Elem x = 0; x < source.g().order(); ++x)
      if (hom(source.act(c, x)) != target.act(c, hom(x))) {
        rep.add("not Gamma-equivariant at gamma=" + gamma.label(c) + ", element " +
                std::to_string(x));
        return rep;
      }
  return rep;
}

// ---------------------------------------------------------------------------
// AbelianPresentation

AbelianPresentation::AbelianPresentation(const FiniteGroup& g) : group_(&g) {
  if (!g.is_abelian()) throw GroupError("coefficients must be abelian");
  const std::size_t n = g.order();
  coords_.assign(n, {});
  if (n == 1) {
    decode_table_ = {g.identity()};
    return;
  }
  // Greedy generating chain g_1, g_2, ... with relative orders r_i and the
  // relation g_i^{r_i} = prod_{j<i} g_j^{c_j}.
  std::vector<Elem> chain;
  std::vector<std::vector<Int>> relations;
  std::vector<std::vector<Int>> in_sub(n);  // coefficient vector, empty = not reached
  std::vector<bool> reached(n, false);
  reached[g.identity()] = true;
  in_sub[g.identity()] = {};
  std::vector<Elem> members{g.identity()};
  while (members.size() < n) {
    Elem pick = 0;
    std::size_t best = 0;
    for (Elem x = 0; x < n; ++x)
      if (!reached[x] && g.element_order(x) > best) {
        best = g.element_order(x);
        pick = x;
      }
    const std::size_t k = chain.size();
    chain.push_back(pick);
    for (auto& v : in_sub) v.resize(k + 1, 0);
    // Relative order.
    Int r = 1;
    Elem p = pick;
    while (!reached[p]) {
      p = g.mul(p, pick);
      ++r;
    }
    std::vector<Int> rel(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) rel[j] = -in_sub[p][j];
    rel[k] = r;
    relations.push_back(rel);
    std::vector<Elem> grown;
    Elem power = g.identity();
    for (Int c = 0; c < r; ++c) {
      for (Elem h : members) {
        Elem x = g.mul(h, power);
        if (c > 0) {
          std::vector<Int> coeff = in_sub[h];
          coeff[k] = c;
          in_sub[x] = std::move(coeff);
          reached[x] = true;
        }
        grown.push_back(x);
      }
      power = g.mul(power, pick);
    }
    members = std::move(grown);
  }
  const std::size_t k = chain.size();
  for (auto& rel : relations) rel.resize(k, 0);
  const Int e = static_cast<Int>(g.exponent());
  std::vector<std::vector<Int>> all;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> u(k, 0);
    u[i] = 1;
    all.push_back(std::move(u));
  }
  ModuleQuotient q(k, e, all, relations);
  factors_ = q.factors();
  auto element_of = [&](const std::vector<Int>& coeff) {
    Elem x = g.identity();
    for (std::size_t j = 0; j < k; ++j) x = g.mul(x, g.pow(chain[j], coeff[j]));
    return x;
  };
  for (const auto& gen : q.generators()) basis_.push_back(element_of(gen));
  std::size_t total = 1;
  for (Int f : factors_) total *= static_cast<std::size_t>(f);
  if (total != n) throw std::logic_error("abelian presentation: order mismatch");
  decode_table_.resize(n);
  std::vector<Int> digits(factors_.size(), 0);
  std::vector<bool> hit(n, false);
  for (std::size_t idx = 0; idx < n; ++idx) {
    Elem x = g.identity();
    for (std::size_t i = 0; i < digits.size(); ++i) x = g.mul(x, g.pow(basis_[i], digits[i]));
    decode_table_[idx] = x;
    if (hit[x]) throw std::logic_error("abelian presentation: decode not injective");
    hit[x] = true;
    coords_[x] = digits;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < factors_[i]) break;
      digits[i] = 0;
    }
  }
}

Elem AbelianPresentation::decode(const std::vector<Int>& coords) const {
  if (coords.size() != factors_.size()) throw GroupError("coordinate vector has wrong length");
  std::size_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += static_cast<std::size_t>(mod_reduce(coords[i], factors_[i])) * radix;
    radix *= static_cast<std::size_t>(factors_[i]);
  }
  return decode_table_[idx];
}

// ---------------------------------------------------------------------------
// Central extensions

Section section_of(const GroupHom& beta) {
  if (!beta.surjective()) throw GroupError("beta not surjective: no section exists");
  const FiniteGroup& b = *beta.source();
  const FiniteGroup& c = *beta.target();
  Section s(c.order(), Elem(b.order()));
  for (Elem x = 0; x < b.order(); ++x)
    if (s[beta(x)] == b.order()) s[beta(x)] = x;
  s[c.identity()] = b.identity();
  return s;
}

Elem CentralExtension::alpha_preimage(Elem b_elem) const {
  const auto& im = alpha.images();
  for (Elem x = 0; x < im.size(); ++x)
    if (im[x] == b_elem) return x;
  throw GroupError("element is not in the image of alpha");
}

bool CentralExtension::is_abelian() const {
  return a->g().is_abelian() && b->g().is_abelian() && c->g().is_abelian();
}

ValidationReport check_central_extension(const CentralExtension& ext) {
  ValidationReport rep;
  rep.merge(ext.alpha.check(), "alpha: ");
  rep.merge(ext.beta.check(), "beta: ");
  if (!ext.alpha.injective()) rep.add("alpha not injective");
  if (!ext.beta.surjective()) rep.add("beta not surjective");
  const FiniteGroup& b = ext.b->g();
  {
    std::vector<bool> in_image(b.order(), false);
    for (Elem v : ext.alpha.images()) in_image[v] = true;
    bool exact = true;
    for (Elem x = 0; x < b.order(); ++x)
      if (in_image[x] != (ext.beta(x) == ext.c->g().identity())) exact = false;
    if (!exact) rep.add("image(alpha) != kernel(beta)");
    bool central = true;
    for (Elem v : ext.alpha.images())
      for (Elem x = 0; x < b.order() && central; ++x) central = b.mul(v, x) == b.mul(x, v);
    if (!central) rep.add("alpha(A) is not central in B");
  }
  rep.merge(check_equivariant(ext.alpha, *ext.a, *ext.b), "alpha: ");
  rep.merge(check_equivariant(ext.beta, *ext.b, *ext.c), "beta: ");
  if (ext.section.size() != ext.c->g().order()) {
    rep.add("section has wrong length");
  } else {
    for (Elem x = 0; x < ext.section.size(); ++x)
      if (ext.section[x] >= b.order() || ext.beta(ext.section[x]) != x) {
        rep.add("beta o s != id");
        break;
      }
  }
  return rep;
}

CentralExtension make_central_extension(std::string name, GammaGroupPtr a, GammaGroupPtr b,
                                        GammaGroupPtr c, std::vector<Elem> alpha,
                                        std::vector<Elem> beta) {
  GroupHom al(a->group, b->group, std::move(alpha));
  GroupHom be(b->group, c->group, std::move(beta));
  Section s;
  if (be.surjective()) s = section_of(be);
  CentralExtension ext{std::move(name), std::move(a), std::move(b), std::move(c), al, be, s};
  ValidationReport rep = check_central_extension(ext);
  if (!rep.ok())
    throw GroupError("check_central_extension failed for '" + ext.name + "': " + rep.summary());
  return ext;
}

}  // namespace seccoh
