#include "seccoh/modular_linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace seccoh {

Int mod_reduce(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
  __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  auto r = static_cast<Int>(p % m);
  return r < 0 ? r + m : r;
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }
Int lcm_int(Int a, Int b) { return std::lcm(a, b); }

namespace {

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 0;
  Int x = 0, y = 0;
  Int g = ext_gcd(mod_reduce(a, m), m, x, y);
  if (g != 1) throw std::logic_error("inverse_mod: not a unit");
  return mod_reduce(x, m);
}

// Unit u with a*u == gcd(a, e) (mod e).
Int unit_normalizer(Int a, Int e) {
  Int g = std::gcd(a, e);
  Int ep = e / g;
  Int u = ep == 1 ? 1 : inverse_mod(a / g, ep);
  if (u == 0) u = ep;
  while (std::gcd(u, e) != 1) u += ep;
  return mod_reduce(u, e);
}

// Elimination state: the matrix plus optional transforms.
class SmithWorker {
 public:
  SmithWorker(ModMatrix a, bool track_left, bool track_right)
      : a_(std::move(a)), e_(a_.modulus()), track_left_(track_left), track_right_(track_right) {
    if (track_left_) {
      left_ = ModMatrix::identity(a_.rows(), e_);
      left_inv_ = ModMatrix::identity(a_.rows(), e_);
    }
    if (track_right_) right_ = ModMatrix::identity(a_.cols(), e_);
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    const std::size_t k = std::min(rows, cols);
    std::vector<Int> diag(k, e_);
    for (std::size_t t = 0; t < k; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        normalize_pivot(t);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a_.at(i, t) != 0) eliminate_in_column(t, i);
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a_.at(t, j) != 0) eliminate_in_row(t, j);
        bool column_clean = true;
        for (std::size_t i = t + 1; i < rows && column_clean; ++i) column_clean = a_.at(i, t) == 0;
        if (!column_clean) continue;
        normalize_pivot(t);
        const Int p = a_.at(t, t);
        std::size_t bad_row = rows;
        for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_.at(i, j) % p != 0) {
              bad_row = i;
              break;
            }
        if (bad_row == rows) break;
        row_add(t, bad_row);
      }
      diag[t] = a_.at(t, t) == 0 ? e_ : a_.at(t, t);
    }
    SmithForm out;
    out.diagonal = std::move(diag);
    out.left = std::move(left_);
    out.left_inv = std::move(left_inv_);
    out.right = std::move(right_);
    return out;
  }

 private:
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    Int best = 0;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        Int v = a_.at(i, j);
        if (v == 0) continue;
        Int g = std::gcd(v, e_);
        if (best == 0 || g < best) {
          best = g;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void normalize_pivot(std::size_t t) {
    Int p = a_.at(t, t);
    if (p == 0) return;
    Int u = unit_normalizer(p, e_);
    if (u == 1) return;
    Int u_inv = inverse_mod(u, e_);
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(t, j) = mul_mod(a_.at(t, j), u, e_);
    if (track_left_) {
      for (std::size_t j = 0; j < left_.cols(); ++j) left_.at(t, j) = mul_mod(left_.at(t, j), u, e_);
      for (std::size_t r = 0; r < left_inv_.rows(); ++r)
        left_inv_.at(r, t) = mul_mod(left_inv_.at(r, t), u_inv, e_);
    }
  }

  // Rows t and i: [x y; -b/g p/g], inverse [p/g -y; b/g x].
  void row_combine(std::size_t t, std::size_t i, Int x, Int y, Int c, Int d) {
    combine_rows(a_, t, i, x, y, c, d);
    if (track_left_) {
      combine_rows(left_, t, i, x, y, c, d);
      // left_inv <- left_inv * M^{-1}, M = [x y; c d] with det 1.
      for (std::size_t r = 0; r < left_inv_.rows(); ++r) {
        Int lt = left_inv_.at(r, t), li = left_inv_.at(r, i);
        left_inv_.at(r, t) = mod_reduce(mul_mod(lt, d, e_) - mul_mod(li, c, e_), e_);
        left_inv_.at(r, i) = mod_reduce(mul_mod(li, x, e_) - mul_mod(lt, y, e_), e_);
      }
    }
  }

  void col_combine(std::size_t t, std::size_t j, Int x, Int y, Int c, Int d) {
    combine_cols(a_, t, j, x, y, c, d);
    if (track_right_) combine_cols(right_, t, j, x, y, c, d);
  }

  void combine_rows(ModMatrix& m, std::size_t t, std::size_t i, Int x, Int y, Int c, Int d) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int vt = m.at(t, j), vi = m.at(i, j);
      if (vt == 0 && vi == 0) continue;
      m.at(t, j) = mod_reduce(mul_mod(vt, x, e_) + mul_mod(vi, y, e_), e_);
      m.at(i, j) = mod_reduce(mul_mod(vt, c, e_) + mul_mod(vi, d, e_), e_);
    }
  }

  // new col_t = x col_t + y col_j ; new col_j = c col_t + d col_j
  void combine_cols(ModMatrix& m, std::size_t t, std::size_t j, Int x, Int y, Int c, Int d) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Int vt = m.at(r, t), vj = m.at(r, j);
      if (vt == 0 && vj == 0) continue;
      m.at(r, t) = mod_reduce(mul_mod(vt, x, e_) + mul_mod(vj, y, e_), e_);
      m.at(r, j) = mod_reduce(mul_mod(vt, c, e_) + mul_mod(vj, d, e_), e_);
    }
  }

  void eliminate_in_column(std::size_t t, std::size_t i) {
    const Int p = a_.at(t, t), b = a_.at(i, t);
    if (b % p == 0) {
      row_combine(t, i, 1, 0, mod_reduce(-(b / p), e_), 1);
      return;
    }
    Int x = 0, y = 0;
    Int g = ext_gcd(p, b, x, y);
    row_combine(t, i, mod_reduce(x, e_), mod_reduce(y, e_), mod_reduce(-(b / g), e_), p / g);
  }

  void eliminate_in_row(std::size_t t, std::size_t j) {
    const Int p = a_.at(t, t), b = a_.at(t, j);
    if (b % p == 0) {
      col_combine(t, j, 1, 0, mod_reduce(-(b / p), e_), 1);
      return;
    }
    Int x = 0, y = 0;
    Int g = ext_gcd(p, b, x, y);
    col_combine(t, j, mod_reduce(x, e_), mod_reduce(y, e_), mod_reduce(-(b / g), e_), p / g);
  }

  void row_add(std::size_t t, std::size_t i) { row_combine(t, i, 1, 1, 0, 1); }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(r1, j), a_.at(r2, j));
    if (track_left_) {
      for (std::size_t j = 0; j < left_.cols(); ++j) std::swap(left_.at(r1, j), left_.at(r2, j));
      for (std::size_t r = 0; r < left_inv_.rows(); ++r)
        std::swap(left_inv_.at(r, r1), left_inv_.at(r, r2));
    }
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, c1), a_.at(r, c2));
    if (track_right_)
      for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_.at(r, c1), right_.at(r, c2));
  }

  ModMatrix a_;
  Int e_;
  bool track_left_;
  bool track_right_;
  ModMatrix left_;
  ModMatrix left_inv_;
  ModMatrix right_;
};

ModMatrix from_columns(std::size_t n, Int e, const std::vector<std::vector<Int>>& cols) {
  ModMatrix m(n, cols.size(), e);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != n) throw std::invalid_argument("generator has wrong length");
    for (std::size_t r = 0; r < n; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, Int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
}

ModMatrix ModMatrix::identity(std::size_t n, Int modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<Int> ModMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ModMatrix::apply: size mismatch");
  std::vector<Int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      Int a = at(r, c);
      if (a != 0) acc = mod_reduce(acc + mul_mod(a, mod_reduce(v[c], modulus_), modulus_), modulus_);
    }
    out[r] = acc;
  }
  return out;
}

std::vector<Int> ModMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

SmithForm smith_mod(ModMatrix a, bool track_left, bool track_right) {
  return SmithWorker(std::move(a), track_left, track_right).run();
}

std::vector<std::vector<Int>> kernel_mod(const ModMatrix& a) {
  const Int e = a.modulus();
  SmithForm sf = smith_mod(a, false, true);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Int scale = i < sf.diagonal.size() ? e / sf.diagonal[i] : 1;
    if (scale == e) continue;
    std::vector<Int> v = sf.right.column(i);
    bool nonzero = false;
    for (auto& x : v) {
      x = mul_mod(x, scale, e);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) gens.push_back(std::move(v));
  }
  return gens;
}

std::optional<std::vector<Int>> solve_mod(const ModMatrix& a, const std::vector<Int>& y) {
  if (y.size() != a.rows()) throw std::invalid_argument("solve_mod: size mismatch");
  return solve_smith(smith_mod(a, true, true), y);
}

std::optional<std::vector<Int>> solve_smith(const SmithForm& sf, const std::vector<Int>& y) {
  const Int e = sf.left.modulus();
  const std::size_t rows = sf.left.rows(), cols = sf.right.rows();
  if (y.size() != rows) throw std::invalid_argument("solve_smith: size mismatch");
  std::vector<Int> c = sf.left.apply(y);
  std::vector<Int> w(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < sf.diagonal.size()) {
      Int d = sf.diagonal[i];
      if (d == e) {
        if (c[i] != 0) return std::nullopt;
      } else {
        if (c[i] % d != 0) return std::nullopt;
        w[i] = c[i] / d;
      }
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return sf.right.apply(w);
}

ModuleQuotient::ModuleQuotient(std::size_t n, Int modulus,
                               const std::vector<std::vector<Int>>& z_gens,
                               const std::vector<std::vector<Int>>& b_gens)
    : n_(n), e_(modulus), z_is_basis_(n, false) {
  ModMatrix zmat = from_columns(n, e_, z_gens);
  SmithForm zf = smith_mod(zmat, true, false);
  z_left_ = zf.left;
  std::vector<std::vector<Int>> z_basis;
  for (std::size_t i = 0; i < zf.diagonal.size(); ++i) {
    Int d = zf.diagonal[i];
    if (d == e_) continue;
    z_basis_index_.push_back(i);
    z_scale_.push_back(d);
    z_order_.push_back(e_ / d);
    z_is_basis_[i] = true;
    std::vector<Int> v = zf.left_inv.column(i);
    for (auto& x : v) x = mul_mod(x, d, e_);
    z_basis.push_back(std::move(v));
  }
  const std::size_t m = z_basis.size();

  std::vector<std::vector<Int>> rel;
  rel.reserve(b_gens.size() + m);
  for (const auto& b : b_gens) {
    auto y = z_coordinates(b);
    if (!y) throw std::invalid_argument("ModuleQuotient: relation generator outside Z");
    rel.push_back(std::move(*y));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Int> col(m, 0);
    col[j] = z_order_[j];
    rel.push_back(std::move(col));
  }
  ModMatrix rmat = from_columns(m, e_, rel);
  SmithForm qf = smith_mod(rmat, true, false);
  q_left_ = qf.left;
  for (std::size_t k = 0; k < m; ++k) {
    Int d = qf.diagonal[k];
    if (d == 1) continue;
    q_index_.push_back(k);
    factors_.push_back(d);
    std::vector<Int> g(n_, 0);
    for (std::size_t j = 0; j < m; ++j) {
      Int coeff = qf.left_inv.at(j, k);
      if (coeff == 0) continue;
      for (std::size_t r = 0; r < n_; ++r) g[r] = mod_reduce(g[r] + mul_mod(coeff, z_basis[j][r], e_), e_);
    }
    generators_.push_back(std::move(g));
  }
}

std::optional<std::vector<Int>> ModuleQuotient::z_coordinates(const std::vector<Int>& z) const {
  if (z.size() != n_) throw std::invalid_argument("ModuleQuotient: vector has wrong length");
  std::vector<Int> c = z_left_.apply(z);
  std::vector<Int> y;
  y.reserve(z_basis_index_.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (z_is_basis_[i]) {
      Int s = z_scale_[next];
      if (c[i] % s != 0) return std::nullopt;
      y.push_back(mod_reduce(c[i] / s, z_order_[next]));
      ++next;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return y;
}

std::optional<std::vector<Int>> ModuleQuotient::coordinates(const std::vector<Int>& z) const {
  auto y = z_coordinates(z);
  if (!y) return std::nullopt;
  if (y->empty()) return std::vector<Int>{};
  std::vector<Int> w = q_left_.apply(*y);
  std::vector<Int> out;
  out.reserve(q_index_.size());
  for (std::size_t t = 0; t < q_index_.size(); ++t) out.push_back(mod_reduce(w[q_index_[t]], factors_[t]));
  return out;
}

std::size_t ModuleQuotient::order() const {
  std::size_t o = 1;
  for (Int f : factors_) o *= static_cast<std::size_t>(f);
  return o;
}

}  // namespace seccoh
