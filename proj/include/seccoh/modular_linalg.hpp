// Exact linear algebra over Z/e: Smith normal form with transform tracking,
// kernels, solving, and quotients of submodules of (Z/e)^n.
//
// Every lattice handled here contains e*Z^n, so reducing entries mod e during
// elimination is exact. Entries stay in [0, e) and products are formed in
// 128-bit arithmetic.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace seccoh {

using Int = std::int64_t;

Int mod_reduce(Int v, Int m);
Int mul_mod(Int a, Int b, Int m);
/// Extended gcd on non-negative inputs: returns g with x*a + y*b = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y);
Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, Int modulus);
  static ModMatrix identity(std::size_t n, Int modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int modulus() const { return modulus_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Int v) { at(r, c) = mod_reduce(v, modulus_); }
  void add(std::size_t r, std::size_t c, Int v) { set(r, c, at(r, c) + v); }

  std::vector<Int> apply(const std::vector<Int>& v) const;
  std::vector<Int> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Int modulus_ = 1;
  std::vector<Int> data_;
};

/// left * A * right == diag(d) (mod e), with d_i | e and d_1 | d_2 | ...
/// (zero entries mod e are reported as e). left_inv is left^{-1} mod e.
struct SmithForm {
  std::vector<Int> diagonal;  // length min(rows, cols)
  ModMatrix left;
  ModMatrix left_inv;
  ModMatrix right;
};

SmithForm smith_mod(ModMatrix a, bool track_left, bool track_right);

/// Generators (columns) of {v in (Z/e)^n : A v == 0 mod e}.
std::vector<std::vector<Int>> kernel_mod(const ModMatrix& a);

/// Some x with A x == y (mod e), if one exists.
std::optional<std::vector<Int>> solve_mod(const ModMatrix& a, const std::vector<Int>& y);
/// Same, reusing a Smith form computed with both transforms tracked.
std::optional<std::vector<Int>> solve_smith(const SmithForm& sf, const std::vector<Int>& y);

/// Z/B for submodules B <= Z <= (Z/e)^n given by generators. Produces an
/// invariant-factor decomposition with explicit generators and a coordinate
/// map.
class ModuleQuotient {
 public:
  ModuleQuotient(std::size_t n, Int modulus, const std::vector<std::vector<Int>>& z_gens,
                 const std::vector<std::vector<Int>>& b_gens);

  /// Invariant factors > 1, each dividing the next.
  const std::vector<Int>& factors() const { return factors_; }
  /// Ambient representatives of the generators, one per factor.
  const std::vector<std::vector<Int>>& generators() const { return generators_; }
  /// Factor coordinates of z, or nullopt if z is not in Z.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& z) const;
  /// Order of Z/B.
  std::size_t order() const;

 private:
  std::optional<std::vector<Int>> z_coordinates(const std::vector<Int>& z) const;

  std::size_t n_;
  Int e_;
  ModMatrix z_left_;
  std::vector<std::size_t> z_basis_index_;  // rows of z_left_ carrying Z
  std::vector<Int> z_scale_;                // gcd(s_i, e) per basis index
  std::vector<Int> z_order_;                // e / scale
  std::vector<bool> z_is_basis_;
  ModMatrix q_left_;
  std::vector<std::size_t> q_index_;  // diagonal positions with factor > 1
  std::vector<Int> factors_;
  std::vector<std::vector<Int>> generators_;
};

}  // namespace seccoh
