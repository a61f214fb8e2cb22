#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Dense row-major matrix over arbitrary-precision integers.  The
/// carrier for ray matrices, normal forms and their witnesses; entry
/// growth during elimination makes fixed-width integers unusable here.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  std::vector<Int> row(std::size_t i) const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);

  bool is_zero_row(std::size_t i) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

std::vector<Int> mat_vec(const IntMatrix& a, std::span<const Int> x);
std::vector<Int> vec_mat(std::span<const Int> x, const IntMatrix& a);
Int dot(std::span<const Int> a, std::span<const Int> b);

/// Diagonalization with divisibility chain d_1 | d_2 | ... and
/// unimodular witnesses: left * a * right equals diag(invariant_factors)
/// padded with zeros.  invariant_factors has length min(rows, cols);
/// zero entries trail the chain.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Int> invariant_factors;

  std::size_t rank() const;
  /// Factors > 1, i.e. the torsion of the cokernel; ones are suppressed.
  std::vector<Int> torsion() const;
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row echelon form h = transform * a with positive pivots and the
/// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Canonical basis of the left kernel {x : x^T a = 0}, one basis
/// vector per row, normalized via Hermite form.  The kernel lattice is
/// saturated, so every basis row is automatically primitive.
IntMatrix kernel_basis(const IntMatrix& a);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const CokernelInvariants&) const = default;
};

/// Invariants of Z^rows / (a * Z^cols).
CokernelInvariants cokernel_invariants(const IntMatrix& a);

/// v divided by the gcd of its entries; direction unchanged.
/// The zero vector has no direction and is rejected.
std::vector<Int> primitive(std::span<const Int> v);
bool is_primitive(std::span<const Int> v);

std::size_t rank(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

/// True iff the rows extend to a Z-basis of Z^cols, i.e. all Smith
/// invariant factors equal 1.
bool rows_extend_to_basis(const IntMatrix& rows);

/// Dense rational matrix; only what the exact solves need.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_int(const IntMatrix& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> entries_;
};

std::vector<Rat> mat_vec(const RatMatrix& a, std::span<const Int> x);
std::vector<Rat> mat_vec(const RatMatrix& a, std::span<const Rat> x);

/// Exact inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const IntMatrix& a);

/// Solves a * x = rhs for square a; nullopt when singular.
std::optional<std::vector<Rat>> solve(const IntMatrix& a, std::span<const Rat> rhs);
std::optional<std::vector<Rat>> solve(const IntMatrix& a, std::span<const Int> rhs);

/// adj * a == det * identity, det != 0.
struct Adjugate {
  IntMatrix adj;
  Int det;
};
std::optional<Adjugate> adjugate(const IntMatrix& a);

}  // namespace toric
