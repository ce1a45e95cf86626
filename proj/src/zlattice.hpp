#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace kbgq {

/// Dense integer matrix. Lattices are the row spans; maps act on row vectors
/// from the right (x -> x * M).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols = 0);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Int> row(std::size_t r) const;
  std::vector<std::vector<Int>> to_rows() const;

  bool is_zero() const;
  IntMatrix transpose() const;
  /// Rows [begin, end).
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  void append_row(const std::vector<Int>& r);
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  // Elementary row operations; also used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& q);
  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // same shape as the input, zero rows last
  IntMatrix u;  // unimodular, u * input == h
  std::size_t rank = 0;
};

/// Row Hermite normal form: pivots positive, entries above a pivot in
/// [0, pivot).
HnfResult hnf_with_transform(const IntMatrix& m);
/// Nonzero rows of the Hermite normal form: the canonical lattice basis.
IntMatrix hnf(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;
  IntMatrix u, v;          // u * m * v == d
  IntMatrix u_inv, v_inv;  // u_inv * d * v_inv == m
  std::vector<Int> diagonal;  // nonzero invariant factors, each dividing the next
};

SnfResult snf(const IntMatrix& m);

/// Left kernel {x : x * m == 0} as an HNF basis (rows x dim = m.rows()).
IntMatrix kernel(const IntMatrix& m);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

/// Z^cols modulo the row span of `relations`.
CokernelInvariants cokernel_invariants(const IntMatrix& relations);

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);
/// Q-span of the rows intersected with Z^n.
IntMatrix saturation(const IntMatrix& a);

/// Coordinates of v in the independent rows of `basis` (HNF form), or nullopt
/// if v is not in their span.
std::optional<std::vector<Int>> coordinates_in(const IntMatrix& basis, const std::vector<Int>& v);
bool lattice_contains(const IntMatrix& lattice, const IntMatrix& sub);

struct LatticeIndex {
  bool finite = true;
  Int value;  // meaningful when finite
  std::string to_string() const;
};

/// [lattice : sub]; infinite when ranks differ. Throws ValidationError when
/// sub is not contained in lattice.
LatticeIndex lattice_index(const IntMatrix& lattice, const IntMatrix& sub);

/// Structure constants c[i][j][k] of a Z-algebra on a basis of size n.
class MultTable {
 public:
  MultTable() = default;
  explicit MultTable(std::size_t n) : n_(n), c_(n * n * n, 0) {}
  std::size_t dim() const { return n_; }
  Int& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Int& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  std::vector<Int> multiply(const std::vector<Int>& x, const std::vector<Int>& y) const;

 private:
  std::size_t n_ = 0;
  std::vector<Int> c_;
};

/// Span of all products a * b with a, b ranging over the rows of A and B.
IntMatrix product_lattice(const IntMatrix& a, const IntMatrix& b, const MultTable& table);

/// Rank over Q.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace kbgq
