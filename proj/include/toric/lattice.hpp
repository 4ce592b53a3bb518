#pragma once

// Exact integer linear algebra over Z^d.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the lattice N = Z^d.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator*(const Integer& k, LatticeVector v);
Integer dot(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const LatticeVector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
std::string to_string(const IntMatrix& m);

/// Divides v by the gcd of its coordinates. Throws DimensionError on zero.
LatticeVector primitivize(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
Integer gcd_of(const LatticeVector& v);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// True iff the d vectors of rank d form a basis of Z^d (det = +-1).
bool is_unimodular_basis(std::span<const LatticeVector> vs);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Inverse over Q; throws DimensionError when singular.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws DimensionError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Coordinates of v in a unimodular basis (given as vectors).
std::vector<Integer> coordinates_in_basis(std::span<const LatticeVector> basis,
                                          const LatticeVector& v);

struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

/// U * A * V = S with U, V unimodular, S diagonal, s1 | s2 | ... and s_i >= 0.
/// Pivot: smallest nonzero absolute value of the remaining block.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace toric
