#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>

#include "toric/error.hpp"

namespace toric {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (rank() != other.rank()) throw DimensionError("vector ranks differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (rank() != other.rank()) throw DimensionError("vector ranks differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

LatticeVector operator*(const Integer& k, LatticeVector v) {
  for (std::size_t i = 0; i < v.rank(); ++i) v[i] *= k;
  return v;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw DimensionError("vector ranks differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols) throw DimensionError("row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows) throw DimensionError("column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  LatticeVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

LatticeVector IntMatrix::column(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.rank()) throw DimensionError("matrix-vector size mismatch");
  LatticeVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

Integer gcd_of(const LatticeVector& v) {
  Integer g = 0;
  for (std::size_t i = 0; i < v.rank(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  return g;
}

LatticeVector primitivize(const LatticeVector& v) {
  Integer g = gcd_of(v);
  if (g == 0) throw DimensionError("zero vector has no primitive generator");
  LatticeVector out(v);
  for (std::size_t i = 0; i < out.rank(); ++i) mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular_basis(std::span<const LatticeVector> vs) {
  if (vs.empty()) return true;
  const std::size_t d = vs.front().rank();
  if (vs.size() != d) throw DimensionError("basis needs exactly as many vectors as the rank");
  for (const auto& v : vs)
    if (v.rank() != d) throw DimensionError("basis vectors have mixed ranks");
  Integer det = determinant(IntMatrix::from_columns(vs, d));
  return det == 1 || det == -1;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto a = to_rational(m);
  return row_reduce(a, m.cols()).size();
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  if (row_reduce(a, n).size() != n) throw DimensionError("matrix is singular");
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const auto q = rational_inverse(m);
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = q[i][j];
      if (x.get_den() != 1) throw DimensionError("matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::vector<Integer> coordinates_in_basis(std::span<const LatticeVector> basis, const LatticeVector& v) {
  const std::size_t d = v.rank();
  IntMatrix inv = inverse_unimodular(IntMatrix::from_columns(basis, d));
  return (inv * v).coords();
}

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("Smith normal form of an empty matrix");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        Integer x = abs(s(i, j));
        if (!best || x < best_abs) {
          best = {i, j};
          best_abs = x;
        }
      }
    return best;
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool block_empty = false;
    for (;;) {
      auto pivot = find_pivot(t);
      if (!pivot) {
        block_empty = true;
        break;
      }
      s.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      s.swap_columns(t, pivot->second);
      v.swap_columns(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (block_empty) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

}  // namespace toric
