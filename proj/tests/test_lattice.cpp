#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "toric/error.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

void check_smith(const IntMatrix& a) {
  const auto f = smith_normal_form(a);
  CHECK(f.U * a * f.V == f.S);
  CHECK(abs(determinant(f.U)) == 1);
  CHECK(abs(determinant(f.V)) == 1);
  const auto expected = oracle::smith_invariants(oracle::to_mat(a));
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j) CHECK(f.S(i, j) == 0);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(f.S(k, k) >= 0);
    CHECK(f.S(k, k) == expected[k]);
    if (k > 0 && f.S(k - 1, k - 1) != 0) CHECK(f.S(k, k) % f.S(k - 1, k - 1) == 0);
  }
}

}  // namespace

TEST_CASE("primitivize divides by the gcd") {
  CHECK(primitivize(LatticeVector{2, 4, 6}) == LatticeVector{1, 2, 3});
  CHECK(primitivize(LatticeVector{0, 0, 5}) == LatticeVector{0, 0, 1});
  CHECK(primitivize(LatticeVector{1, -1}) == LatticeVector{1, -1});
  CHECK(primitivize(LatticeVector{-4, 6}) == LatticeVector{-2, 3});
  CHECK_THROWS_WITH_AS(primitivize(LatticeVector{0, 0}), "zero vector has no primitive generator", Error);
}

TEST_CASE("primitivize is idempotent and ignores positive multiples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector v{dist(rng), dist(rng), dist(rng)};
    if (v.is_zero()) continue;
    const auto p = primitivize(v);
    CHECK(is_primitive(p));
    CHECK(primitivize(p) == p);
    for (long k = 1; k <= 4; ++k) CHECK(primitivize(Integer(k) * v) == p);
  }
}

TEST_CASE("unimodular bases") {
  std::vector<LatticeVector> id{{1, 0}, {0, 1}}, shear{{1, 0}, {1, 1}}, bad{{1, 1}, {1, -1}};
  CHECK(is_unimodular_basis(id));
  CHECK(is_unimodular_basis(shear));
  CHECK_FALSE(is_unimodular_basis(bad));

  std::vector<LatticeVector> permuted{{1, 1}, {-1, 0}};
  CHECK(is_unimodular_basis(permuted));

  std::vector<LatticeVector> too_few{{1, 0}};
  std::vector<LatticeVector> mixed{{1, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(is_unimodular_basis(too_few), DimensionError);
  CHECK_THROWS_AS(is_unimodular_basis(mixed), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      auto m = random_matrix(rng, n, n, 6);
      CHECK(determinant(m) == oracle::det(oracle::to_mat(m)));
    }
}

TEST_CASE("smith normal form examples") {
  SUBCASE("diag(3,5)") {
    IntMatrix a{{3, 0}, {0, 5}};
    auto f = smith_normal_form(a);
    CHECK(f.S == IntMatrix{{1, 0}, {0, 15}});
    check_smith(a);
  }
  SUBCASE("identity") {
    auto f = smith_normal_form(IntMatrix::identity(3));
    CHECK(f.S == IntMatrix::identity(3));
  }
  SUBCASE("[[2,4],[6,8]]") {
    IntMatrix a{{2, 4}, {6, 8}};
    auto f = smith_normal_form(a);
    CHECK(f.S == IntMatrix{{2, 0}, {0, 4}});
    CHECK(abs(determinant(f.S)) == abs(determinant(a)));
    check_smith(a);
  }
  SUBCASE("rectangular with a zero invariant") {
    check_smith(IntMatrix{{1, 2, 3}, {2, 4, 6}});
    check_smith(IntMatrix{{0, 0}, {0, 0}, {0, 0}});
  }
  CHECK_THROWS(smith_normal_form(IntMatrix(0, 0)));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) check_smith(random_matrix(rng, dim(rng), dim(rng), 9));
}

TEST_CASE("unimodular inverse and coordinates") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_unimodular(4, rng);
    CHECK(g * inverse_unimodular(g) == IntMatrix::identity(4));
    LatticeVector v{3, -1, 4, 1};
    std::vector<LatticeVector> basis;
    for (std::size_t j = 0; j < 4; ++j) basis.push_back(g.column(j));
    auto c = coordinates_in_basis(basis, v);
    LatticeVector back(4);
    for (std::size_t j = 0; j < 4; ++j) back += c[j] * basis[j];
    CHECK(back == v);
  }
}

TEST_CASE("rank over the rationals") {
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix{{1, 0, 0}, {0, 1, 0}}) == 2);
  CHECK(rank(IntMatrix(2, 3)) == 0);
}
