#pragma once

// Reference computations kept deliberately naive and separate from the
// library: cofactor expansion, brute-force minors, direct cone adjacency.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace oracle {

using toric::Integer;
using Mat = std::vector<std::vector<Integer>>;

// Laplace expansion along the first row.
inline Integer det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Integer term = a[0][j] * det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline Mat to_mat(const toric::IntMatrix& m) {
  Mat out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Smith invariants s_1 | s_2 | ... from determinantal divisors: d_k is the
// gcd of all k x k minors and s_k = d_k / d_{k-1}.
inline std::vector<Integer> smith_invariants(const Mat& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Mat m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        Integer x = det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? Integer(0) : Integer(g / prev));
    prev = g;
  }
  return out;
}

// Kernel of the d x (d+1) matrix with the given columns, by signed maximal
// minors (generalized cross product).
inline std::vector<Integer> cofactor_kernel(const std::vector<toric::LatticeVector>& cols) {
  const std::size_t d = cols.size() - 1;
  std::vector<Integer> k(d + 1);
  for (std::size_t skip = 0; skip <= d; ++skip) {
    Mat m(d, std::vector<Integer>(d));
    std::size_t c = 0;
    for (std::size_t j = 0; j <= d; ++j) {
      if (j == skip) continue;
      for (std::size_t i = 0; i < d; ++i) m[i][c] = cols[j][i];
      ++c;
    }
    Integer x = det(m);
    k[skip] = (skip % 2 == 0) ? x : Integer(-x);
  }
  return k;
}

struct Adjacent {
  std::size_t a, b;
  std::vector<std::size_t> shared;
  std::size_t only_a, only_b;
};

// Pairs of maximal cones sharing d-1 rays, found by direct comparison.
inline std::vector<Adjacent> adjacent_pairs(const toric::Fan& f) {
  std::vector<Adjacent> out;
  for (std::size_t a = 0; a < f.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      const auto& ra = f.max_cones[a].rays;
      const auto& rb = f.max_cones[b].rays;
      Adjacent adj{a, b, {}, 0, 0};
      std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(adj.shared));
      if (adj.shared.size() + 1 != f.rank) continue;
      for (std::size_t r : ra)
        if (!std::binary_search(rb.begin(), rb.end(), r)) adj.only_a = r;
      for (std::size_t r : rb)
        if (!std::binary_search(ra.begin(), ra.end(), r)) adj.only_b = r;
      out.push_back(adj);
    }
  return out;
}

// Wall relation computed from scratch: kernel of the d+1 rays of the two
// cones, scaled so the coefficient on the opposite ray of `a` is 1.
inline std::map<std::size_t, Integer> wall_relation(const toric::Fan& f, const Adjacent& adj) {
  std::vector<std::size_t> idx = adj.shared;
  idx.push_back(adj.only_a);
  idx.push_back(adj.only_b);
  std::vector<toric::LatticeVector> cols;
  for (std::size_t r : idx) cols.push_back(f.rays[r]);
  auto k = cofactor_kernel(cols);
  const Integer scale = k[idx.size() - 2];
  std::map<std::size_t, Integer> rel;
  for (std::size_t i = 0; i < idx.size(); ++i) rel[idx[i]] = k[i] / scale;
  return rel;
}

// Random lattice automorphism with entries bounded by `bound`, built from
// elementary operations that keep every entry within the bound.
inline toric::IntMatrix random_unimodular(std::size_t d, std::mt19937_64& rng, long bound = 5,
                                          std::size_t steps = 0) {
  toric::IntMatrix g = toric::IntMatrix::identity(d);
  if (d == 0) return g;
  if (steps == 0) steps = 4 * d;
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (std::size_t s = 0; s < steps; ++s) {
    toric::IntMatrix next = g;
    const std::size_t i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0:
        next.swap_rows(i, j);
        break;
      case 1:
        next.negate_row(i);
        break;
      default:
        if (i == j) continue;
        next.add_row_multiple(i, j, Integer(mult(rng)));
    }
    bool small = true;
    for (std::size_t r = 0; r < d && small; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (abs(next(r, c)) > bound) {
          small = false;
          break;
        }
    if (small) g = next;
  }
  return g;
}

}  // namespace oracle
