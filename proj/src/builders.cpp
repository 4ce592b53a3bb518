#include "toric/builders.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

LatticeVector unit(std::size_t rank, std::size_t i, long value = 1) {
  LatticeVector v(rank);
  v[i] = value;
  return v;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Cone> subsets(std::size_t n, std::size_t k) {
  std::vector<Cone> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) idx.push_back(i);
    out.emplace_back(std::move(idx));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

Fan fan_point() {
  Fan f;
  f.rank = 0;
  f.max_cones.push_back(Cone{});
  return f;
}

Fan fan_projective_space(std::size_t n) {
  if (n == 0) throw Error("projective space needs dimension at least 1");
  Fan f;
  f.rank = n;
  LatticeVector last(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.rays.push_back(unit(n, i));
    last[i] = -1;
  }
  f.rays.push_back(last);
  f.max_cones = subsets(n + 1, n);
  return f;
}

Fan fan_p1_power(std::size_t m) {
  if (m == 0) throw Error("a power of P^1 needs exponent at least 1");
  Fan f;
  f.rank = m;
  for (std::size_t i = 0; i < m; ++i) {
    f.rays.push_back(unit(m, i));
    f.rays.push_back(unit(m, i, -1));
  }
  for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) idx.push_back(2 * i + ((signs >> (m - 1 - i)) & 1));
    f.max_cones.emplace_back(std::move(idx));
  }
  return f;
}

Fan product_fan(const Fan& f1, const Fan& f2) {
  Fan f;
  f.rank = f1.rank + f2.rank;
  for (const auto& u : f1.rays) {
    std::vector<Integer> c = u.coords();
    c.resize(f.rank, 0);
    f.rays.emplace_back(std::move(c));
  }
  for (const auto& u : f2.rays) {
    std::vector<Integer> c(f1.rank, 0);
    c.insert(c.end(), u.coords().begin(), u.coords().end());
    f.rays.emplace_back(std::move(c));
  }
  const std::size_t offset = f1.rays.size();
  for (const auto& a : f1.max_cones)
    for (const auto& b : f2.max_cones) {
      std::vector<std::size_t> idx = a.rays;
      for (std::size_t r : b.rays) idx.push_back(offset + r);
      f.max_cones.emplace_back(std::move(idx));
    }
  return f;
}

Fan fan_hirzebruch(std::size_t a) {
  Fan f;
  f.rank = 2;
  f.rays = {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, static_cast<long>(a)},
            LatticeVector{0, -1}};
  f.max_cones = {Cone({0, 1}), Cone({1, 2}), Cone({2, 3}), Cone({3, 0})};
  return f;
}

Fan fan_projectivized_split_bundle(const Fan& base, const std::vector<TDivisor>& degrees) {
  require_smooth_complete(base);
  if (degrees.size() < 2) throw Error("a projective bundle needs at least two summands");
  const std::size_t n = base.rays.size();
  for (const auto& deg : degrees)
    if (deg.coeffs.size() != n) throw DimensionError("degree divisor does not match the base fan's rays");
  if (std::any_of(degrees[0].coeffs.begin(), degrees[0].coeffs.end(), [](const Integer& c) { return c != 0; }))
    throw Error("first degree divisor must be zero; subtract it from every summand (P(E) = P(E (x) L))");

  const std::size_t r = degrees.size() - 1;
  const std::size_t d = base.rank;
  Fan f;
  f.rank = d + r;
  for (std::size_t rho = 0; rho < n; ++rho) {
    std::vector<Integer> c = base.rays[rho].coords();
    for (std::size_t i = 1; i <= r; ++i) c.push_back(degrees[i].coeffs[rho]);
    f.rays.emplace_back(std::move(c));
  }
  LatticeVector f0(d + r);
  for (std::size_t i = 0; i < r; ++i) {
    f.rays.push_back(unit(d + r, d + i));
    f0[d + i] = -1;
  }
  f.rays.push_back(f0);

  // fiber ray j sits at index n + j - 1 for j >= 1, f_0 at n + r
  auto fiber_index = [&](std::size_t j) { return j == 0 ? n + r : n + j - 1; };
  for (const auto& sigma : base.max_cones)
    for (std::size_t skip = 0; skip <= r; ++skip) {
      std::vector<std::size_t> idx = sigma.rays;
      for (std::size_t j = 0; j <= r; ++j)
        if (j != skip) idx.push_back(fiber_index(j));
      f.max_cones.emplace_back(std::move(idx));
    }
  return f;
}

std::vector<TDivisor> p1_power_tangent_degrees(std::size_t m) {
  std::vector<TDivisor> degrees;
  for (std::size_t i = 0; i < m; ++i) {
    TDivisor d{std::vector<Integer>(2 * m, 0)};
    d.coeffs[2 * i] = 1;
    d.coeffs[2 * i + 1] = 1;
    degrees.push_back(std::move(d));
  }
  const TDivisor first = degrees[0];
  for (auto& d : degrees) d = d - first;
  return degrees;
}

Fan fan_projectivized_tangent_p1_power(std::size_t m) {
  if (m < 2) throw Error("projectivized tangent bundle of (P^1)^m needs m >= 2");
  return fan_projectivized_split_bundle(fan_p1_power(m), p1_power_tangent_degrees(m));
}

Fan transform_fan(const IntMatrix& g, const Fan& fan) {
  if (g.rows() != fan.rank || g.cols() != fan.rank) throw DimensionError("transformation has wrong size");
  Fan out = fan;
  for (auto& u : out.rays) u = g * u;
  return out;
}

}  // namespace toric
