#include "toric/exact_lp.hpp"

#include <cstdint>

#include "toric/error.hpp"

namespace toric {

void LinearSystem::add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars()) throw DimensionError("constraint has wrong number of coefficients");
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (nonneg_[j] && x[j] < 0) return false;
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    switch (c.relation) {
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
    }
  }
  return true;
}

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system) {
  const std::size_t n = system.num_vars();
  const auto& rows = system.constraints();
  const std::size_t m = rows.size();

  // Column layout: split free variables, then slacks, then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!system.is_nonnegative(j)) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (rows[i].relation != Relation::equal) slack_col[i] = cols++;
  const std::size_t first_artificial = cols;
  cols += m;

  // tableau[i][cols] holds the right-hand side
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      t[i][pos_col[j]] = c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) t[i][neg_col[j]] = -c.coeffs[j];
    }
    if (c.relation == Relation::greater_equal) t[i][slack_col[i]] = -1;
    if (c.relation == Relation::less_equal) t[i][slack_col[i]] = 1;
    t[i][cols] = c.rhs;
    if (c.rhs < 0)
      for (auto& x : t[i]) x = -x;
    t[i][first_artificial + i] = 1;
    basis[i] = first_artificial + i;
  }

  // Phase-one objective: minimise the sum of artificials.
  std::vector<Rational> reduced(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < first_artificial; ++j) reduced[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) reduced[cols] -= t[i][cols];

  for (;;) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < first_artificial; ++j)
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter == SIZE_MAX) break;

    std::size_t leave = SIZE_MAX;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == SIZE_MAX || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always limits the step.
    if (leave == SIZE_MAX) throw ConsistencyError("unbounded phase-one simplex");

    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (reduced[enter] != 0) {
      Rational f = reduced[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) reduced[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (reduced[cols] != 0) return std::nullopt;

  std::vector<Rational> value(cols, 0);
  for (std::size_t i = 0; i < m; ++i) value[basis[i]] = t[i][cols];
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= value[neg_col[j]];
  }
  if (!system.satisfied_by(x)) throw ConsistencyError("simplex returned an infeasible point");
  return x;
}

}  // namespace toric
