#pragma once

// Exact rational feasibility for small linear systems (dense two-phase
// simplex, Bland's rule). Used for projectivity, extreme-ray and cone
// separation tests.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

enum class Relation { equal, greater_equal, less_equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : nonneg_(num_vars, false) {}

  std::size_t num_vars() const { return nonneg_.size(); }
  void set_nonnegative(std::size_t var) { nonneg_.at(var) = true; }
  bool is_nonnegative(std::size_t var) const { return nonneg_[var]; }

  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// True iff x satisfies every constraint and sign restriction exactly.
  bool satisfied_by(const std::vector<Rational>& x) const;

 private:
  std::vector<bool> nonneg_;
  std::vector<LinearConstraint> constraints_;
};

/// A point satisfying the system, or nullopt when it is infeasible.
std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system);

}  // namespace toric
