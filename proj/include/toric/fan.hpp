#pragma once

// Simplicial fans: validation, smoothness, completeness, walls, projectivity.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A cone of a fan, stored as the sorted indices of its generating rays.
struct Cone {
  std::vector<std::size_t> rays;

  Cone() = default;
  explicit Cone(std::vector<std::size_t> ray_indices);

  std::size_t dim() const { return rays.size(); }
  bool contains(std::size_t ray) const;
  bool is_face_of(const Cone& other) const;

  friend auto operator<=>(const Cone&, const Cone&) = default;
  friend bool operator==(const Cone&, const Cone&) = default;
};

std::string to_string(const Cone& c);

struct Fan {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> max_cones;

  LatticeVector ray_sum(const Cone& c) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks ray primitivity, duplicate rays, index ranges, cone independence
/// and that any two maximal cones meet in a common face. Never throws.
ValidationReport validate(const Fan& fan);

/// Throws FanError listing every violation.
void require_valid(const Fan& fan);

bool is_smooth(const Fan& fan);

/// Every facet of a maximal cone lies in exactly two maximal cones and the
/// adjacency graph of maximal cones is connected.
bool is_complete(const Fan& fan);

/// A (d-1)-cone separating two maximal cones, with its normalized relation
///   u_opposite + u_opposite_prime + sum_{i in tau} alpha_i u_i = 0.
struct Wall {
  Cone tau;
  std::size_t sigma = 0;        // index into fan.max_cones
  std::size_t sigma_prime = 0;  // index into fan.max_cones
  std::size_t opposite = 0;        // ray of sigma not in tau
  std::size_t opposite_prime = 0;  // ray of sigma_prime not in tau
  std::map<std::size_t, Integer> relation;  // supported on sigma u sigma_prime

  /// Coefficients on the rays of tau.
  std::vector<Integer> alphas() const;
};

/// One wall per (d-1)-cone, ordered lexicographically by tau.
/// Requires a smooth complete fan.
std::vector<Wall> walls(const Fan& fan);

/// Piecewise-linear support function: one linear form per maximal cone,
/// agreeing on shared faces and strictly concave across every wall.
struct SupportFunction {
  std::vector<std::vector<Rational>> slopes;
};

/// Exact LP; nullopt iff the fan is not projective. Requires smooth, complete.
std::optional<SupportFunction> projectivity_witness(const Fan& fan);
bool is_projective(const Fan& fan);

/// Re-checks every equality and strict inequality of a support function.
bool verify_support_function(const Fan& fan, const SupportFunction& psi);

/// Dimension of the orbit closure V(c): rank - dim(c).
std::size_t orbit_dim(const Fan& fan, const Cone& c);

/// Smooth and complete, or PreconditionError naming the failing one.
void require_smooth_complete(const Fan& fan);

namespace detail {
// Same computations without re-validating; callers have checked the fan.
bool smooth_unchecked(const Fan& fan);
bool complete_unchecked(const Fan& fan);
std::vector<Wall> walls_unchecked(const Fan& fan);
std::optional<SupportFunction> support_function_unchecked(const Fan& fan, const std::vector<Wall>& walls);
}  // namespace detail

}  // namespace toric
