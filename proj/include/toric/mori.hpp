#pragma once

// Invariant curves, the Mori cone and its extremal rays, and the sign
// profile of their contractions.

#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Numerical class of a 1-cycle, recorded by its intersection numbers with
/// every ray divisor.
struct CurveClass {
  std::vector<Integer> pairing;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend bool operator<(const CurveClass& a, const CurveClass& b) { return a.pairing < b.pairing; }
};

std::string to_string(const CurveClass& c);

/// True iff b is a positive rational multiple of a.
bool same_ray(const CurveClass& a, const CurveClass& b);

/// -K . C, computed by summing the pairing directly.
Integer anticanonical_degree(const CurveClass& c);

enum class ContractionType { fibration, divisorial, small };

std::string to_string(ContractionType t);

struct ContractionProfile {
  CurveClass ray;
  Integer length;
  std::size_t pos_rays = 0;
  std::size_t neg_rays = 0;
  std::size_t zero_rays = 0;
  ContractionType type = ContractionType::fibration;
  std::size_t locus_dim = 0;
  std::size_t fiber_dim = 0;
  /// Only meaningful for fibrations: rank - dim span(positive rays).
  std::size_t image_dim = 0;
};

/// Class of V(tau): the wall relation coefficients, zero off sigma u sigma'.
CurveClass curve_class(const Fan& fan, const Wall& w);

/// Wall classes with exact duplicates merged, in wall order.
std::vector<CurveClass> mori_generators(const Fan& fan);

/// Generators spanning extreme rays of the Mori cone; one per ray, the one
/// of least anticanonical degree.
std::vector<CurveClass> extremal_rays(const Fan& fan);

/// Minimum of -K . [V(tau)] over walls whose class lies on the ray of r.
Integer ray_length(const Fan& fan, const CurveClass& r);

ContractionProfile contraction_profile(const Fan& fan, const CurveClass& r);

namespace detail {
// Variants taking the walls of a fan already known to be smooth, complete
// and projective.
std::vector<CurveClass> extremal_rays_from_walls(const Fan& fan, const std::vector<Wall>& walls);
Integer ray_length_from_walls(const Fan& fan, const std::vector<Wall>& walls, const CurveClass& r);
ContractionProfile contraction_profile_from_walls(const Fan& fan, const std::vector<Wall>& walls,
                                                  const CurveClass& r);
}  // namespace detail

}  // namespace toric
