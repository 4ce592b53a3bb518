#pragma once

// Torus-invariant divisors and the divisor class group of a smooth complete
// toric variety.

#include <memory>
#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct CurveClass;

/// sum_rho coeffs[rho] * D_rho, one coefficient per ray of the fan.
struct TDivisor {
  std::vector<Integer> coeffs;

  friend bool operator==(const TDivisor&, const TDivisor&) = default;
};

TDivisor operator+(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a, const TDivisor& b);
TDivisor operator*(const Integer& k, const TDivisor& d);

/// Z^{rays} / M with a basis fixed by the Smith normal form of the ray matrix.
class ClassGroup {
 public:
  explicit ClassGroup(const Fan& fan);

  std::size_t num_rays() const { return num_rays_; }
  std::size_t rank() const { return num_rays_ - lattice_rank_; }

  std::vector<Integer> coordinates(const TDivisor& d) const;
  /// A divisor whose class has the given coordinates.
  TDivisor representative(const std::vector<Integer>& coords) const;

 private:
  std::size_t num_rays_;
  std::size_t lattice_rank_;
  IntMatrix to_smith_;    // U
  IntMatrix from_smith_;  // U^{-1}
};

struct DivisorClass {
  TDivisor representative;
  std::vector<Integer> class_vector;
  std::shared_ptr<const ClassGroup> group;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.class_vector == b.class_vector;
  }
};

/// #rays - rank. Requires a smooth complete fan.
std::size_t picard_rank(const Fan& fan);

/// K_X = -sum_rho D_rho.
TDivisor canonical_divisor(const Fan& fan);

/// div(chi^m) = sum_rho <m, u_rho> D_rho.
TDivisor principal_divisor(const Fan& fan, const LatticeVector& m);

std::shared_ptr<const ClassGroup> class_group(const Fan& fan);

DivisorClass class_of(const Fan& fan, const TDivisor& d);
DivisorClass class_of(std::shared_ptr<const ClassGroup> group, const TDivisor& d);

/// The class L with k*L = c, if any. k must be positive.
std::optional<DivisorClass> divide_class(const DivisorClass& c, const Integer& k);

/// Intersection number D . C.
Integer intersect(const Fan& fan, const TDivisor& d, const CurveClass& c);

}  // namespace toric
