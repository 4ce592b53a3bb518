#pragma once

// Reference fans.

#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Rank-0 fan with the single zero cone.
Fan fan_point();

/// P^n: rays e_1..e_n and -(e_1+...+e_n), maximal cones all n-subsets.
Fan fan_projective_space(std::size_t n);

/// (P^1)^m with rays ordered e_1, -e_1, e_2, -e_2, ...
Fan fan_p1_power(std::size_t m);

/// Product fan in N_1 + N_2: rays of f1 first, then rays of f2.
Fan product_fan(const Fan& f1, const Fan& f2);

/// Hirzebruch surface F_a: rays e_1, e_2, -e_1 + a e_2, -e_2.
Fan fan_hirzebruch(std::size_t a);

/// Projectivization P(O(D_0) + ... + O(D_r)) over a smooth complete base,
/// as the space of rank-one quotients. `degrees[0]` must be zero.
///
/// Rays: base rays lifted to (u_rho, D_1[rho], ..., D_r[rho]), followed
/// by fiber rays f_1..f_r and f_0 = -(f_1 + ... + f_r). Over each base cone
/// the fan is (lifted base cone) x (fan of P^r).
Fan fan_projectivized_split_bundle(const Fan& base, const std::vector<TDivisor>& degrees);

/// P(T) over (P^1)^m with T = O(2,0,..,0) + ... + O(0,..,0,2), twisted so the
/// first summand is trivial. Dimension 2m - 1.
Fan fan_projectivized_tangent_p1_power(std::size_t m);

/// The degree divisors used for the tangent bundle of (P^1)^m, normalized.
std::vector<TDivisor> p1_power_tangent_degrees(std::size_t m);

/// Image of a fan under a lattice automorphism g (rays u -> g u).
Fan transform_fan(const IntMatrix& g, const Fan& fan);

}  // namespace toric
