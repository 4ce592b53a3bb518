#pragma once

// Split-tangent criterion, fan isomorphism and the contact classification
// of smooth projective toric varieties of odd dimension.

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Unimodular map carrying one fan onto another.
struct FanIsomorphism {
  IntMatrix matrix;
  std::vector<std::size_t> ray_permutation;  // source ray i -> target ray
};

/// Every wall relation has all alpha coefficients zero, i.e. opposite rays
/// across each wall are negatives of each other. `strict` also demands a
/// projective fan.
bool has_split_tangent(const Fan& fan, bool strict = false);

/// m when the fan is the fan of (P^1)^m in some lattice basis.
std::optional<std::size_t> is_p1_power(const Fan& fan);

/// A witness that some unimodular map carries f1 onto f2, or nullopt.
///
/// The search anchors at the lexicographically least maximal cone of f1 and
/// tries each maximal cone of f2 (in lexicographic order) with each ordering
/// of its rays, pruned by the wall relations around the anchor. The first
/// witness in this order is returned, so the result is deterministic.
std::optional<FanIsomorphism> fan_isomorphic(const Fan& f1, const Fan& f2);

/// Re-checks a witness from scratch: unimodularity, rays to rays, cones to cones.
bool verify_isomorphism(const Fan& from, const Fan& to, const FanIsomorphism& iso);

FanIsomorphism inverse(const FanIsomorphism& iso);
/// first: f -> g, second: g -> h; result: f -> h.
FanIsomorphism compose(const FanIsomorphism& first, const FanIsomorphism& second);

struct Verdict {
  enum class Kind { projective_space, projectivized_tangent_p1_power, not_contact };
  Kind kind = Kind::not_contact;
  /// Half of (dimension - 1); P^{2n+1} or P(T_{(P^1)^{n+1}}).
  std::size_t n = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// "CONTACT: P^3", "CONTACT: P(T_(P1)^2)" or "NOT-CONTACT".
std::string verdict_line(const Verdict& v);

struct ClassificationEvidence {
  std::size_t dimension = 0;
  bool odd_dimension = false;
  std::optional<bool> anticanonical_divisible;  // -K = (n+1) L for some L
  std::vector<Integer> extremal_lengths;
  bool length_dichotomy = false;  // some length equals n+1 or 2n+2
  std::optional<bool> iso_projective_space;
  std::optional<bool> iso_projectivized_tangent;
  std::optional<FanIsomorphism> witness;  // onto the reference fan
  std::string reference;                  // name of the reference fan
};

struct ClassificationReport {
  Verdict verdict;
  ClassificationEvidence evidence;
};

struct ClassifyOptions {
  /// Run both isomorphism tests even when -K is not divisible by n+1.
  bool full_evidence = false;
};

ClassificationReport classify_contact(const Fan& fan, const ClassifyOptions& options = {});

}  // namespace toric
