#include "toric/mori.hpp"

#include <algorithm>

#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/exact_lp.hpp"

namespace toric {

std::string to_string(const CurveClass& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.pairing.size(); ++i) {
    if (i) out += ",";
    out += c.pairing[i].get_str();
  }
  return out + "]";
}

bool same_ray(const CurveClass& a, const CurveClass& b) {
  if (a.pairing.size() != b.pairing.size()) return false;
  std::size_t pivot = a.pairing.size();
  for (std::size_t i = 0; i < a.pairing.size(); ++i)
    if (a.pairing[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == a.pairing.size()) return false;
  if (sgn(a.pairing[pivot]) != sgn(b.pairing[pivot])) return false;
  for (std::size_t i = 0; i < a.pairing.size(); ++i)
    if (a.pairing[i] * b.pairing[pivot] != b.pairing[i] * a.pairing[pivot]) return false;
  return true;
}

Integer anticanonical_degree(const CurveClass& c) {
  Integer s = 0;
  for (const auto& x : c.pairing) s += x;
  return s;
}

std::string to_string(ContractionType t) {
  switch (t) {
    case ContractionType::fibration:
      return "fibration";
    case ContractionType::divisorial:
      return "divisorial";
    case ContractionType::small:
      return "small";
  }
  return "unknown";
}

namespace {

CurveClass class_from_wall(std::size_t num_rays, const Wall& w) {
  CurveClass c{std::vector<Integer>(num_rays, 0)};
  for (const auto& [r, coeff] : w.relation) c.pairing.at(r) = coeff;
  return c;
}

// Validates once and returns the walls for the internal helpers.
std::vector<Wall> checked_walls(const Fan& fan) {
  require_smooth_complete(fan);
  auto ws = detail::walls_unchecked(fan);
  if (!detail::support_function_unchecked(fan, ws))
    throw PreconditionError("projective", "no strictly convex support function exists");
  return ws;
}

std::vector<CurveClass> generators_from_walls(const Fan& fan, const std::vector<Wall>& ws) {
  std::vector<CurveClass> out;
  for (const auto& w : ws) {
    CurveClass c = class_from_wall(fan.rays.size(), w);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

Integer length_via_divisor(const Fan& fan, const CurveClass& c) {
  return intersect(fan, Integer(-1) * canonical_divisor(fan), c);
}

// Generators after collapsing positive multiples, keeping the one of least
// anticanonical degree (first on ties).
std::vector<CurveClass> ray_representatives(const std::vector<CurveClass>& gens) {
  std::vector<CurveClass> reps;
  for (const auto& g : gens) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](const CurveClass& r) { return same_ray(r, g); });
    if (it == reps.end())
      reps.push_back(g);
    else if (anticanonical_degree(g) < anticanonical_degree(*it))
      *it = g;
  }
  return reps;
}

}  // namespace

CurveClass curve_class(const Fan& fan, const Wall& w) {
  const std::size_t m = fan.max_cones.size();
  if (w.sigma >= m || w.sigma_prime >= m || !w.tau.is_face_of(fan.max_cones[w.sigma]) ||
      !w.tau.is_face_of(fan.max_cones[w.sigma_prime]) || w.tau.dim() + 1 != fan.rank)
    throw PreconditionError("wall of this fan", "tau " + to_string(w.tau) + " does not separate the named cones");
  LatticeVector sum(fan.rank);
  for (const auto& [r, coeff] : w.relation) {
    if (r >= fan.rays.size()) throw PreconditionError("wall of this fan", "relation uses an unknown ray");
    sum += coeff * fan.rays[r];
  }
  if (!sum.is_zero()) throw PreconditionError("wall of this fan", "relation does not vanish on this fan's rays");
  return class_from_wall(fan.rays.size(), w);
}

std::vector<CurveClass> mori_generators(const Fan& fan) { return generators_from_walls(fan, checked_walls(fan)); }

std::vector<CurveClass> extremal_rays(const Fan& fan) {
  return detail::extremal_rays_from_walls(fan, checked_walls(fan));
}

std::vector<CurveClass> detail::extremal_rays_from_walls(const Fan& fan, const std::vector<Wall>& ws) {
  const auto reps = ray_representatives(generators_from_walls(fan, ws));
  const std::size_t n = fan.rays.size();
  std::vector<CurveClass> out;
  for (std::size_t j = 0; j < reps.size(); ++j) {
    // Is reps[j] a nonnegative combination of the other generators?
    LinearSystem lp(reps.size() - 1);
    for (std::size_t v = 0; v < lp.num_vars(); ++v) lp.set_nonnegative(v);
    for (std::size_t coord = 0; coord < n; ++coord) {
      std::vector<Rational> row;
      row.reserve(lp.num_vars());
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (i != j) row.emplace_back(reps[i].pairing[coord]);
      lp.add(std::move(row), Relation::equal, Rational(reps[j].pairing[coord]));
    }
    if (!find_feasible_point(lp)) out.push_back(reps[j]);
  }
  return out;
}

namespace {

const Wall* minimal_wall_on_ray(const Fan& fan, const std::vector<Wall>& ws, const CurveClass& r,
                                Integer& length) {
  const Wall* best = nullptr;
  for (const auto& w : ws) {
    CurveClass c = class_from_wall(fan.rays.size(), w);
    if (!same_ray(r, c)) continue;
    Integer l = length_via_divisor(fan, c);
    if (!best || l < length) {
      best = &w;
      length = l;
    }
  }
  return best;
}

void require_extremal(const Fan& fan, const std::vector<Wall>& ws, const CurveClass& r) {
  const auto rays = detail::extremal_rays_from_walls(fan, ws);
  if (std::none_of(rays.begin(), rays.end(), [&](const CurveClass& e) { return same_ray(e, r); }))
    throw PreconditionError("extremal ray", to_string(r) + " does not span an extremal ray");
}

}  // namespace

Integer ray_length(const Fan& fan, const CurveClass& r) {
  const auto ws = checked_walls(fan);
  require_extremal(fan, ws, r);
  return detail::ray_length_from_walls(fan, ws, r);
}

Integer detail::ray_length_from_walls(const Fan& fan, const std::vector<Wall>& ws, const CurveClass& r) {
  Integer length;
  if (!minimal_wall_on_ray(fan, ws, r, length)) throw ConsistencyError("extremal ray carries no wall");
  return length;
}

ContractionProfile contraction_profile(const Fan& fan, const CurveClass& r) {
  const auto ws = checked_walls(fan);
  require_extremal(fan, ws, r);
  return detail::contraction_profile_from_walls(fan, ws, r);
}

ContractionProfile detail::contraction_profile_from_walls(const Fan& fan, const std::vector<Wall>& ws,
                                                          const CurveClass& r) {
  const std::size_t d = fan.rank;

  ContractionProfile p;
  const Wall* w = minimal_wall_on_ray(fan, ws, r, p.length);
  if (!w) throw ConsistencyError("extremal ray carries no wall");
  p.ray = class_from_wall(fan.rays.size(), *w);

  std::vector<LatticeVector> positive;
  for (const auto& [ray, coeff] : w->relation) {
    if (coeff > 0) {
      ++p.pos_rays;
      positive.push_back(fan.rays[ray]);
    } else if (coeff < 0) {
      ++p.neg_rays;
    } else {
      ++p.zero_rays;
    }
  }
  p.type = p.neg_rays == 0   ? ContractionType::fibration
           : p.neg_rays == 1 ? ContractionType::divisorial
                             : ContractionType::small;
  p.locus_dim = d - p.neg_rays;
  p.fiber_dim = p.pos_rays - 1;

  if (p.type == ContractionType::fibration) {
    p.image_dim = d - rank(IntMatrix::from_columns(positive, d));
    if (p.fiber_dim + p.image_dim != d)
      throw ConsistencyError("fibration of " + to_string(r) + " has fiber and image dimensions not adding up");
  }
  // Wisniewski: dim F + dim locus >= dim X + length - 1
  if (Integer(p.fiber_dim + p.locus_dim) < Integer(d) + p.length - 1)
    throw ConsistencyError("contraction of " + to_string(r) + " violates the Wisniewski inequality");
  return p;
}

}  // namespace toric
