#include "toric/fan.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "toric/error.hpp"
#include "toric/exact_lp.hpp"

namespace toric {

Cone::Cone(std::vector<std::size_t> ray_indices) : rays(std::move(ray_indices)) {
  std::sort(rays.begin(), rays.end());
}

bool Cone::contains(std::size_t ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

bool Cone::is_face_of(const Cone& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(), rays.end());
}

std::string to_string(const Cone& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.rays[i]);
  }
  return out + "]";
}

LatticeVector Fan::ray_sum(const Cone& c) const {
  LatticeVector s(rank);
  for (std::size_t r : c.rays) s += rays.at(r);
  return s;
}

std::vector<Integer> Wall::alphas() const {
  std::vector<Integer> out;
  out.reserve(tau.rays.size());
  for (std::size_t r : tau.rays) out.push_back(relation.at(r));
  return out;
}

namespace {

std::vector<LatticeVector> cone_vectors(const Fan& fan, const Cone& c) {
  std::vector<LatticeVector> out;
  out.reserve(c.dim());
  for (std::size_t r : c.rays) out.push_back(fan.rays[r]);
  return out;
}

Rational apply(const std::vector<Rational>& form, const LatticeVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) s += form[i] * u[i];
  return s;
}

// Linear form taking `values[i]` on the i-th ray of a full-dimensional cone.
std::vector<Rational> form_with_values(const std::vector<std::vector<Rational>>& inverse,
                                       const std::vector<Rational>& values) {
  // With B the matrix of ray columns, m^T B = values, so m = B^{-T} values.
  const std::size_t d = values.size();
  std::vector<Rational> m(d, 0);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) m[k] += inverse[i][k] * values[i];
  return m;
}

bool separated_by(const std::vector<Rational>& m, const Fan& fan, const Cone& other,
                  const Cone& self) {
  for (std::size_t r : other.rays) {
    if (self.contains(r)) continue;
    if (apply(m, fan.rays[r]) >= 0) return false;
  }
  return true;
}

// Full-dimensional simplicial cones meet in their common face iff some linear
// form vanishes on the common rays and strictly separates the remaining ones.
bool meet_in_common_face(const Fan& fan, const Cone& a, const Cone& b,
                         const std::vector<std::vector<Rational>>& inv_a,
                         const std::vector<std::vector<Rational>>& inv_b) {
  const std::size_t d = fan.rank;
  auto candidate = [&](const Cone& self, const Cone& other, const auto& inv) {
    std::vector<Rational> values(d);
    for (std::size_t i = 0; i < d; ++i) values[i] = other.contains(self.rays[i]) ? 0 : 1;
    return separated_by(form_with_values(inv, values), fan, other, self);
  };
  if (candidate(a, b, inv_a) || candidate(b, a, inv_b)) return true;

  LinearSystem lp(d);
  for (std::size_t r : a.rays) {
    std::vector<Rational> row(fan.rays[r].coords().begin(), fan.rays[r].coords().end());
    lp.add(std::move(row), b.contains(r) ? Relation::equal : Relation::greater_equal, b.contains(r) ? 0 : 1);
  }
  for (std::size_t r : b.rays) {
    if (a.contains(r)) continue;
    std::vector<Rational> row(fan.rays[r].coords().begin(), fan.rays[r].coords().end());
    lp.add(std::move(row), Relation::less_equal, -1);
  }
  return find_feasible_point(lp).has_value();
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  ValidationReport report;
  auto& v = report.violations;
  const std::size_t d = fan.rank;
  const std::size_t n = fan.rays.size();

  bool rays_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = fan.rays[i];
    if (u.rank() != d) {
      v.push_back("ray " + std::to_string(i) + " has length " + std::to_string(u.rank()) +
                  ", expected " + std::to_string(d));
      rays_ok = false;
    } else if (u.is_zero()) {
      v.push_back("zero ray " + std::to_string(i));
      rays_ok = false;
    } else if (!is_primitive(u)) {
      v.push_back("non-primitive ray " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (fan.rays[i] == fan.rays[j])
        v.push_back("duplicate ray " + std::to_string(j) + " (same as " + std::to_string(i) + ")");

  if (fan.max_cones.empty()) v.push_back("fan has no maximal cones");

  std::vector<bool> cone_ok(fan.max_cones.size(), true);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    const auto& c = fan.max_cones[k];
    const std::string name = "cone " + std::to_string(k);
    bool in_range = true;
    for (std::size_t r : c.rays) {
      if (r >= n) {
        v.push_back("index out of range: " + name + " uses ray " + std::to_string(r) + ", fan has " +
                    std::to_string(n) + " rays");
        in_range = false;
      } else {
        used[r] = true;
      }
    }
    if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end()) {
      v.push_back(name + " repeats a ray");
      cone_ok[k] = false;
    }
    if (!in_range) cone_ok[k] = false;
    if (c.dim() != d) {
      v.push_back(name + " is not full-dimensional (" + std::to_string(c.dim()) + " rays, rank " +
                  std::to_string(d) + ")");
      cone_ok[k] = false;
    }
    if (cone_ok[k] && rays_ok) {
      auto vecs = cone_vectors(fan, c);
      if (rank(IntMatrix::from_columns(vecs, d)) != c.dim()) {
        v.push_back(name + " is not simplicial (rays linearly dependent)");
        cone_ok[k] = false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) v.push_back("ray " + std::to_string(i) + " is in no maximal cone");

  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    for (std::size_t l = 0; l < k; ++l)
      if (fan.max_cones[k] == fan.max_cones[l]) {
        v.push_back("duplicate maximal cone " + std::to_string(k) + " (same as " + std::to_string(l) + ")");
        cone_ok[k] = false;
      }

  if (!rays_ok) return report;
  std::vector<std::vector<std::vector<Rational>>> inverses(fan.max_cones.size());
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    if (cone_ok[k] && d > 0) {
      auto vecs = cone_vectors(fan, fan.max_cones[k]);
      inverses[k] = rational_inverse(IntMatrix::from_columns(vecs, d));
    }
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    if (!cone_ok[k] || d == 0) continue;
    for (std::size_t l = k + 1; l < fan.max_cones.size(); ++l) {
      if (!cone_ok[l]) continue;
      if (!meet_in_common_face(fan, fan.max_cones[k], fan.max_cones[l], inverses[k], inverses[l]))
        v.push_back("maximal cones " + std::to_string(k) + " and " + std::to_string(l) +
                    " do not meet in a common face");
    }
  }
  return report;
}

void require_valid(const Fan& fan) {
  auto report = validate(fan);
  if (!report.ok()) throw FanError(std::move(report.violations));
}

bool is_smooth(const Fan& fan) {
  require_valid(fan);
  return detail::smooth_unchecked(fan);
}

bool detail::smooth_unchecked(const Fan& fan) {
  for (const auto& c : fan.max_cones) {
    auto vecs = cone_vectors(fan, c);
    if (!is_unimodular_basis(vecs)) return false;
  }
  return true;
}

namespace {

// facet -> indices of maximal cones containing it
std::map<Cone, std::vector<std::size_t>> facet_incidence(const Fan& fan) {
  std::map<Cone, std::vector<std::size_t>> facets;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    const auto& c = fan.max_cones[k];
    for (std::size_t drop = 0; drop < c.dim(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < c.dim(); ++i)
        if (i != drop) rest.push_back(c.rays[i]);
      facets[Cone(std::move(rest))].push_back(k);
    }
  }
  return facets;
}

}  // namespace

bool is_complete(const Fan& fan) {
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    if (fan.max_cones[k].dim() != fan.rank)
      throw PreconditionError("pure", "maximal cone " + std::to_string(k) + " is not full-dimensional");
  require_valid(fan);
  return detail::complete_unchecked(fan);
}

bool detail::complete_unchecked(const Fan& fan) {
  const auto facets = facet_incidence(fan);
  std::vector<std::vector<std::size_t>> adjacent(fan.max_cones.size());
  for (const auto& [facet, cones] : facets) {
    if (cones.size() != 2) return false;
    adjacent[cones[0]].push_back(cones[1]);
    adjacent[cones[1]].push_back(cones[0]);
  }
  std::vector<bool> seen(fan.max_cones.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t l : adjacent[k])
      if (!seen[l]) {
        seen[l] = true;
        ++reached;
        queue.push_back(l);
      }
  }
  return reached == fan.max_cones.size();
}

void require_smooth_complete(const Fan& fan) {
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    if (fan.max_cones[k].dim() != fan.rank)
      throw PreconditionError("pure", "maximal cone " + std::to_string(k) + " is not full-dimensional");
  require_valid(fan);
  if (!detail::smooth_unchecked(fan)) throw PreconditionError("smooth", "some maximal cone is not unimodular");
  if (!detail::complete_unchecked(fan)) throw PreconditionError("complete", "fan does not cover the whole space");
}

std::vector<Wall> walls(const Fan& fan) {
  if (!is_smooth(fan)) throw PreconditionError("smooth", "wall relations need unimodular cones");
  return detail::walls_unchecked(fan);
}

std::vector<Wall> detail::walls_unchecked(const Fan& fan) {
  std::vector<Wall> out;
  for (const auto& [tau, cones] : facet_incidence(fan)) {
    if (cones.size() != 2) throw PreconditionError("complete", "facet " + to_string(tau) + " is on the boundary");
    Wall w;
    w.tau = tau;
    w.sigma = cones[0];
    w.sigma_prime = cones[1];
    const Cone& sigma = fan.max_cones[w.sigma];
    const Cone& sigma_prime = fan.max_cones[w.sigma_prime];
    for (std::size_t r : sigma.rays)
      if (!tau.contains(r)) w.opposite = r;
    for (std::size_t r : sigma_prime.rays)
      if (!tau.contains(r)) w.opposite_prime = r;

    auto basis = cone_vectors(fan, sigma);
    auto coords = coordinates_in_basis(basis, fan.rays[w.opposite_prime]);
    for (std::size_t i = 0; i < sigma.dim(); ++i) {
      const std::size_t r = sigma.rays[i];
      if (r == w.opposite) {
        if (coords[i] != -1)
          throw ConsistencyError("cones " + to_string(sigma) + " and " + to_string(sigma_prime) +
                                 " are not on opposite sides of their common facet");
        w.relation[r] = 1;
      } else {
        w.relation[r] = -coords[i];
      }
    }
    w.relation[w.opposite_prime] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<SupportFunction> projectivity_witness(const Fan& fan) {
  require_smooth_complete(fan);
  return detail::support_function_unchecked(fan, detail::walls_unchecked(fan));
}

std::optional<SupportFunction> detail::support_function_unchecked(const Fan& fan, const std::vector<Wall>& ws) {
  const std::size_t n = fan.rays.size();
  const std::size_t d = fan.rank;

  // Unknowns: the support function's value h_rho on each ray. Strict
  // concavity across a wall reads  sum_rho relation[rho] * h_rho < 0,
  // scaled to <= -1.
  LinearSystem lp(n);
  for (const auto& w : ws) {
    std::vector<Rational> row(n, 0);
    for (const auto& [r, c] : w.relation) row[r] = c;
    lp.add(std::move(row), Relation::less_equal, -1);
  }
  auto h = find_feasible_point(lp);
  if (!h) return std::nullopt;

  SupportFunction psi;
  for (const auto& c : fan.max_cones) {
    std::vector<Rational> values(d);
    for (std::size_t i = 0; i < d; ++i) values[i] = (*h)[c.rays[i]];
    auto vecs = cone_vectors(fan, c);
    psi.slopes.push_back(form_with_values(rational_inverse(IntMatrix::from_columns(vecs, d)), values));
  }
  if (!verify_support_function(fan, psi)) throw ConsistencyError("projectivity witness failed verification");
  return psi;
}

bool is_projective(const Fan& fan) { return projectivity_witness(fan).has_value(); }

bool verify_support_function(const Fan& fan, const SupportFunction& psi) {
  const std::size_t d = fan.rank;
  if (psi.slopes.size() != fan.max_cones.size()) return false;
  for (const auto& m : psi.slopes)
    if (m.size() != d) return false;
  // Adjacent pairs found directly: cones sharing d-1 rays.
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    for (std::size_t l = k + 1; l < fan.max_cones.size(); ++l) {
      const Cone& a = fan.max_cones[k];
      const Cone& b = fan.max_cones[l];
      std::vector<std::size_t> common;
      std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                            std::back_inserter(common));
      if (common.size() + 1 != d) continue;
      for (std::size_t r : common)
        if (apply(psi.slopes[k], fan.rays[r]) != apply(psi.slopes[l], fan.rays[r])) return false;
      for (std::size_t r : b.rays)
        if (!a.contains(r) && !(apply(psi.slopes[k], fan.rays[r]) > apply(psi.slopes[l], fan.rays[r])))
          return false;
      for (std::size_t r : a.rays)
        if (!b.contains(r) && !(apply(psi.slopes[l], fan.rays[r]) > apply(psi.slopes[k], fan.rays[r])))
          return false;
    }
  return true;
}

std::size_t orbit_dim(const Fan& fan, const Cone& c) {
  const bool in_fan = std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                                  [&](const Cone& m) { return c.is_face_of(m); });
  if (!in_fan) throw PreconditionError("cone in fan", to_string(c) + " is not a cone of the fan");
  return fan.rank - c.dim();
}

}  // namespace toric
