#include "toric/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/builders.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/mori.hpp"

namespace toric {

bool has_split_tangent(const Fan& fan, bool strict) {
  require_smooth_complete(fan);
  if (strict && !detail::support_function_unchecked(fan, detail::walls_unchecked(fan))) throw PreconditionError("projective", "strict mode requires a projective fan");
  for (const auto& w : detail::walls_unchecked(fan))
    for (const auto& a : w.alphas())
      if (a != 0) return false;
  return true;
}

std::optional<std::size_t> is_p1_power(const Fan& fan) {
  const std::size_t d = fan.rank;
  if (fan.rays.size() != 2 * d) return std::nullopt;
  if (d >= 8 * sizeof(std::size_t) || fan.max_cones.size() != (std::size_t{1} << d)) return std::nullopt;

  std::map<LatticeVector, std::size_t> index;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) index.emplace(fan.rays[i], i);
  if (index.size() != fan.rays.size()) return std::nullopt;

  // pair_of[i]: which +-b_k pair ray i belongs to
  std::vector<std::size_t> pair_of(fan.rays.size(), SIZE_MAX);
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    if (pair_of[i] != SIZE_MAX) continue;
    auto it = index.find(-fan.rays[i]);
    if (it == index.end()) return std::nullopt;
    pair_of[i] = pair_of[it->second] = basis.size();
    basis.push_back(fan.rays[i]);
  }
  if (basis.size() != d || !is_unimodular_basis(basis)) return std::nullopt;

  std::set<Cone> distinct;
  for (const auto& c : fan.max_cones) {
    if (c.dim() != d) return std::nullopt;
    std::vector<bool> hit(d, false);
    for (std::size_t r : c.rays) {
      if (r >= fan.rays.size() || hit[pair_of[r]]) return std::nullopt;
      hit[pair_of[r]] = true;
    }
    distinct.insert(c);
  }
  if (distinct.size() != fan.max_cones.size()) return std::nullopt;
  return d;
}

namespace {

using Signature = std::vector<Integer>;

Signature sorted_alphas(const Wall& w) {
  auto a = w.alphas();
  std::sort(a.begin(), a.end());
  return a;
}

struct IsoData {
  std::map<Cone, Signature> wall_signature;
  std::multiset<Signature> all_signatures;
  std::vector<std::size_t> ray_degree;  // number of maximal cones through each ray
};

IsoData iso_data(const Fan& f, const std::vector<Wall>& ws) {
  IsoData data;
  for (const auto& w : ws) {
    auto s = sorted_alphas(w);
    data.all_signatures.insert(s);
    data.wall_signature.emplace(w.tau, std::move(s));
  }
  data.ray_degree.assign(f.rays.size(), 0);
  for (const auto& c : f.max_cones)
    for (std::size_t r : c.rays) ++data.ray_degree[r];
  return data;
}

Cone without(const Cone& c, std::size_t position) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (i != position) rest.push_back(c.rays[i]);
  return Cone(std::move(rest));
}

// Extends the basis map anchor -> target to the whole fan, or nullopt.
std::optional<FanIsomorphism> try_basis_map(const Fan& f1, const Fan& f2, const Cone& anchor,
                                            const std::vector<std::size_t>& target,
                                            const std::map<LatticeVector, std::size_t>& target_index,
                                            const std::set<Cone>& target_cones) {
  const std::size_t d = f1.rank;
  std::vector<LatticeVector> src, dst;
  for (std::size_t i = 0; i < d; ++i) {
    src.push_back(f1.rays[anchor.rays[i]]);
    dst.push_back(f2.rays[target[i]]);
  }
  IntMatrix m = IntMatrix::from_columns(dst, d) * inverse_unimodular(IntMatrix::from_columns(src, d));

  FanIsomorphism iso{m, std::vector<std::size_t>(f1.rays.size())};
  for (std::size_t i = 0; i < f1.rays.size(); ++i) {
    auto it = target_index.find(m * f1.rays[i]);
    if (it == target_index.end()) return std::nullopt;
    iso.ray_permutation[i] = it->second;
  }
  for (const auto& c : f1.max_cones) {
    std::vector<std::size_t> image;
    for (std::size_t r : c.rays) image.push_back(iso.ray_permutation[r]);
    if (!target_cones.contains(Cone(std::move(image)))) return std::nullopt;
  }
  return iso;
}

std::optional<FanIsomorphism> isomorphism_search(const Fan& f1, const IsoData& data1, const Fan& f2,
                                                 const IsoData& data2) {
  const std::size_t d = f1.rank;
  if (data1.all_signatures != data2.all_signatures) return std::nullopt;
  {
    auto deg1 = data1.ray_degree, deg2 = data2.ray_degree;
    std::sort(deg1.begin(), deg1.end());
    std::sort(deg2.begin(), deg2.end());
    if (deg1 != deg2) return std::nullopt;
  }

  const Cone anchor = *std::min_element(f1.max_cones.begin(), f1.max_cones.end());
  // Invariants the image of anchor ray i must reproduce: the wall facing it
  // and the number of maximal cones through it.
  std::vector<Signature> facing(d);
  for (std::size_t i = 0; i < d; ++i) facing[i] = data1.wall_signature.at(without(anchor, i));

  std::map<LatticeVector, std::size_t> target_index;
  for (std::size_t i = 0; i < f2.rays.size(); ++i) target_index.emplace(f2.rays[i], i);
  const std::set<Cone> target_cones(f2.max_cones.begin(), f2.max_cones.end());

  for (const Cone& cone : target_cones) {
    // candidates[i][k]: anchor ray i may go to cone ray k
    std::vector<std::vector<bool>> candidates(d, std::vector<bool>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        candidates[i][k] = data1.ray_degree[anchor.rays[i]] == data2.ray_degree[cone.rays[k]] &&
                           facing[i] == data2.wall_signature.at(without(cone, k));

    std::vector<std::size_t> assignment(d);
    std::vector<bool> used(d, false);
    std::optional<FanIsomorphism> found;
    auto search = [&](auto&& self, std::size_t i) -> bool {
      if (i == d) {
        found = try_basis_map(f1, f2, anchor, assignment, target_index, target_cones);
        return found.has_value();
      }
      for (std::size_t k = 0; k < d; ++k) {
        if (used[k] || !candidates[i][k]) continue;
        used[k] = true;
        assignment[i] = cone.rays[k];
        if (self(self, i + 1)) return true;
        used[k] = false;
      }
      return false;
    };
    if (search(search, 0)) return found;
  }
  return std::nullopt;
}

bool comparable(const Fan& f1, const Fan& f2) {
  return f1.rank == f2.rank && f1.rays.size() == f2.rays.size() && f1.max_cones.size() == f2.max_cones.size();
}

}  // namespace

std::optional<FanIsomorphism> fan_isomorphic(const Fan& f1, const Fan& f2) {
  if (!comparable(f1, f2)) return std::nullopt;
  if (f1.rank == 0) return FanIsomorphism{IntMatrix(0, 0), {}};
  return isomorphism_search(f1, iso_data(f1, walls(f1)), f2, iso_data(f2, walls(f2)));
}

bool verify_isomorphism(const Fan& from, const Fan& to, const FanIsomorphism& iso) {
  const std::size_t d = from.rank;
  if (to.rank != d || iso.matrix.rows() != d || iso.matrix.cols() != d) return false;
  if (d > 0) {
    Integer det = determinant(iso.matrix);
    if (det != 1 && det != -1) return false;
  }
  if (iso.ray_permutation.size() != from.rays.size() || to.rays.size() != from.rays.size()) return false;
  std::vector<bool> hit(to.rays.size(), false);
  for (std::size_t i = 0; i < from.rays.size(); ++i) {
    std::size_t j = iso.ray_permutation[i];
    if (j >= to.rays.size() || hit[j]) return false;
    hit[j] = true;
    if (!(iso.matrix * from.rays[i] == to.rays[j])) return false;
  }
  std::set<Cone> mapped;
  for (const auto& c : from.max_cones) {
    std::vector<std::size_t> image;
    for (std::size_t r : c.rays) image.push_back(iso.ray_permutation[r]);
    mapped.insert(Cone(std::move(image)));
  }
  return mapped == std::set<Cone>(to.max_cones.begin(), to.max_cones.end()) &&
         mapped.size() == from.max_cones.size();
}

FanIsomorphism inverse(const FanIsomorphism& iso) {
  FanIsomorphism out;
  out.matrix = iso.matrix.rows() ? inverse_unimodular(iso.matrix) : iso.matrix;
  out.ray_permutation.assign(iso.ray_permutation.size(), 0);
  for (std::size_t i = 0; i < iso.ray_permutation.size(); ++i) out.ray_permutation[iso.ray_permutation[i]] = i;
  return out;
}

FanIsomorphism compose(const FanIsomorphism& first, const FanIsomorphism& second) {
  FanIsomorphism out;
  out.matrix = second.matrix * first.matrix;
  out.ray_permutation.resize(first.ray_permutation.size());
  for (std::size_t i = 0; i < first.ray_permutation.size(); ++i)
    out.ray_permutation[i] = second.ray_permutation.at(first.ray_permutation[i]);
  return out;
}

std::string verdict_line(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::projective_space:
      return "CONTACT: P^" + std::to_string(2 * v.n + 1);
    case Verdict::Kind::projectivized_tangent_p1_power:
      return "CONTACT: P(T_(P1)^" + std::to_string(v.n + 1) + ")";
    case Verdict::Kind::not_contact:
      break;
  }
  return "NOT-CONTACT";
}

ClassificationReport classify_contact(const Fan& fan, const ClassifyOptions& options) {
  require_smooth_complete(fan);
  const auto ws = detail::walls_unchecked(fan);
  if (!detail::support_function_unchecked(fan, ws)) throw PreconditionError("projective", "no strictly convex support function exists");

  ClassificationReport report;
  auto& ev = report.evidence;
  const std::size_t d = fan.rank;
  ev.dimension = d;
  ev.odd_dimension = d % 2 == 1;
  if (!ev.odd_dimension) return report;

  const std::size_t n = (d - 1) / 2;
  report.verdict.n = n;

  const auto anticanonical = Integer(-1) * canonical_divisor(fan);
  ev.anticanonical_divisible = divide_class(class_of(fan, anticanonical), Integer(n + 1)).has_value();

  for (const auto& r : detail::extremal_rays_from_walls(fan, ws)) {
    Integer l = detail::ray_length_from_walls(fan, ws, r);
    if (l == Integer(n + 1) || l == Integer(2 * n + 2)) ev.length_dichotomy = true;
    ev.extremal_lengths.push_back(std::move(l));
  }

  if (!*ev.anticanonical_divisible && !options.full_evidence) return report;

  const Fan projective_space = fan_projective_space(d);
  // For n = 0 the bundle has rank one and its projectivization is P^1 itself.
  const Fan tangent = n > 0 ? fan_projectivized_tangent_p1_power(n + 1) : projective_space;
  // The references come from the builders, so their walls need no checks.
  const IsoData data = iso_data(fan, ws);
  auto against = [&](const Fan& ref) -> std::optional<FanIsomorphism> {
    if (!comparable(fan, ref)) return std::nullopt;
    return isomorphism_search(fan, data, ref, iso_data(ref, detail::walls_unchecked(ref)));
  };
  auto to_projective = against(projective_space);
  ev.iso_projective_space = to_projective.has_value();
  std::optional<FanIsomorphism> to_tangent;
  if (n > 0) {
    to_tangent = against(tangent);
    ev.iso_projectivized_tangent = to_tangent.has_value();
  }

  const Fan* reference = nullptr;
  if (to_projective) {
    report.verdict.kind = Verdict::Kind::projective_space;
    ev.witness = std::move(to_projective);
    ev.reference = "P^" + std::to_string(d);
    reference = &projective_space;
  } else if (to_tangent) {
    report.verdict.kind = Verdict::Kind::projectivized_tangent_p1_power;
    ev.witness = std::move(to_tangent);
    ev.reference = "P(T_(P1)^" + std::to_string(n + 1) + ")";
    reference = &tangent;
  }
  if (reference && !verify_isomorphism(fan, *reference, *ev.witness))
    throw ConsistencyError("isomorphism witness failed re-verification");
  return report;
}

}  // namespace toric
