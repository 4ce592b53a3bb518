#include "toric/divisor.hpp"

#include "toric/error.hpp"
#include "toric/mori.hpp"

namespace toric {

TDivisor operator+(const TDivisor& a, const TDivisor& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw DimensionError("divisors live on different fans");
  TDivisor out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

TDivisor operator-(const TDivisor& a, const TDivisor& b) { return a + (Integer(-1) * b); }

TDivisor operator*(const Integer& k, const TDivisor& d) {
  TDivisor out = d;
  for (auto& c : out.coeffs) c *= k;
  return out;
}

ClassGroup::ClassGroup(const Fan& fan) : num_rays_(fan.rays.size()), lattice_rank_(fan.rank) {
  require_smooth_complete(fan);
  if (lattice_rank_ == 0 || num_rays_ == 0) {
    to_smith_ = IntMatrix::identity(num_rays_);
    from_smith_ = to_smith_;
    return;
  }
  auto snf = smith_normal_form(IntMatrix::from_rows(fan.rays, fan.rank));
  for (std::size_t i = 0; i < lattice_rank_; ++i)
    if (snf.S(i, i) != 1)
      throw ConsistencyError("class group of a smooth complete fan has torsion or wrong rank");
  to_smith_ = std::move(snf.U);
  from_smith_ = inverse_unimodular(to_smith_);
}

std::vector<Integer> ClassGroup::coordinates(const TDivisor& d) const {
  if (d.coeffs.size() != num_rays_) throw DimensionError("divisor does not match the fan's rays");
  auto full = to_smith_ * LatticeVector(d.coeffs);
  return {full.coords().begin() + static_cast<std::ptrdiff_t>(lattice_rank_), full.coords().end()};
}

TDivisor ClassGroup::representative(const std::vector<Integer>& coords) const {
  if (coords.size() != rank()) throw DimensionError("class vector has wrong length");
  LatticeVector padded(num_rays_);
  for (std::size_t i = 0; i < coords.size(); ++i) padded[lattice_rank_ + i] = coords[i];
  return TDivisor{(from_smith_ * padded).coords()};
}

std::size_t picard_rank(const Fan& fan) {
  require_smooth_complete(fan);
  return fan.rays.size() - fan.rank;
}

TDivisor canonical_divisor(const Fan& fan) {
  return TDivisor{std::vector<Integer>(fan.rays.size(), Integer(-1))};
}

TDivisor principal_divisor(const Fan& fan, const LatticeVector& m) {
  TDivisor d;
  d.coeffs.reserve(fan.rays.size());
  for (const auto& u : fan.rays) d.coeffs.push_back(dot(m, u));
  return d;
}

std::shared_ptr<const ClassGroup> class_group(const Fan& fan) {
  return std::make_shared<const ClassGroup>(fan);
}

DivisorClass class_of(std::shared_ptr<const ClassGroup> group, const TDivisor& d) {
  auto coords = group->coordinates(d);
  return DivisorClass{d, std::move(coords), std::move(group)};
}

DivisorClass class_of(const Fan& fan, const TDivisor& d) { return class_of(class_group(fan), d); }

std::optional<DivisorClass> divide_class(const DivisorClass& c, const Integer& k) {
  if (k <= 0) throw Error("divisor class can only be divided by a positive integer");
  std::vector<Integer> quotient;
  quotient.reserve(c.class_vector.size());
  for (const auto& x : c.class_vector) {
    if (mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t()) == 0) return std::nullopt;
    quotient.push_back(x / k);
  }
  TDivisor rep = c.group->representative(quotient);
  return DivisorClass{std::move(rep), std::move(quotient), c.group};
}

Integer intersect(const Fan& fan, const TDivisor& d, const CurveClass& c) {
  if (d.coeffs.size() != fan.rays.size() || c.pairing.size() != fan.rays.size())
    throw DimensionError("divisor and curve do not belong to the same fan");
  Integer s = 0;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) s += d.coeffs[i] * c.pairing[i];
  return s;
}

}  // namespace toric
