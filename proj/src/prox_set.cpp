#include "siprox/prox_set.hpp"

namespace siprox {

DenseVector ProxSet::representative() const {
  if (!points.empty()) return points.front();
  return DenseVector::zeros(dimension);
}

std::vector<DenseVector> ProxSet::members() const {
  std::vector<DenseVector> out;
  if (contains_zero) out.push_back(DenseVector::zeros(dimension));
  out.insert(out.end(), points.begin(), points.end());
  return out;
}

ProxSet map_points(const ProxSet& set, std::size_t new_dimension,
                   const std::function<DenseVector(const DenseVector&)>& map) {
  ProxSet out = set;
  out.dimension = new_dimension;
  out.points.clear();
  for (const auto& p : set.points) out.points.push_back(map(p));
  if (set.family_representative) out.family_representative = map(*set.family_representative);
  return out;
}

}  // namespace siprox
