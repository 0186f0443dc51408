#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "siprox/dense_vector.hpp"

namespace siprox {

/// Signed permutation P acting as (Px)_i = signs[i] * x[index_map[i]].
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::size_t> index_map, std::vector<std::int8_t> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return index_map_.size(); }
  const std::vector<std::size_t>& index_map() const noexcept { return index_map_; }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

  DenseVector apply(const DenseVector& x) const;
  /// Inverse action P^{-1}u. Sign flips and moves only, so round trips are exact.
  DenseVector invert(const DenseVector& u) const;

 private:
  std::vector<std::size_t> index_map_;
  std::vector<std::int8_t> signs_;
};

struct NormalizedVector {
  DenseVector sorted;
  SignedPermutation perm;
};

/// Sorts |x| in descending order with a stable tie-break on original index.
/// Zero entries get sign +1.
NormalizedVector normalize(const DenseVector& x);

DenseVector denormalize(const DenseVector& u, const SignedPermutation& p);

}  // namespace siprox
