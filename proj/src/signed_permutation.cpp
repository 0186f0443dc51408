#include "siprox/signed_permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace siprox {

SignedPermutation::SignedPermutation(std::vector<std::size_t> index_map,
                                     std::vector<std::int8_t> signs)
    : index_map_(std::move(index_map)), signs_(std::move(signs)) {
  if (index_map_.size() != signs_.size()) {
    throw std::invalid_argument("SignedPermutation: index map and signs differ in length");
  }
  std::vector<bool> seen(index_map_.size(), false);
  for (std::size_t i = 0; i < index_map_.size(); ++i) {
    const std::size_t j = index_map_[i];
    if (j >= index_map_.size() || seen[j]) {
      throw std::invalid_argument("SignedPermutation: index map is not a bijection");
    }
    seen[j] = true;
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw std::invalid_argument("SignedPermutation: signs must be +1 or -1");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return SignedPermutation(std::move(idx), std::vector<std::int8_t>(n, 1));
}

DenseVector SignedPermutation::apply(const DenseVector& x) const {
  if (x.size() != size()) throw std::invalid_argument("SignedPermutation::apply: dimension mismatch");
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const double v = x[index_map_[i]];
    out[i] = signs_[i] < 0 ? -v : v;
  }
  return DenseVector(std::move(out));
}

DenseVector SignedPermutation::invert(const DenseVector& u) const {
  if (u.size() != size()) throw std::invalid_argument("SignedPermutation::invert: dimension mismatch");
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[index_map_[i]] = signs_[i] < 0 ? -u[i] : u[i];
  }
  return DenseVector(std::move(out));
}

NormalizedVector normalize(const DenseVector& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(x[a]) > std::abs(x[b]);
  });
  std::vector<std::int8_t> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = x[order[i]] < 0.0 ? -1 : 1;
  SignedPermutation perm(std::move(order), std::move(signs));
  DenseVector sorted = perm.apply(x);
  return {std::move(sorted), std::move(perm)};
}

DenseVector denormalize(const DenseVector& u, const SignedPermutation& p) { return p.invert(u); }

}  // namespace siprox
