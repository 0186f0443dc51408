#include "siprox/projection.hpp"

#include <vector>

namespace siprox {

DenseVector isotonic_nonincreasing(const DenseVector& v) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  blocks.reserve(v.size());
  for (double value : v) {
    blocks.push_back({value, 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].mean() < blocks.back().mean()) {
      Block top = blocks.back();
      blocks.pop_back();
      blocks.back().sum += top.sum;
      blocks.back().count += top.count;
    }
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const Block& b : blocks) out.insert(out.end(), b.count, b.mean());
  return DenseVector(std::move(out));
}

DenseVector project_ball_cone(const DenseVector& v) {
  std::vector<double> w = isotonic_nonincreasing(v).values();
  for (double& e : w) {
    if (e < 0.0) e = 0.0;
  }
  const double nrm = norm2(w);
  if (nrm > 1.0) {
    for (double& e : w) e /= nrm;
  }
  return DenseVector(std::move(w));
}

}  // namespace siprox
