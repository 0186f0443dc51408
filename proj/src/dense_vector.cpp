#include "siprox/dense_vector.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace siprox {

DenseVector::DenseVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("DenseVector: length must be at least 1");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i])) {
      throw std::invalid_argument("DenseVector: entry " + std::to_string(i) +
                                  " is not finite");
    }
  }
}

DenseVector::DenseVector(std::initializer_list<double> entries)
    : DenseVector(std::vector<double>(entries)) {}

DenseVector DenseVector::zeros(std::size_t n) { return constant(n, 0.0); }

DenseVector DenseVector::constant(std::size_t n, double value) {
  return DenseVector(std::vector<double>(n, value));
}

DenseVector DenseVector::basis(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("DenseVector::basis: index out of range");
  std::vector<double> e(n, 0.0);
  e[i] = 1.0;
  return DenseVector(std::move(e));
}

bool DenseVector::is_zero() const noexcept {
  for (double v : entries_) {
    if (v != 0.0) return false;
  }
  return true;
}

namespace {
void require_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}
}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b);
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double norm2_squared(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double norm2(std::span<const double> v) { return std::sqrt(norm2_squared(v)); }

double distance(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

DenseVector scaled(const DenseVector& v, double factor) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x *= factor;
  return DenseVector(std::move(out));
}

DenseVector zero_padded(const DenseVector& v, std::size_t n) {
  if (n < v.size()) throw std::invalid_argument("zero_padded: target shorter than input");
  std::vector<double> out(n, 0.0);
  std::copy(v.begin(), v.end(), out.begin());
  return DenseVector(std::move(out));
}

bool is_descending_nonnegative(std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace siprox
