#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace siprox {

/// Finite, non-empty vector of doubles. Entries are validated on
/// construction and the object is immutable afterwards.
class DenseVector {
 public:
  explicit DenseVector(std::vector<double> entries);
  DenseVector(std::initializer_list<double> entries);

  static DenseVector zeros(std::size_t n);
  static DenseVector constant(std::size_t n, double value);
  /// Standard basis vector e_i (zero-based i).
  static DenseVector basis(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> span() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const noexcept;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<double> entries_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm1(std::span<const double> v);
double norm2(std::span<const double> v);
double norm2_squared(std::span<const double> v);
double distance(std::span<const double> a, std::span<const double> b);

DenseVector scaled(const DenseVector& v, double factor);

/// Copy of v extended with trailing zeros to length n (n >= v.size()).
DenseVector zero_padded(const DenseVector& v, std::size_t n);

/// True if v is in the descending nonnegative cone.
bool is_descending_nonnegative(std::span<const double> v);

}  // namespace siprox
