#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "siprox/dense_vector.hpp"

namespace siprox {

enum class SetFamily { None, UniformSphere };

/// Set-valued prox result. The origin is tracked by a flag rather than listed
/// among the points. Points are representatives found by the solver; the list
/// makes no completeness claim.
struct ProxSet {
  std::size_t dimension = 0;
  bool contains_zero = false;
  std::vector<DenseVector> points;
  /// UniformSphere marks the continuum {alpha*||w||_1*w : w on the nonnegative
  /// sphere}, reported through family_representative.
  SetFamily family = SetFamily::None;
  std::optional<DenseVector> family_representative;
  /// F(candidate) - F(0) for the nonzero candidate the d-step examined.
  double g_value = 0.0;
  /// False when an iterative w-step hit max_iter or left the two-branch
  /// dichotomy of the relaxed problem.
  bool certified = true;
  /// Set when tied l0 entries exceeded the enumeration cap.
  bool ties_truncated = false;

  /// First listed point, or the origin when none is listed.
  DenseVector representative() const;
  /// Every member, with the origin first when present.
  std::vector<DenseVector> members() const;
};

/// Applies `map` to every point and to the family representative.
ProxSet map_points(const ProxSet& set, std::size_t new_dimension,
                   const std::function<DenseVector(const DenseVector&)>& map);

}  // namespace siprox
