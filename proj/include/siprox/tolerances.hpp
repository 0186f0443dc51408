#pragma once

#include <cstddef>

namespace siprox {

struct Tolerances {
  /// Relative tie tolerance for the d-step; the absolute threshold is
  /// tie_tol * (1 + |F(0)|).
  double tie_tol = 1e-10;
  /// Bracket width at which 1-D bisection stops.
  double root_tol = 1e-12;
  /// Iterate-difference stop for projected gradient.
  double pgd_tol = 1e-10;
  std::size_t max_iter = 100000;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

double tie_threshold(const Tolerances& tol, double f_zero);

}  // namespace siprox
