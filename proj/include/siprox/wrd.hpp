#pragma once

#include "siprox/dense_vector.hpp"
#include "siprox/prox_set.hpp"
#include "siprox/tolerances.hpp"

namespace siprox {

struct WStepSolution {
  DenseVector w_star;  // unit, nonnegative
  double g_value = 0.0;
  SetFamily family = SetFamily::None;
};

/// r-step and d-step. The sign of g_value decides between the origin, the
/// point r*w* with r* = <x, w*>, or both when |g_value| is within the tie
/// threshold.
ProxSet wrd_assemble(const DenseVector& x_sorted, double rho, const WStepSolution& sol,
                     const Tolerances& tol);

}  // namespace siprox
