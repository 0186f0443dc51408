#pragma once

#include <cstddef>

#include "siprox/dense_vector.hpp"
#include "siprox/prox_set.hpp"
#include "siprox/tolerances.hpp"
#include "siprox/wrd.hpp"

namespace siprox {

/// Tied entries beyond this many are not enumerated (2^3 = 8 combinations).
inline constexpr std::size_t kL0MaxEnumeratedTies = 3;

/// Componentwise hard threshold at sqrt(2/rho).
ProxSet prox_l0(const DenseVector& x, double rho, const Tolerances& tol = {});

/// w-step for l0 on x in the descending nonnegative cone: normalized leading
/// block of entries above the threshold (at least one entry).
WStepSolution wstep_l0(const DenseVector& x_sorted, double rho);

/// Same operator routed through normalize, wstep_l0, wrd_assemble and
/// denormalize.
ProxSet prox_l0_wrd(const DenseVector& x, double rho, const Tolerances& tol = {});

}  // namespace siprox
