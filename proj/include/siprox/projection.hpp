#pragma once

#include "siprox/dense_vector.hpp"

namespace siprox {

/// Least-squares fit of a nonincreasing sequence (pool adjacent violators).
DenseVector isotonic_nonincreasing(const DenseVector& v);

/// Euclidean projection onto {w : w_1 >= ... >= w_n >= 0, ||w||_2 <= 1}.
DenseVector project_ball_cone(const DenseVector& v);

}  // namespace siprox
