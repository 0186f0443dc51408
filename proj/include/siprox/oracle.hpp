#pragma once

#include <cstddef>

#include "siprox/dense_vector.hpp"

namespace siprox::oracle {

enum class Penalty { L0, H1, H2 };

enum class Parameterization {
  Auto,          // box for n <= 2, sphere-radial for n = 3
  Box,           // grid over [0, box]^n, n <= 2
  SphereRadial,  // grid over the nonnegative sphere with r = max(0, <x, w>), n in {2, 3}
};

struct WStepResult {
  DenseVector w;
  double g = 0.0;
};

struct ProxResult {
  DenseVector u;
  double f_min = 0.0;
};

/// Grid minimizer of the sphere objective for h1 or h2 over the nonnegative
/// unit sphere, n in {2, 3}. Each refinement pass re-grids a window around the
/// incumbent at a tenth of the previous spacing.
WStepResult brute_wstep(const DenseVector& x_sorted, double rho, Penalty penalty,
                        double resolution, std::size_t refine_passes = 3);

/// Grid minimizer of (rho/2)||u - x||^2 + f(u) for nonnegative x. The origin
/// and x itself are always candidates; ties go to the earliest candidate.
ProxResult brute_prox(const DenseVector& x, double rho, Penalty penalty, double box,
                      double resolution, Parameterization param = Parameterization::Auto,
                      std::size_t refine_passes = 3);

/// Acceptance bound on |F_analytic - F_oracle|.
double oracle_tolerance(double resolution, double rho, double norm2_sq);

}  // namespace siprox::oracle
