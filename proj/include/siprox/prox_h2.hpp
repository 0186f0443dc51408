#pragma once

#include <cstddef>

#include "siprox/dense_vector.hpp"
#include "siprox/prox_set.hpp"
#include "siprox/tolerances.hpp"
#include "siprox/wrd.hpp"

namespace siprox {

/// Eigen data of A = 2ee^T - rho*xx^T restricted to span{e, x}.
struct H2Spectrum {
  double delta = 0.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double lambda_neg = 0.0;  // 2n - alpha_hi
  double lambda_pos = 0.0;  // 2n - alpha_lo
  DenseVector w_lo;         // eigenvector for lambda_neg
  DenseVector w_hi;         // eigenvector for lambda_pos
};

/// Throws DegenerateInput when x is a multiple of e (including 0).
H2Spectrum h2_spectrum(const DenseVector& x_sorted, double rho);

/// Applies A = 2ee^T - rho*xx^T to w without forming A.
DenseVector h2_apply(const DenseVector& x, double rho, const DenseVector& w);

/// Number of negative entries of 2e - rho*x_1*x.
std::size_t mu(const DenseVector& x_sorted, double rho);

/// True when max - min of the entries is within 1e-12 relative to the
/// largest magnitude. The zero vector counts as uniform.
bool is_uniform(const DenseVector& v);

ProxSet prox_h2_uniform(double alpha, std::size_t n, double rho, const Tolerances& tol = {});

/// Two-dimensional w-step for x_1 > x_2 >= 0.
WStepSolution wstep_h2_r2(const DenseVector& x_sorted, double rho);

struct H2WStep {
  WStepSolution solution;
  std::size_t effective_k = 0;  // support size of w*
  std::size_t mu = 0;
};

/// Full truncation loop from k = mu down to the first admissible prefix.
H2WStep wstep_h2(const DenseVector& x_sorted, double rho, const Tolerances& tol = {});

ProxSet prox_h2(const DenseVector& x, double rho, const Tolerances& tol = {});

}  // namespace siprox
