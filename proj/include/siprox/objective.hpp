#pragma once

#include "siprox/dense_vector.hpp"

namespace siprox {

// Penalty values; every penalty is 0 at the origin.
double l0_value(const DenseVector& u);
double h1_value(const DenseVector& u);  // ||u||_1 / ||u||_2
double h2_value(const DenseVector& u);  // (||u||_1 / ||u||_2)^2

/// F(u) = (rho/2)||u - x||^2 + f(u), with f(u) supplied by the caller.
double objective_F(const DenseVector& u, const DenseVector& x, double rho, double f_value);

/// Sphere objective for h2: ||w||_1^2 - (rho/2)<x,w>^2. Requires ||w||_2 = 1.
double objective_G_h2(const DenseVector& w, const DenseVector& x, double rho);

/// Sphere objective for h1: ||w||_1 - (rho/2)<x,w>^2. Requires a unit,
/// nonnegative w.
double objective_G_h1(const DenseVector& w, const DenseVector& x, double rho);

}  // namespace siprox
