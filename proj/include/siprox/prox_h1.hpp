#pragma once

#include <cstddef>
#include <optional>

#include "siprox/dense_vector.hpp"
#include "siprox/prox_set.hpp"
#include "siprox/tolerances.hpp"
#include "siprox/wrd.hpp"

namespace siprox {

inline constexpr double kDefaultInitFraction = 0.75;
/// PGD limits with norm at or below this are the origin branch; at or above
/// one minus this, the sphere branch.
inline constexpr double kPgdBranchTol = 1e-6;

ProxSet prox_h1_uniform(double alpha, std::size_t n, double rho, const Tolerances& tol = {});

/// Prox at alpha*e_1 embedded in the given dimension.
ProxSet prox_h1_axis(double alpha, double rho, const Tolerances& tol = {},
                     std::size_t dimension = 2);

struct R2Geometry {
  double kappa = 0.0;        // x2 / x1, in [0, 1)
  double alpha_angle = 0.0;  // atan2(2 kappa, 1 - kappa^2)
};

R2Geometry make_r2_geometry(const DenseVector& x_sorted);

/// Convex factor of Q' on [0, alpha/2]. Throws std::domain_error outside it.
double L_eval(double theta, const R2Geometry& geom, double rho, double norm2_sq);
double L_derivative(double theta, const R2Geometry& geom, double rho, double norm2_sq);
/// Q(theta) = G([cos theta, sin theta]).
double Q_eval(double theta, const R2Geometry& geom, double rho, double norm2_sq);

WStepSolution wstep_h1_r2(const DenseVector& x_sorted, double rho, const Tolerances& tol = {});

enum class R2Region { I11, I12, I13, I14, I21, I22, I23, I24, I3, Uniform, Axis };

struct R2Classification {
  R2Region region = R2Region::I3;
  bool s1 = false;  // x1 > sqrt(2/rho)
  bool s2 = false;  // x1 above the radial bound for the ray through x
};

R2Classification classify_r2(const DenseVector& x_sorted, double rho);
const char* region_name(R2Region region);

ProxSet prox_h1_r2(const DenseVector& x_sorted, double rho, const Tolerances& tol = {});

struct TrimResult {
  DenseVector prefix;
  std::size_t k_removed = 0;
};

/// Drops trailing exact zeros. Returns nullopt for the zero vector.
std::optional<TrimResult> trim_zeros(const DenseVector& x_sorted);

enum class PgdStatus { Converged, MaxIterations };
enum class PgdBranch { Origin, Sphere };

struct PgdResult {
  PgdStatus status = PgdStatus::Converged;
  PgdBranch branch = PgdBranch::Origin;
  /// Unit candidate for the d-step. On the sphere branch this is the
  /// normalized limit; on the origin branch it is the last nonzero iterate
  /// direction (or the starting direction).
  WStepSolution candidate;
  DenseVector limit;
  double limit_norm = 0.0;
  std::size_t iterations = 0;
  /// H never increased by more than rounding along the iterates.
  bool monotone = true;
  /// Converged and the limit norm sits in one of the two admissible bands.
  bool certified = true;
};

/// Relaxed objective sum(w) - (rho/2)<x,w>^2 on the ball.
double pgd_objective(const DenseVector& w, const DenseVector& x, double rho);

PgdResult pgd_wstep(const DenseVector& x_sorted, double rho, const DenseVector& w0,
                    const Tolerances& tol = {});

ProxSet prox_h1(const DenseVector& x, double rho, const Tolerances& tol = {},
                double init_fraction = kDefaultInitFraction);

struct SphereQpSolution {
  double lambda_star = 0.0;
  double q_star = 0.0;  // lambda_star - rho*||x||^2
  DenseVector w;        // unit, all entries negative
};

/// Stationary point of sum(w) - (rho/2)<x,w>^2 on the full unit sphere with
/// positive multiplier, via the unique positive root of the quartic.
SphereQpSolution sphere_qp_lambda(const DenseVector& x_sorted, double rho,
                                  const Tolerances& tol = {});

double sphere_qp_quartic(double q, const DenseVector& x, double rho);

/// Ratio kappa at which the rays sqrt(2/rho)(1,kappa) and the S2 boundary
/// meet: the root of kappa^5 + 3 kappa^3 + 2 kappa - 2 in (0, 1).
double curve_intersection_kappa(double root_tol = 1e-12);

}  // namespace siprox
