#include "siprox/prox_h1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "siprox/bisection.hpp"
#include "siprox/objective.hpp"
#include "siprox/projection.hpp"
#include "siprox/prox_h2.hpp"
#include "siprox/signed_permutation.hpp"

namespace siprox {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kRelEq = 1e-12;
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
}

bool rel_eq(double a, double b) {
  return std::abs(a - b) <= kRelEq * std::max(std::abs(a), std::abs(b));
}

void check_theta(double theta, const R2Geometry& geom) {
  const double hi = 0.5 * geom.alpha_angle;
  const double slack = 1e-12 * (1.0 + hi);
  if (!(theta >= -slack && theta <= hi + slack)) {
    throw std::domain_error("theta outside [0, alpha/2]");
  }
}

ProxSet zero_set(std::size_t n) {
  ProxSet out;
  out.dimension = n;
  out.contains_zero = true;
  return out;
}

void require_r2(const DenseVector& x_sorted, const char* who) {
  if (x_sorted.size() != 2) throw std::invalid_argument(std::string(who) + ": length must be 2");
  if (!is_descending_nonnegative(x_sorted.span()) || !(x_sorted[0] > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": requires x1 >= x2 >= 0, x1 > 0");
  }
}

}  // namespace

ProxSet prox_h1_uniform(double alpha, std::size_t n, double rho, const Tolerances& tol) {
  require_rho(rho);
  if (!(alpha > 0.0)) throw std::invalid_argument("prox_h1_uniform: alpha must be positive");
  if (n == 0) throw std::invalid_argument("prox_h1_uniform: n must be positive");
  const double nd = static_cast<double>(n);
  const DenseVector x = DenseVector::constant(n, alpha);
  const double g_uniform = std::sqrt(nd) - 0.5 * rho * alpha * alpha * nd;
  const double g_axis = 1.0 - 0.5 * rho * alpha * alpha;

  WStepSolution sol{DenseVector::constant(n, 1.0 / std::sqrt(nd)), g_uniform, SetFamily::None};
  if (g_axis < g_uniform) sol = {DenseVector::basis(n, 0), g_axis, SetFamily::None};
  ProxSet out = wrd_assemble(x, rho, sol, tol);
  if (!out.points.empty() && sol.w_star[n - 1] > 0.0) out.points.front() = x;
  return out;
}

ProxSet prox_h1_axis(double alpha, double rho, const Tolerances& tol, std::size_t dimension) {
  require_rho(rho);
  if (!(alpha > 0.0)) throw std::invalid_argument("prox_h1_axis: alpha must be positive");
  if (dimension == 0) throw std::invalid_argument("prox_h1_axis: dimension must be positive");
  const DenseVector x = scaled(DenseVector::basis(dimension, 0), alpha);
  const WStepSolution sol{DenseVector::basis(dimension, 0), 1.0 - 0.5 * rho * alpha * alpha,
                          SetFamily::None};
  return wrd_assemble(x, rho, sol, tol);
}

R2Geometry make_r2_geometry(const DenseVector& x_sorted) {
  require_r2(x_sorted, "make_r2_geometry");
  const double kappa = x_sorted[1] / x_sorted[0];
  if (!(kappa < 1.0)) throw std::domain_error("make_r2_geometry: kappa must be below 1");
  return {kappa, std::atan2(2.0 * kappa, 1.0 - kappa * kappa)};
}

double L_eval(double theta, const R2Geometry& geom, double rho, double norm2_sq) {
  check_theta(theta, geom);
  return std::sin(2.0 * theta - geom.alpha_angle) / std::cos(theta + kQuarterPi) +
         2.0 * kSqrt2 / (rho * norm2_sq);
}

double L_derivative(double theta, const R2Geometry& geom, double rho, double norm2_sq) {
  check_theta(theta, geom);
  (void)rho;
  (void)norm2_sq;
  const double c = std::cos(theta + kQuarterPi);
  const double s = std::sin(theta + kQuarterPi);
  return (2.0 * std::cos(2.0 * theta - geom.alpha_angle) * c +
          std::sin(2.0 * theta - geom.alpha_angle) * s) /
         (c * c);
}

double Q_eval(double theta, const R2Geometry& geom, double rho, double norm2_sq) {
  const double c = std::cos(theta - 0.5 * geom.alpha_angle);
  return -0.5 * rho * norm2_sq * c * c + kSqrt2 * std::sin(theta + kQuarterPi);
}

WStepSolution wstep_h1_r2(const DenseVector& x_sorted, double rho, const Tolerances& tol) {
  require_rho(rho);
  tol.validate();
  const R2Geometry geom = make_r2_geometry(x_sorted);
  const double x1 = x_sorted[0];
  const double x2 = x_sorted[1];
  const double ns = norm2_squared(x_sorted.span());
  const double c = rho * x1 * x2;
  const double half = 0.5 * geom.alpha_angle;
  auto L = [&](double t) { return L_eval(std::clamp(t, 0.0, half), geom, rho, ns); };
  auto dL = [&](double t) { return L_derivative(std::clamp(t, 0.0, half), geom, rho, ns); };

  double theta = 0.0;
  if (c > 1.0) {
    theta = bisect(L, 0.0, half, tol.root_tol);
  } else if (geom.kappa > kGolden) {
    const double theta0 = bisect(dL, 0.0, half, tol.root_tol);
    if (L(theta0) < 0.0) {
      const double theta1 = bisect(L, theta0, half, tol.root_tol);
      if (Q_eval(theta1, geom, rho, ns) < Q_eval(0.0, geom, rho, ns)) theta = theta1;
    }
  }
  const DenseVector w{std::cos(theta), std::sin(theta)};
  return {w, objective_G_h1(w, x_sorted, rho), SetFamily::None};
}

R2Classification classify_r2(const DenseVector& x_sorted, double rho) {
  require_rho(rho);
  require_r2(x_sorted, "classify_r2");
  const double x1 = x_sorted[0];
  const double x2 = x_sorted[1];
  const double t = std::sqrt(2.0 / rho);
  const double kappa = x2 / x1;

  R2Classification out;
  out.s1 = x1 > t;
  out.s2 = x1 > std::sqrt(2.0 * (1.0 + kappa) / (rho * std::pow(1.0 + kappa * kappa, 1.5)));

  if (x2 == 0.0) {
    out.region = R2Region::Axis;
    return out;
  }
  if (is_uniform(x_sorted)) {
    out.region = R2Region::Uniform;
    return out;
  }
  const double c = rho * x1 * x2;
  if (rel_eq(c, 1.0)) {
    if (rel_eq(x1, t)) {
      out.region = R2Region::I22;
    } else if (x1 > t) {
      out.region = R2Region::I21;
    } else {
      const double b = std::sqrt((std::sqrt(5.0) + 1.0) / (2.0 * rho));
      out.region = (x1 > b || rel_eq(x1, b)) ? R2Region::I23 : R2Region::I24;
    }
  } else if (c < 1.0) {
    if (rel_eq(x1, t)) {
      out.region = R2Region::I12;
    } else if (x1 > t) {
      out.region = R2Region::I11;
    } else {
      out.region = (kappa < kGolden || rel_eq(kappa, kGolden)) ? R2Region::I13 : R2Region::I14;
    }
  } else {
    out.region = R2Region::I3;
  }
  return out;
}

const char* region_name(R2Region region) {
  switch (region) {
    case R2Region::I11: return "I11";
    case R2Region::I12: return "I12";
    case R2Region::I13: return "I13";
    case R2Region::I14: return "I14";
    case R2Region::I21: return "I21";
    case R2Region::I22: return "I22";
    case R2Region::I23: return "I23";
    case R2Region::I24: return "I24";
    case R2Region::I3: return "I3";
    case R2Region::Uniform: return "uniform";
    case R2Region::Axis: return "axis";
  }
  return "unknown";
}

ProxSet prox_h1_r2(const DenseVector& x_sorted, double rho, const Tolerances& tol) {
  const R2Classification cls = classify_r2(x_sorted, rho);
  switch (cls.region) {
    case R2Region::Axis:
      return prox_h1_axis(x_sorted[0], rho, tol, 2);
    case R2Region::Uniform:
      return prox_h1_uniform(0.5 * (x_sorted[0] + x_sorted[1]), 2, rho, tol);
    case R2Region::I11:
    case R2Region::I12:
    case R2Region::I13:
    case R2Region::I21:
    case R2Region::I22:
    case R2Region::I23: {
      const DenseVector e1 = DenseVector::basis(2, 0);
      const WStepSolution sol{e1, objective_G_h1(e1, x_sorted, rho), SetFamily::None};
      return wrd_assemble(x_sorted, rho, sol, tol);
    }
    default:
      return wrd_assemble(x_sorted, rho, wstep_h1_r2(x_sorted, rho, tol), tol);
  }
}

std::optional<TrimResult> trim_zeros(const DenseVector& x_sorted) {
  std::size_t k = x_sorted.size();
  while (k > 0 && x_sorted[k - 1] == 0.0) --k;
  if (k == 0) return std::nullopt;
  std::vector<double> p(x_sorted.begin(), x_sorted.begin() + static_cast<std::ptrdiff_t>(k));
  return TrimResult{DenseVector(std::move(p)), x_sorted.size() - k};
}

double pgd_objective(const DenseVector& w, const DenseVector& x, double rho) {
  double sum = 0.0;
  for (double v : w) sum += v;
  const double ip = dot(x.span(), w.span());
  return sum - 0.5 * rho * ip * ip;
}

PgdResult pgd_wstep(const DenseVector& x_sorted, double rho, const DenseVector& w0,
                    const Tolerances& tol) {
  require_rho(rho);
  tol.validate();
  const std::size_t n = x_sorted.size();
  if (w0.size() != n) throw std::invalid_argument("pgd_wstep: dimension mismatch");
  for (double v : x_sorted) {
    if (!(v > 0.0)) throw std::invalid_argument("pgd_wstep: x must have positive entries");
  }
  if (!is_descending_nonnegative(x_sorted.span())) {
    throw std::invalid_argument("pgd_wstep: x must be descending");
  }
  const double ns = norm2_squared(x_sorted.span());
  const double step = 1.0 / (2.0 * rho * ns);
  const double h_scale = 1.0 + 0.5 * rho * ns;

  bool monotone = true;
  std::vector<double> w = w0.values();
  std::vector<double> trial(n);
  DenseVector last_nonzero = norm2(w) > 0.0 ? DenseVector(w) : DenseVector::basis(n, 0);
  double h = pgd_objective(w0, x_sorted, rho);
  bool converged = false;
  std::size_t it = 0;
  while (it < tol.max_iter) {
    const double ip = dot(x_sorted.span(), w);
    for (std::size_t i = 0; i < n; ++i) trial[i] = w[i] - step * (1.0 - rho * x_sorted[i] * ip);
    const DenseVector next = project_ball_cone(DenseVector(trial));
    ++it;
    const double h_next = pgd_objective(next, x_sorted, rho);
    if (h_next > h + 1e-12 * (h_scale + std::abs(h))) monotone = false;
    const double diff = distance(next.span(), w);
    w = next.values();
    h = h_next;
    if (!next.is_zero()) last_nonzero = next;
    if (diff <= tol.pgd_tol) {
      converged = true;
      break;
    }
  }

  const double limit_norm = norm2(w);
  const DenseVector dir = scaled(last_nonzero, 1.0 / norm2(last_nonzero.span()));
  PgdResult res{converged ? PgdStatus::Converged : PgdStatus::MaxIterations,
                PgdBranch::Origin,
                {dir, objective_G_h1(dir, x_sorted, rho), SetFamily::None},
                DenseVector(w),
                limit_norm,
                it,
                monotone,
                true};
  bool in_band = true;
  if (limit_norm <= kPgdBranchTol) {
    res.branch = PgdBranch::Origin;
  } else if (limit_norm >= 1.0 - kPgdBranchTol) {
    res.branch = PgdBranch::Sphere;
  } else {
    in_band = false;
    res.branch = res.candidate.g_value < 0.0 ? PgdBranch::Sphere : PgdBranch::Origin;
  }
  res.certified = converged && in_band;
  return res;
}

ProxSet prox_h1(const DenseVector& x, double rho, const Tolerances& tol, double init_fraction) {
  require_rho(rho);
  tol.validate();
  if (!(init_fraction >= 0.25 && init_fraction <= 0.75)) {
    throw std::invalid_argument("prox_h1: init_fraction must lie in [0.25, 0.75]");
  }
  const std::size_t n = x.size();
  const NormalizedVector nv = normalize(x);
  const auto trimmed = trim_zeros(nv.sorted);
  if (!trimmed) return zero_set(n);
  const DenseVector& p = trimmed->prefix;
  const std::size_t m = p.size();

  ProxSet sorted_set;
  if (m == 1) {
    sorted_set = prox_h1_axis(p[0], rho, tol, 1);
  } else if (is_uniform(p)) {
    double mean = 0.0;
    for (double v : p) mean += v;
    sorted_set = prox_h1_uniform(mean / static_cast<double>(m), m, rho, tol);
  } else if (m == 2) {
    sorted_set = prox_h1_r2(p, rho, tol);
  } else {
    const DenseVector w0 = project_ball_cone(scaled(p, init_fraction / norm2(p.span())));
    const PgdResult pgd = pgd_wstep(p, rho, w0, tol);
    sorted_set = wrd_assemble(p, rho, pgd.candidate, tol);
    sorted_set.certified = pgd.certified;
  }
  return map_points(sorted_set, n, [&](const DenseVector& u) {
    return denormalize(zero_padded(u, n), nv.perm);
  });
}

double sphere_qp_quartic(double q, const DenseVector& x, double rho) {
  const double n = static_cast<double>(x.size());
  const double s1 = norm1(x.span());
  const double s2 = norm2_squared(x.span());
  const double s1sq = s1 * s1;
  return (((q + 2.0 * rho * s2) * q + (rho * rho * s2 * s2 - n)) * q - 2.0 * rho * s1sq) * q -
         rho * rho * s1sq * s2;
}

SphereQpSolution sphere_qp_lambda(const DenseVector& x_sorted, double rho, const Tolerances& tol) {
  require_rho(rho);
  tol.validate();
  if (x_sorted.is_zero()) throw std::invalid_argument("sphere_qp_lambda: zero input");
  const double n = static_cast<double>(x_sorted.size());
  const double s1 = norm1(x_sorted.span());
  const double s2 = norm2_squared(x_sorted.span());
  auto Q = [&](double q) { return sphere_qp_quartic(q, x_sorted, rho); };
  auto dQ = [&](double q) {
    return ((4.0 * q + 6.0 * rho * s2) * q + 2.0 * (rho * rho * s2 * s2 - n)) * q -
           2.0 * rho * s1 * s1;
  };

  double hi = std::max(1.0, std::sqrt(n));
  while (Q(hi) <= 0.0) hi *= 2.0;
  double q = bisect(Q, 0.0, hi, tol.root_tol * hi);
  for (int k = 0; k < 4; ++k) {
    const double d = dQ(q);
    if (d <= 0.0) break;
    const double next = q - Q(q) / d;
    if (!(next > 0.0) || std::abs(Q(next)) > std::abs(Q(q))) break;
    q = next;
  }

  const double lambda = q + rho * s2;
  std::vector<double> w(x_sorted.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = -(1.0 + rho * s1 * x_sorted[i] / q) / lambda;
  }
  return {lambda, q, DenseVector(std::move(w))};
}

double curve_intersection_kappa(double root_tol) {
  auto p = [](double k) { return (((k * k + 3.0) * k) * k + 2.0) * k - 2.0; };
  return bisect(p, 0.0, 1.0, root_tol);
}

}  // namespace siprox
