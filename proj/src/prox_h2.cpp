#include "siprox/prox_h2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "siprox/errors.hpp"
#include "siprox/objective.hpp"
#include "siprox/signed_permutation.hpp"

namespace siprox {

namespace {

constexpr double kUniformRelTol = 1e-12;

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
}

DenseVector prefix(const DenseVector& x, std::size_t k) {
  return DenseVector(std::vector<double>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k)));
}

DenseVector unit(const DenseVector& v) { return scaled(v, 1.0 / norm2(v.span())); }

WStepSolution finish(const DenseVector& w_prefix, const DenseVector& x_sorted, double rho) {
  DenseVector w = zero_padded(w_prefix, x_sorted.size());
  const double g = objective_G_h2(w, x_sorted, rho);
  return {std::move(w), g, SetFamily::None};
}

}  // namespace

bool is_uniform(const DenseVector& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  return (*hi - *lo) <= kUniformRelTol * scale;
}

DenseVector h2_apply(const DenseVector& x, double rho, const DenseVector& w) {
  double sum_w = 0.0;
  for (double v : w) sum_w += v;
  const double xw = dot(x.span(), w.span());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * sum_w - rho * x[i] * xw;
  return DenseVector(std::move(out));
}

H2Spectrum h2_spectrum(const DenseVector& x_sorted, double rho) {
  require_rho(rho);
  if (is_uniform(x_sorted)) {
    throw DegenerateInput("h2_spectrum: input is a multiple of the all-ones vector");
  }
  const double n = static_cast<double>(x_sorted.size());
  const double s1 = norm1(x_sorted.span());
  const double s2 = norm2_squared(x_sorted.span());
  const double S = 0.5 * rho * s2 + n;
  const double delta = S * S - 2.0 * rho * s1 * s1;
  const double alpha_hi = S + std::sqrt(std::max(delta, 0.0));
  const double alpha_lo = 2.0 * rho * s1 * s1 / alpha_hi;

  std::vector<double> lo(x_sorted.size()), hi(x_sorted.size());
  const double c_lo = alpha_lo / (rho * s1);
  const double c_hi = alpha_hi / (rho * s1);
  for (std::size_t i = 0; i < x_sorted.size(); ++i) {
    lo[i] = x_sorted[i] - c_lo;
    hi[i] = x_sorted[i] - c_hi;
  }
  H2Spectrum sp{delta,
                alpha_lo,
                alpha_hi,
                2.0 * n - alpha_hi,
                2.0 * n - alpha_lo,
                DenseVector(std::move(lo)),
                DenseVector(std::move(hi))};
  return sp;
}

std::size_t mu(const DenseVector& x_sorted, double rho) {
  require_rho(rho);
  std::size_t count = 0;
  for (double v : x_sorted) {
    if (2.0 - rho * x_sorted[0] * v < 0.0) ++count;
  }
  return count;
}

ProxSet prox_h2_uniform(double alpha, std::size_t n, double rho, const Tolerances& tol) {
  require_rho(rho);
  if (!(alpha > 0.0)) throw std::invalid_argument("prox_h2_uniform: alpha must be positive");
  if (n == 0) throw std::invalid_argument("prox_h2_uniform: n must be positive");
  const double nd = static_cast<double>(n);
  const DenseVector x = DenseVector::constant(n, alpha);
  const double g = nd * (1.0 - 0.5 * rho * alpha * alpha);
  const double thr = tie_threshold(tol, 0.5 * rho * alpha * alpha * nd);

  WStepSolution sol{DenseVector::constant(n, 1.0 / std::sqrt(nd)), g, SetFamily::None};
  if (std::abs(g) <= thr) {
    if (n > 1) sol.family = SetFamily::UniformSphere;
  } else if (g > 0.0) {
    // Below the threshold the sphere minimizer is an axis vector.
    sol = {DenseVector::basis(n, 0), 1.0 - 0.5 * rho * alpha * alpha, SetFamily::None};
  }
  ProxSet out = wrd_assemble(x, rho, sol, tol);
  if (!out.points.empty() && sol.w_star[n - 1] > 0.0) {
    out.points.front() = x;
    if (out.family_representative) out.family_representative = x;
  }
  return out;
}

WStepSolution wstep_h2_r2(const DenseVector& x_sorted, double rho) {
  require_rho(rho);
  if (x_sorted.size() != 2) throw std::invalid_argument("wstep_h2_r2: length must be 2");
  const double x1 = x_sorted[0];
  const double x2 = x_sorted[1];
  if (!(x1 > x2) || x2 < 0.0) throw std::invalid_argument("wstep_h2_r2: requires x1 > x2 >= 0");
  double theta = 0.0;
  if (rho * x1 * x2 > 2.0) {
    theta = 0.5 * std::atan(-2.0 * (2.0 - rho * x1 * x2) / (rho * (x1 * x1 - x2 * x2)));
  }
  const DenseVector w{std::cos(theta), std::sin(theta)};
  return {w, objective_G_h2(w, x_sorted, rho), SetFamily::None};
}

H2WStep wstep_h2(const DenseVector& x_sorted, double rho, const Tolerances& tol) {
  require_rho(rho);
  tol.validate();
  if (!is_descending_nonnegative(x_sorted.span())) {
    throw std::invalid_argument("wstep_h2: input must be descending and nonnegative");
  }
  if (x_sorted.is_zero()) throw std::invalid_argument("wstep_h2: zero input");
  const std::size_t m = mu(x_sorted, rho);
  if (m == 0) {
    return {finish(DenseVector::basis(1, 0), x_sorted, rho), 1, 0};
  }

  for (std::size_t k = m; k >= 1; --k) {
    const DenseVector xp = prefix(x_sorted, k);
    if (is_uniform(xp)) {
      const double kd = static_cast<double>(k);
      return {finish(DenseVector::constant(k, 1.0 / std::sqrt(kd)), x_sorted, rho), k, m};
    }
    if (k == 2) {
      return {finish(wstep_h2_r2(xp, rho).w_star, x_sorted, rho), 2, m};
    }
    const H2Spectrum sp = h2_spectrum(xp, rho);
    if (sp.w_lo[k - 1] > 0.0) {
      return {finish(unit(sp.w_lo), x_sorted, rho), k, m};
    }
  }
  // k = 1 is a uniform prefix, so the loop always returns.
  throw std::logic_error("wstep_h2: truncation loop did not resolve");
}

ProxSet prox_h2(const DenseVector& x, double rho, const Tolerances& tol) {
  require_rho(rho);
  tol.validate();
  const std::size_t n = x.size();
  if (x.is_zero()) {
    ProxSet out;
    out.dimension = n;
    out.contains_zero = true;
    return out;
  }
  const NormalizedVector nv = normalize(x);
  ProxSet sorted_set;
  if (is_uniform(nv.sorted)) {
    double mean = 0.0;
    for (double v : nv.sorted) mean += v;
    mean /= static_cast<double>(n);
    sorted_set = prox_h2_uniform(mean, n, rho, tol);
  } else {
    sorted_set = wrd_assemble(nv.sorted, rho, wstep_h2(nv.sorted, rho, tol).solution, tol);
  }
  return map_points(sorted_set, n, [&](const DenseVector& u) { return denormalize(u, nv.perm); });
}

}  // namespace siprox
