#include "siprox/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace siprox::oracle {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

using Params = std::array<double, 2>;

// Exact values at the grid ends so axis points carry true zeros.
double cos_x(double a) { return a == kHalfPi ? 0.0 : std::cos(a); }
double sin_x(double a) { return a == 0.0 ? 0.0 : (a == kHalfPi ? 1.0 : std::sin(a)); }

std::vector<double> axis_points(double lo, double hi, double step) {
  std::vector<double> pts;
  if (hi <= lo) {
    pts.push_back(lo);
    return pts;
  }
  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
  const double h = (hi - lo) / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(lo + static_cast<double>(i) * h);
  pts.push_back(hi);
  return pts;
}

struct GridBest {
  Params p{};
  double value = 0.0;
};

// Minimizes phi over [lo, hi]^dims in lexicographic index order with strict
// improvement, then zooms in around the incumbent.
GridBest grid_minimize(std::size_t dims, double lo, double hi, double resolution,
                       std::size_t refine_passes, const std::function<double(const Params&)>& phi) {
  GridBest best;
  bool have = false;
  double step = resolution;
  double win_lo0 = lo, win_hi0 = hi, win_lo1 = lo, win_hi1 = hi;
  for (std::size_t pass = 0; pass <= refine_passes; ++pass) {
    const std::vector<double> a = axis_points(win_lo0, win_hi0, step);
    const std::vector<double> b =
        dims == 2 ? axis_points(win_lo1, win_hi1, step) : std::vector<double>{0.0};
    for (double ai : a) {
      for (double bj : b) {
        const Params p{ai, bj};
        const double v = phi(p);
        if (!have || v < best.value) {
          best = {p, v};
          have = true;
        }
      }
    }
    if (pass == refine_passes) break;
    const double reach = 2.0 * step;
    win_lo0 = std::max(lo, best.p[0] - reach);
    win_hi0 = std::min(hi, best.p[0] + reach);
    win_lo1 = std::max(lo, best.p[1] - reach);
    win_hi1 = std::min(hi, best.p[1] + reach);
    step /= 10.0;
  }
  return best;
}

std::vector<double> sphere_point(std::size_t n, const Params& p) {
  if (n == 2) return {cos_x(p[0]), sin_x(p[0])};
  return {cos_x(p[0]), sin_x(p[0]) * cos_x(p[1]), sin_x(p[0]) * sin_x(p[1])};
}

double penalty_value(Penalty pen, const std::vector<double>& u) {
  double l1 = 0.0, l2sq = 0.0, nnz = 0.0;
  for (double v : u) {
    l1 += std::abs(v);
    l2sq += v * v;
    if (v != 0.0) nnz += 1.0;
  }
  if (l2sq == 0.0) return 0.0;
  switch (pen) {
    case Penalty::L0: return nnz;
    case Penalty::H1: return l1 / std::sqrt(l2sq);
    case Penalty::H2: return l1 * l1 / l2sq;
  }
  return 0.0;
}

double prox_objective(const std::vector<double>& u, const DenseVector& x, double rho,
                      Penalty pen) {
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] - x[i]) * (u[i] - x[i]);
  return 0.5 * rho * d + penalty_value(pen, u);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

WStepResult brute_wstep(const DenseVector& x_sorted, double rho, Penalty penalty,
                        double resolution, std::size_t refine_passes) {
  require_positive(rho, "rho");
  require_positive(resolution, "resolution");
  const std::size_t n = x_sorted.size();
  if (n != 2 && n != 3) throw std::invalid_argument("brute_wstep: n must be 2 or 3");
  if (penalty == Penalty::L0) throw std::invalid_argument("brute_wstep: h1 or h2 only");

  auto phi = [&](const Params& p) {
    const std::vector<double> w = sphere_point(n, p);
    double l1 = 0.0, ip = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      l1 += w[i];
      ip += x_sorted[i] * w[i];
    }
    const double lead = penalty == Penalty::H2 ? l1 * l1 : l1;
    return lead - 0.5 * rho * ip * ip;
  };
  const GridBest best = grid_minimize(n - 1, 0.0, kHalfPi, resolution, refine_passes, phi);
  return {DenseVector(sphere_point(n, best.p)), best.value};
}

ProxResult brute_prox(const DenseVector& x, double rho, Penalty penalty, double box,
                      double resolution, Parameterization param, std::size_t refine_passes) {
  require_positive(rho, "rho");
  require_positive(resolution, "resolution");
  const std::size_t n = x.size();
  for (double v : x) {
    if (v < 0.0) throw std::invalid_argument("brute_prox: x must be nonnegative");
  }
  if (param == Parameterization::Auto) {
    param = n <= 2 ? Parameterization::Box : Parameterization::SphereRadial;
  }

  // Explicit candidates first: the origin, then x.
  std::vector<double> best_u(n, 0.0);
  double best_f = prox_objective(best_u, x, rho, penalty);
  {
    const double fx = prox_objective(x.values(), x, rho, penalty);
    if (fx < best_f) {
      best_u = x.values();
      best_f = fx;
    }
  }

  if (param == Parameterization::Box) {
    if (n > 2) throw std::invalid_argument("brute_prox: box grid supports n <= 2");
    require_positive(box, "box");
    auto phi = [&](const Params& p) {
      std::vector<double> u(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
      return prox_objective(u, x, rho, penalty);
    };
    const GridBest g = grid_minimize(n, 0.0, box, resolution, refine_passes, phi);
    if (g.value < best_f) {
      best_f = g.value;
      best_u.assign(g.p.begin(), g.p.begin() + static_cast<std::ptrdiff_t>(n));
    }
  } else {
    if (n != 2 && n != 3) throw std::invalid_argument("brute_prox: sphere grid needs n in {2, 3}");
    auto radial_point = [&](const Params& p) {
      std::vector<double> w = sphere_point(n, p);
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) r += x[i] * w[i];
      r = std::max(0.0, r);
      for (double& v : w) v *= r;
      return w;
    };
    auto phi = [&](const Params& p) { return prox_objective(radial_point(p), x, rho, penalty); };
    const GridBest g =
        grid_minimize(n - 1, 0.0, kHalfPi, resolution, refine_passes, phi);
    if (g.value < best_f) {
      best_f = g.value;
      best_u = radial_point(g.p);
    }
  }
  return {DenseVector(std::move(best_u)), best_f};
}

double oracle_tolerance(double resolution, double rho, double norm2_sq) {
  return std::max(1e-5, 10.0 * resolution * resolution * rho * norm2_sq);
}

}  // namespace siprox::oracle
