#include "siprox/prox_l0.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "siprox/signed_permutation.hpp"

namespace siprox {

namespace {

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
}

}  // namespace

ProxSet prox_l0(const DenseVector& x, double rho, const Tolerances& tol) {
  require_rho(rho);
  const std::size_t n = x.size();
  std::vector<double> kept(n, 0.0);
  std::vector<std::size_t> tied;
  double g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double half = 0.5 * rho * x[i] * x[i];
    const double gap = 1.0 - half;  // cost of keeping entry i relative to zeroing it
    const double thr = tol.tie_tol * (1.0 + half);
    if (gap < -thr) {
      kept[i] = x[i];
      g += gap;
    } else if (gap <= thr) {
      tied.push_back(i);
    }
  }

  ProxSet out;
  out.dimension = n;
  out.g_value = g;

  // Tied entries: the first vector keeps every tied entry, the last drops all.
  std::vector<std::vector<double>> combos;
  if (tied.size() <= kL0MaxEnumeratedTies) {
    const std::size_t count = std::size_t{1} << tied.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<double> v = kept;
      for (std::size_t t = 0; t < tied.size(); ++t) {
        if (!(mask & (std::size_t{1} << t))) v[tied[t]] = x[tied[t]];
      }
      combos.push_back(std::move(v));
    }
  } else {
    std::vector<double> full = kept;
    for (std::size_t idx : tied) full[idx] = x[idx];
    combos.push_back(std::move(full));
    combos.push_back(kept);
    out.ties_truncated = true;
  }

  for (auto& v : combos) {
    DenseVector u(std::move(v));
    if (u.is_zero()) {
      out.contains_zero = true;
    } else {
      out.points.push_back(std::move(u));
    }
  }
  return out;
}

WStepSolution wstep_l0(const DenseVector& x_sorted, double rho) {
  require_rho(rho);
  if (!is_descending_nonnegative(x_sorted.span())) {
    throw std::invalid_argument("wstep_l0: input must be descending and nonnegative");
  }
  if (x_sorted.is_zero()) throw std::invalid_argument("wstep_l0: zero input");
  const std::size_t n = x_sorted.size();
  const double t = std::sqrt(2.0 / rho);
  std::size_t k = 0;
  while (k < n && x_sorted[k] > t) ++k;
  if (k == 0) k = 1;

  std::vector<double> w(n, 0.0);
  double g = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = x_sorted[i];
    g += 1.0 - 0.5 * rho * x_sorted[i] * x_sorted[i];
  }
  const double nrm = norm2(std::span<const double>(w.data(), k));
  for (std::size_t i = 0; i < k; ++i) w[i] /= nrm;
  return {DenseVector(std::move(w)), g, SetFamily::None};
}

ProxSet prox_l0_wrd(const DenseVector& x, double rho, const Tolerances& tol) {
  require_rho(rho);
  if (x.is_zero()) {
    ProxSet out;
    out.dimension = x.size();
    out.contains_zero = true;
    return out;
  }
  const NormalizedVector nv = normalize(x);
  const ProxSet sorted_set = wrd_assemble(nv.sorted, rho, wstep_l0(nv.sorted, rho), tol);
  return map_points(sorted_set, x.size(),
                    [&](const DenseVector& u) { return denormalize(u, nv.perm); });
}

}  // namespace siprox
