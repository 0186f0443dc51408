#include "siprox/wrd.hpp"

#include <cassert>
#include <stdexcept>

namespace siprox {

ProxSet wrd_assemble(const DenseVector& x_sorted, double rho, const WStepSolution& sol,
                     const Tolerances& tol) {
  if (x_sorted.size() != sol.w_star.size()) {
    throw std::invalid_argument("wrd_assemble: dimension mismatch");
  }
  const double r = dot(x_sorted.span(), sol.w_star.span());
  assert(r >= 0.0);

  const double f_zero = 0.5 * rho * norm2_squared(x_sorted.span());
  const double thr = tie_threshold(tol, f_zero);

  ProxSet out;
  out.dimension = x_sorted.size();
  out.g_value = sol.g_value;
  if (sol.g_value >= -thr) out.contains_zero = true;
  if (sol.g_value <= thr) {
    const DenseVector point = scaled(sol.w_star, r);
    out.points.push_back(point);
    out.family = sol.family;
    if (sol.family != SetFamily::None) out.family_representative = point;
  }
  return out;
}

}  // namespace siprox
