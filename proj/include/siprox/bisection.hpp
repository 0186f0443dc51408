#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace siprox {

/// Root of f on [lo, hi] by bisection. Requires a sign change (or a zero at
/// an endpoint). Stops when the bracket is narrower than tol.
template <class Fn>
double bisect(Fn&& f, double lo, double hi, double tol, std::size_t max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  }
  for (std::size_t it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace siprox
