#include "siprox/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace siprox {

void Tolerances::validate() const {
  if (!(tie_tol > 0.0) || !(root_tol > 0.0) || !(pgd_tol > 0.0) || max_iter == 0) {
    throw std::invalid_argument("Tolerances: all tolerances must be strictly positive");
  }
}

double tie_threshold(const Tolerances& tol, double f_zero) {
  return tol.tie_tol * (1.0 + std::abs(f_zero));
}

}  // namespace siprox
