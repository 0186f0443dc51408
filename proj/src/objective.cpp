#include "siprox/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace siprox {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kNonnegTol = 1e-12;

void require_unit(const DenseVector& w) {
  if (std::abs(norm2(w.span()) - 1.0) > kUnitTol) {
    throw std::invalid_argument("objective_G: w must have unit norm");
  }
}

}  // namespace

double l0_value(const DenseVector& u) {
  double count = 0.0;
  for (double v : u) count += (v != 0.0) ? 1.0 : 0.0;
  return count;
}

double h1_value(const DenseVector& u) {
  const double n2 = norm2(u.span());
  if (n2 == 0.0) return 0.0;
  return norm1(u.span()) / n2;
}

double h2_value(const DenseVector& u) {
  const double n2sq = norm2_squared(u.span());
  if (n2sq == 0.0) return 0.0;
  const double n1 = norm1(u.span());
  return n1 * n1 / n2sq;
}

double objective_F(const DenseVector& u, const DenseVector& x, double rho, double f_value) {
  const double d = distance(u.span(), x.span());
  return 0.5 * rho * d * d + f_value;
}

double objective_G_h2(const DenseVector& w, const DenseVector& x, double rho) {
  require_unit(w);
  const double l1 = norm1(w.span());
  const double ip = dot(x.span(), w.span());
  return l1 * l1 - 0.5 * rho * ip * ip;
}

double objective_G_h1(const DenseVector& w, const DenseVector& x, double rho) {
  require_unit(w);
  double l1 = 0.0;
  for (double v : w) {
    if (v < -kNonnegTol) throw std::invalid_argument("objective_G_h1: w must be nonnegative");
    l1 += v;
  }
  const double ip = dot(x.span(), w.span());
  return l1 - 0.5 * rho * ip * ip;
}

}  // namespace siprox
