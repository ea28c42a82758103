#ifndef HUBS_QUADRATURE_HPP
#define HUBS_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "hubs/common.hpp"

namespace hubs::quadrature {

// Adaptive Gauss-Kronrod 15(7) on [a,b] to absolute tolerance `tol`.
// Throws NumericError if the interval budget is exhausted before the
// error estimate drops below tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9, int max_intervals = 4096);

// Standard normal helpers.
inline double normal_pdf(double x, double mean = 0.0, double var = 1.0) {
  const double z = x - mean;
  return std::exp(-z * z / (2.0 * var)) / std::sqrt(6.283185307179586476925286766559 * var);
}

// P(X > x) for X ~ N(0,1).
inline double normal_sf(double x) { return 0.5 * std::erfc(x / 1.4142135623730950488016887242097); }

// P(|X - mean| > m) for X ~ N(mean, var); used for truncation tails.
inline double two_sided_tail(double m, double var) {
  return 2.0 * normal_sf(m / std::sqrt(var));
}

}  // namespace hubs::quadrature

#endif  // HUBS_QUADRATURE_HPP
