#pragma once

// Test-only reference routes. Nothing here calls into the library's
// closed-form paths.

#include <cmath>
#include <functional>

namespace ljfix::testing {

inline double lj_direct(double sigma, double eps, double q) {
  const double x = sigma / q;
  return 4.0 * eps * (std::pow(x, 12) - std::pow(x, 6));
}

inline double f_direct(double chi) { return -4.0 * chi * (1.0 - chi); }

/// Plain bisection on a sign-changing bracket until width <= tol.
inline double bisect(const std::function<double(double)>& g, double lo, double hi, double tol) {
  double g_lo = g(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Crossing radii of U(q) = u_c on [1e-3 sigma, q0] and [q0, 1e3 sigma].
struct BracketRoots {
  double left;
  double right;
};

inline BracketRoots bisect_crossings(double sigma, double eps, double u_c) {
  const double q0 = sigma * std::pow(2.0, 1.0 / 6.0);
  auto g = [&](double q) { return lj_direct(sigma, eps, q) - u_c; };
  return {bisect(g, 1e-3 * sigma, q0, 1e-14 * sigma), bisect(g, q0, 1e3 * sigma, 1e-14 * sigma)};
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace ljfix::testing
