#pragma once

#include <cmath>
#include <limits>

#include "gaussjacobi/core.hpp"

namespace gjtest {

using gaussjacobi::Real;
inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();

inline Real rel(Real a, Real b) { return b == 0 ? std::abs(a) : std::abs(a - b) / std::abs(b); }

// Direct three-term recurrence for P_n^{(a,b)}(x), long double.
inline long double jacobi_p(int n, long double a, long double b, long double x) {
  if (n == 0) return 1;
  long double p0 = 1, p1 = (a - b + (a + b + 2) * x) / 2;
  for (int k = 1; k < n; ++k) {
    const long double s = 2 * k + a + b;
    const long double A = 2 * (k + 1) * (k + a + b + 1) * s;
    const long double B = (s + 1) * ((s + 2) * s * x + a * a - b * b);
    const long double C = 2 * (k + a) * (k + b) * (s + 2);
    const long double p2 = (B * p1 - C * p0) / A;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// Y~ = (1-x)^((a+1)/2) (1+x)^((b+1)/2) P_n^{(a,b)}(x)
inline long double ytilde(int n, long double a, long double b, long double x) {
  return std::pow(1 - x, (a + 1) / 2) * std::pow(1 + x, (b + 1) / 2) * jacobi_p(n, a, b, x);
}

}  // namespace gjtest
