#pragma once

// Reference values computed without the library: closed-form uniform-sphere
// potentials on the axis and plain bisection. Tests compare against these.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double G = 6.67430e-11;
inline constexpr double c = 299792458.0;
inline constexpr double h = 6.62607015e-34;
inline constexpr double hbar = h / (2.0 * std::numbers::pi);
inline constexpr double amu = 1.66053906660e-27;
inline constexpr double m_cs = 132.905451961 * amu;
inline constexpr double pi = std::numbers::pi;

// Potential of a uniform sphere of radius R and density rho at distance r.
inline double sphere_u(double r, double R, double rho) {
  const double gm = G * rho * 4.0 / 3.0 * pi * R * R * R;
  if (r >= R) return -gm / r;
  return -gm * (3.0 * R * R - r * r) / (2.0 * R * R * R);
}

// Symmetric pair with centers at +-L/2, on-axis potential.
inline double pair_u(double x, double L, double R, double rho) {
  return sphere_u(std::abs(x - L / 2), R, rho) + sphere_u(std::abs(x + L / 2), R, rho);
}

// Inner holding point from (L/2 - x)(x + L/2)^2 = R^3 on (L/2 - R, L/2).
inline double inner_point(double L, double R) {
  double lo = L / 2 - R, hi = L / 2;
  auto f = [&](double x) { return (L / 2 - x) * (x + L / 2) * (x + L / 2) - R * R * R; };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double coefficient(double L_over_R) {
  const double xb = inner_point(L_over_R, 1.0);
  const double du = pair_u(0.0, L_over_R, 1.0, 1.0) - pair_u(xb, L_over_R, 1.0, 1.0);
  return du / (G * xb * xb);
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

}  // namespace oracle
