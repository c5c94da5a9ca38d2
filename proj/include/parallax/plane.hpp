#pragma once

#include <cmath>
#include <complex>

#include "parallax/errors.hpp"

namespace parallax {

// Plane of constant curvature K. K > 0 lives on the sphere of radius
// 1/sqrt(K) (bilinear form +,+,+), K < 0 on the upper hyperboloid sheet
// (form +,+,-), K = 0 on the affine plane z = 1. K is the single source
// of truth; the radius is never stored.
struct CurvedPlane {
  double K;
  double eps;

  double kappa() const { return std::sqrt(std::abs(K)); }
  int sign() const { return (K > 0) - (K < 0); }
  bool flat() const { return K == 0; }
  // Third-coordinate weight of the bilinear form (+1 sphere, -1 hyperboloid).
  double sigma() const { return K < 0 ? -1.0 : 1.0; }
  // Half circumference: diameter of the sphere's metric, +inf otherwise.
  double max_distance() const {
    return K > 0 ? M_PI / std::sqrt(K) : std::numeric_limits<double>::infinity();
  }
};

CurvedPlane make_plane(double K, double eps = 1e-9);

// Curvature-graded circular functions. cos_k/sin_k solve u'' + K u = 0 with
// the usual initial data, so one formula covers all three regimes:
//   cos_k = cos(x*kappa) | cosh(x*kappa) | 1
//   sin_k = sin(x*kappa)/kappa | sinh(x*kappa)/kappa | x
// Templated on the scalar so the spherical formulas can be evaluated at
// complex arguments (imaginary-radius correspondence).
template <class S>
S cos_k(double K, const S& x) {
  const double kap = std::sqrt(std::abs(K));
  using std::cos;
  using std::cosh;
  if (K > 0) return cos(x * kap);
  if (K < 0) return cosh(x * kap);
  return S(1);
}

template <class S>
S sin_k(double K, const S& x) {
  const double kap = std::sqrt(std::abs(K));
  using std::sin;
  using std::sinh;
  if (K > 0) return sin(x * kap) / kap;
  if (K < 0) return sinh(x * kap) / kap;
  return x;
}

// Inverse of cos_k on the principal branch, in length units.
double acos_k(double K, double w);

inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace parallax
