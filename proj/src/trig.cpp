#include "parallax/trig.hpp"

#include <cmath>
#include <complex>

namespace parallax {

double law_of_cosines(const CurvedPlane& pl, double a, double b, double gamma) {
  if (!(a >= 0) || !(b >= 0) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidParameter("sides must be finite and non-negative");
  if (!(gamma >= 0) || !(gamma <= M_PI)) throw InvalidParameter("angle must lie in [0, pi]");
  if (pl.flat()) return std::sqrt(std::max(0.0, a * a + b * b - 2 * a * b * std::cos(gamma)));
  if (pl.K > 0 && (a > pl.max_distance() || b > pl.max_distance()))
    throw InvalidParameter("spherical side exceeds half circumference");
  const double w = cos_k(pl.K, a) * cos_k(pl.K, b) +
                   pl.K * sin_k(pl.K, a) * sin_k(pl.K, b) * std::cos(gamma);
  return acos_k(pl.K, w);
}

double angle_from_sides(const CurvedPlane& pl, double a, double b, double c) {
  if (!(a > 0) || !(b > 0) || !(c >= 0)) throw InvalidParameter("sides must be positive");
  if (pl.flat())
    return std::acos(clamp_unit((a * a + b * b - c * c) / (2 * a * b)));
  const double num = cos_k(pl.K, c) - cos_k(pl.K, a) * cos_k(pl.K, b);
  const double den = pl.K * sin_k(pl.K, a) * sin_k(pl.K, b);
  return std::acos(clamp_unit(num / den));
}

double side_from_angles(const CurvedPlane& pl, double alpha, double beta, double gamma) {
  if (pl.flat()) throw WrongGeometry("angles do not fix a scale at K = 0");
  for (double x : {alpha, beta, gamma})
    if (!(x > 0) || !(x < M_PI)) throw InfeasibleAngles("each angle must lie in (0, pi)");
  const double sum = alpha + beta + gamma;
  if (pl.K < 0 && sum >= M_PI) throw InfeasibleAngles("angle sum must be below pi for K < 0");
  if (pl.K > 0 && sum <= M_PI) throw InfeasibleAngles("angle sum must exceed pi for K > 0");
  // Dual law: cos_k-value of side a from the opposite angle alpha.
  const double w =
      (std::cos(alpha) + std::cos(beta) * std::cos(gamma)) / (std::sin(beta) * std::sin(gamma));
  if (pl.K < 0) {
    if (w < 1.0) throw InfeasibleAngles("angles admit no hyperbolic triangle");
    return std::acosh(w) / pl.kappa();
  }
  if (std::abs(w) >= 1.0) throw InfeasibleAngles("angles admit no spherical triangle");
  return std::acos(w) / pl.kappa();
}

double angle_of_parallelism(const CurvedPlane& pl, double p) {
  if (pl.K >= 0) throw WrongGeometry("angle of parallelism needs K < 0");
  if (!(p > 0) || !std::isfinite(p)) throw InvalidParameter("distance must be positive");
  return 2.0 * std::atan(std::exp(-p * pl.kappa()));
}

double imaginary_correspondence_residual(const CurvedPlane& pl, double a, double b,
                                         double gamma) {
  if (pl.K >= 0) throw WrongGeometry("imaginary correspondence needs K < 0");
  const double c_h = law_of_cosines(pl, a, b, gamma);
  // Spherical law at curvature -K with sides scaled by sqrt(-1).
  const std::complex<double> i(0.0, 1.0);
  const double Ks = -pl.K;
  const std::complex<double> w = cos_k(Ks, i * a) * cos_k(Ks, i * b) +
                                 Ks * sin_k(Ks, i * a) * sin_k(Ks, i * b) * std::cos(gamma);
  std::complex<double> c_sph = std::acos(w) / pl.kappa();
  std::complex<double> c_i = c_sph / i;  // undo the imaginary side scaling
  if (c_i.real() < 0) c_i = -c_i;        // branch of acos beyond the cut
  if (std::abs(c_i.imag()) > pl.eps) return std::abs(c_i.imag()) + std::abs(c_i.real() - c_h);
  return std::abs(c_i - std::complex<double>(c_h, 0.0));
}

double equilateral_angle_from_side(const CurvedPlane& pl, double side) {
  if (!(side > 0)) throw InvalidParameter("side must be positive");
  if (pl.flat()) return M_PI / 3;
  const double h = 0.5 * side * pl.kappa();
  if (pl.K < 0) {
    const double t = std::tanh(h);
    return std::acos(0.5 * (1.0 + t * t));
  }
  const double t = std::tan(h);
  return std::acos(0.5 * (1.0 - t * t));
}

}  // namespace parallax
