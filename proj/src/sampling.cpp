#include "parallax/sampling.hpp"

#include <cmath>

namespace parallax {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Rng trial_rng(uint64_t seed, std::string_view label, uint64_t trial) {
  Rng mixer(seed ^ fnv1a64(label));
  uint64_t base = mixer.next();
  Rng stepper(base + trial * 0x9E3779B97F4A7C15ull);
  return Rng(stepper.next());
}

double sample_disk_radius(const CurvedPlane& pl, double R, Rng& rng) {
  const double u = rng.uniform();
  if (pl.flat()) return R * std::sqrt(u);
  const double kap = pl.kappa();
  if (pl.K > 0) {
    // area(r) ~ 1 - cos(r*kap)
    return std::acos(clamp_unit(1.0 - u * (1.0 - std::cos(R * kap)))) / kap;
  }
  // area(r) ~ cosh(r*kap) - 1
  return std::acosh(1.0 + u * (std::cosh(R * kap) - 1.0)) / kap;
}

Point sample_disk(const CurvedPlane& pl, const Point& center, double R, Rng& rng) {
  const double theta = 2.0 * M_PI * rng.uniform();
  const double r = sample_disk_radius(pl, R, rng);
  Vec3 e = frame_x(pl);
  if (!pl.flat()) {
    // Transport the frame to `center` by projecting; degenerate only when
    // center sits on the x-axis' polar locus, which sampling never reaches.
    Vec3 proj = e - pl.K * bilinear(pl, e, center.v) * center.v;
    const double n2 = bilinear(pl, proj, proj);
    if (n2 > 1e-12) {
      e = proj / std::sqrt(n2);
    } else {
      Vec3 alt = frame_y(pl);
      proj = alt - pl.K * bilinear(pl, alt, center.v) * center.v;
      e = proj / std::sqrt(bilinear(pl, proj, proj));
    }
  }
  const Geodesic ray = geodesic_at_angle(pl, center, e, theta);
  return point_at(pl, ray, r);
}

}  // namespace parallax
