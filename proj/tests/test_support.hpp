#pragma once

#include <cmath>
#include <vector>

#include "parallax/figures.hpp"
#include "parallax/geometry.hpp"
#include "parallax/sampling.hpp"

namespace support {

using namespace parallax;

inline std::vector<double> standard_ks() { return {-1.0, 0.0, 1.0}; }

// Independent length oracle: chord-sum along the unit-speed flow. Uses only
// point_at and the bilinear form, so it cross-checks the closed-form
// distance against the geodesic parameterization.
inline double polyline_length(const CurvedPlane& pl, const Geodesic& g, double s1,
                              int segments) {
  double total = 0;
  Point prev = point_at(pl, g, 0.0);
  for (int i = 1; i <= segments; ++i) {
    const Point next = point_at(pl, g, s1 * i / segments);
    const Vec3 d = next.v - prev.v;
    total += std::sqrt(std::max(bilinear(pl, d, d), 0.0));
    prev = next;
  }
  return total;
}

// Oracle for the angle of parallelism: bisect on the angle at which the
// tilted line through the point at distance p stops meeting the base line.
inline double parallelism_by_bisection(const CurvedPlane& pl, double p) {
  const Geodesic base = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point at = point_at(pl, make_geodesic(pl, origin(pl), frame_y(pl)), p);
  const Vec3 down = tangent_toward(pl, at, origin(pl));
  auto meets = [&](double theta) {
    const Geodesic ray = geodesic_at_angle(pl, at, down, theta);
    return intersect(pl, ray, base).kind != IntersectionKind::Empty;
  };
  double lo = 0, hi = M_PI / 2;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (meets(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Non-degenerate random triangle inside the disk of radius R.
inline Triangle random_triangle(const CurvedPlane& pl, double R, double min_side, Rng& rng) {
  const Point o = origin(pl);
  for (int attempt = 0; attempt < 512; ++attempt) {
    const Point p = sample_disk(pl, o, R, rng);
    const Point q = sample_disk(pl, o, R, rng);
    const Point r = sample_disk(pl, o, R, rng);
    if (distance(pl, p, q) < min_side || distance(pl, q, r) < min_side ||
        distance(pl, r, p) < min_side)
      continue;
    try {
      const Triangle t = build_triangle(pl, p, q, r);
      if (t.alpha > 0.02 && t.beta > 0.02 && t.gamma > 0.02) return t;
    } catch (const Error&) {
    }
  }
  throw DegenerateInput("random triangle sampling exhausted");
}

}  // namespace support
