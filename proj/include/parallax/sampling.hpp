#pragma once

#include <cstdint>
#include <string_view>

#include "parallax/geometry.hpp"

namespace parallax {

// splitmix64: tiny, well-mixed, and fully specified here so that reports
// are byte-identical across platforms (std:: distributions are not).
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0, 1), 53 uniform bits.
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

uint64_t fnv1a64(std::string_view s);

// Independent stream per (seed, label, trial): parallel and serial schedules
// see identical draws.
Rng trial_rng(uint64_t seed, std::string_view label, uint64_t trial);

// Area-uniform point in the geodesic disk of radius R about `center`.
Point sample_disk(const CurvedPlane& pl, const Point& center, double R, Rng& rng);

// Radius component alone (area-uniform inverse CDF per curvature sign).
double sample_disk_radius(const CurvedPlane& pl, double R, Rng& rng);

}  // namespace parallax
