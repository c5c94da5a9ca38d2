#pragma once

#include <array>
#include <utility>
#include <vector>

#include "parallax/geometry.hpp"

namespace parallax {

// Side a is opposite vertex A, etc. excess = angle_sum - pi (negative
// values are the defect).
struct Triangle {
  Point A, B, C;
  double a, b, c;
  double alpha, beta, gamma;
  double angle_sum;
  double excess;
};

// Right angles at A, B and C; phi is the free angle at D. a = |AB| and
// b = |AC| are the sides meeting at the corner opposite the free angle.
struct LambertQuad {
  Point A, B, D, C;
  double a, b;
  double phi;
};

// Right angles at the two base vertices, equal legs. vertices cycle
// base-left, base-right, summit-right, summit-left.
struct SaccheriQuad {
  double base, leg, summit, summit_angle;
  std::array<Point, 4> vertices;
};

Triangle build_triangle(const CurvedPlane& pl, const Point& p, const Point& q, const Point& r);

// excess/K for K != 0, Heron for K = 0. Positive for non-degenerate input.
double area(const CurvedPlane& pl, const Triangle& t);

// Side of the equilateral triangle with vertex angle alpha. Feasible alpha:
// (0, pi/3) for K < 0, (pi/3, pi/2] for K > 0 (the octant closes the range).
double equilateral_from_angle(const CurvedPlane& pl, double alpha);

// Equilateral triangle with the given side, anchored at the canonical
// origin. Stable down to sides ~1e-6.
Triangle equilateral_triangle(const CurvedPlane& pl, double side);

LambertQuad build_lambert_quad(const CurvedPlane& pl, double a, double b);

SaccheriQuad build_saccheri_quad(const CurvedPlane& pl, double base, double leg);

// Cut along the symmetry axis: two mirror-image trirectangular quads whose
// free angles equal the summit angle. Returned as (left, right).
std::pair<LambertQuad, LambertQuad> split_saccheri(const CurvedPlane& pl,
                                                   const SaccheriQuad& q);

struct MedianRatio {
  double ratio;  // DF / AF, F the midpoint of BC, D the median point
  Point D;
};

MedianRatio median_ratio(const CurvedPlane& pl, double side);

// Two lines with a common perpendicular of length `gap` (line_a through A,
// line_b through B), and the perpendiculars raised on line_a at arclengths
// step, 2*step, ..., n*step from A, each continued until it meets line_b.
// lengths[i] = raised-perpendicular segment, angles[i] = interior angle at
// its end on line_b (toward B). Throws DivergentSides at K < 0 when a raised
// perpendicular misses line_b.
struct PerpendicularSequence {
  Geodesic line_a, line_b;
  Point A, B;
  std::vector<Point> feet;  // on line_a, right angles here
  std::vector<Point> tops;  // on line_b
  std::vector<double> lengths;
  std::vector<double> angles;
  double gap;
};

PerpendicularSequence build_perpendicular_sequence(const CurvedPlane& pl, double gap,
                                                   double step, int n);

}  // namespace parallax
