#pragma once

#include <Eigen/Dense>
#include <vector>

#include "parallax/plane.hpp"

namespace parallax {

using Vec3 = Eigen::Vector3d;

// Model-embedded point. K != 0: <p,p>_K = 1/K under the signature form,
// upper sheet (z > 0) when K < 0. K = 0: affine (x, y, 1).
struct Point {
  Vec3 v;
};

// Complete geodesic with unit-speed arclength parameterization.
// <dir,dir>_K = 1 and <base,dir>_K = 0 for K != 0; dir.z = 0 for K = 0.
struct Geodesic {
  Point base;
  Vec3 dir;
};

enum class IntersectionKind { Empty, One, Two, Coincident };

// Two occurs only on the sphere (antipodal pair); Empty only for K <= 0.
struct IntersectionSet {
  IntersectionKind kind;
  std::vector<Point> points;
};

// Signature bilinear form of the embedding.
double bilinear(const CurvedPlane& pl, const Vec3& u, const Vec3& w);

// Signature-twisted cross product: bilinear(cross_k(u,w), u) = 0 for both
// signs of sigma, so it produces plane normals and intersection directions.
Vec3 cross_k(const CurvedPlane& pl, const Vec3& u, const Vec3& w);

// Re-projection onto the model constraint surface (drift suppression).
Point make_point(const CurvedPlane& pl, const Vec3& raw);
Geodesic make_geodesic(const CurvedPlane& pl, const Point& base, const Vec3& raw_dir);

// Canonical base point (origin / north pole / hyperboloid apex) and the
// standard frame directions there.
Point origin(const CurvedPlane& pl);
Vec3 frame_x(const CurvedPlane& pl);
Vec3 frame_y(const CurvedPlane& pl);

double distance(const CurvedPlane& pl, const Point& p, const Point& q);

Geodesic geodesic_through(const CurvedPlane& pl, const Point& p, const Point& q);

Point point_at(const CurvedPlane& pl, const Geodesic& g, double s);

// Unit tangent of g at parameter s (forward direction).
Vec3 tangent_at(const CurvedPlane& pl, const Geodesic& g, double s);

// Unit tangent at p pointing toward q along their geodesic.
Vec3 tangent_toward(const CurvedPlane& pl, const Point& p, const Point& q);

double angle_at(const CurvedPlane& pl, const Point& vertex, const Point& a, const Point& b);

// Angle between two unit tangents at the same point.
double angle_between(const CurvedPlane& pl, const Vec3& t1, const Vec3& t2);

struct Foot {
  Point foot;
  double dist;
};

Foot perpendicular_foot(const CurvedPlane& pl, const Point& p, const Geodesic& g);

Geodesic perpendicular_at(const CurvedPlane& pl, const Geodesic& g, double s);

IntersectionSet intersect(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2);

Point reflect(const CurvedPlane& pl, const Point& p, const Geodesic& g);

// Unit space-like normal of the geodesic's model plane (K != 0); for K = 0
// the homogeneous line coordinates (n_x, n_y, -c) of n.x = c, |n| = 1.
Vec3 geodesic_normal(const CurvedPlane& pl, const Geodesic& g);

bool on_trace(const CurvedPlane& pl, const Geodesic& g, const Point& p, double tol);

// Length of the common perpendicular between two disjoint geodesics (K < 0,
// ultraparallel pair), and the common perpendicular itself. Throws
// WrongConfiguration if the pair is not ultraparallel.
double common_perpendicular_gap(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2);
Geodesic common_perpendicular(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2);

// Geodesic through p whose initial direction makes `theta` with `ref_dir`
// (rotated counterclockwise in the oriented tangent plane at p).
Geodesic geodesic_at_angle(const CurvedPlane& pl, const Point& p, const Vec3& ref_dir,
                           double theta);

}  // namespace parallax
