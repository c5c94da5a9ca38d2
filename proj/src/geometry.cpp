#include "parallax/geometry.hpp"

#include <cmath>
#include <limits>

namespace parallax {

CurvedPlane make_plane(double K, double eps) {
  if (!std::isfinite(K)) throw InvalidParameter("curvature must be finite");
  if (!std::isfinite(eps) || eps <= 0) throw InvalidParameter("tolerance must be positive");
  return CurvedPlane{K, eps};
}

double acos_k(double K, double w) {
  const double kap = std::sqrt(std::abs(K));
  if (K > 0) return std::acos(clamp_unit(w)) / kap;
  if (K < 0) return std::acosh(w < 1.0 ? 1.0 : w) / kap;
  throw WrongGeometry("acos_k undefined at K = 0");
}

double bilinear(const CurvedPlane& pl, const Vec3& u, const Vec3& w) {
  return u.x() * w.x() + u.y() * w.y() + pl.sigma() * u.z() * w.z();
}

Vec3 cross_k(const CurvedPlane& pl, const Vec3& u, const Vec3& w) {
  Vec3 c = u.cross(w);
  c.z() *= pl.sigma();
  return c;
}

Point make_point(const CurvedPlane& pl, const Vec3& raw) {
  if (!raw.allFinite()) throw InvalidParameter("non-finite point coordinates");
  if (pl.flat()) {
    if (std::abs(raw.z()) < 1e-300) throw InvalidParameter("affine point at infinity");
    return Point{Vec3(raw.x() / raw.z(), raw.y() / raw.z(), 1.0)};
  }
  const double kap = pl.kappa();
  if (pl.K > 0) {
    const double n = raw.norm();
    if (n < 1e-300) throw DegenerateInput("zero vector is not a spherical point");
    return Point{raw / (n * kap)};
  }
  // Far out on the sheet the form value of a surface vector sinks below the
  // rounding noise of its squared coordinates, so grade the vector at unit
  // magnitude and treat the near-cone band as on-surface data.
  const double r = std::hypot(raw.x(), raw.y());
  const double mag = std::max(r, std::abs(raw.z()));
  if (mag < 1e-300) throw DegenerateInput("vector is not time-like");
  const Vec3 u = raw / mag;
  const double s = bilinear(pl, u, u);
  if (s > 1e-12) throw DegenerateInput("vector is not time-like");
  if (s > -1e-12) {
    const double zz = std::hypot(r, 1.0 / kap);
    const double flip = raw.z() < 0 ? -1.0 : 1.0;
    return Point{Vec3(flip * raw.x(), flip * raw.y(), zz)};
  }
  Vec3 v = u / (kap * std::sqrt(-s));
  if (v.z() < 0) v = -v;  // upper sheet
  return Point{v};
}

Geodesic make_geodesic(const CurvedPlane& pl, const Point& base, const Vec3& raw_dir) {
  if (pl.flat()) {
    Vec3 d(raw_dir.x(), raw_dir.y(), 0.0);
    const double n = d.norm();
    if (n <= 1e-300) throw DegenerateInput("zero direction");
    return Geodesic{base, d / n};
  }
  // Project out the base component, then normalize under the form.
  Vec3 d = raw_dir - pl.K * bilinear(pl, raw_dir, base.v) * base.v;
  const double n2 = bilinear(pl, d, d);
  if (n2 <= 1e-300) throw DegenerateInput("direction is not space-like at base");
  return Geodesic{base, d / std::sqrt(n2)};
}

Point origin(const CurvedPlane& pl) {
  if (pl.flat()) return Point{Vec3(0, 0, 1)};
  return Point{Vec3(0, 0, 1.0 / pl.kappa())};
}

Vec3 frame_x(const CurvedPlane&) { return Vec3(1, 0, 0); }
Vec3 frame_y(const CurvedPlane&) { return Vec3(0, 1, 0); }

double distance(const CurvedPlane& pl, const Point& p, const Point& q) {
  if (pl.flat()) return std::hypot(p.v.x() - q.v.x(), p.v.y() - q.v.y());
  const double kap = pl.kappa();
  if (pl.K > 0) {
    const double w = pl.K * bilinear(pl, p.v, q.v);
    if (w < 0) return std::acos(clamp_unit(w)) / kap;
    // Half-chord form keeps small separations well conditioned.
    const double ch = (p.v - q.v).norm();
    return 2.0 * std::asin(clamp_unit(0.5 * kap * ch)) / kap;
  }
  const Vec3 d = p.v - q.v;
  const double m2 = bilinear(pl, d, d);  // space-like separation, >= 0
  // The chord squares of a far point cancel below their own rounding noise;
  // there the product form is the well-conditioned one.
  if (m2 <= 1e-12 * d.squaredNorm()) {
    const double w = pl.K * bilinear(pl, p.v, q.v);
    // the product form resolves nothing near coincidence, but only far pairs
    // and near-identical pairs land here
    return w <= 1.0 + 1e-10 ? 0.0 : std::acosh(w) / kap;
  }
  return 2.0 * std::asinh(0.5 * kap * std::sqrt(m2)) / kap;
}

Vec3 tangent_toward(const CurvedPlane& pl, const Point& p, const Point& q) {
  if (pl.flat()) {
    Vec3 d = q.v - p.v;
    d.z() = 0;
    const double n = d.norm();
    if (n <= 1e-300) throw DegenerateInput("coincident points have no direction");
    return d / n;
  }
  const double c = pl.K * bilinear(pl, p.v, q.v);
  Vec3 w = q.v - c * p.v;
  double n2 = bilinear(pl, w, w);
  // B(w,w) expands to (1 - c^2)/K exactly.  Far points sink the direct form
  // below their own coordinate rounding noise; there the expansion holds on.
  if (n2 <= 1e-12 * w.squaredNorm()) n2 = (1.0 - c * c) / pl.K;
  if (n2 <= 1e-300) throw DegenerateInput("no unique direction between the points");
  return w / std::sqrt(n2);
}

Geodesic geodesic_through(const CurvedPlane& pl, const Point& p, const Point& q) {
  const double d = distance(pl, p, q);
  if (d <= pl.eps) throw DegenerateInput("coincident endpoints");
  if (pl.K > 0 && d >= pl.max_distance() - pl.eps)
    throw NonUniqueGeodesic("antipodal endpoints");
  return Geodesic{p, tangent_toward(pl, p, q)};
}

Point point_at(const CurvedPlane& pl, const Geodesic& g, double s) {
  if (pl.flat()) return Point{g.base.v + s * g.dir};
  const double kap = pl.kappa();
  if (pl.K > 0)
    return make_point(pl, g.base.v * std::cos(s * kap) + g.dir * (std::sin(s * kap) / kap));
  const double u = s * kap;
  if (std::abs(u) > 8.0) {
    // Null-split flow: far out the forward term dominates and every coordinate
    // keeps eps-level relative error, where the cosh/sinh form can cancel.
    // The output is surface data by construction, so project it back onto the
    // sheet directly instead of grading the form of the raw coordinates.
    const Vec3 fwd = 0.5 * (g.base.v + g.dir / kap);
    const Vec3 bwd = 0.5 * (g.base.v - g.dir / kap);
    const Vec3 raw = fwd * std::exp(u) + bwd * std::exp(-u);
    if (!raw.allFinite()) throw InvalidParameter("non-finite point coordinates");
    const double zz = std::hypot(std::hypot(raw.x(), raw.y()), 1.0 / kap);
    return Point{Vec3(raw.x(), raw.y(), zz)};
  }
  return make_point(pl, g.base.v * std::cosh(u) + g.dir * (std::sinh(u) / kap));
}

Vec3 tangent_at(const CurvedPlane& pl, const Geodesic& g, double s) {
  if (pl.flat()) return g.dir;
  const double kap = pl.kappa();
  Vec3 t;
  if (pl.K > 0) {
    t = -g.base.v * (kap * std::sin(s * kap)) + g.dir * std::cos(s * kap);
  } else {
    const double u = s * kap;
    if (std::abs(u) > 8.0) {
      const Vec3 fwd = 0.5 * (g.base.v * kap + g.dir);
      const Vec3 bwd = 0.5 * (g.base.v * kap - g.dir);
      t = fwd * std::exp(u) - bwd * std::exp(-u);
    } else {
      t = g.base.v * (kap * std::sinh(u)) + g.dir * std::cosh(u);
    }
  }
  const double n2 = bilinear(pl, t, t);
  return t / std::sqrt(n2);
}

double angle_between(const CurvedPlane& pl, const Vec3& t1, const Vec3& t2) {
  return std::acos(clamp_unit(bilinear(pl, t1, t2)));
}

double angle_at(const CurvedPlane& pl, const Point& vertex, const Point& a, const Point& b) {
  if (distance(pl, vertex, a) <= pl.eps || distance(pl, vertex, b) <= pl.eps)
    throw DegenerateInput("angle leg shorter than tolerance");
  return angle_between(pl, tangent_toward(pl, vertex, a), tangent_toward(pl, vertex, b));
}

Foot perpendicular_foot(const CurvedPlane& pl, const Point& p, const Geodesic& g) {
  if (pl.flat()) {
    const Vec3 rel = p.v - g.base.v;
    const double t = rel.x() * g.dir.x() + rel.y() * g.dir.y();
    Point foot = point_at(pl, g, t);
    return Foot{foot, distance(pl, p, foot)};
  }
  const double kap = pl.kappa();
  const double cb = bilinear(pl, p.v, g.base.v);
  const double cd = bilinear(pl, p.v, g.dir);
  double s;
  if (pl.K > 0) {
    if (std::hypot(kap * cb, cd) * kap <= pl.eps) throw NonUniqueFoot("point is a pole of the geodesic");
    s = std::atan2(cd, kap * cb) / kap;
  } else {
    // cb < 0 on the shared sheet; |ratio| < 1 always.
    s = std::atanh(clamp_unit(-cd / (kap * cb))) / kap;
  }
  Point foot = point_at(pl, g, s);
  const double d = distance(pl, p, foot);
  if (pl.K > 0 && d >= M_PI / (2 * kap) - pl.eps) throw NonUniqueFoot("point is a pole of the geodesic");
  return Foot{foot, d};
}

Geodesic perpendicular_at(const CurvedPlane& pl, const Geodesic& g, double s) {
  Point b = point_at(pl, g, s);
  Vec3 t = tangent_at(pl, g, s);
  if (pl.flat()) return Geodesic{b, Vec3(-t.y(), t.x(), 0)};
  Vec3 n = cross_k(pl, b.v, t);
  return make_geodesic(pl, b, n / std::sqrt(bilinear(pl, n, n)));
}

Vec3 geodesic_normal(const CurvedPlane& pl, const Geodesic& g) {
  if (pl.flat()) {
    const Vec3 n(-g.dir.y(), g.dir.x(), 0);
    const double c = n.x() * g.base.v.x() + n.y() * g.base.v.y();
    return Vec3(n.x(), n.y(), -c);
  }
  Vec3 m = cross_k(pl, g.base.v, g.dir);
  return m / std::sqrt(bilinear(pl, m, m));  // space-like for both signs
}

bool on_trace(const CurvedPlane& pl, const Geodesic& g, const Point& p, double tol) {
  const Vec3 m = geodesic_normal(pl, g);
  if (pl.flat()) return std::abs(m.x() * p.v.x() + m.y() * p.v.y() + m.z()) <= tol;
  const double kap = pl.kappa();
  const double h = kap * std::abs(bilinear(pl, p.v, m));
  const double d = pl.K > 0 ? std::asin(clamp_unit(h)) / kap : std::asinh(h) / kap;
  return d <= tol;
}

IntersectionSet intersect(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  constexpr double kParallelTol = 1e-12;
  if (pl.flat()) {
    const Vec3 l1 = geodesic_normal(pl, g1);
    const Vec3 l2 = geodesic_normal(pl, g2);
    const Vec3 c = l1.cross(l2);
    if (c.cwiseAbs().maxCoeff() <= kParallelTol) return {IntersectionKind::Coincident, {}};
    if (std::abs(c.z()) <= kParallelTol) return {IntersectionKind::Empty, {}};
    return {IntersectionKind::One, {Point{Vec3(c.x() / c.z(), c.y() / c.z(), 1.0)}}};
  }
  const Vec3 m1 = geodesic_normal(pl, g1);
  const Vec3 m2 = geodesic_normal(pl, g2);
  const Vec3 v = cross_k(pl, m1, m2);
  if (v.norm() <= kParallelTol) return {IntersectionKind::Coincident, {}};
  if (pl.K > 0) {
    Point p = make_point(pl, v);
    return {IntersectionKind::Two, {p, Point{-p.v}}};
  }
  const double q = bilinear(pl, v, v);
  if (q >= -kParallelTol * v.squaredNorm()) return {IntersectionKind::Empty, {}};
  return {IntersectionKind::One, {make_point(pl, v)}};
}

Point reflect(const CurvedPlane& pl, const Point& p, const Geodesic& g) {
  const Vec3 m = geodesic_normal(pl, g);
  if (pl.flat()) {
    const double h = m.x() * p.v.x() + m.y() * p.v.y() + m.z();
    return Point{Vec3(p.v.x() - 2 * h * m.x(), p.v.y() - 2 * h * m.y(), 1.0)};
  }
  return make_point(pl, p.v - 2.0 * bilinear(pl, p.v, m) * m);
}

double common_perpendicular_gap(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  if (pl.K >= 0) throw WrongGeometry("common perpendicular gap needs K < 0");
  const double w = std::abs(bilinear(pl, geodesic_normal(pl, g1), geodesic_normal(pl, g2)));
  if (w <= 1.0) throw WrongConfiguration("geodesics are not ultraparallel");
  return std::acosh(w) / pl.kappa();
}

Geodesic common_perpendicular(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  if (pl.K >= 0) throw WrongGeometry("common perpendicular needs K < 0");
  const Vec3 m1 = geodesic_normal(pl, g1);
  const Vec3 m2 = geodesic_normal(pl, g2);
  if (std::abs(bilinear(pl, m1, m2)) <= 1.0)
    throw WrongConfiguration("geodesics are not ultraparallel");
  Vec3 n = cross_k(pl, m1, m2);  // normal of the common perpendicular's plane
  n /= std::sqrt(bilinear(pl, n, n));
  // Foot on g1: intersection of the two planes, time-like by ultraparallelism.
  Vec3 u = cross_k(pl, n, m1);
  Point f1 = make_point(pl, u);
  Vec3 t = cross_k(pl, f1.v, n);  // direction within the perpendicular's plane
  return make_geodesic(pl, f1, t);
}

Geodesic geodesic_at_angle(const CurvedPlane& pl, const Point& p, const Vec3& ref_dir,
                           double theta) {
  Vec3 e = ref_dir;
  Vec3 f;
  if (pl.flat()) {
    f = Vec3(-e.y(), e.x(), 0);
  } else {
    f = cross_k(pl, p.v, e);
    f /= std::sqrt(bilinear(pl, f, f));
  }
  return make_geodesic(pl, p, e * std::cos(theta) + f * std::sin(theta));
}

}  // namespace parallax
