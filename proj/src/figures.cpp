#include "parallax/figures.hpp"

#include <algorithm>
#include <cmath>

#include "parallax/trig.hpp"

namespace parallax {

namespace {

// Nearest of the candidates to `ref` (spherical intersections come in
// antipodal pairs; callers pick the one on their side).
Point nearest_to(const CurvedPlane& pl, const IntersectionSet& s, const Point& ref) {
  const Point* best = nullptr;
  double bd = std::numeric_limits<double>::infinity();
  for (const auto& p : s.points) {
    const double d = distance(pl, ref, p);
    if (d < bd) {
      bd = d;
      best = &p;
    }
  }
  if (!best) throw DegenerateInput("empty intersection where one was required");
  return *best;
}

}  // namespace

Triangle build_triangle(const CurvedPlane& pl, const Point& p, const Point& q, const Point& r) {
  Triangle t;
  t.A = p;
  t.B = q;
  t.C = r;
  t.a = distance(pl, q, r);
  t.b = distance(pl, r, p);
  t.c = distance(pl, p, q);
  if (t.a <= pl.eps || t.b <= pl.eps || t.c <= pl.eps)
    throw DegenerateInput("triangle with a vanishing side");
  t.alpha = angle_at(pl, p, q, r);
  t.beta = angle_at(pl, q, r, p);
  t.gamma = angle_at(pl, r, p, q);
  for (double ang : {t.alpha, t.beta, t.gamma})
    if (ang <= pl.eps || ang >= M_PI - pl.eps)
      throw DegenerateInput("collinear triangle vertices");
  t.angle_sum = t.alpha + t.beta + t.gamma;
  t.excess = t.angle_sum - M_PI;
  return t;
}

double area(const CurvedPlane& pl, const Triangle& t) {
  if (!pl.flat()) return t.excess / pl.K;
  // Heron with Kahan's ordering: sorted sides keep the products positive.
  double a = t.a, b = t.b, c = t.c;
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(0.0, s));
}

double equilateral_from_angle(const CurvedPlane& pl, double alpha) {
  if (pl.flat()) throw WrongGeometry("flat plane has no absolute length unit");
  if (!(alpha > 0) || !std::isfinite(alpha)) throw InvalidParameter("angle must be positive");
  const double kap = pl.kappa();
  // Inverse of the half-angle form of the equilateral vertex angle:
  // K<0: cos(alpha) = (1 + tanh^2(s*kap/2))/2, K>0 with tan and a minus.
  if (pl.K < 0) {
    const double t2 = 2 * std::cos(alpha) - 1.0;
    if (t2 <= 0) throw InfeasibleAngle("vertex angle must be below pi/3 for K < 0");
    return 2.0 * std::atanh(std::sqrt(t2)) / kap;
  }
  const double t2 = 1.0 - 2 * std::cos(alpha);
  if (t2 <= 0) throw InfeasibleAngle("vertex angle must exceed pi/3 for K > 0");
  if (t2 > 1.0) throw InfeasibleAngle("vertex angle must not exceed pi/2");
  return 2.0 * std::atan(std::sqrt(t2)) / kap;
}

Triangle equilateral_triangle(const CurvedPlane& pl, double side) {
  if (!(side > pl.eps)) throw DegenerateInput("side below tolerance");
  const double kap = pl.kappa();
  const Point A = origin(pl);
  const Geodesic base = make_geodesic(pl, A, frame_x(pl));
  const Point B = point_at(pl, base, side);
  // Height over the midpoint, via the right triangle with hypotenuse `side`
  // and base side/2; the difference-product forms stay accurate at tiny sides.
  double h;
  if (pl.flat()) {
    h = side * std::sqrt(3.0) / 2.0;
  } else if (pl.K < 0) {
    const double x = 2.0 * std::sinh(0.75 * side * kap) * std::sinh(0.25 * side * kap) /
                     std::cosh(0.5 * side * kap);
    h = std::asinh(std::sqrt(x * (2.0 + x))) / kap;
  } else {
    if (side >= M_PI / kap) throw DegenerateInput("side exceeds the spherical range");
    const double x = 2.0 * std::sin(0.75 * side * kap) * std::sin(0.25 * side * kap) /
                     std::cos(0.5 * side * kap);
    h = 2.0 * std::asin(std::sqrt(std::min(1.0, 0.5 * x))) / kap;
  }
  const Geodesic up = perpendicular_at(pl, base, 0.5 * side);
  const Point C = point_at(pl, up, h);
  return build_triangle(pl, A, B, C);
}

LambertQuad build_lambert_quad(const CurvedPlane& pl, double a, double b) {
  if (!(a > pl.eps) || !(b > pl.eps)) throw DegenerateInput("sides below tolerance");
  if (pl.K > 0 && (a >= M_PI / (2 * pl.kappa()) || b >= M_PI / (2 * pl.kappa())))
    throw InvalidParameter("sides must stay inside the open quarter turn");
  LambertQuad q;
  q.a = a;
  q.b = b;
  q.A = origin(pl);
  const Geodesic ga = make_geodesic(pl, q.A, frame_x(pl));
  const Geodesic gb = make_geodesic(pl, q.A, frame_y(pl));
  q.B = point_at(pl, ga, a);
  q.C = point_at(pl, gb, b);
  const Geodesic perp_b = perpendicular_at(pl, ga, a);        // +y side
  Geodesic perp_c = perpendicular_at(pl, gb, b);
  perp_c.dir = -perp_c.dir;                                   // +x side
  const IntersectionSet hit = intersect(pl, perp_b, perp_c);
  if (hit.kind == IntersectionKind::Empty) {
    const double gap = common_perpendicular_gap(pl, perp_b, perp_c);
    throw DivergentSides("erected perpendiculars diverge", gap);
  }
  if (hit.kind == IntersectionKind::Coincident)
    throw DegenerateInput("erected perpendiculars coincide");
  q.D = nearest_to(pl, hit, point_at(pl, perp_b, b));
  q.phi = angle_at(pl, q.D, q.B, q.C);
  return q;
}

SaccheriQuad build_saccheri_quad(const CurvedPlane& pl, double base, double leg) {
  if (!(base > pl.eps) || !(leg > pl.eps)) throw DegenerateInput("size below tolerance");
  if (pl.K > 0 && (base >= M_PI / (2 * pl.kappa()) || leg >= M_PI / (2 * pl.kappa())))
    throw DegenerateInput("legs reach the pole");
  SaccheriQuad q;
  q.base = base;
  q.leg = leg;
  const Point O = origin(pl);
  const Geodesic gb = make_geodesic(pl, O, frame_x(pl));
  const Point B1 = point_at(pl, gb, -0.5 * base);
  const Point B2 = point_at(pl, gb, +0.5 * base);
  const Point S1 = point_at(pl, perpendicular_at(pl, gb, -0.5 * base), leg);
  const Point S2 = point_at(pl, perpendicular_at(pl, gb, +0.5 * base), leg);
  q.summit = distance(pl, S1, S2);
  if (q.summit <= pl.eps) throw DegenerateInput("legs reach the pole");
  q.summit_angle = angle_at(pl, S2, B2, S1);
  q.vertices = {B1, B2, S2, S1};
  return q;
}

std::pair<LambertQuad, LambertQuad> split_saccheri(const CurvedPlane& pl,
                                                   const SaccheriQuad& q) {
  const Point O = origin(pl);
  const Geodesic axis = make_geodesic(pl, O, frame_y(pl));
  const Geodesic summit = geodesic_through(pl, q.vertices[3], q.vertices[2]);
  const Point M = nearest_to(pl, intersect(pl, axis, summit), q.vertices[3]);
  auto half = [&](const Point& base_v, const Point& summit_v) {
    LambertQuad h;
    h.A = O;
    h.B = base_v;
    h.C = M;
    h.D = summit_v;
    h.a = distance(pl, O, base_v);
    h.b = distance(pl, O, M);
    h.phi = angle_at(pl, summit_v, base_v, M);
    return h;
  };
  return {half(q.vertices[0], q.vertices[3]), half(q.vertices[1], q.vertices[2])};
}

PerpendicularSequence build_perpendicular_sequence(const CurvedPlane& pl, double gap,
                                                   double step, int n) {
  if (!(gap > pl.eps) || !(step > pl.eps) || n < 1)
    throw DegenerateInput("sequence needs positive gap, step and count");
  PerpendicularSequence seq;
  seq.gap = gap;
  const Point O = origin(pl);
  const Geodesic axis = make_geodesic(pl, O, frame_y(pl));  // the common perpendicular
  seq.B = O;
  seq.line_b = make_geodesic(pl, O, frame_x(pl));
  seq.A = point_at(pl, axis, gap);
  Geodesic la = perpendicular_at(pl, axis, gap);
  la.dir = -la.dir;  // advance over line_b's positive side
  seq.line_a = la;
  for (int i = 1; i <= n; ++i) {
    const double u = i * step;
    const Point x = point_at(pl, seq.line_a, u);
    const Geodesic raised = perpendicular_at(pl, seq.line_a, u);
    const IntersectionSet hit = intersect(pl, raised, seq.line_b);
    if (hit.kind == IntersectionKind::Empty) {
      const double g = common_perpendicular_gap(pl, raised, seq.line_b);
      throw DivergentSides("raised perpendicular misses the far line", g);
    }
    if (hit.kind == IntersectionKind::Coincident)
      throw DegenerateInput("raised perpendicular coincides with the far line");
    const Point* y = &hit.points.front();
    if (hit.points.size() == 2 && distance(pl, x, hit.points[1]) < distance(pl, x, hit.points[0]))
      y = &hit.points[1];
    seq.feet.push_back(x);
    seq.tops.push_back(*y);
    seq.lengths.push_back(distance(pl, x, *y));
    seq.angles.push_back(angle_at(pl, *y, x, seq.B));
  }
  return seq;
}

MedianRatio median_ratio(const CurvedPlane& pl, double side) {
  if (pl.K > 0 && side >= M_PI / (2 * pl.kappa()))
    throw DegenerateInput("side exceeds the spherical safe range");
  const Triangle t = equilateral_triangle(pl, side);
  const Geodesic bc = geodesic_through(pl, t.B, t.C);
  const Point F = point_at(pl, bc, 0.5 * t.a);
  const Geodesic af = geodesic_through(pl, t.A, F);
  const Geodesic ca = geodesic_through(pl, t.C, t.A);
  const Point E = point_at(pl, ca, 0.5 * t.b);
  const Geodesic be = geodesic_through(pl, t.B, E);
  const double laf = distance(pl, t.A, F);
  const Point D = nearest_to(pl, intersect(pl, af, be), point_at(pl, af, 0.5 * laf));
  return MedianRatio{distance(pl, D, F) / laf, D};
}

}  // namespace parallax
