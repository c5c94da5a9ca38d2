#include "parallax/counterexamples.hpp"

#include <cmath>

#include "parallax/errors.hpp"
#include "parallax/trig.hpp"

namespace parallax {

namespace {

Geodesic base_line(const CurvedPlane& pl) {
  return make_geodesic(pl, origin(pl), frame_x(pl));
}

Geodesic axis_line(const CurvedPlane& pl) {
  return make_geodesic(pl, origin(pl), frame_y(pl));
}

bool meets(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  const IntersectionKind k = intersect(pl, g1, g2).kind;
  return k == IntersectionKind::One || k == IntersectionKind::Two;
}

Json point_json(const Point& p) { return Json{p.v.x(), p.v.y(), p.v.z()}; }

Json geodesic_json(const Geodesic& g) {
  return Json{{"base", point_json(g.base)}, {"dir", Json{g.dir.x(), g.dir.y(), g.dir.z()}}};
}

Point point_from_json(const CurvedPlane& pl, const Json& j) {
  return make_point(pl, Vec3(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()));
}

Geodesic geodesic_from_json(const CurvedPlane& pl, const Json& j) {
  const Point b = point_from_json(pl, j.at("base"));
  const Json& d = j.at("dir");
  return make_geodesic(pl, b,
                       Vec3(d.at(0).get<double>(), d.at(1).get<double>(), d.at(2).get<double>()));
}

// Line entering the base at arclength t under angle pi - b (leaning back
// over the fixed line's side).
Geodesic wallis_moving_line(const CurvedPlane& pl, double b, double t) {
  const Geodesic l3 = base_line(pl);
  const Point Bt = point_at(pl, l3, t);
  return geodesic_at_angle(pl, Bt, tangent_at(pl, l3, t), M_PI - b);
}

struct KhayyamFigure {
  Geodesic leg_line;  // through A, perpendicular to the base
  Geodesic hki;       // perpendicular to the axis at twice the height of G
  double eg;
};

KhayyamFigure khayyam_figure(const CurvedPlane& pl, double base, double legs) {
  if (!(base > pl.eps) || !(legs > pl.eps)) throw DegenerateInput("figure size below tolerance");
  const Geodesic gb = base_line(pl);
  const Geodesic leg_a = perpendicular_at(pl, gb, -0.5 * base);
  const Geodesic leg_b = perpendicular_at(pl, gb, +0.5 * base);
  const Point C = point_at(pl, leg_a, legs);
  const Point D = point_at(pl, leg_b, legs);
  const Geodesic axis = axis_line(pl);
  const IntersectionSet hit = intersect(pl, geodesic_through(pl, C, D), axis);
  if (hit.kind != IntersectionKind::One && hit.kind != IntersectionKind::Two)
    throw DegenerateInput("summit does not cross the axis");
  const Point& G = hit.points.front();
  KhayyamFigure fig;
  fig.eg = distance(pl, origin(pl), G);
  fig.leg_line = leg_a;
  fig.hki = perpendicular_at(pl, axis, 2 * fig.eg);
  return fig;
}

Geodesic bisector(const CurvedPlane& pl, const Point& p, const Point& q) {
  const Geodesic g = geodesic_through(pl, p, q);
  return perpendicular_at(pl, g, 0.5 * distance(pl, p, q));
}

struct CircumTriple {
  Point p1, p2, p3;
  Geodesic b12, b13, b23;
};

CircumTriple circum_triple(const CurvedPlane& pl, double x_half, double h) {
  CircumTriple t;
  const Geodesic gx = base_line(pl);
  t.p1 = point_at(pl, gx, -x_half);
  t.p2 = point_at(pl, gx, +x_half);
  t.p3 = point_at(pl, axis_line(pl), h);
  t.b12 = bisector(pl, t.p1, t.p2);
  t.b13 = bisector(pl, t.p1, t.p3);
  t.b23 = bisector(pl, t.p2, t.p3);
  return t;
}

Geodesic interior_perpendicular(const CurvedPlane& pl, double p) {
  return perpendicular_at(pl, base_line(pl), p);
}

Geodesic angle_side(const CurvedPlane& pl, double half, int sgn) {
  return geodesic_at_angle(pl, origin(pl), frame_x(pl), sgn * half);
}

}  // namespace

Triangle aaa_rigidity(const CurvedPlane& pl, double alpha, double beta, double gamma) {
  if (pl.flat()) throw WrongGeometry("angles fix the triangle only at K != 0");
  for (double a : {alpha, beta, gamma})
    if (!(a > 0) || !(a < M_PI)) throw InfeasibleAngles("angles must lie in (0, pi)");
  const double sum = alpha + beta + gamma;
  if (pl.K < 0 && sum >= M_PI) throw InfeasibleAngles("angle sum must fall short of pi");
  if (pl.K > 0 && sum <= M_PI) throw InfeasibleAngles("angle sum must exceed pi");
  const double b = side_from_angles(pl, beta, gamma, alpha);
  const double c = side_from_angles(pl, gamma, alpha, beta);
  const Point A = origin(pl);
  const Point B = point_at(pl, base_line(pl), c);
  const Point C = point_at(pl, geodesic_at_angle(pl, A, frame_x(pl), alpha), b);
  return build_triangle(pl, A, B, C);
}

Triangle similar_copy(const CurvedPlane& pl, const Triangle& t, double factor) {
  if (!(factor > 0)) throw InvalidParameter("scale factor must be positive");
  if (!pl.flat() && factor != 1.0)
    throw NoSimilarTriangles("scaling changes the angles whenever K != 0");
  const Point A = origin(pl);
  const Point B = point_at(pl, base_line(pl), factor * t.c);
  const Point C = point_at(pl, geodesic_at_angle(pl, A, frame_x(pl), t.alpha), factor * t.b);
  return build_triangle(pl, A, B, C);
}

bool wallis_meets(const CurvedPlane& pl, double a, double b, double t) {
  const Geodesic l1 = geodesic_at_angle(pl, origin(pl), frame_x(pl), a);
  return meets(pl, l1, wallis_moving_line(pl, b, t));
}

Witness wallis_motion_trace(const CurvedPlane& pl, double a, double b, double f) {
  if (pl.K >= 0) throw WrongGeometry("the sliding line separates only at K < 0");
  if (!(a > 0) || !(b > 0) || !(a + b < M_PI))
    throw InvalidParameter("foot angles must be positive with sum below pi");
  if (!(f > 0)) throw InvalidParameter("feet must be separated");

  double lo = 0, hi = f;
  if (wallis_meets(pl, a, b, f)) {
    lo = f;
    hi = 2 * f;
    while (wallis_meets(pl, a, b, hi)) {
      lo = hi;
      hi *= 2;
      if (hi > 1e12) throw DegenerateInput("no separation threshold found");
    }
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (wallis_meets(pl, a, b, mid) ? lo : hi) = mid;
  }
  const Geodesic l1 = geodesic_at_angle(pl, origin(pl), frame_x(pl), a);
  const double gap = common_perpendicular_gap(pl, l1, wallis_moving_line(pl, b, hi));

  Witness w;
  w.id = "wallis";
  w.K = pl.K;
  w.configuration = Json{{"a", a}, {"b", b}, {"f", f}, {"threshold", lo},
                         {"certified_at", hi}, {"gap", gap}};
  w.claim_violated =
      "a line transported along another at a fixed angle keeps meeting every line it met";
  w.margin = hi - lo;
  return w;
}

bool khayyam_meets(const CurvedPlane& pl, double base, double legs) {
  const KhayyamFigure fig = khayyam_figure(pl, base, legs);
  return meets(pl, fig.leg_line, fig.hki);
}

Witness khayyam_gap(const CurvedPlane& pl, double base, double legs) {
  if (pl.K >= 0) throw WrongGeometry("the gap opens only at K < 0");
  double legs_used = legs;
  while (khayyam_meets(pl, base, legs_used)) {
    legs_used *= 2;
    if (legs_used > legs * (1 << 30)) throw DegenerateInput("no separating leg length found");
  }
  const KhayyamFigure fig = khayyam_figure(pl, base, legs_used);
  const double gap = common_perpendicular_gap(pl, fig.leg_line, fig.hki);

  Witness w;
  w.id = "khayyam";
  w.K = pl.K;
  w.configuration = Json{{"base", base}, {"legs", legs}, {"legs_used", legs_used},
                         {"eg", fig.eg}};
  w.claim_violated = "the leg lines necessarily meet the doubled-height perpendicular HKI";
  w.margin = gap;
  return w;
}

double equidistant_locus_deviation(const CurvedPlane& pl, const Geodesic& g, double d) {
  if (!(d > pl.eps)) throw InvalidParameter("locus distance must be positive");
  if (pl.K > 0 && d >= M_PI / (2 * pl.kappa()) - pl.eps)
    throw InvalidParameter("locus distance reaches the pole");
  const double s0 = pl.K > 0 ? std::min(1.0, 0.35 * M_PI / pl.kappa()) : 1.0;
  auto locus = [&](double s) { return point_at(pl, perpendicular_at(pl, g, s), d); };
  const Point lo = locus(-s0), mid = locus(0.0), hi = locus(+s0);
  return perpendicular_foot(pl, mid, geodesic_through(pl, lo, hi)).dist;
}

PlayfairPair playfair_multiplicity(const CurvedPlane& pl, const Geodesic& g, const Point& A) {
  if (pl.K >= 0)
    throw NoMultiplicity("at most one disjoint line through an outside point when K >= 0");
  const Foot f = perpendicular_foot(pl, A, g);
  if (!(f.dist > pl.eps)) throw DegenerateInput("point lies on the line");
  const Vec3 w = tangent_toward(pl, A, f.foot);
  const double tilt = angle_of_parallelism(pl, f.dist) + 2.5e-7;
  PlayfairPair out;
  out.l1 = geodesic_at_angle(pl, A, w, +tilt);
  out.l2 = geodesic_at_angle(pl, A, w, -tilt);
  if (meets(pl, out.l1, g) || meets(pl, out.l2, g))
    throw WrongConfiguration("tilted line unexpectedly meets the base");
  out.angle = M_PI - angle_between(pl, out.l1.dir, out.l2.dir);
  return out;
}

Witness simson_profile(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  const Geodesic cp = common_perpendicular(pl, g1, g2);  // WrongConfiguration if none
  const double gap = common_perpendicular_gap(pl, g1, g2);
  const IntersectionSet hit = intersect(pl, cp, g1);
  if (hit.kind != IntersectionKind::One) throw WrongConfiguration("perpendicular misses g1");
  const Point& F1 = hit.points.front();
  double sF = distance(pl, g1.base, F1);
  if (distance(pl, point_at(pl, g1, sF), F1) > 1e-9) sF = -sF;

  const double h = 0.5 / pl.kappa();
  std::vector<double> profile;
  for (int j = -4; j <= 4; ++j)
    profile.push_back(perpendicular_foot(pl, point_at(pl, g1, sF + j * h), g2).dist);
  for (int j = 0; j < 4; ++j) {
    if (!(profile[j] > profile[j + 1]) || !(profile[5 + j] > profile[4 + j]))
      throw WrongConfiguration("profile is not V-shaped");
    if (std::abs(profile[j] - profile[8 - j]) > 1e-9)
      throw WrongConfiguration("profile is not symmetric");
  }
  if (std::abs(profile[4] - gap) > 1e-9)
    throw WrongConfiguration("profile minimum misses the perpendicular gap");

  Witness w;
  w.id = "simson";
  w.K = pl.K;
  w.configuration = Json{{"g1", geodesic_json(g1)}, {"g2", geodesic_json(g2)},
                         {"step", h}, {"profile", profile}};
  w.claim_violated = "a line that approaches another and then recedes must have met it";
  w.margin = gap;
  return w;
}

Point circumcenter(const CurvedPlane& pl, const Point& p, const Point& q, const Point& r) {
  const Geodesic b1 = bisector(pl, p, q);
  const Geodesic b2 = bisector(pl, q, r);
  const IntersectionSet hit = intersect(pl, b1, b2);
  if (hit.kind != IntersectionKind::One && hit.kind != IntersectionKind::Two)
    throw WrongConfiguration("perpendicular bisectors do not meet");
  const Point* best = &hit.points.front();
  if (hit.points.size() == 2 &&
      distance(pl, p, hit.points[1]) < distance(pl, p, hit.points[0]))
    best = &hit.points[1];
  const Geodesic b3 = bisector(pl, p, r);
  if (perpendicular_foot(pl, *best, b3).dist > 1e-9)
    throw WrongConfiguration("perpendicular bisectors do not concur");
  return *best;
}

Witness circumcircle_failure(const CurvedPlane& pl) {
  if (pl.K >= 0) throw WrongGeometry("circumcenters always exist when K >= 0");
  double x_half = 2.5 / pl.kappa();
  double h = 0.3 / pl.kappa();
  for (int attempt = 0; attempt < 20; ++attempt) {
    const CircumTriple t = circum_triple(pl, x_half, h);
    const bool apart = !meets(pl, t.b12, t.b13) && !meets(pl, t.b12, t.b23) &&
                       !meets(pl, t.b13, t.b23);
    if (apart) {
      const double gap = std::min({common_perpendicular_gap(pl, t.b12, t.b13),
                                   common_perpendicular_gap(pl, t.b12, t.b23),
                                   common_perpendicular_gap(pl, t.b13, t.b23)});
      Witness w;
      w.id = "circumcircle";
      w.K = pl.K;
      w.configuration = Json{{"x_half", x_half}, {"h", h}};
      w.claim_violated = "three points not on a line always lie on a circle";
      w.margin = gap;
      return w;
    }
    x_half *= 2;
    h *= 2;
  }
  throw DegenerateInput("no bisector-separating triple found");
}

bool interior_perpendicular_meets_sides(const CurvedPlane& pl, double theta, double p) {
  const Geodesic line = interior_perpendicular(pl, p);
  return meets(pl, line, angle_side(pl, theta / 2, +1)) ||
         meets(pl, line, angle_side(pl, theta / 2, -1));
}

Witness angle_interior_miss(const CurvedPlane& pl, double theta, double p_start) {
  if (pl.K >= 0) throw WrongGeometry("every interior line meets a side when K >= 0");
  if (!(theta > 0.01) || !(theta < M_PI - 0.01))
    throw InvalidParameter("angle must be strictly between 0 and pi");
  if (!(p_start > pl.eps)) throw InvalidParameter("interior point must be off the vertex");

  double p = p_start;
  while (interior_perpendicular_meets_sides(pl, theta, p)) {
    p *= 2;
    if (p > p_start * (1ull << 50)) throw DegenerateInput("no missing line found");
  }
  double lo = p > p_start ? p / 2 : 1e-9, hi = p;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (interior_perpendicular_meets_sides(pl, theta, mid) ? lo : hi) = mid;
  }
  const Geodesic line = interior_perpendicular(pl, p);
  const double gap = std::min(common_perpendicular_gap(pl, line, angle_side(pl, theta / 2, +1)),
                              common_perpendicular_gap(pl, line, angle_side(pl, theta / 2, -1)));

  Witness w;
  w.id = "angle-interior";
  w.K = pl.K;
  w.configuration = Json{{"theta", theta}, {"p_start", p_start}, {"p", p}, {"threshold", hi}};
  w.claim_violated = "every line through a point inside an angle meets one of its sides";
  w.margin = gap;
  return w;
}

Witness counterexample_witness(const CurvedPlane& pl, const std::string& id) {
  if (id == "aaa") {
    const double alpha = M_PI / 6, factor = 1.5;
    const Triangle t = aaa_rigidity(pl, alpha, alpha, alpha);
    const double scaled_angle = angle_from_sides(pl, factor * t.b, factor * t.c, factor * t.a);
    Witness w;
    w.id = "aaa";
    w.K = pl.K;
    w.configuration = Json{{"alpha", alpha}, {"factor", factor}, {"side", t.a}};
    w.claim_violated = "for every triangle there is a similar one of any chosen size";
    w.margin = std::abs(scaled_angle - alpha);
    return w;
  }
  if (id == "wallis") return wallis_motion_trace(pl, M_PI / 3, M_PI / 3, 1.0);
  if (id == "khayyam") return khayyam_gap(pl, 1.0, 2.0);
  if (id == "equidistant") {
    const double d = 1.0;
    Witness w;
    w.id = "equidistant";
    w.K = pl.K;
    w.configuration = Json{{"d", d}};
    w.claim_violated = "the locus at a fixed distance from a line is itself a line";
    w.margin = equidistant_locus_deviation(pl, base_line(pl), d);
    if (!(w.margin > 0)) throw WrongGeometry("locus shows no deviation");
    return w;
  }
  if (id == "playfair") {
    const double p = 1.0;
    const PlayfairPair pp =
        playfair_multiplicity(pl, base_line(pl), point_at(pl, axis_line(pl), p));
    Witness w;
    w.id = "playfair";
    w.K = pl.K;
    w.configuration = Json{{"p", p}};
    w.claim_violated = "through a point outside a line there is exactly one disjoint line";
    w.margin = pp.angle;
    return w;
  }
  if (id == "simson") {
    const double gap = 0.5 / pl.kappa();
    const Geodesic g2 = base_line(pl);
    Geodesic g1 = perpendicular_at(pl, axis_line(pl), gap);
    g1.dir = -g1.dir;
    return simson_profile(pl, g1, g2);
  }
  if (id == "circumcircle") return circumcircle_failure(pl);
  if (id == "angle-interior") return angle_interior_miss(pl, M_PI / 2, 1.0 / pl.kappa());
  throw UnknownCheck("no counterexample named '" + id + "'");
}

const std::vector<std::string>& counterexample_ids() {
  static const std::vector<std::string> ids = {"aaa",      "angle-interior", "circumcircle",
                                               "equidistant", "khayyam",     "playfair",
                                               "simson",   "wallis"};
  return ids;
}

double replay_counterexample(const Json& wj) {
  const std::string id = wj.at("id").get<std::string>();
  const CurvedPlane pl = make_plane(wj.at("k").get<double>());
  const Json& c = wj.at("configuration");
  if (id == "aaa") {
    const double alpha = c.at("alpha").get<double>();
    const double factor = c.at("factor").get<double>();
    const Triangle t = aaa_rigidity(pl, alpha, alpha, alpha);
    return std::abs(angle_from_sides(pl, factor * t.b, factor * t.c, factor * t.a) - alpha);
  }
  if (id == "wallis")
    return wallis_motion_trace(pl, c.at("a").get<double>(), c.at("b").get<double>(),
                               c.at("f").get<double>())
        .margin;
  if (id == "khayyam")
    return khayyam_gap(pl, c.at("base").get<double>(), c.at("legs").get<double>()).margin;
  if (id == "equidistant")
    return equidistant_locus_deviation(pl, base_line(pl), c.at("d").get<double>());
  if (id == "playfair")
    return playfair_multiplicity(pl, base_line(pl),
                                 point_at(pl, axis_line(pl), c.at("p").get<double>()))
        .angle;
  if (id == "simson")
    return simson_profile(pl, geodesic_from_json(pl, c.at("g1")),
                          geodesic_from_json(pl, c.at("g2")))
        .margin;
  if (id == "circumcircle") return circumcircle_failure(pl).margin;
  if (id == "angle-interior")
    return angle_interior_miss(pl, c.at("theta").get<double>(), c.at("p_start").get<double>())
        .margin;
  throw UnknownCheck("no counterexample named '" + id + "'");
}

Json witness_to_json(const Witness& w) {
  return Json{{"id", w.id},
              {"k", w.K},
              {"configuration", w.configuration},
              {"claim_violated", w.claim_violated},
              {"margin", w.margin}};
}

}  // namespace parallax
