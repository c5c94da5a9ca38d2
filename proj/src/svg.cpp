#include "parallax/svg.hpp"

#include <cmath>
#include <cstdio>

#include "parallax/errors.hpp"
#include "parallax/figures.hpp"

namespace parallax {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string xy(const Eigen::Vector2d& p) { return num(p.x()) + "," + num(-p.y()); }

double get(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

const char* kStyle =
    "<style>\n"
    ".geo{fill:none;stroke:#1a1a1a;stroke-width:0.008;}\n"
    ".hidden{stroke-dasharray:0.03 0.02;stroke:#888888;}\n"
    ".mark{fill:none;stroke:#bb2222;stroke-width:0.006;}\n"
    ".curve{fill:none;stroke:#2255bb;stroke-width:0.008;stroke-dasharray:0.015 0.015;}\n"
    ".lbl{font-size:0.09px;font-family:serif;fill:#1a1a1a;}\n"
    ".pt{fill:#1a1a1a;}\n"
    ".boundary{fill:none;stroke:#999999;stroke-width:0.004;}\n"
    "</style>\n";

}  // namespace

SvgFigure::SvgFigure(const CurvedPlane& pl, double extent) : pl_(pl), extent_(extent) {
  if (!(extent_ > 0)) extent_ = 1.0;
  if (pl_.K < 0) {
    body_ += "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
  } else if (pl_.K > 0) {
    body_ += "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
  }
}

Eigen::Vector2d SvgFigure::project(const Point& p) const {
  if (pl_.flat()) return {p.v.x() / extent_, p.v.y() / extent_};
  const Vec3 n = p.v * pl_.kappa();  // unit sphere / unit hyperboloid
  if (pl_.K < 0) return {n.x() / (1 + n.z()), n.y() / (1 + n.z())};
  return {n.x(), n.y()};
}

bool SvgFigure::hidden(const Point& p) const {
  return pl_.K > 0 && p.v.z() < 0;
}

void SvgFigure::add_segment(const Geodesic& g, double s0, double s1, int segments) {
  if (segments < 128) segments = 128;
  std::string pts;
  bool any_hidden = false;
  for (int i = 0; i <= segments; ++i) {
    const double s = s0 + (s1 - s0) * i / segments;
    const Point p = point_at(pl_, g, s);
    any_hidden = any_hidden || hidden(p);
    if (i) pts += ' ';
    pts += xy(project(p));
  }
  body_ += "<polyline class=\"geo";
  if (any_hidden) body_ += " hidden";
  body_ += "\" points=\"" + pts + "\"/>\n";
  ++polylines_;
}

void SvgFigure::add_point(const Point& p, const std::string& name) {
  const Eigen::Vector2d q = project(p);
  body_ += "<circle class=\"pt\" cx=\"" + num(q.x()) + "\" cy=\"" + num(-q.y()) +
           "\" r=\"0.012\"/>\n";
  if (!name.empty()) label(p, name);
}

void SvgFigure::label(const Point& p, const std::string& text) {
  const Eigen::Vector2d q = project(p);
  body_ += "<text class=\"lbl\" x=\"" + num(q.x() + 0.02) + "\" y=\"" + num(-q.y() - 0.02) +
           "\">" + text + "</text>\n";
}

void SvgFigure::mark_right_angle(const Point& corner, const Vec3& t1, const Vec3& t2) {
  const double d = 0.06 * (pl_.flat() ? extent_ : 1.0 / pl_.kappa());
  const Point a = point_at(pl_, make_geodesic(pl_, corner, t1), d);
  const Point b = point_at(pl_, make_geodesic(pl_, corner, t2), d);
  const Point ab = point_at(pl_, make_geodesic(pl_, corner, t1 + t2), d * std::sqrt(2.0));
  body_ += "<path class=\"mark\" d=\"M " + xy(project(a)) + " L " + xy(project(ab)) + " L " +
           xy(project(b)) + "\"/>\n";
}

void SvgFigure::add_curve(const std::vector<Point>& pts) {
  if (pts.size() < 2) return;
  std::string d = "M " + xy(project(pts[0]));
  for (size_t i = 1; i < pts.size(); ++i) d += " L " + xy(project(pts[i]));
  body_ += "<path class=\"curve\" d=\"" + d + "\"/>\n";
}

std::string SvgFigure::str() const {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
      "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  out += kStyle;
  out += body_;
  out += "</svg>\n";
  return out;
}

namespace {

void draw_between(SvgFigure& fig, const CurvedPlane& pl, const Point& p, const Point& q) {
  fig.add_segment(geodesic_through(pl, p, q), 0, distance(pl, p, q));
}

std::string figure_lambert(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double a = get(params, "a", 0.5), b = get(params, "b", 0.5);
  const LambertQuad q = build_lambert_quad(pl, a, b);
  SvgFigure fig(pl, 1.6 * (a + b));
  draw_between(fig, pl, q.A, q.B);
  draw_between(fig, pl, q.A, q.C);
  draw_between(fig, pl, q.B, q.D);
  draw_between(fig, pl, q.C, q.D);
  fig.mark_right_angle(q.A, tangent_toward(pl, q.A, q.B), tangent_toward(pl, q.A, q.C));
  fig.mark_right_angle(q.B, tangent_toward(pl, q.B, q.A), tangent_toward(pl, q.B, q.D));
  fig.mark_right_angle(q.C, tangent_toward(pl, q.C, q.A), tangent_toward(pl, q.C, q.D));
  fig.add_point(q.A, "A");
  fig.add_point(q.B, "B");
  fig.add_point(q.C, "C");
  fig.add_point(q.D, "D");
  return fig.str();
}

std::string figure_saccheri(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double base = get(params, "base", 1.0), leg = get(params, "leg", 1.0);
  const SaccheriQuad q = build_saccheri_quad(pl, base, leg);
  const Point &A = q.vertices[0], &B = q.vertices[1], &C = q.vertices[2], &D = q.vertices[3];
  SvgFigure fig(pl, 1.4 * std::max(base, leg));
  draw_between(fig, pl, A, B);
  draw_between(fig, pl, B, C);
  draw_between(fig, pl, A, D);
  draw_between(fig, pl, D, C);
  fig.mark_right_angle(A, tangent_toward(pl, A, B), tangent_toward(pl, A, D));
  fig.mark_right_angle(B, tangent_toward(pl, B, A), tangent_toward(pl, B, C));
  fig.add_point(A, "A");
  fig.add_point(B, "B");
  fig.add_point(C, "C");
  fig.add_point(D, "D");
  return fig.str();
}

std::string figure_fig8(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double d = get(params, "d", pl.K > 0 ? 0.3 / pl.kappa() : 0.5);
  const int n = static_cast<int>(get(params, "n", 3));
  const double fallback_step =
      pl.K > 0 ? 0.35 * M_PI / (2 * pl.kappa()) / std::max(n, 1) : 0.6;
  const double step = get(params, "step", fallback_step);
  const PerpendicularSequence s = build_perpendicular_sequence(pl, d, step, n);
  const double span = (n + 0.4) * step;
  SvgFigure fig(pl, 1.3 * std::max(span, d));
  fig.add_segment(s.line_a, -0.2 * step, span);
  fig.add_segment(s.line_b, -0.2 * step, span);
  draw_between(fig, pl, s.A, s.B);
  fig.mark_right_angle(s.A, tangent_at(pl, s.line_a, 0), tangent_toward(pl, s.A, s.B));
  fig.mark_right_angle(s.B, tangent_at(pl, s.line_b, 0), tangent_toward(pl, s.B, s.A));
  fig.add_point(s.A, "A");
  fig.add_point(s.B, "B");
  static const char* kFeet[] = {"E", "F", "G"};
  static const char* kTops[] = {"H", "J", "K"};
  for (int i = 0; i < n; ++i) {
    draw_between(fig, pl, s.feet[i], s.tops[i]);
    fig.mark_right_angle(s.feet[i], tangent_at(pl, s.line_a, (i + 1) * step),
                         tangent_toward(pl, s.feet[i], s.tops[i]));
    const std::string foot = i < 3 ? kFeet[i] : "E" + std::to_string(i + 1);
    const std::string top = i < 3 ? kTops[i] : "H" + std::to_string(i + 1);
    fig.add_point(s.feet[i], foot);
    fig.add_point(s.tops[i], top);
  }
  return fig.str();
}

std::string figure_wallis(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double a = get(params, "a", M_PI / 3), b = get(params, "b", M_PI / 3);
  const double f = get(params, "f", 1.0);
  double t = get(params, "t", 0.0);
  if (t <= 0) {
    if (pl.K < 0)
      t = wallis_motion_trace(pl, a, b, f).configuration.at("certified_at").get<double>() + 0.5;
    else
      t = 2 * f;
  }
  const Geodesic l3 = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point A = origin(pl);
  const Point B = point_at(pl, l3, f);
  const Point Bt = point_at(pl, l3, t);
  const Geodesic l1 = geodesic_at_angle(pl, A, frame_x(pl), a);
  const Geodesic l2 = geodesic_at_angle(pl, B, tangent_at(pl, l3, f), M_PI - b);
  const Geodesic l4 = geodesic_at_angle(pl, Bt, tangent_at(pl, l3, t), M_PI - b);
  const double L = 1.6 * t;
  SvgFigure fig(pl, 1.2 * L);
  fig.add_segment(l3, -0.3 * f, t + 0.5 * f);
  fig.add_segment(l1, -0.2 * L, L);
  fig.add_segment(l2, -0.2 * L, L);
  fig.add_segment(l4, -0.2 * L, L);
  fig.add_point(A, "A");
  fig.add_point(B, "B");
  fig.label(point_at(pl, l1, 0.8 * L), "l1");
  fig.label(point_at(pl, l2, 0.8 * L), "l2");
  fig.label(point_at(pl, l3, t + 0.4 * f), "l3");
  fig.label(point_at(pl, l4, 0.8 * L), "l4");
  return fig.str();
}

std::string figure_khayyam(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double base = get(params, "base", 1.0), legs = get(params, "legs", 2.0);
  const Geodesic gb = make_geodesic(pl, origin(pl), frame_x(pl));
  const Geodesic leg_a = perpendicular_at(pl, gb, -0.5 * base);
  const Geodesic leg_b = perpendicular_at(pl, gb, +0.5 * base);
  const Point A = point_at(pl, gb, -0.5 * base);
  const Point B = point_at(pl, gb, +0.5 * base);
  const Point C = point_at(pl, leg_a, legs);
  const Point D = point_at(pl, leg_b, legs);
  const Point E = origin(pl);
  const Geodesic axis = make_geodesic(pl, E, frame_y(pl));
  const Geodesic cd = geodesic_through(pl, C, D);
  const IntersectionSet hit = intersect(pl, cd, axis);
  if (hit.kind != IntersectionKind::One && hit.kind != IntersectionKind::Two)
    throw DegenerateInput("summit does not cross the axis");
  const Point G = hit.points.front();
  const double eg = distance(pl, E, G);
  const Point Kpt = point_at(pl, axis, 2 * eg);
  const Geodesic hki = perpendicular_at(pl, axis, 2 * eg);
  const double reach = 1.2 * std::max(base, 2 * eg);
  SvgFigure fig(pl, 1.4 * reach);
  fig.add_segment(gb, -0.7 * base, 0.7 * base);
  fig.add_segment(leg_a, 0, 1.3 * legs);
  fig.add_segment(leg_b, 0, 1.3 * legs);
  draw_between(fig, pl, C, D);
  fig.add_segment(axis, 0, 2.2 * eg);
  fig.add_segment(hki, -0.8 * base, 0.8 * base);
  fig.mark_right_angle(A, tangent_toward(pl, A, B), tangent_at(pl, leg_a, 0));
  fig.mark_right_angle(B, tangent_toward(pl, B, A), tangent_at(pl, leg_b, 0));
  fig.mark_right_angle(Kpt, tangent_at(pl, axis, 2 * eg), tangent_at(pl, hki, 0));
  fig.add_point(A, "A");
  fig.add_point(B, "B");
  fig.add_point(C, "C");
  fig.add_point(D, "D");
  fig.add_point(E, "E");
  fig.add_point(G, "G");
  fig.add_point(Kpt, "K");
  fig.label(point_at(pl, hki, -0.7 * base), "H");
  fig.label(point_at(pl, hki, +0.7 * base), "I");
  return fig.str();
}

std::string figure_playfair(const CurvedPlane& pl, const std::map<std::string, double>& params) {
  const double p = get(params, "p", 1.0);
  const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point A = point_at(pl, make_geodesic(pl, origin(pl), frame_y(pl)), p);
  const PlayfairPair pair = playfair_multiplicity(pl, g, A);
  const double L = 2.5 * p;
  SvgFigure fig(pl, 1.2 * (L + p));
  fig.add_segment(g, -L, L);
  fig.add_segment(pair.l1, -L, L);
  fig.add_segment(pair.l2, -L, L);
  fig.add_point(A, "A");
  fig.label(point_at(pl, g, 0.8 * L), "g");
  fig.label(point_at(pl, pair.l1, 0.8 * L), "l1");
  fig.label(point_at(pl, pair.l2, 0.8 * L), "l2");
  return fig.str();
}

std::string figure_simson(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2) {
  const Geodesic cp = common_perpendicular(pl, g1, g2);
  const double gap = common_perpendicular_gap(pl, g1, g2);
  const double L = 2.5 / pl.kappa();
  SvgFigure fig(pl, 1.2 * (L + gap));
  fig.add_segment(g1, -L, L);
  fig.add_segment(g2, -L, L);
  fig.add_segment(cp, 0, gap);
  fig.label(point_at(pl, g1, 0.8 * L), "g1");
  fig.label(point_at(pl, g2, 0.8 * L), "g2");
  return fig.str();
}

std::string figure_equidistant(const CurvedPlane& pl, double d) {
  const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
  const double s0 = pl.K > 0 ? std::min(1.0, 0.35 * M_PI / pl.kappa()) : 1.0;
  auto locus = [&](double s) { return point_at(pl, perpendicular_at(pl, g, s), d); };
  const Point lo = locus(-s0), mid = locus(0.0), hi = locus(+s0);
  SvgFigure fig(pl, 1.5 * (s0 + d));
  fig.add_segment(g, -1.3 * s0, 1.3 * s0);
  fig.add_segment(geodesic_through(pl, lo, hi), 0, distance(pl, lo, hi));
  std::vector<Point> pts;
  for (int i = 0; i <= 128; ++i) pts.push_back(locus(-1.3 * s0 + 2.6 * s0 * i / 128));
  fig.add_curve(pts);
  fig.add_point(lo, "P1");
  fig.add_point(mid, "P2");
  fig.add_point(hi, "P3");
  return fig.str();
}

std::string figure_circumcircle(const CurvedPlane& pl, double x_half, double h) {
  const Geodesic gx = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point p1 = point_at(pl, gx, -x_half);
  const Point p2 = point_at(pl, gx, +x_half);
  const Point p3 = point_at(pl, make_geodesic(pl, origin(pl), frame_y(pl)), h);
  auto bis = [&](const Point& p, const Point& q) {
    return perpendicular_at(pl, geodesic_through(pl, p, q), 0.5 * distance(pl, p, q));
  };
  const double L = 1.5 * x_half;
  SvgFigure fig(pl, 1.3 * L);
  draw_between(fig, pl, p1, p2);
  draw_between(fig, pl, p2, p3);
  draw_between(fig, pl, p1, p3);
  fig.add_segment(bis(p1, p2), -L, L);
  fig.add_segment(bis(p1, p3), -L, L);
  fig.add_segment(bis(p2, p3), -L, L);
  fig.add_point(p1, "P1");
  fig.add_point(p2, "P2");
  fig.add_point(p3, "P3");
  return fig.str();
}

std::string figure_angle_interior(const CurvedPlane& pl, double theta, double p) {
  const Geodesic bisect = make_geodesic(pl, origin(pl), frame_x(pl));
  const Geodesic s1 = geodesic_at_angle(pl, origin(pl), frame_x(pl), +theta / 2);
  const Geodesic s2 = geodesic_at_angle(pl, origin(pl), frame_x(pl), -theta / 2);
  const Geodesic line = perpendicular_at(pl, bisect, p);
  const Point P = point_at(pl, bisect, p);
  const double L = 2.0 * p;
  SvgFigure fig(pl, 1.3 * L);
  fig.add_segment(s1, 0, L);
  fig.add_segment(s2, 0, L);
  fig.add_segment(bisect, 0, 1.2 * p);
  fig.add_segment(line, -L, L);
  fig.add_point(origin(pl), "V");
  fig.add_point(P, "P");
  return fig.str();
}

std::string figure_aaa(const CurvedPlane& pl, double alpha) {
  const Triangle t = aaa_rigidity(pl, alpha, alpha, alpha);
  SvgFigure fig(pl, 1.4 * t.a);
  draw_between(fig, pl, t.A, t.B);
  draw_between(fig, pl, t.B, t.C);
  draw_between(fig, pl, t.A, t.C);
  fig.add_point(t.A, "A");
  fig.add_point(t.B, "B");
  fig.add_point(t.C, "C");
  return fig.str();
}

}  // namespace

std::string render_figure(const CurvedPlane& pl, const std::string& id,
                          const std::map<std::string, double>& params) {
  static const std::map<std::string, std::vector<std::string>> kAllowed = {
      {"lambert-quad", {"a", "b"}},
      {"saccheri", {"base", "leg"}},
      {"fig8", {"d", "step", "n"}},
      {"wallis", {"a", "b", "f", "t"}},
      {"khayyam", {"base", "legs"}},
      {"playfair", {"p"}},
  };
  const auto it = kAllowed.find(id);
  if (it == kAllowed.end()) throw UnknownCheck("no figure named '" + id + "'");
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
      throw InvalidParameter("figure '" + id + "' has no parameter '" + key + "'");
  }
  if (id == "lambert-quad") return figure_lambert(pl, params);
  if (id == "saccheri") return figure_saccheri(pl, params);
  if (id == "fig8") return figure_fig8(pl, params);
  if (id == "wallis") return figure_wallis(pl, params);
  if (id == "khayyam") return figure_khayyam(pl, params);
  return figure_playfair(pl, params);
}

std::string render_witness(const CurvedPlane& pl, const Witness& w) {
  const Json& c = w.configuration;
  if (w.id == "aaa") return figure_aaa(pl, c.at("alpha").get<double>());
  if (w.id == "wallis")
    return figure_wallis(pl, {{"a", c.at("a").get<double>()},
                              {"b", c.at("b").get<double>()},
                              {"f", c.at("f").get<double>()},
                              {"t", c.at("certified_at").get<double>() + 0.5}});
  if (w.id == "khayyam")
    return figure_khayyam(
        pl, {{"base", c.at("base").get<double>()}, {"legs", c.at("legs_used").get<double>()}});
  if (w.id == "equidistant") return figure_equidistant(pl, c.at("d").get<double>());
  if (w.id == "playfair") return figure_playfair(pl, {{"p", c.at("p").get<double>()}});
  if (w.id == "simson") {
    const Geodesic g2 = make_geodesic(pl, origin(pl), frame_x(pl));
    Geodesic g1 = perpendicular_at(pl, make_geodesic(pl, origin(pl), frame_y(pl)),
                                   c.at("profile").at(4).get<double>());
    g1.dir = -g1.dir;
    return figure_simson(pl, g1, g2);
  }
  if (w.id == "circumcircle")
    return figure_circumcircle(pl, c.at("x_half").get<double>(), c.at("h").get<double>());
  if (w.id == "angle-interior")
    return figure_angle_interior(pl, c.at("theta").get<double>(), c.at("p").get<double>());
  throw UnknownCheck("no rendering for witness '" + w.id + "'");
}

}  // namespace parallax
