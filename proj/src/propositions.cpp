#include "parallax/propositions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "parallax/figures.hpp"
#include "parallax/trig.hpp"

namespace parallax {

namespace {

struct TrialOut {
  bool ok = true;
  double value = 0;  // margin for per-trial checks, observable for collections
  std::string note;
};

enum class Agg { PerTrial, ConstantSum, ConstantClass };

struct CheckDef {
  CheckInfo info;
  std::function<Json(const CurvedPlane&, const SamplingConfig&, Rng&)> sample;
  std::function<TrialOut(const CurvedPlane&, const Json&)> eval;
  Agg agg = Agg::PerTrial;
};

// Degeneracy margin in the units figures are sampled in: absolute through
// curvature one, curvature units beyond (where figure sizes shrink like
// 1/kappa).  Growing the margin as curvature weakens would starve samplers.
double margin_eff(const CurvedPlane& pl, const SamplingConfig& cfg) {
  return pl.flat() ? cfg.margin : cfg.margin * std::min(1.0, 1.0 / pl.kappa());
}

// Spherical figures stay strictly inside an open hemisphere: lengths are
// capped at a fraction of the quarter turn.  Hyperbolic figures are capped at
// a few curvature radii, past which coordinate products drop their low bits.
double cap_len(const CurvedPlane& pl, double want, double frac) {
  if (pl.K == 0) return want;
  if (pl.K < 0) return std::min(want, frac * 6.0 / pl.kappa());
  return std::min(want, frac * M_PI / (2 * pl.kappa()));
}

Geodesic x_axis(const CurvedPlane& pl) { return make_geodesic(pl, origin(pl), frame_x(pl)); }
Geodesic y_axis(const CurvedPlane& pl) { return make_geodesic(pl, origin(pl), frame_y(pl)); }

Point from_polar(const CurvedPlane& pl, double theta, double r) {
  return point_at(pl, geodesic_at_angle(pl, origin(pl), frame_x(pl), theta), r);
}

// Replayable triangle draw: polar coordinates of three disk points, resampled
// until the triangle is uniformly non-degenerate.
Json sample_triangle_params(const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
  // Strong negative curvature: a disk of many curvature radii yields almost
  // exclusively thin triangles, so hold the draw inside two radii. The side
  // floor shrinks with the disk; both limits are inactive for |K| <= 1.
  double R = cap_len(pl, cfg.scale, 0.6);
  if (pl.K < 0) R = std::min(R, 2.0 / pl.kappa());
  const double m = margin_eff(pl, cfg);
  const double side_floor = std::max(m, std::min(0.1, 0.2 * R));
  for (int attempt = 0; attempt < 256; ++attempt) {
    Json j;
    Point p[3];
    for (int i = 0; i < 3; ++i) {
      const double theta = 2 * M_PI * rng.uniform();
      const double r = sample_disk_radius(pl, R, rng);
      j["t" + std::to_string(i)] = theta;
      j["r" + std::to_string(i)] = r;
      p[i] = from_polar(pl, theta, r);
    }
    const double dab = distance(pl, p[0], p[1]);
    const double dbc = distance(pl, p[1], p[2]);
    const double dca = distance(pl, p[2], p[0]);
    if (std::min({dab, dbc, dca}) <= side_floor) continue;
    bool good = true;
    try {
      const Triangle t = build_triangle(pl, p[0], p[1], p[2]);
      for (double ang : {t.alpha, t.beta, t.gamma})
        if (ang < 0.05 || ang > M_PI - 0.05) good = false;
    } catch (const Error&) {
      good = false;
    }
    if (good) return j;
  }
  throw DegenerateInput("triangle sampling failed to clear the degeneracy margin");
}

Triangle triangle_from_params(const CurvedPlane& pl, const Json& j) {
  Point p[3];
  for (int i = 0; i < 3; ++i)
    p[i] = from_polar(pl, j.at("t" + std::to_string(i)).get<double>(),
                      j.at("r" + std::to_string(i)).get<double>());
  return build_triangle(pl, p[0], p[1], p[2]);
}

// Lambert-quad sides that are guaranteed constructible (no divergence at
// K < 0, inside the hemisphere at K > 0).
Json sample_quad_sides(const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
  const double m = margin_eff(pl, cfg);
  double L = cap_len(pl, cfg.scale, 0.9);
  // The closure bound below shrinks like 1/kappa, so the draw window has to
  // shrink with it or rejection starves at strong negative curvature.
  if (pl.K < 0) L = std::min(L, 2.0 / pl.kappa());
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double a = rng.uniform(m, L);
    const double b = rng.uniform(m, L);
    if (pl.K < 0) {
      const double k = pl.kappa();
      if (std::sinh(a * k) * std::sinh(b * k) > 0.8) continue;
    }
    return Json{{"a", a}, {"b", b}};
  }
  throw DegenerateInput("no constructible quadrilateral sides found");
}

double divergence_onset(const CurvedPlane& pl, double d) {
  // Raised perpendiculars at arclength beyond this miss the far line (K<0).
  return std::asinh(1.0 / std::sinh(d * pl.kappa())) / pl.kappa();
}

struct LinePair {
  Geodesic a, b;
  Point A, B;
};

// Two geodesics joined by a common perpendicular of length d along the
// y-axis; both advance over the positive-x side.
LinePair two_lines(const CurvedPlane& pl, double d) {
  LinePair lp;
  lp.B = origin(pl);
  lp.b = make_geodesic(pl, lp.B, frame_x(pl));
  const Geodesic axis = make_geodesic(pl, lp.B, frame_y(pl));
  lp.A = point_at(pl, axis, d);
  lp.a = perpendicular_at(pl, axis, d);
  lp.a.dir = -lp.a.dir;
  return lp;
}

// ---- catalogue ------------------------------------------------------------

std::vector<CheckDef> build_catalogue() {
  std::vector<CheckDef> defs;

  auto add = [&defs](CheckInfo info, Json (*sample)(const CurvedPlane&, const SamplingConfig&, Rng&),
                     TrialOut (*eval)(const CurvedPlane&, const Json&), Agg agg = Agg::PerTrial) {
    defs.push_back(CheckDef{std::move(info), sample, eval, agg});
  };

  // LAM-13: right triangle at A, D interior on AB, E beyond C on line DC:
  // angle ACD < ACB + ABC < ACE.
  add(CheckInfo{"LAM-13",
                "cevian angle at the right-angled triangle is bounded by the two "
                "remote angles and their supplement",
                {-1, 0},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        const double L = cap_len(pl, cfg.scale, 0.9);
        return Json{{"leg1", rng.uniform(2 * m, L)},
                    {"leg2", rng.uniform(2 * m, L)},
                    {"dfrac", rng.uniform(0.15, 0.85)},
                    {"ext", rng.uniform(m, L)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const Point A = origin(pl);
        const Geodesic gx = x_axis(pl), gy = y_axis(pl);
        const Point B = point_at(pl, gx, p.at("leg1").get<double>());
        const Point C = point_at(pl, gy, p.at("leg2").get<double>());
        const Point D = point_at(pl, gx, p.at("dfrac").get<double>() * p.at("leg1").get<double>());
        const Geodesic dc = geodesic_through(pl, D, C);
        const Point E = point_at(pl, dc, distance(pl, D, C) + p.at("ext").get<double>());
        const double acd = angle_at(pl, C, A, D);
        const double acb = angle_at(pl, C, A, B);
        const double abc = angle_at(pl, B, A, C);
        const double ace = angle_at(pl, C, A, E);
        const double m1 = acb + abc - acd;
        const double m2 = ace - (acb + abc);
        return TrialOut{m1 > 0 && m2 > 0, std::min(m1, m2)};
      });

  // LAM-15: angle sums are constant (and equal to pi) only in the flat plane.
  add(CheckInfo{"LAM-15",
                "triangle angle sums are constant exactly in the flat plane, where they equal pi",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        return sample_triangle_params(pl, cfg, rng);
      },
      +[](const CurvedPlane& pl, const Json& p) {
        return TrialOut{true, triangle_from_params(pl, p).angle_sum};
      },
      Agg::ConstantSum);

  // LAM-16: the angle AGF can be pushed arbitrarily close to a right angle by
  // sending A far out. Holds flat; fails at K<0 where the supremum is the
  // angle of parallelism of |GF|.
  add(CheckInfo{"LAM-16",
                "angle at the top of a raised perpendicular approaches a right angle "
                "as the base point recedes",
                {0},
                {{0, Expectation::Hold}, {-1, Expectation::Fail}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        const double L = cap_len(pl, cfg.scale, 0.9);
        return Json{{"h", rng.uniform(std::max(m, 0.1 * L), L)}, {"tau", 1e-6}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double h = p.at("h").get<double>();
        const double tau = p.at("tau").get<double>();
        const Geodesic base = x_axis(pl);
        const Point F = origin(pl);
        const Point G = point_at(pl, perpendicular_at(pl, base, 0.0), h);
        auto angle_for = [&](double dist) {
          const Point A = point_at(pl, base, dist);
          return angle_at(pl, G, A, F);
        };
        if (pl.flat()) {
          double dist = std::max(h, 1.0);
          double gap = M_PI / 2 - angle_for(dist);
          for (int i = 0; i < 200 && gap > tau; ++i) {
            dist *= 2;
            gap = M_PI / 2 - angle_for(dist);
          }
          return TrialOut{gap <= tau, tau - gap};
        }
        // Hyperbolic: evaluate at an effectively infinite base distance; the
        // shortfall against the right angle is the claim's failure margin.
        const double sup = angle_for(30.0 / pl.kappa());
        return TrialOut{false, M_PI / 2 - sup,
                        "supremum of the angle stays short of a right angle"};
      });

  // LAM-23: in the birectangular quadrilateral CBDE the mid-perpendicular
  // crossing angle CGF is acute exactly when CB < DE.
  add(CheckInfo{"LAM-23",
                "mid-perpendicular of a birectangular quadrilateral crosses the slanted "
                "side at an acute angle exactly when the near leg is shorter",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        // Tall figures at strong negative curvature squeeze the crossing angle
        // toward a right angle exponentially, so stay within a few curvature
        // radii and keep the legs clearly separated.
        const double m = margin_eff(pl, cfg);
        const double L = std::min(cap_len(pl, cfg.scale, 0.5), 1.5 / pl.kappa());
        const double W = std::min(cap_len(pl, cfg.scale, 0.8), 2.5 / pl.kappa());
        for (int i = 0; i < 256; ++i) {
          const double c = rng.uniform(m, L);
          const double e = rng.uniform(m, L);
          if (std::abs(c - e) < 0.05 * L) continue;
          return Json{{"w", rng.uniform(std::min(2 * m, 0.5 * W), W)}, {"c", c}, {"e", e}};
        }
        throw DegenerateInput("leg sampling failed");
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double w = p.at("w").get<double>(), c = p.at("c").get<double>(),
                     e = p.at("e").get<double>();
        const Geodesic gx = x_axis(pl);
        const Point F = origin(pl);
        const Point C = point_at(pl, perpendicular_at(pl, gx, -w / 2), c);
        const Point E = point_at(pl, perpendicular_at(pl, gx, +w / 2), e);
        const Geodesic mid = perpendicular_at(pl, gx, 0.0);
        const IntersectionSet hit = intersect(pl, geodesic_through(pl, E, C), mid);
        if (hit.kind == IntersectionKind::Empty || hit.kind == IntersectionKind::Coincident)
          return TrialOut{false, -1.0, "mid-perpendicular misses the slanted side"};
        const Point ref = point_at(pl, mid, (c + e) / 2);
        const Point* G = &hit.points.front();
        if (hit.points.size() == 2 &&
            distance(pl, ref, hit.points[1]) < distance(pl, ref, hit.points[0]))
          G = &hit.points[1];
        const double ang = angle_at(pl, *G, C, F);
        const bool acute = ang < M_PI / 2;
        return TrialOut{acute == (c < e), std::abs(ang - M_PI / 2)};
      });

  // LAM-26: reporting probe. If the foot angle along a transversal is
  // everywhere acute, is it constant? Observed variation is recorded.
  add(CheckInfo{"LAM-26",
                "probe: variation of the foot angle along a line against a base line",
                {},
                {{-1, Expectation::Probe}, {0, Expectation::Probe}, {1, Expectation::Probe}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        return Json{{"d", rng.uniform(m, cap_len(pl, cfg.scale, 0.5))},
                    {"span", rng.uniform(4 * m, cap_len(pl, cfg.scale, 0.5))}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double d = p.at("d").get<double>(), span = p.at("span").get<double>();
        const Geodesic base = x_axis(pl);
        Geodesic upper = perpendicular_at(pl, y_axis(pl), d);
        upper.dir = -upper.dir;
        double lo = M_PI, hi = 0;
        bool all_acute = true;
        for (int i = 0; i <= 5; ++i) {
          const double u = (i + 1) * span / 6.0;
          const Point P = point_at(pl, upper, u);
          const Foot f = perpendicular_foot(pl, P, base);
          const double ang = angle_between(pl, tangent_at(pl, upper, u),
                                           tangent_toward(pl, P, f.foot));
          lo = std::min(lo, ang);
          hi = std::max(hi, ang);
          if (ang >= M_PI / 2) all_acute = false;
        }
        TrialOut out{true, hi - lo};
        out.note = std::string(all_acute ? "foot angle acute everywhere" : "obtuse feet present") +
                   "; variation " + std::to_string(hi - lo);
        return out;
      });

  // LAM-2838: elementary trirectangular-quadrilateral identities: the
  // diagonal splits the right corner additively, the triangle inequality is
  // strict on the diagonal, and equal sides force the mirror symmetry.
  add(CheckInfo{"LAM-2838",
                "diagonal and symmetry identities of trirectangular quadrilaterals",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        Json j = sample_quad_sides(pl, cfg, rng);
        Json sym = sample_quad_sides(pl, cfg, rng);
        j["s"] = std::min(sym.at("a").get<double>(), sym.at("b").get<double>());
        return j;
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LambertQuad q =
            build_lambert_quad(pl, p.at("a").get<double>(), p.at("b").get<double>());
        const double bad = angle_at(pl, q.A, q.B, q.D);
        const double dac = angle_at(pl, q.A, q.D, q.C);
        const double bac = angle_at(pl, q.A, q.B, q.C);
        const double m_split = 1e-9 - std::abs(bad + dac - bac);
        const double diag = distance(pl, q.A, q.D);
        const double m_tri = q.a + distance(pl, q.B, q.D) - diag;
        const LambertQuad sq = build_lambert_quad(pl, p.at("s").get<double>(), p.at("s").get<double>());
        const double m_sym = 1e-9 - std::abs(distance(pl, sq.B, sq.D) - distance(pl, sq.C, sq.D));
        const double m_ang = 1e-9 - std::abs(angle_at(pl, sq.A, sq.B, sq.D) -
                                             angle_at(pl, sq.A, sq.D, sq.C));
        const double v = std::min({m_split, m_tri, m_sym, m_ang});
        return TrialOut{v > 0, v};
      });

  // LAM-41: in a flat rectangle, perpendiculars from base points to the
  // opposite side all have the leg's length and are perpendicular to both.
  add(CheckInfo{"LAM-41",
                "rectangle cross-perpendiculars all equal the leg",
                {0},
                {{0, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        return Json{{"w", rng.uniform(2 * m, cfg.scale)},
                    {"h", rng.uniform(m, cfg.scale)},
                    {"xf", rng.uniform(0.05, 0.95)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double w = p.at("w").get<double>(), h = p.at("h").get<double>();
        const SaccheriQuad q = build_saccheri_quad(pl, w, h);
        const Geodesic base = x_axis(pl);
        const Geodesic summit = geodesic_through(pl, q.vertices[3], q.vertices[2]);
        const double x = (p.at("xf").get<double>() - 0.5) * w;
        const Point X = point_at(pl, base, x);
        const Foot f = perpendicular_foot(pl, X, summit);
        const double dev_len = std::abs(f.dist - h);
        const double dev_ang =
            std::abs(angle_between(pl, tangent_at(pl, base, x), tangent_toward(pl, X, f.foot)) -
                     M_PI / 2);
        const double v = 1e-9 - std::max(dev_len, dev_ang);
        return TrialOut{v > 0, v};
      });

  // LAM-43: a line entering a flat rectangle's side at an oblique angle exits
  // through the opposite side after finitely many congruent translates.
  add(CheckInfo{"LAM-43",
                "oblique line through a rectangle side reaches the opposite side after "
                "finitely many congruent tiles",
                {0},
                {{0, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        return Json{{"w", rng.uniform(m, cfg.scale)},
                    {"h", rng.uniform(m, cfg.scale)},
                    {"theta", rng.uniform(0.1, M_PI / 2 - 0.1)},
                    {"x0", rng.uniform(0.0, 1.0)}};
      },
      +[](const CurvedPlane&, const Json& p) {
        const double w = p.at("w").get<double>(), h = p.at("h").get<double>();
        const double slope = std::tan(p.at("theta").get<double>());
        const double x0 = p.at("x0").get<double>() * w;
        // Heights of the ray over successive tile edges form an arithmetic
        // progression with increment w*slope (the tiles are congruent), so a
        // finite tile count suffices.
        double y = 0;
        long n = 0;
        const double dy = w * slope;
        double first_edge = (w - x0) * slope;
        y = first_edge;
        ++n;
        while (y < h && n < 1000000) {
          y += dy;
          ++n;
        }
        if (y < h) return TrialOut{false, -1.0, "no crossing found"};
        const double cross_x = x0 + h / slope;
        const bool tile_ok = cross_x <= n * w + 1e-12;
        return TrialOut{tile_ok, y - h};
      });

  // LAM-50: the acute/right/obtuse class of the summit angle is the same for
  // every sampled birectangular isosceles quadrilateral at fixed curvature.
  add(CheckInfo{"LAM-50",
                "summit-angle class is an invariant of the plane, not the quadrilateral",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        const double L = cap_len(pl, cfg.scale, 0.8);
        return Json{{"base", rng.uniform(m, L)}, {"leg", rng.uniform(m, L)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const SaccheriQuad q =
            build_saccheri_quad(pl, p.at("base").get<double>(), p.at("leg").get<double>());
        return TrialOut{true, q.summit_angle - M_PI / 2};
      },
      Agg::ConstantClass);

  // LAM-52: on the sphere the sides framed by right angles beat their
  // opposite sides.
  add(CheckInfo{"LAM-52",
                "sides adjacent to two right angles are longer than their opposites on the sphere",
                {1},
                {{1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        return sample_quad_sides(pl, cfg, rng);
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LambertQuad q =
            build_lambert_quad(pl, p.at("a").get<double>(), p.at("b").get<double>());
        const double m1 = q.a - distance(pl, q.C, q.D);
        const double m2 = q.b - distance(pl, q.B, q.D);
        return TrialOut{m1 > 0 && m2 > 0, std::min(m1, m2)};
      });

  auto sample_seq_sphere = +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
    const double m = margin_eff(pl, cfg);
    const double quarter = M_PI / (2 * pl.kappa());
    return Json{{"d", rng.uniform(m, 0.4 * quarter)},
                {"step", rng.uniform(std::max(0.02 * quarter, m / 4), 0.145 * quarter)}};
  };

  // LAM-55: raised-perpendicular lengths shrink superlinearly on the sphere
  // (negative first and second differences).
  add(CheckInfo{"LAM-55",
                "spherical raised perpendiculars decrease superlinearly along the far line",
                {1},
                {{1, Expectation::Hold}}},
      sample_seq_sphere,
      +[](const CurvedPlane& pl, const Json& p) {
        const PerpendicularSequence s = build_perpendicular_sequence(
            pl, p.at("d").get<double>(), p.at("step").get<double>(), 6);
        double v = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < s.lengths.size(); ++i)
          v = std::min(v, s.lengths[i - 1] - s.lengths[i]);
        for (size_t i = 2; i < s.lengths.size(); ++i)
          v = std::min(v, (s.lengths[i - 1] - s.lengths[i]) - (s.lengths[i - 2] - s.lengths[i - 1]));
        return TrialOut{v > 0, v};
      });

  // LAM-58: the angles at the far ends grow and stay obtuse on the sphere.
  add(CheckInfo{"LAM-58",
                "far-end angles of the spherical perpendicular sequence are obtuse and increasing",
                {1},
                {{1, Expectation::Hold}}},
      sample_seq_sphere,
      +[](const CurvedPlane& pl, const Json& p) {
        const PerpendicularSequence s = build_perpendicular_sequence(
            pl, p.at("d").get<double>(), p.at("step").get<double>(), 6);
        double v = std::numeric_limits<double>::infinity();
        for (double a : s.angles) v = std::min(v, a - M_PI / 2);
        for (size_t i = 1; i < s.angles.size(); ++i)
          v = std::min(v, s.angles[i] - s.angles[i - 1]);
        return TrialOut{v > 0, v};
      });

  // LAM-62: the perpendicular length reaches zero at a finite arclength, so
  // the two lines meet, and meet again at the antipode.
  add(CheckInfo{"LAM-62",
                "two spherical lines with a common perpendicular still meet, twice",
                {1},
                {{1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        return Json{{"d", rng.uniform(m, 0.4 * M_PI / (2 * pl.kappa()))}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LinePair lp = two_lines(pl, p.at("d").get<double>());
        const IntersectionSet hit = intersect(pl, lp.a, lp.b);
        if (hit.kind != IntersectionKind::Two) return TrialOut{false, -1.0, "no double meeting"};
        for (const Point& q : hit.points)
          if (!on_trace(pl, lp.a, q, 1e-6) || !on_trace(pl, lp.b, q, 1e-6))
            return TrialOut{false, -1.0, "meeting point off a trace"};
        const double u = distance(pl, lp.A, hit.points[0]);
        const double len_at_meet = perpendicular_foot(pl, point_at(pl, lp.a, u), lp.b).dist;
        if (len_at_meet > 1e-6) return TrialOut{false, -1.0, "length does not vanish"};
        return TrialOut{true, distance(pl, hit.points[0], hit.points[1])};
      });

  // LAM-66: at K<0 the sides flanking the acute corner beat their opposites.
  add(CheckInfo{"LAM-66",
                "sides adjacent to the acute angle are longer than their opposites",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        return sample_quad_sides(pl, cfg, rng);
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LambertQuad q =
            build_lambert_quad(pl, p.at("a").get<double>(), p.at("b").get<double>());
        const double m1 = distance(pl, q.C, q.D) - q.a;
        const double m2 = distance(pl, q.B, q.D) - q.b;
        return TrialOut{m1 > 0 && m2 > 0, std::min(m1, m2)};
      });

  auto sample_seq_hyp = +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
    const double m = margin_eff(pl, cfg);
    const double d = rng.uniform(m, std::min(cfg.scale, 1.5 / pl.kappa()));
    const double onset = divergence_onset(pl, d);
    return Json{{"d", d}, {"step", rng.uniform(0.05 * onset, 0.9 * onset / 6.0)}};
  };

  // LAM-68: the raised perpendiculars lengthen with distance at K<0.
  add(CheckInfo{"LAM-68",
                "farther raised perpendiculars are longer",
                {-1},
                {{-1, Expectation::Hold}}},
      sample_seq_hyp,
      +[](const CurvedPlane& pl, const Json& p) {
        const PerpendicularSequence s = build_perpendicular_sequence(
            pl, p.at("d").get<double>(), p.at("step").get<double>(), 6);
        double v = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < s.lengths.size(); ++i)
          v = std::min(v, s.lengths[i] - s.lengths[i - 1]);
        return TrialOut{v > 0, v};
      });

  // LAM-69: their far-end angles shrink and stay acute.
  add(CheckInfo{"LAM-69",
                "far-end angles of the perpendicular sequence are acute and decreasing",
                {-1},
                {{-1, Expectation::Hold}}},
      sample_seq_hyp,
      +[](const CurvedPlane& pl, const Json& p) {
        const PerpendicularSequence s = build_perpendicular_sequence(
            pl, p.at("d").get<double>(), p.at("step").get<double>(), 6);
        double v = std::numeric_limits<double>::infinity();
        for (double a : s.angles) v = std::min(v, M_PI / 2 - a);
        for (size_t i = 1; i < s.angles.size(); ++i)
          v = std::min(v, s.angles[i - 1] - s.angles[i]);
        return TrialOut{v > 0, v};
      });

  // LAM-70: the separation between the two lines exceeds any prescribed bound.
  add(CheckInfo{"LAM-70",
                "separation from the far line outgrows any prescribed bound",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        // The gap stays within a few curvature radii so the offset line's base
        // point keeps a resolvable form value; the bound scales along with it.
        const double m = margin_eff(pl, cfg);
        const double L = cap_len(pl, cfg.scale, 1.0);
        return Json{{"d", rng.uniform(m, std::min(cfg.scale, 3.0 / pl.kappa()))},
                    {"bound", rng.uniform(L, 2 * L)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LinePair lp = two_lines(pl, p.at("d").get<double>());
        const double bound = p.at("bound").get<double>();
        // Separation grows like the arclength plus a constant, so the doubling
        // ceiling only needs a little headroom over the bound; past ~170
        // curvature radii the coordinate products leave the double range.
        const double ucap = std::min(170.0, bound * pl.kappa() + 40.0);
        for (double u = std::min(1.0, 0.5 * bound); u * pl.kappa() < ucap; u *= 2) {
          const double len = perpendicular_foot(pl, point_at(pl, lp.a, u), lp.b).dist;
          if (len > bound) return TrialOut{true, len - bound};
        }
        return TrialOut{false, -1.0, "bound never exceeded"};
      });

  // LAM-71: lines with a common perpendicular diverge on both sides of it.
  add(CheckInfo{"LAM-71",
                "ultraparallel lines diverge on both sides of their common perpendicular",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        // Gap and step in curvature units, as in the bound-escape check.
        const double m = margin_eff(pl, cfg);
        const double L = std::min(cfg.scale, 3.0 / pl.kappa());
        return Json{{"gap", rng.uniform(m, L)}, {"step", rng.uniform(2 * m, L)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const LinePair lp = two_lines(pl, p.at("gap").get<double>());
        if (intersect(pl, lp.a, lp.b).kind != IntersectionKind::Empty)
          return TrialOut{false, -1.0, "lines meet"};
        const double step = p.at("step").get<double>();
        auto len_at = [&](double u) { return perpendicular_foot(pl, point_at(pl, lp.a, u), lp.b).dist; };
        double v = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (int side = -1; side <= 1; side += 2) {
          double prev = p.at("gap").get<double>();
          for (int i = 1; i <= 4; ++i) {
            const double len = len_at(side * i * step);
            v = std::min(v, len - prev);
            prev = len;
          }
        }
        for (int i = 1; i <= 4; ++i)
          if (std::abs(len_at(+i * step) - len_at(-i * step)) > 1e-9) ok = false;
        return TrialOut{ok && v > 0, v};
      });

  // LAM-72: far enough out, the raised perpendicular misses the other line;
  // the witness carries the certified gap.
  add(CheckInfo{"LAM-72",
                "sufficiently distant raised perpendiculars miss the far line",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        // A gap of many curvature radii drives the onset arclength below the
        // degeneracy tolerance, while a gap far below the curvature scale sends
        // the onset logarithmically past the band where the sheet stays
        // resolvable, so pin the gap to the curvature scale from both sides.
        const double m = margin_eff(pl, cfg);
        const double L = std::min(cfg.scale, 3.0 / pl.kappa());
        const double lo = std::max(m, 1e-3 / pl.kappa());
        return Json{{"d", rng.uniform(lo, L)}, {"ufac", rng.uniform(1.1, 2.0)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double d = p.at("d").get<double>();
        const double u = divergence_onset(pl, d) * p.at("ufac").get<double>();
        try {
          build_lambert_quad(pl, d, u);
        } catch (const DivergentSides& ex) {
          return TrialOut{ex.gap > 0, ex.gap};
        }
        return TrialOut{false, -1.0, "perpendiculars unexpectedly met"};
      });

  // LAM-73: hyperbolic angle sums stay below two right angles.
  add(CheckInfo{"LAM-73",
                "triangle angle sum stays below two right angles",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        return sample_triangle_params(pl, cfg, rng);
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double sum = triangle_from_params(pl, p).angle_sum;
        return TrialOut{sum < M_PI, M_PI - sum};
      });

  // LAM-76: the median point divides the median at, below, or above one third.
  add(CheckInfo{"LAM-76",
                "median point sits at one third of the median only in the flat plane",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        const double m = margin_eff(pl, cfg);
        return Json{{"side", rng.uniform(2 * m, cap_len(pl, cfg.scale, 0.9))}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double r = median_ratio(pl, p.at("side").get<double>()).ratio;
        if (pl.flat()) {
          const double v = 1e-9 - std::abs(r - 1.0 / 3.0);
          return TrialOut{v > 0, v};
        }
        const double v = pl.K < 0 ? (1.0 / 3.0 - r) : (r - 1.0 / 3.0);
        return TrialOut{v > 0, v};
      });

  // LAM-80: the equilateral vertex angle pins the side (absolute measure):
  // monotone injective, and invertible on its own output.
  add(CheckInfo{"LAM-80",
                "equilateral vertex angle determines the side, monotonically and invertibly",
                {-1, 1},
                {{-1, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        (void)cfg;
        const double lo = pl.K < 0 ? 0.05 : M_PI / 3 + 0.02;
        const double hi = pl.K < 0 ? M_PI / 3 - 0.02 : M_PI / 2;
        for (int i = 0; i < 256; ++i) {
          const double a1 = rng.uniform(lo, hi);
          const double a2 = rng.uniform(lo, hi);
          if (std::abs(a1 - a2) >= 0.01) return Json{{"alpha1", a1}, {"alpha2", a2}};
        }
        throw DegenerateInput("angle sampling failed");
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double a1 = p.at("alpha1").get<double>(), a2 = p.at("alpha2").get<double>();
        const double s1 = equilateral_from_angle(pl, a1);
        const double s2 = equilateral_from_angle(pl, a2);
        // K<0: smaller angle, larger triangle; K>0: the reverse.
        const double orient = (a1 - a2) * (s1 - s2) * (pl.K < 0 ? -1.0 : 1.0);
        double v = std::min(orient > 0 ? std::abs(s1 - s2) : -1.0, 1.0);
        for (double ap : {a1, a2}) {
          const Triangle t = equilateral_triangle(pl, equilateral_from_angle(pl, ap));
          v = std::min(v, 1e-8 - std::abs(t.alpha - ap));
        }
        return TrialOut{v > 0, v};
      });

  // LAM-81: area equals excess over K, additively over cevian splits.
  add(CheckInfo{"LAM-81",
                "area is the angle excess over the curvature and adds across cevian cuts",
                {-1, 0, 1},
                {{-1, Expectation::Hold}, {0, Expectation::Hold}, {1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        Json j = sample_triangle_params(pl, cfg, rng);
        j["cfrac"] = rng.uniform(0.1, 0.9);
        return j;
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const Triangle t = triangle_from_params(pl, p);
        const Geodesic bc = geodesic_through(pl, t.B, t.C);
        const Point X = point_at(pl, bc, p.at("cfrac").get<double>() * t.a);
        const Triangle t1 = build_triangle(pl, t.A, t.B, X);
        const Triangle t2 = build_triangle(pl, t.A, X, t.C);
        const double resid = std::abs(area(pl, t) - area(pl, t1) - area(pl, t2));
        return TrialOut{resid < 1e-9, 1e-9 - resid};
      });

  // LAM-82: hyperbolic sides agree with the spherical law taken at imaginary
  // sides, to below 1e-10.
  add(CheckInfo{"LAM-82",
                "hyperbolic law of cosines matches the spherical law at imaginary sides",
                {-1},
                {{-1, Expectation::Hold}}},
      +[](const CurvedPlane& pl, const SamplingConfig& cfg, Rng& rng) {
        (void)cfg;
        // Sides in curvature units: the correspondence is scale-free, and
        // absolute sides overflow the hyperbolic functions at strong curvature.
        const double f = std::min(1.0, 1.0 / pl.kappa());
        return Json{{"a", rng.uniform(1e-3, 3.0) * f},
                    {"b", rng.uniform(1e-3, 3.0) * f},
                    {"gamma", rng.uniform(0.05, M_PI - 0.05)}};
      },
      +[](const CurvedPlane& pl, const Json& p) {
        const double resid = imaginary_correspondence_residual(
            pl, p.at("a").get<double>(), p.at("b").get<double>(), p.at("gamma").get<double>());
        return TrialOut{resid < 1e-10, 1e-10 - resid};
      });

  std::sort(defs.begin(), defs.end(),
            [](const CheckDef& a, const CheckDef& b) { return a.info.id < b.info.id; });
  return defs;
}

const std::vector<CheckDef>& defs() {
  static const std::vector<CheckDef> d = build_catalogue();
  return d;
}

const CheckDef& def_for(const std::string& id) {
  for (const auto& d : defs())
    if (d.info.id == id) return d;
  throw UnknownCheck("no catalogued check named '" + id + "'");
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Hold: return "hold";
    case Expectation::Fail: return "fail";
    default: return "probe";
  }
}

Json make_witness(const std::string& id, double K, const Json& params, const TrialOut& out) {
  return Json{{"check", id}, {"k", K}, {"params", params}, {"value", out.value}, {"ok", out.ok}};
}

}  // namespace

void validate(const SamplingConfig& cfg) {
  if (cfg.trials < 1) throw InvalidParameter("trials must be at least 1");
  if (!(cfg.scale > cfg.margin) || !(cfg.margin > 0))
    throw InvalidParameter("need scale > margin > 0");
}

const std::vector<CheckInfo>& catalogue() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& d : defs()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& id) { return def_for(id).info; }

bool meets_expectation(const Verdict& v) {
  if (v.expectation == "hold") return v.holds;
  if (v.expectation == "fail") return !v.holds && v.min_margin > 0;
  return true;  // probe
}

Verdict run_check(const CurvedPlane& pl, const std::string& id, const SamplingConfig& cfg) {
  validate(cfg);
  const CheckDef& d = def_for(id);
  const auto it = d.info.evaluations.find(pl.sign());
  if (it == d.info.evaluations.end())
    throw WrongGeometry("check " + id + " is not evaluated at this curvature sign");
  const Expectation exp = it->second;

  Verdict v;
  v.check = id;
  v.K = pl.K;
  v.expectation = expectation_name(exp);
  v.trials = cfg.trials;
  if (d.info.evaluations.size() < 3)
    v.note = "evaluated only in the regimes where the claim is meaningful";

  std::vector<Json> params(cfg.trials);
  std::vector<TrialOut> outs(cfg.trials);
  for (int i = 0; i < cfg.trials; ++i) {
    Rng rng = trial_rng(cfg.seed, id, static_cast<uint64_t>(i));
    params[i] = d.sample(pl, cfg, rng);
    outs[i] = d.eval(pl, params[i]);
  }

  auto pick_witness = [&](int idx) { v.witness = make_witness(id, pl.K, params[idx], outs[idx]); };

  if (d.agg == Agg::ConstantSum) {
    // Observable: the angle sum. Flat: constant pi within band. Curved:
    // demonstrably non-constant.
    int worst = 0;
    double maxdev = -1;
    double lo = outs[0].value, hi = outs[0].value;
    for (int i = 0; i < cfg.trials; ++i) {
      lo = std::min(lo, outs[i].value);
      hi = std::max(hi, outs[i].value);
      const double dev = std::abs(outs[i].value - M_PI);
      if (dev > maxdev) {
        maxdev = dev;
        worst = i;
      }
    }
    if (pl.flat()) {
      v.min_margin = 1e-9 - maxdev;
      v.failures = v.min_margin > 0 ? 0 : 1;
      v.note = "max deviation of the angle sum from pi: " + std::to_string(maxdev);
    } else {
      const double spread = hi - lo;
      v.min_margin = spread - 1e-6;
      v.failures = (cfg.trials >= 2 && v.min_margin <= 0) ? 1 : 0;
      v.note = "angle sums spread over an interval of width " + std::to_string(spread);
    }
    v.holds = v.failures == 0;
    pick_witness(worst);
    return v;
  }

  if (d.agg == Agg::ConstantClass) {
    // Observable: summit angle minus a right angle; class must match the
    // curvature sign for every sample.
    const double band = 1e-9;
    auto cls = [&](double dev) { return dev < -band ? -1 : (dev > band ? 1 : 0); };
    int worst = 0;
    double worst_key = std::numeric_limits<double>::infinity();
    v.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.trials; ++i) {
      const double dev = outs[i].value;
      if (cls(dev) != pl.sign()) ++v.failures;
      const double key = pl.flat() ? band - std::abs(dev) : std::abs(dev);
      v.min_margin = std::min(v.min_margin, key);
      if (key < worst_key) {
        worst_key = key;
        worst = i;
      }
    }
    v.holds = v.failures == 0;
    pick_witness(worst);
    return v;
  }

  int worst = -1;
  v.min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.trials; ++i) {
    if (!outs[i].ok) ++v.failures;
    if (outs[i].value < v.min_margin) {
      v.min_margin = outs[i].value;
      worst = i;
    }
  }
  v.holds = v.failures == 0;
  pick_witness(worst);
  if (!outs[worst].note.empty()) {
    if (!v.note.empty()) v.note += "; ";
    v.note += outs[worst].note;
  }
  return v;
}

Report run_suite(const SamplingConfig& cfg, const std::vector<double>& Ks) {
  validate(cfg);
  if (Ks.empty()) throw InvalidParameter("need at least one curvature");
  std::vector<double> ks = Ks;
  std::sort(ks.begin(), ks.end());
  Report rep;
  for (const auto& d : defs())
    for (double K : ks) {
      const CurvedPlane pl = make_plane(K);
      if (!d.info.evaluations.count(pl.sign())) continue;
      rep.verdicts.push_back(run_check(pl, d.info.id, cfg));
    }
  return rep;
}

double replay_witness(const Json& witness) {
  const CheckDef& d = def_for(witness.at("check").get<std::string>());
  const CurvedPlane pl = make_plane(witness.at("k").get<double>());
  return d.eval(pl, witness.at("params")).value;
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"check", v.check},       {"k", v.K},
         {"expectation", v.expectation}, {"holds", v.holds},
         {"trials", v.trials},     {"failures", v.failures},
         {"min_margin", v.min_margin},   {"witness", v.witness}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace parallax
