#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "parallax/geometry.hpp"
#include "parallax/sampling.hpp"
#include "test_support.hpp"

using namespace parallax;

TEST_CASE("model constraints hold after construction") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    const Point o = origin(pl);
    if (pl.flat()) {
      CHECK(o.v.z() == 1.0);
    } else {
      CHECK(bilinear(pl, o.v, o.v) == doctest::Approx(1.0 / K).epsilon(1e-14));
    }
    const Geodesic g = make_geodesic(pl, o, frame_x(pl));
    if (!pl.flat()) {
      CHECK(bilinear(pl, g.dir, g.dir) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(bilinear(pl, g.base.v, g.dir)) < 1e-14);
    }
  }
}

TEST_CASE("distance agrees with the unit-speed flow") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
      const Point p = sample_disk(pl, origin(pl), 2.0, rng);
      const Point q = sample_disk(pl, origin(pl), 2.0, rng);
      const double d = distance(pl, p, q);
      if (d < 1e-6) continue;
      const Geodesic g = geodesic_through(pl, p, q);
      CHECK(distance(pl, q, point_at(pl, g, d)) < 1e-9);  // q is reached at s = d
      const double poly = support::polyline_length(pl, g, d, 2000);
      CHECK(std::abs(poly - d) < 1e-6);
    }
  }
}

TEST_CASE("distance is a metric on sampled triples") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
      const Point p = sample_disk(pl, origin(pl), 1.5, rng);
      const Point q = sample_disk(pl, origin(pl), 1.5, rng);
      const Point r = sample_disk(pl, origin(pl), 1.5, rng);
      CHECK(distance(pl, p, q) == doctest::Approx(distance(pl, q, p)).epsilon(1e-14));
      CHECK(distance(pl, p, r) <= distance(pl, p, q) + distance(pl, q, r) + 1e-12);
      CHECK(distance(pl, p, p) < 1e-12);
    }
  }
}

TEST_CASE("small and antipodal spherical distances stay accurate") {
  const CurvedPlane pl = make_plane(1.0);
  const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point near = point_at(pl, g, 1e-9);
  CHECK(distance(pl, origin(pl), near) == doctest::Approx(1e-9).epsilon(1e-6));
  const Point anti = point_at(pl, g, M_PI);
  CHECK(distance(pl, origin(pl), anti) == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("geodesic_through rejects degenerate and antipodal inputs") {
  const CurvedPlane sphere = make_plane(1.0);
  const Point o = origin(sphere);
  CHECK_THROWS_AS(geodesic_through(sphere, o, o), DegenerateInput);
  const Geodesic g = make_geodesic(sphere, o, frame_x(sphere));
  const Point anti = point_at(sphere, g, M_PI);
  CHECK_THROWS_AS(geodesic_through(sphere, o, anti), NonUniqueGeodesic);
}

TEST_CASE("angles at perpendicular constructions are right") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
    for (double s : {-0.7, 0.0, 0.4}) {
      const Geodesic perp = perpendicular_at(pl, g, s);
      const Point at = point_at(pl, g, s);
      const double ang = angle_between(pl, tangent_at(pl, g, s), perp.dir);
      CHECK(ang == doctest::Approx(M_PI / 2).epsilon(1e-12));
      CHECK(distance(pl, perp.base, at) < 1e-12);
    }
  }
}

TEST_CASE("perpendicular_foot matches a golden-section sweep") {
  const double gr = (std::sqrt(5.0) - 1) / 2;
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    Rng rng(99);
    const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
    for (int i = 0; i < 20; ++i) {
      const Point p = sample_disk(pl, origin(pl), 1.2, rng);
      if (perpendicular_foot(pl, p, g).dist < 1e-3) continue;
      const Foot f = perpendicular_foot(pl, p, g);
      double a = -3, b = 3;  // bracket in arclength along g
      while (b - a > 1e-12) {
        const double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        if (distance(pl, p, point_at(pl, g, x1)) < distance(pl, p, point_at(pl, g, x2)))
          b = x2;
        else
          a = x1;
      }
      const double sweep = distance(pl, p, point_at(pl, g, 0.5 * (a + b)));
      CHECK(f.dist == doctest::Approx(sweep).epsilon(1e-9));
      CHECK(distance(pl, f.foot, point_at(pl, g, 0.5 * (a + b))) < 1e-6);
      // the segment meets g at a right angle
      const double ang = angle_between(pl, tangent_toward(pl, f.foot, p),
                                       tangent_at(pl, g, 0.5 * (a + b)));
      CHECK(std::abs(ang - M_PI / 2) < 1e-6);
    }
  }
}

TEST_CASE("foot of the sphere pole is not unique") {
  const CurvedPlane pl = make_plane(1.0);
  const Geodesic g = make_geodesic(pl, origin(pl), frame_x(pl));
  const Point pole = point_at(pl, perpendicular_at(pl, g, 0.0), M_PI / 2);
  CHECK_THROWS_AS(perpendicular_foot(pl, pole, g), NonUniqueFoot);
}

TEST_CASE("intersection kinds cover the taxonomy") {
  SUBCASE("concurrent lines meet where they should") {
    for (double K : support::standard_ks()) {
      const CurvedPlane pl = make_plane(K);
      const Geodesic g1 = make_geodesic(pl, origin(pl), frame_x(pl));
      const Geodesic g2 = geodesic_at_angle(pl, origin(pl), frame_x(pl), 0.9);
      const IntersectionSet hit = intersect(pl, g1, g2);
      if (K > 0) {
        REQUIRE(hit.kind == IntersectionKind::Two);
        CHECK(distance(pl, hit.points[0], hit.points[1]) ==
              doctest::Approx(M_PI).epsilon(1e-12));
      } else {
        REQUIRE(hit.kind == IntersectionKind::One);
      }
      bool found = false;
      for (const Point& p : hit.points) found = found || distance(pl, p, origin(pl)) < 1e-9;
      CHECK(found);
    }
  }
  SUBCASE("coincident lines are recognized") {
    for (double K : support::standard_ks()) {
      const CurvedPlane pl = make_plane(K);
      const Geodesic g1 = make_geodesic(pl, origin(pl), frame_x(pl));
      Geodesic g2 = make_geodesic(pl, point_at(pl, g1, 0.3), tangent_at(pl, g1, 0.3));
      CHECK(intersect(pl, g1, g2).kind == IntersectionKind::Coincident);
      g2.dir = -g2.dir;
      CHECK(intersect(pl, g1, g2).kind == IntersectionKind::Coincident);
    }
  }
  SUBCASE("flat parallels and hyperbolic ultraparallels are empty") {
    for (double K : {-1.0, 0.0}) {
      const CurvedPlane pl = make_plane(K);
      const Geodesic g1 = make_geodesic(pl, origin(pl), frame_x(pl));
      const Geodesic axis = make_geodesic(pl, origin(pl), frame_y(pl));
      const Geodesic g2 = perpendicular_at(pl, axis, 0.8);
      CHECK(intersect(pl, g1, g2).kind == IntersectionKind::Empty);
    }
  }
}

TEST_CASE("intersection points lie on both traces") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
      const Point a = sample_disk(pl, origin(pl), 1.5, rng);
      const Point b = sample_disk(pl, origin(pl), 1.5, rng);
      if (distance(pl, a, b) < 0.2) continue;
      const Geodesic g1 = geodesic_through(pl, a, b);
      const Geodesic g2 = geodesic_at_angle(pl, a, tangent_toward(pl, a, b), 1.1);
      const IntersectionSet hit = intersect(pl, g1, g2);
      REQUIRE(hit.kind != IntersectionKind::Empty);
      for (const Point& p : hit.points) {
        CHECK(on_trace(pl, g1, p, 1e-9));
        CHECK(on_trace(pl, g2, p, 1e-9));
      }
    }
  }
}

TEST_CASE("reflection is an involutive isometry fixing the mirror") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    Rng rng(55);
    const Geodesic g = geodesic_at_angle(pl, origin(pl), frame_x(pl), 0.35);
    for (int i = 0; i < 20; ++i) {
      const Point p = sample_disk(pl, origin(pl), 1.4, rng);
      const Point q = sample_disk(pl, origin(pl), 1.4, rng);
      const Point rp = reflect(pl, p, g);
      const Point rq = reflect(pl, q, g);
      CHECK(distance(pl, reflect(pl, rp, g), p) < 1e-9);
      CHECK(distance(pl, rp, rq) == doctest::Approx(distance(pl, p, q)).epsilon(1e-9));
      CHECK(perpendicular_foot(pl, p, g).dist ==
            doctest::Approx(perpendicular_foot(pl, rp, g).dist).epsilon(1e-9));
    }
    const Point on = point_at(pl, g, 0.6);
    CHECK(distance(pl, reflect(pl, on, g), on) < 1e-9);
  }
}

TEST_CASE("common perpendicular meets both lines at right angles") {
  const CurvedPlane pl = make_plane(-1.0);
  const Geodesic g1 = make_geodesic(pl, origin(pl), frame_x(pl));
  const Geodesic axis = make_geodesic(pl, origin(pl), frame_y(pl));
  const Geodesic g2 = perpendicular_at(pl, axis, 0.75);
  const double gap = common_perpendicular_gap(pl, g1, g2);
  CHECK(gap == doctest::Approx(0.75).epsilon(1e-10));
  const Geodesic cp = common_perpendicular(pl, g1, g2);
  for (const Geodesic* g : {&g1, &g2}) {
    const IntersectionSet hit = intersect(pl, cp, *g);
    REQUIRE(hit.kind == IntersectionKind::One);
    const Foot f = perpendicular_foot(pl, hit.points[0], *g);
    CHECK(f.dist < 1e-9);
  }
  // crossing lines have no common perpendicular
  const Geodesic g3 = geodesic_at_angle(pl, origin(pl), frame_x(pl), 0.4);
  CHECK_THROWS_AS(common_perpendicular(pl, g1, g3), WrongConfiguration);
  CHECK_THROWS_AS(common_perpendicular_gap(pl, g1, g3), WrongConfiguration);
}

TEST_CASE("angle_at sees the Euclidean angle in the flat plane") {
  const CurvedPlane pl = make_plane(0.0);
  const Point o = origin(pl);
  const Point x = point_at(pl, make_geodesic(pl, o, frame_x(pl)), 2.0);
  const Point d = point_at(pl, geodesic_at_angle(pl, o, frame_x(pl), 0.7), 0.5);
  CHECK(angle_at(pl, o, x, d) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("tangent transport is consistent with angles at both ends") {
  for (double K : support::standard_ks()) {
    const CurvedPlane pl = make_plane(K);
    const Point p = origin(pl);
    const Point q = point_at(pl, geodesic_at_angle(pl, p, frame_x(pl), 0.5), 1.1);
    const Vec3 tp = tangent_toward(pl, p, q);
    const Vec3 tq = tangent_toward(pl, q, p);
    const Geodesic g = geodesic_through(pl, p, q);
    CHECK(angle_between(pl, tp, tangent_at(pl, g, 0)) < 1e-9);
    // arriving tangent is the reversed leaving tangent
    const double d = distance(pl, p, q);
    CHECK(angle_between(pl, -tq, tangent_at(pl, g, d)) < 1e-9);
  }
}

TEST_CASE("plane construction validates its inputs") {
  CHECK_THROWS_AS(make_plane(std::nan("")), InvalidParameter);
  CHECK_THROWS_AS(make_plane(1.0, -1.0), InvalidParameter);
  CHECK(make_plane(-2.5).kappa() == doctest::Approx(std::sqrt(2.5)));
  CHECK(make_plane(0.0).flat());
}
