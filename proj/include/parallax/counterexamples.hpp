#pragma once

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "parallax/figures.hpp"
#include "parallax/geometry.hpp"

namespace parallax {

using Json = nlohmann::json;

// A replayable refutation of one historical parallel-postulate argument.
// margin > 0 certifies the violation; rebuilding from `configuration`
// reproduces margin within 1e-12.
struct Witness {
  std::string id;
  double K = 0;
  Json configuration;
  std::string claim_violated;
  double margin = 0;
};

Json witness_to_json(const Witness& w);

// Rebuilds the configuration of a serialized witness and recomputes its
// margin.
double replay_counterexample(const Json& witness_json);

// The unique triangle (up to isometry) with the given angles; K != 0 only.
// Infeasible angle sums throw InfeasibleAngles.
Triangle aaa_rigidity(const CurvedPlane& pl, double alpha, double beta, double gamma);

// Scaled copy with the same shape. Exists only in the flat plane; K != 0
// with factor != 1 throws NoSimilarTriangles.
Triangle similar_copy(const CurvedPlane& pl, const Triangle& t, double factor);

// Whether the line through the point at arclength t on the base, entering at
// angle pi - b, still meets the fixed line through the base origin at angle a.
bool wallis_meets(const CurvedPlane& pl, double a, double b, double t);

// Slides the second line outward until it stops meeting the first; the
// witness brackets that threshold to 1e-6 and certifies separation beyond it
// by a common perpendicular. K < 0 only.
Witness wallis_motion_trace(const CurvedPlane& pl, double a, double b, double f);

// Whether the leg line through A meets the far perpendicular HKI of the
// doubled-height construction (E mid-base, G on the summit, GK = EG).
bool khayyam_meets(const CurvedPlane& pl, double base, double legs);

// Certifies that the leg lines miss HKI, enlarging the legs if needed;
// margin is the common-perpendicular length. K < 0 only.
Witness khayyam_gap(const CurvedPlane& pl, double base, double legs);

// Distance from the middle of three points on the distance-d locus of g to
// the geodesic through the outer two (outer feet at +-1 along g, clamped on
// the sphere). Zero exactly when the locus is a geodesic.
double equidistant_locus_deviation(const CurvedPlane& pl, const Geodesic& g, double d);

struct PlayfairPair {
  Geodesic l1, l2;
  double angle;  // mutual angle at A, measured through the side away from g
};

// Two distinct geodesics through A, both disjoint from g. K >= 0 throws
// NoMultiplicity.
PlayfairPair playfair_multiplicity(const CurvedPlane& pl, const Geodesic& g, const Point& A);

// Distance profile from g1 to g2 about their common perpendicular: strictly
// V-shaped, symmetric, never zero. Non-ultraparallel input throws
// WrongConfiguration.
Witness simson_profile(const CurvedPlane& pl, const Geodesic& g1, const Geodesic& g2);

// Common point of the three perpendicular side bisectors. Throws
// WrongConfiguration when they fail to concur (the K < 0 failure mode).
Point circumcenter(const CurvedPlane& pl, const Point& p, const Point& q, const Point& r);

// Three non-collinear points whose bisectors pairwise miss each other, so no
// circumcenter exists; margin is the smallest pairwise bisector gap. K < 0.
Witness circumcircle_failure(const CurvedPlane& pl);

// Whether the perpendicular to the bisector at distance p from the vertex
// meets either side of the angle 2*half (full-line test).
bool interior_perpendicular_meets_sides(const CurvedPlane& pl, double theta, double p);

// Walks the interior point outward along the bisector until the
// perpendicular there misses both sides; brackets the onset to 1e-6.
// margin is the smaller of the two separation gaps. K < 0 only.
Witness angle_interior_miss(const CurvedPlane& pl, double theta, double p_start);

// Canonical witness per falsifier id: aaa, wallis, khayyam, equidistant,
// playfair, simson, circumcircle, angle-interior. UnknownCheck otherwise.
Witness counterexample_witness(const CurvedPlane& pl, const std::string& id);

const std::vector<std::string>& counterexample_ids();

}  // namespace parallax
