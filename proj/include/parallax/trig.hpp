#pragma once

#include "parallax/plane.hpp"

namespace parallax {

// Side c opposite `gamma`, from sides a, b. Unified form
// cos_k(c) = cos_k(a) cos_k(b) + K sin_k(a) sin_k(b) cos(gamma);
// the K = 0 path evaluates the Euclidean law directly.
double law_of_cosines(const CurvedPlane& pl, double a, double b, double gamma);

// Angle opposite side c, from three sides.
double angle_from_sides(const CurvedPlane& pl, double a, double b, double c);

// Side a opposite `alpha` from the three angles (dual law; K != 0 only,
// angles determine sides). Throws InfeasibleAngles when no triangle of
// curvature K has these angles.
double side_from_angles(const CurvedPlane& pl, double alpha, double beta, double gamma);

// Angle of parallelism: supremum of the angle at distance p under which a
// ray still meets the base line. Closed form tan(Pi/2) = exp(-p*kappa);
// K >= 0 -> WrongGeometry, p <= 0 -> InvalidParameter.
double angle_of_parallelism(const CurvedPlane& pl, double p);

// |c_hyperbolic - c_imaginary|: the K<0 law of cosines against the K'=-K
// spherical law evaluated at sides multiplied by sqrt(-1). The imaginary
// part of the complex result must stay below pl.eps.
double imaginary_correspondence_residual(const CurvedPlane& pl, double a, double b,
                                         double gamma);

// Vertex angle of the equilateral triangle with the given side.
// Stable at sides down to ~1e-8 (no cancellation at small arguments).
double equilateral_angle_from_side(const CurvedPlane& pl, double side);

}  // namespace parallax
