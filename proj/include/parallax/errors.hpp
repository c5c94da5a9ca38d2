#pragma once

#include <stdexcept>
#include <string>

namespace parallax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite or out-of-domain scalar argument.
struct InvalidParameter : Error {
  using Error::Error;
};

// Coincident/collinear inputs where a construction needs general position.
struct DegenerateInput : Error {
  using Error::Error;
};

// Antipodal endpoints on the sphere: infinitely many geodesics.
struct NonUniqueGeodesic : Error {
  using Error::Error;
};

// Pole of a spherical geodesic: every point of the trace is nearest.
struct NonUniqueFoot : Error {
  using Error::Error;
};

// Operation requires a different curvature sign.
struct WrongGeometry : Error {
  using Error::Error;
};

// Erected perpendiculars of a trirectangular construction do not meet.
// `gap` is the length of their common perpendicular: positive evidence,
// not just an error string.
struct DivergentSides : Error {
  double gap;
  explicit DivergentSides(const std::string& what, double gap_) : Error(what), gap(gap_) {}
};

struct InfeasibleAngle : Error {
  using Error::Error;
};

struct InfeasibleAngles : Error {
  using Error::Error;
};

// Request for a scaled non-congruent copy at K != 0.
struct NoSimilarTriangles : Error {
  using Error::Error;
};

// Parallel through a point is unique (K=0) or absent (K>0).
struct NoMultiplicity : Error {
  using Error::Error;
};

// Inputs do not form the configuration the operation analyzes.
struct WrongConfiguration : Error {
  using Error::Error;
};

struct UnknownCheck : Error {
  using Error::Error;
};

}  // namespace parallax
