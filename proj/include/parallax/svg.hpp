#pragma once

#include <map>
#include <string>

#include "parallax/counterexamples.hpp"
#include "parallax/geometry.hpp"

namespace parallax {

// Projected line-art figure. Geodesics become polylines (one <polyline>
// element each, at least 128 segments); everything else (right-angle marks,
// locus curves, the disk boundary) uses other SVG elements so that polyline
// count equals geodesic count.
//
// Projections: K < 0 Poincare disk (x, y, t) -> (x, y)/(1 + t) on the unit
// hyperboloid; K > 0 orthographic from +z, back hemisphere dashed; K = 0
// direct, scaled by `extent`.
class SvgFigure {
 public:
  SvgFigure(const CurvedPlane& pl, double extent);

  void add_segment(const Geodesic& g, double s0, double s1, int segments = 128);
  void add_point(const Point& p, const std::string& name);
  void label(const Point& p, const std::string& text);
  void mark_right_angle(const Point& corner, const Vec3& t1, const Vec3& t2);
  // Non-geodesic curve sampled from a parameterized point source.
  void add_curve(const std::vector<Point>& pts);

  std::string str() const;

 private:
  Eigen::Vector2d project(const Point& p) const;
  bool hidden(const Point& p) const;

  CurvedPlane pl_;
  double extent_;
  std::string body_;
  int polylines_ = 0;
};

// Figure ids: lambert-quad, saccheri, fig8, wallis, khayyam, playfair.
// Unknown parameter names throw InvalidParameter; unknown ids UnknownCheck.
std::string render_figure(const CurvedPlane& pl, const std::string& id,
                          const std::map<std::string, double>& params);

std::string render_witness(const CurvedPlane& pl, const Witness& w);

}  // namespace parallax
