#pragma once

#include <vector>

#include "divides/vec2.hpp"

namespace divides {

// Uniform Catmull-Rom interpolation of control points, evaluated as cubic
// Hermite segments. Parameter t runs over [0, segments()]; segment i covers
// [i, i+1]. Open splines use one-sided endpoint tangents, closed splines wrap.
class Spline {
 public:
  Spline(std::vector<Vec2> control, bool closed);

  int segments() const { return closed_ ? static_cast<int>(pts_.size()) : static_cast<int>(pts_.size()) - 1; }
  double tmax() const { return static_cast<double>(segments()); }
  bool closed() const { return closed_; }
  const std::vector<Vec2>& control() const { return pts_; }

  Vec2 eval(double t) const;
  Vec2 deriv(double t) const;
  Vec2 deriv2(double t) const;

  // Uniform parameter samples, per_segment per span; open splines include both
  // endpoints, closed splines omit the duplicate at tmax.
  std::vector<double> uniform_params(int per_segment) const;

 private:
  std::vector<Vec2> pts_;
  std::vector<Vec2> tangents_;
  bool closed_;

  void locate(double t, int& seg, double& u) const;
};

struct Polyline {
  std::vector<Vec2> points;
  std::vector<double> params;  // spline parameter of each point
  int per_segment = 0;         // effective sample density used
};

// Dense polyline with consecutive sample distance < 0.05; starts from
// per_segment = resolution and doubles as needed. Endpoints exact.
Polyline resample(const Spline& s, int resolution);

}  // namespace divides
