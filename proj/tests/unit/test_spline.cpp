#include <doctest.h>

#include <cmath>

#include "divides/errors.hpp"
#include "divides/spline.hpp"

using namespace divides;

TEST_CASE("spline interpolates control points") {
  Spline s({{-1, 0}, {-0.3, 0.2}, {0.3, -0.1}, {1, 0}}, false);
  CHECK(s.segments() == 3);
  for (int i = 0; i <= 3; ++i) {
    Vec2 p = s.eval(i);
    CHECK(dist(p, s.control()[i]) < 1e-12);
  }
}

TEST_CASE("collinear controls stay on the line") {
  Spline s({{-1, 0}, {-0.3, 0}, {0.3, 0}, {1, 0}}, false);
  for (double t = 0; t <= 3.0; t += 0.01) CHECK(std::abs(s.eval(t).y) < 1e-14);
}

TEST_CASE("derivative matches finite differences") {
  Spline s({{-1, 0}, {-0.4, 0.3}, {0.2, -0.2}, {0.6, 0.4}, {1, 0}}, false);
  const double h = 1e-6;
  for (double t = 0.05; t < s.tmax(); t += 0.173) {
    Vec2 fd = (s.eval(t + h) - s.eval(t - h)) / (2 * h);
    CHECK(dist(fd, s.deriv(t)) < 1e-6);
    Vec2 fd2 = (s.deriv(t + h) - s.deriv(t - h)) / (2 * h);
    CHECK(dist(fd2, s.deriv2(t)) < 1e-5);
  }
}

TEST_CASE("closed spline wraps smoothly") {
  Spline s({{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}}, true);
  CHECK(s.segments() == 4);
  CHECK(dist(s.eval(0), s.eval(4.0)) < 1e-12);
  Vec2 d0 = s.deriv(0);
  Vec2 d4 = s.deriv(s.tmax());
  CHECK(dist(d0, d4) < 1e-12);
}

TEST_CASE("resample spacing under 0.05 and exact endpoints") {
  Spline s({{-1, 0}, {-0.3, 0.4}, {0.3, -0.4}, {1, 0}}, false);
  Polyline p = resample(s, 4);  // deliberately coarse start
  for (size_t i = 0; i + 1 < p.points.size(); ++i) CHECK(dist(p.points[i], p.points[i + 1]) < 0.05);
  CHECK(dist(p.points.front(), {-1, 0}) == 0.0);
  CHECK(dist(p.points.back(), {1, 0}) == 0.0);
}

TEST_CASE("degenerate segment rejected") {
  CHECK_THROWS_AS(Spline({{-1, 0}, {-1, 0}, {0.3, 0}, {1, 0}}, false), DomainError);
}
