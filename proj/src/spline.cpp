#include "divides/spline.hpp"

#include <algorithm>
#include <cmath>

#include "divides/errors.hpp"

namespace divides {

Spline::Spline(std::vector<Vec2> control, bool closed) : pts_(std::move(control)), closed_(closed) {
  const int n = static_cast<int>(pts_.size());
  if (n < (closed_ ? 3 : 2)) throw DomainError("spline needs more control points");
  for (int i = 0; i + 1 < n; ++i) {
    if (dist(pts_[i], pts_[i + 1]) < 1e-12)
      throw DomainError("degenerate segment: consecutive equal control points");
  }
  if (closed_ && dist(pts_[n - 1], pts_[0]) < 1e-12)
    throw DomainError("degenerate segment: consecutive equal control points");

  tangents_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (closed_) {
      const Vec2& prev = pts_[(i + n - 1) % n];
      const Vec2& next = pts_[(i + 1) % n];
      tangents_[i] = (next - prev) * 0.5;
    } else if (i == 0) {
      tangents_[i] = pts_[1] - pts_[0];
    } else if (i == n - 1) {
      tangents_[i] = pts_[n - 1] - pts_[n - 2];
    } else {
      tangents_[i] = (pts_[i + 1] - pts_[i - 1]) * 0.5;
    }
  }
}

void Spline::locate(double t, int& seg, double& u) const {
  const int ns = segments();
  if (closed_) {
    t = std::fmod(t, static_cast<double>(ns));
    if (t < 0) t += ns;
    seg = std::min(static_cast<int>(std::floor(t)), ns - 1);
    u = t - seg;
    return;
  }
  if (t <= 0.0) {
    seg = 0;
    u = t;
    return;
  }
  if (t >= ns) {
    seg = ns - 1;
    u = t - (ns - 1);
    return;
  }
  seg = static_cast<int>(std::floor(t));
  u = t - seg;
}

Vec2 Spline::eval(double t) const {
  int i;
  double u;
  locate(t, i, u);
  const int n = static_cast<int>(pts_.size());
  const Vec2& p0 = pts_[i];
  const Vec2& p1 = pts_[(i + 1) % n];
  const Vec2& m0 = tangents_[i];
  const Vec2& m1 = tangents_[(i + 1) % n];
  const double u2 = u * u, u3 = u2 * u;
  return p0 * (2 * u3 - 3 * u2 + 1) + m0 * (u3 - 2 * u2 + u) + p1 * (-2 * u3 + 3 * u2) +
         m1 * (u3 - u2);
}

Vec2 Spline::deriv(double t) const {
  int i;
  double u;
  locate(t, i, u);
  const int n = static_cast<int>(pts_.size());
  const Vec2& p0 = pts_[i];
  const Vec2& p1 = pts_[(i + 1) % n];
  const Vec2& m0 = tangents_[i];
  const Vec2& m1 = tangents_[(i + 1) % n];
  const double u2 = u * u;
  return p0 * (6 * u2 - 6 * u) + m0 * (3 * u2 - 4 * u + 1) + p1 * (-6 * u2 + 6 * u) +
         m1 * (3 * u2 - 2 * u);
}

Vec2 Spline::deriv2(double t) const {
  int i;
  double u;
  locate(t, i, u);
  const int n = static_cast<int>(pts_.size());
  const Vec2& p0 = pts_[i];
  const Vec2& p1 = pts_[(i + 1) % n];
  const Vec2& m0 = tangents_[i];
  const Vec2& m1 = tangents_[(i + 1) % n];
  return p0 * (12 * u - 6) + m0 * (6 * u - 4) + p1 * (-12 * u + 6) + m1 * (6 * u - 2);
}

std::vector<double> Spline::uniform_params(int per_segment) const {
  std::vector<double> ts;
  const int ns = segments();
  ts.reserve(static_cast<size_t>(ns) * per_segment + 1);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < per_segment; ++j) ts.push_back(i + static_cast<double>(j) / per_segment);
  if (!closed_) ts.push_back(static_cast<double>(ns));
  return ts;
}

Polyline resample(const Spline& s, int resolution) {
  int per = std::max(resolution, 1);
  for (;;) {
    Polyline out;
    out.per_segment = per;
    out.params = s.uniform_params(per);
    out.points.reserve(out.params.size());
    for (double t : out.params) out.points.push_back(s.eval(t));
    double worst = 0.0;
    for (size_t i = 0; i + 1 < out.points.size(); ++i)
      worst = std::max(worst, dist(out.points[i], out.points[i + 1]));
    if (s.closed() && !out.points.empty())
      worst = std::max(worst, dist(out.points.back(), out.points.front()));
    if (worst < 0.05 || per >= 1 << 14) return out;
    per *= 2;
  }
}

}  // namespace divides
