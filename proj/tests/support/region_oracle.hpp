#pragma once

// Brute-force region census, independent of the half-edge machinery: rasterize
// the divide's polylines onto a grid, flood-fill the complement inside the
// disk, and classify each component by whether it touches the boundary band.

#include <cmath>
#include <cstdlib>
#include <vector>

#include "divides/divide.hpp"
#include "divides/spline.hpp"

namespace divides::testsupport {

struct RegionCensus {
  int regions = 0;
  int interior_regions = 0;
};

inline RegionCensus raster_region_census(const Divide& d, int grid = 1200, double band = 0.008) {
  std::vector<std::vector<Vec2>> polys;
  for (const Branch& b : d.branches) {
    Polyline p = resample(b.spline(), 256);
    if (b.kind == BranchKind::circle) p.points.push_back(p.points.front());
    polys.push_back(p.points);
  }

  const double lo = -1.02, hi = 1.02;
  const double step = (hi - lo) / grid;
  auto cell_center = [&](int i, int j) { return Vec2{lo + (i + 0.5) * step, lo + (j + 0.5) * step}; };

  auto seg_dist = [](Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double t = ab.norm2() > 0 ? dot(p - a, ab) / ab.norm2() : 0.0;
    t = std::max(0.0, std::min(1.0, t));
    return dist(p, a + ab * t);
  };

  // 0 open, 1 wall, 2 outside
  std::vector<char> cls(static_cast<size_t>(grid) * grid, 0);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      Vec2 p = cell_center(i, j);
      char& c = cls[static_cast<size_t>(j) * grid + i];
      if (p.norm() >= 1.0) {
        c = 2;
        continue;
      }
      for (const auto& poly : polys) {
        for (size_t k = 0; k + 1 < poly.size(); ++k) {
          // cheap reject before the exact distance
          if (std::abs(p.x - poly[k].x) > band + 0.06 || std::abs(p.y - poly[k].y) > band + 0.06)
            continue;
          if (seg_dist(p, poly[k], poly[k + 1]) < band) {
            c = 1;
            break;
          }
        }
        if (c == 1) break;
      }
    }
  }

  RegionCensus out;
  std::vector<int> label(cls.size(), -1);
  std::vector<size_t> stack;
  for (size_t start = 0; start < cls.size(); ++start) {
    if (cls[start] != 0 || label[start] >= 0) continue;
    int id = out.regions++;
    bool touches_rim = false;
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      int i = static_cast<int>(cur % grid), j = static_cast<int>(cur / grid);
      if (cell_center(i, j).norm() > 1.0 - band * 2) touches_rim = true;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        int ni = i + di[k], nj = j + dj[k];
        if (ni < 0 || nj < 0 || ni >= grid || nj >= grid) continue;
        size_t n = static_cast<size_t>(nj) * grid + ni;
        if (cls[n] == 0 && label[n] < 0) {
          label[n] = id;
          stack.push_back(n);
        }
      }
    }
    if (!touches_rim) ++out.interior_regions;
  }
  return out;
}

}  // namespace divides::testsupport
