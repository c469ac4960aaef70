#pragma once

#include <optional>
#include <vector>

#include "divides/divide.hpp"
#include "divides/spline.hpp"
#include "divides/vec2.hpp"

namespace divides {

struct Crossing {
  struct Incidence {
    int branch_id;
    double param;  // spline parameter along that branch
  };
  int id = 0;
  Vec2 position;
  Incidence inc[2];     // inc[0] <= inc[1] by (branch_id, param)
  double angle = 0.0;   // unsigned angle between the two tangent directions, in (0, pi)
};

// Half-edge planar map of the divide inside the closed disk. Interior edges
// are spline arcs of the divide between vertices; boundary edges are arcs of
// the unit circle between consecutive arc endpoints. Faces are traced with
// the region on the left of each half-edge; the single face with negative
// signed area is the outside of the disk.
struct PlanarMap {
  struct Vertex {
    enum Kind { crossing, endpoint, circle_anchor, boundary_anchor };
    Kind kind;
    int crossing_id = -1;  // for kind == crossing
    Vec2 pos;
  };

  struct Edge {
    int branch = -1;     // -1 for boundary (circle) edges
    double t0 = 0, t1 = 0;  // spline params (t1 may exceed tmax on circle wrap) or angles for boundary
    int v0 = -1, v1 = -1;
    bool boundary = false;
  };

  struct Face {
    std::vector<int> halfedges;  // cyclic, target(he[i]) == origin(he[i+1])
    int sign = 0;                // +1 / -1 chess color; 0 on the outer face
    bool interior = false;       // closure does not meet the disk boundary
    bool outer = false;
    double area = 0.0;
  };

  struct CrossingStar {
    int he[4];        // outgoing half-edges, sorted CCW by germ angle
    double angle[4];  // germ angles
    int face[4];      // face occupying the sector CCW from germ i to germ i+1
  };

  Divide divide;
  std::vector<Spline> splines;      // one per branch, in branch order
  std::vector<Polyline> polylines;  // dense samples, for geometry queries
  std::vector<Crossing> crossings;

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // half-edge h = 2*edge + dir; dir 0 runs t0 -> t1
  std::vector<int> he_twin, he_next, he_origin, he_face;
  std::vector<double> he_germ_angle;
  std::vector<Face> faces;
  std::vector<CrossingStar> stars;  // parallel to crossings

  int delta = 0;
  int r = 0;
  bool connected = false;
  bool has_circle = false;
  bool regions_valid = false;  // false when the complement has a non-disk region
  int outer_face = -1;
  int base_face = -1;  // the designated negative region

  int edge_of(int he) const { return he >> 1; }
  int dir_of(int he) const { return he & 1; }
  int target(int he) const { return he_origin[he_twin[he]]; }
  const Spline& spline_of_edge(int e) const;

  // Sampled geometry of half-edge h in traversal order (origin to target).
  std::vector<Vec2> halfedge_points(int he) const;

  std::vector<int> region_faces() const;  // all faces except the outer one
  int interior_region_count() const;
};

struct Counts {
  int delta = 0;
  int r = 0;
  std::optional<int> mu;     // 2*delta - r + 1, connected divides only
  std::optional<int> genus;  // delta - r + 1
  int interior_regions = 0;
  bool connected = false;
};

std::vector<Crossing> detect_crossings(const Divide& d);
PlanarMap build_planar_map(const Divide& d);
Counts counts(const PlanarMap& m);

// Ordered boundary items of a face: its half-edges interleaved with the
// crossing corners passed between them.
struct WalkItem {
  enum Kind { edge_item, boundary_item, corner_item };
  Kind kind;
  int he = -1;        // for edge_item / boundary_item
  int crossing = -1;  // for corner_item
  int sector = -1;    // CCW sector rank at that crossing
};
std::vector<WalkItem> face_walk(const PlanarMap& m, int face_id);

}  // namespace divides
