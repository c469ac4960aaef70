#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "divides/divide.hpp"
#include "divides/int_poly.hpp"
#include "divides/link_lift.hpp"

namespace divides {

inline constexpr uint64_t kDefaultSeed = 0xD171DEULL;

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

struct SpaceCurves {
  std::vector<std::vector<Vec3>> components;  // closed: first == last
  std::vector<int> branch_ids;
  Vec4 pole;  // recorded for reproducibility
};

SpaceCurves stereographic_project(const LinkSamples& ls);
// exact inverse of the projection; round-trips samples to 1e-9
std::vector<std::vector<Vec4>> stereographic_invert(const SpaceCurves& sc);

struct Diagram {
  struct Passage {
    int crossing = 0;
    bool over = false;
    int seg = 0;       // segment index on the strand polyline
    double t = 0;      // position within the segment
  };
  struct Crossing {
    int sign = 0;
    Vec2 pos;
  };
  std::vector<std::vector<Vec2>> strands;       // closed 2d polylines
  std::vector<std::vector<Passage>> passages;   // per strand, in traversal order
  std::vector<Crossing> crossings;
  std::vector<int> branch_ids;
  Vec3 direction;  // projection direction actually used
  int components() const { return static_cast<int>(strands.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

Diagram planar_diagram(const SpaceCurves& sc, uint64_t seed = kDefaultSeed);
Diagram simplify_diagram(Diagram d);

struct PdEntry {
  int a = 0, b = 0, c = 0, d = 0;
};
std::vector<PdEntry> pd_code(const Diagram& d);
std::string pd_code_text(const Diagram& d);
// per component: crossing labels 1..n, positive entry = over passage
std::vector<std::vector<int>> gauss_code(const Diagram& d);
int writhe(const Diagram& d);
std::vector<std::vector<int>> linking_matrix(const Diagram& d);

// Alexander polynomial by Fox calculus on the Wirtinger presentation,
// normalized so the lowest power is t^0 and the constant term is positive.
// The 0-crossing one-component diagram gives 1. Multi-component diagrams in
// which some component never passes under describe a split link: 0.
IntPoly diagram_alexander(const Diagram& d);

// one crossing of a Wirtinger presentation: arcs are 0-based labels and the
// over arc is unbroken
struct WirtingerCrossing {
  int over = 0, under_in = 0, under_out = 0;
  int sign = +1;
};
IntPoly alexander_from_crossings(const std::vector<WirtingerCrossing>& xs, int n_arcs);

void emit_divide_svg(const Divide& d, const std::string& path);
void emit_diagram_svg(const Diagram& d, const std::string& path);

}  // namespace divides
