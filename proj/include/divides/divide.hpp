#pragma once

#include <string>
#include <vector>

#include "divides/spline.hpp"
#include "divides/vec2.hpp"

namespace divides {

enum class BranchKind { arc, circle };

struct Branch {
  int id = 0;
  BranchKind kind = BranchKind::arc;
  std::vector<Vec2> control_points;

  Spline spline() const { return Spline(control_points, kind == BranchKind::circle); }
};

struct Divide {
  std::vector<Branch> branches;
  int resolution = 64;

  const Branch& branch_by_id(int id) const;
};

// Reads the `divide v1` text format. Throws ParseError with line/col on
// malformed input, including invariant violations tied to a branch line
// (endpoint off the circle, too few control points, point outside the disk).
Divide parse_divide(const std::string& text);

Divide load_divide(const std::string& path);

std::string write_divide(const Divide& d);

}  // namespace divides
