#include <doctest.h>

#include "divides/divide.hpp"
#include "divides/errors.hpp"

using namespace divides;

TEST_CASE("parse single chord") {
  Divide d = parse_divide("divide v1\narc 1: (-1,0) (-0.3,0) (0.3,0) (1,0)\n");
  REQUIRE(d.branches.size() == 1);
  CHECK(d.branches[0].kind == BranchKind::arc);
  CHECK(d.branches[0].id == 1);
  CHECK(d.branches[0].control_points.size() == 4);
}

TEST_CASE("comments and blank lines ignored") {
  Divide d = parse_divide(
      "divide v1\n"
      "# a comment\n"
      "\n"
      "arc 1: (-1,0) (-0.3,0.1) (0.3,-0.1) (1,0)  # trailing\n");
  CHECK(d.branches.size() == 1);
}

TEST_CASE("two diameters parse") {
  Divide d = parse_divide(
      "divide v1\n"
      "arc 1: (-1,0) (-0.3,0) (0.3,0) (1,0)\n"
      "arc 2: (0,-1) (0,-0.3) (0,0.3) (0,1)\n");
  CHECK(d.branches.size() == 2);
}

TEST_CASE("endpoint off circle rejected") {
  CHECK_THROWS_AS(parse_divide("divide v1\narc 1: (-1,0) (-0.3,0) (0.3,0) (0.9,0)\n"), ParseError);
}

TEST_CASE("too few control points rejected") {
  CHECK_THROWS_AS(parse_divide("divide v1\narc 1: (-1,0) (0,0.1) (1,0)\n"), ParseError);
}

TEST_CASE("duplicate ids rejected") {
  CHECK_THROWS_AS(parse_divide("divide v1\n"
                               "arc 1: (-1,0) (-0.3,0) (0.3,0) (1,0)\n"
                               "arc 1: (0,-1) (0,-0.3) (0,0.3) (0,1)\n"),
                  ParseError);
}

TEST_CASE("missing header rejected") {
  CHECK_THROWS_AS(parse_divide("arc 1: (-1,0) (-0.3,0) (0.3,0) (1,0)\n"), ParseError);
}

TEST_CASE("parse error carries line number") {
  try {
    parse_divide("divide v1\narc 1: (-1,0) (-0.3,0) (0.3 0) (1,0)\n");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 0);
  }
}

TEST_CASE("circle branch with repeated first point") {
  Divide d = parse_divide("divide v1\ncircle 1: (0.5,0) (0,0.5) (-0.5,0) (0,-0.5) (0.5,0)\n");
  REQUIRE(d.branches.size() == 1);
  CHECK(d.branches[0].kind == BranchKind::circle);
  CHECK(d.branches[0].control_points.size() == 4);  // duplicate closure point dropped
}

TEST_CASE("circle control point on boundary rejected") {
  CHECK_THROWS_AS(parse_divide("divide v1\ncircle 1: (1,0) (0,0.5) (-0.5,0) (0,-0.5)\n"),
                  ParseError);
}

TEST_CASE("writer round-trips") {
  Divide d = parse_divide(
      "divide v1\n"
      "arc 7: (-1,0) (-0.25,0.125) (0.3,-0.125) (1,0)\n"
      "circle 2: (0.5,0) (0,0.5) (-0.5,0) (0,-0.5)\n");
  Divide d2 = parse_divide(write_divide(d));
  REQUIRE(d2.branches.size() == d.branches.size());
  for (size_t i = 0; i < d.branches.size(); ++i) {
    CHECK(d2.branches[i].id == d.branches[i].id);
    CHECK(d2.branches[i].kind == d.branches[i].kind);
    REQUIRE(d2.branches[i].control_points.size() == d.branches[i].control_points.size());
    for (size_t j = 0; j < d.branches[i].control_points.size(); ++j)
      CHECK(dist(d2.branches[i].control_points[j], d.branches[i].control_points[j]) == 0.0);
  }
}

TEST_CASE("scientific notation accepted") {
  Divide d = parse_divide("divide v1\narc 1: (-1,0) (-3e-1,1e-2) (0.3,0) (1,0e0)\n");
  CHECK(d.branches[0].control_points[1].x == doctest::Approx(-0.3));
}
