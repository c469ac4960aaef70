#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "divides/errors.hpp"
#include "divides/planar_map.hpp"
#include "support/region_oracle.hpp"

using namespace divides;

namespace {
Divide fixture(const char* name) {
  return load_divide(std::string(FIXTURE_DIR) + "/" + name);
}
}  // namespace

TEST_CASE("chord: no crossings, two regions") {
  PlanarMap m = build_planar_map(fixture("chord.divide"));
  CHECK(m.delta == 0);
  CHECK(m.r == 1);
  CHECK(m.connected);
  CHECK(m.regions_valid);
  CHECK(m.region_faces().size() == 2);
  CHECK(m.interior_region_count() == 0);
  Counts c = counts(m);
  REQUIRE(c.mu.has_value());
  CHECK(*c.mu == 0);
  CHECK(*c.genus == 0);
}

TEST_CASE("two diameters: one orthogonal crossing, four regions") {
  PlanarMap m = build_planar_map(fixture("two_diameters.divide"));
  CHECK(m.delta == 1);
  CHECK(m.r == 2);
  CHECK(m.connected);
  REQUIRE(m.crossings.size() == 1);
  CHECK(dist(m.crossings[0].position, {0, 0}) < 1e-9);
  CHECK(m.crossings[0].angle == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-9));
  CHECK(m.region_faces().size() == 4);
  CHECK(m.interior_region_count() == 0);
  Counts c = counts(m);
  CHECK(*c.mu == 1);
  CHECK(*c.genus == 0);

  // chess coloring: the four quadrant regions alternate around the crossing
  const PlanarMap::CrossingStar& st = m.stars[0];
  for (int i = 0; i < 4; ++i)
    CHECK(m.faces[st.face[i]].sign == -m.faces[st.face[(i + 1) % 4]].sign);
}

TEST_CASE("loop: one self-crossing, one interior region") {
  PlanarMap m = build_planar_map(fixture("loop.divide"));
  CHECK(m.delta == 1);
  CHECK(m.r == 1);
  CHECK(m.connected);
  CHECK(m.region_faces().size() == 3);
  CHECK(m.interior_region_count() == 1);
  Counts c = counts(m);
  CHECK(*c.mu == 2);
  CHECK(*c.genus == 1);
  CHECK(c.interior_regions == 1);
  // both incidences on the same branch
  CHECK(m.crossings[0].inc[0].branch_id == 1);
  CHECK(m.crossings[0].inc[1].branch_id == 1);
}

TEST_CASE("hart: two crossings, two interior regions") {
  PlanarMap m = build_planar_map(fixture("hart.divide"));
  CHECK(m.delta == 2);
  CHECK(m.r == 1);
  CHECK(m.connected);
  CHECK(m.interior_region_count() == 2);
  Counts c = counts(m);
  CHECK(*c.mu == 4);
  CHECK(*c.genus == 2);
}

TEST_CASE("triangle: three crossings, all pairs") {
  PlanarMap m = build_planar_map(fixture("triangle.divide"));
  CHECK(m.delta == 3);
  CHECK(m.r == 3);
  CHECK(m.connected);
  CHECK(m.interior_region_count() == 1);
  Counts c = counts(m);
  CHECK(*c.mu == 4);
}

TEST_CASE("region census matches raster oracle on fixtures") {
  for (const char* name :
       {"chord.divide", "two_diameters.divide", "loop.divide", "hart.divide", "triangle.divide"}) {
    CAPTURE(name);
    Divide d = fixture(name);
    PlanarMap m = build_planar_map(d);
    testsupport::RegionCensus rc = testsupport::raster_region_census(d);
    CHECK(static_cast<int>(m.region_faces().size()) == rc.regions);
    CHECK(m.interior_region_count() == rc.interior_regions);
  }
}

TEST_CASE("euler formula and chess property on fixtures") {
  for (const char* name :
       {"chord.divide", "two_diameters.divide", "loop.divide", "hart.divide", "triangle.divide"}) {
    CAPTURE(name);
    PlanarMap m = build_planar_map(fixture(name));
    int V = static_cast<int>(m.vertices.size());
    int E = static_cast<int>(m.edges.size());
    int F = static_cast<int>(m.region_faces().size());
    CHECK(V - E + F == 1);
    // every interior edge separates regions of opposite sign
    for (int e = 0; e < E; ++e) {
      if (m.edges[e].boundary) continue;
      int f0 = m.he_face[2 * e], f1 = m.he_face[2 * e + 1];
      CHECK(m.faces[f0].sign == -m.faces[f1].sign);
    }
    // interior region count formula for connected arc divides
    CHECK(m.interior_region_count() == m.delta - m.r + 1);
  }
}

TEST_CASE("crossing count stable under resolution doubling") {
  for (const char* name :
       {"chord.divide", "two_diameters.divide", "loop.divide", "hart.divide", "triangle.divide"}) {
    CAPTURE(name);
    Divide d = fixture(name);
    d.resolution = 64;
    size_t n64 = detect_crossings(d).size();
    d.resolution = 128;
    size_t n128 = detect_crossings(d).size();
    CHECK(n64 == n128);
  }
}

TEST_CASE("disconnected divide flagged, counts still partial") {
  Divide d = parse_divide(
      "divide v1\n"
      "arc 1: (-1,0) (-0.33,0.4) (0.33,0.4) (1,0)\n"
      "arc 2: (0,-1) (-0.2,-0.5) (0.2,-0.5) (0.707106781186548,-0.707106781186547)\n");
  PlanarMap m = build_planar_map(d);
  CHECK(m.delta == 0);
  CHECK(m.r == 2);
  CHECK(!m.connected);
  Counts c = counts(m);
  CHECK(!c.mu.has_value());
  CHECK(!c.genus.has_value());
}

TEST_CASE("tangency rejected") {
  // a second straight diameter tilted by ~0.35 milliradians
  Divide d = parse_divide(
      "divide v1\n"
      "arc 1: (-1,0) (-0.33,0) (0.33,0) (1,0)\n"
      "arc 2: (-0.999999939076519,-0.000349065847508) (-0.33,-0.000115191729834)"
      " (0.33,0.000115191729834) (0.999999939076519,0.000349065847508)\n");
  CHECK_THROWS_AS(build_planar_map(d), DomainError);
}

TEST_CASE("face walks close up and corners reference real sectors") {
  PlanarMap m = build_planar_map(fixture("hart.divide"));
  for (int f : m.region_faces()) {
    auto walk = face_walk(m, f);
    REQUIRE(!walk.empty());
    int corners = 0, edges = 0;
    for (const auto& it : walk) {
      if (it.kind == WalkItem::corner_item) {
        ++corners;
        CHECK(it.crossing >= 0);
        CHECK(it.crossing < m.delta);
        CHECK(it.sector >= 0);
        CHECK(it.sector < 4);
        CHECK(m.stars[it.crossing].face[it.sector] == f);
      } else {
        ++edges;
      }
    }
    CHECK(edges == static_cast<int>(m.faces[f].halfedges.size()));
  }
}
