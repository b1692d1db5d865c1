#include "doctest.h"
#include "fixtures.hpp"
#include "tsurf/rotation.hpp"

using namespace tsurf;

TEST_CASE("relative rotation without cuts is the tagged rotation") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {2}, 2}, {0, {1, 2}, 0}}) {
    SurfaceModel s = build_surface(spec);
    for (const TaggedArc& a : enumerate_tagged_arcs(s, 4)) {
      CHECK(relative_rotation(s, a, {}, 1) == tagged_rotation(s, a, 1));
      CHECK(relative_rotation(s, a, {}, -1) == tagged_rotation(s, a, -1));
    }
  }
}

TEST_CASE("relative rotation is invertible on compatible arcs") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {3}, 1}, {0, {2}, 2}}) {
    SurfaceModel s = build_surface(spec);
    auto arcs = enumerate_tagged_arcs(s, 5);
    int checked = 0;
    for (const TaggedArc& eta : arcs) {
      for (const TaggedArc& l : arcs) {
        if (l == eta || !compatible(s, l, eta)) continue;
        TaggedArc r = relative_rotation(s, l, {eta}, 1);
        CHECK(compatible(s, r, eta));
        CHECK(relative_rotation(s, r, {eta}, -1) == l);
        CHECK(relative_rotation(s, relative_rotation(s, l, {eta}, -1), {eta}, 1) == l);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("rotation in a quadrilateral cut from a hexagon swaps its diagonals") {
  SurfaceModel s = build_surface({0, {6}, 0});
  auto arcs = enumerate_tagged_arcs(s, 4);
  for (const TaggedArc& eta : arcs) {
    ArcEnds e = arc_ends(s, eta.walk);
    int d = (e.v1 - e.v0 + 6) % 6;
    if (d != 3) continue;  // a long diagonal cuts the hexagon into two squares
    for (const TaggedArc& l : arcs) {
      if (l == eta || !compatible(s, l, eta)) continue;
      TaggedArc r = relative_rotation(s, l, {eta}, 1);
      CHECK(relative_rotation(s, l, {eta}, -1) == r);
      CHECK(intersection_number(s, l, r) == 1);
    }
  }
}
