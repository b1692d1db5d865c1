#include "doctest.h"
#include "tsurf/arc.hpp"
#include "tsurf/enumerate.hpp"

using namespace tsurf;

TEST_CASE("tagged arc counts on small surfaces") {
  CHECK(enumerate_tagged_arcs(build_surface({0, {4}, 0}), 6).size() == 2);
  CHECK(enumerate_tagged_arcs(build_surface({0, {6}, 0}), 6).size() == 9);
  CHECK(enumerate_tagged_arcs(build_surface({0, {7}, 0}), 8).size() == 14);
  CHECK(enumerate_tagged_arcs(build_surface({0, {3}, 1}), 8).size() == 9);
  CHECK(enumerate_tagged_arcs(build_surface({0, {4}, 1}), 8).size() == 16);
  CHECK(enumerate_tagged_arcs(build_surface({0, {5}, 1}), 10).size() == 25);
}

TEST_CASE("diagonals of a square cross once") {
  SurfaceModel s = build_surface({0, {4}, 0});
  auto arcs = enumerate_tagged_arcs(s, 4);
  REQUIRE(arcs.size() == 2);
  CHECK(intersection_number(s, arcs[0], arcs[1]) == 1);
  CHECK(intersection_number(s, arcs[1], arcs[0]) == 1);
  CHECK(intersection_number(s, arcs[0], arcs[0]) == 0);
}

TEST_CASE("intersection numbers are symmetric and vanish on the diagonal") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {4}, 1}, {0, {6}, 0}, {0, {2}, 2}, {0, {1, 2}, 0}}) {
    SurfaceModel s = build_surface(spec);
    auto arcs = enumerate_tagged_arcs(s, 4);
    for (size_t i = 0; i < arcs.size(); ++i) {
      CHECK(intersection_number(s, arcs[i], arcs[i]) == 0);
      for (size_t j = 0; j < i; ++j) CHECK(intersection_number(s, arcs[i], arcs[j]) == intersection_number(s, arcs[j], arcs[i]));
    }
  }
}

TEST_CASE("rotation on a polygon has order m") {
  SurfaceModel s = build_surface({0, {6}, 0});
  for (const TaggedArc& a : enumerate_tagged_arcs(s, 6)) {
    TaggedArc r = a;
    for (int k = 0; k < 6; ++k) r = tagged_rotation(s, r, 1);
    CHECK(r == a);
    CHECK(tagged_rotation(s, tagged_rotation(s, a, 1), -1) == a);
  }
}

TEST_CASE("rotation of a puncture-to-puncture arc is its adjoint") {
  SurfaceModel s = build_surface({0, {2}, 2});
  int checked = 0;
  for (const TaggedArc& a : enumerate_tagged_arcs(s, 4)) {
    ArcEnds e = arc_ends(s, a.walk);
    if (!s.isPuncture(e.v0) || !s.isPuncture(e.v1) || e.v0 == e.v1) continue;
    TaggedArc r = tagged_rotation(s, a, 1);
    CHECK(r.walk == a.walk);
    CHECK(r.tag[0] == -a.tag[0]);
    CHECK(r.tag[1] == -a.tag[1]);
    CHECK(intersection_number(s, a, r) == 2);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("opposite tag at one puncture end, marked other end, is compatible") {
  SurfaceModel s = build_surface({0, {4}, 1});
  for (const TaggedArc& a : enumerate_tagged_arcs(s, 4)) {
    ArcEnds e = arc_ends(s, a.walk);
    if (s.isPuncture(e.v0) == s.isPuncture(e.v1)) continue;
    TaggedArc b = a;
    int pe = s.isPuncture(e.v0) ? 0 : 1;
    b.tag[pe] = -a.tag[pe];
    CHECK(intersection_number(s, a, b) == 0);
  }
}

TEST_CASE("arc labels parse back to the same arc") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {2}, 2}, {0, {1, 2}, 0}, {1, {1}, 0}, {0, {1}, 2}}) {
    SurfaceModel s = build_surface(spec);
    for (const TaggedArc& a : enumerate_tagged_arcs(s, 6)) CHECK(parse_arc_label(s, arc_label(s, a)) == a);
  }
  SurfaceModel s = build_surface({0, {6}, 0});
  CHECK_THROWS_AS(parse_arc_label(s, "m0~e9~m3"), ArcError);
  CHECK_THROWS_AS(parse_arc_label(s, "m0~e0~m4"), ArcError);
  CHECK_THROWS_AS(parse_arc_label(s, "q0=e0=m2"), ArcError);
  CHECK_THROWS_AS(parse_arc_label(s, "m0-e0-m2"), ArcError);
}
