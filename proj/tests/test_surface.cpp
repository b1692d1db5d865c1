#include "doctest.h"
#include "tsurf/surface.hpp"

using namespace tsurf;

TEST_CASE("rank matches the arc count formula") {
  CHECK(build_surface({0, {6}, 0}).rank() == 3);
  CHECK(build_surface({0, {4}, 1}).rank() == 4);
  CHECK(build_surface({0, {1, 1}, 0}).rank() == 2);
  CHECK(build_surface({1, {1}, 0}).rank() == 4);
  CHECK(build_surface({0, {2}, 2}).rank() == 5);
  CHECK(build_surface({0, {1}, 2}).rank() == 4);
}

TEST_CASE("euler characteristic of the glued complex") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{
           {0, {6}, 0}, {0, {4}, 1}, {0, {3}, 1}, {0, {1, 1}, 0}, {0, {2, 3}, 1}, {1, {1}, 0}, {1, {2}, 1},
           {0, {1}, 2}, {0, {2}, 1}, {2, {1}, 0}, {0, {1, 1, 1}, 0}}) {
    SurfaceModel s = build_surface(spec);
    CHECK(s.eulerCharacteristic() == 2 - 2 * spec.genus - static_cast<int>(spec.boundary.size()));
    CHECK(s.rank() == surface_rank(spec));
    int corners = 0;
    for (int v = 0; v < s.numVertices(); ++v) {
      CHECK(s.cornerCount(v) > 0);
      corners += s.cornerCount(v);
    }
    CHECK(corners == 3 * static_cast<int>(s.triangles().size()));
    for (int t = 0; t < static_cast<int>(s.triangles().size()); ++t) {
      for (int k = 0; k < 3; ++k) {
        const Triangle& tr = s.tri(t);
        if (tr.glueTri[k] < 0) continue;
        const Triangle& nb = s.tri(tr.glueTri[k]);
        CHECK(nb.glueTri[tr.glueSide[k]] == t);
        CHECK(nb.glueSide[tr.glueSide[k]] == k);
        CHECK(nb.vertex[tr.glueSide[k]] == tr.vertex[(k + 1) % 3]);
        CHECK(nb.vertex[(tr.glueSide[k] + 1) % 3] == tr.vertex[k]);
      }
    }
  }
}

TEST_CASE("excluded surfaces are rejected") {
  auto kind = [](SurfaceSpec spec) {
    try {
      build_surface(spec);
    } catch (const SurfaceError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind({0, {1}, 0}) == static_cast<int>(SurfaceError::Kind::DegenerateSurface));
  CHECK(kind({0, {2}, 0}) == static_cast<int>(SurfaceError::Kind::DegenerateSurface));
  CHECK(kind({0, {3}, 0}) == static_cast<int>(SurfaceError::Kind::DegenerateSurface));
  CHECK(kind({0, {1}, 1}) == static_cast<int>(SurfaceError::Kind::DegenerateSurface));
  CHECK(kind({0, {}, 3}) == static_cast<int>(SurfaceError::Kind::NoBoundary));
  CHECK(kind({0, {4}, 0}) == -1);
}

TEST_CASE("boundary segments follow the marked points") {
  SurfaceModel s = build_surface({0, {3, 2}, 1});
  for (int m = 0; m < s.numMarked(); ++m) {
    CHECK(s.segments()[m].from == m);
    CHECK(s.prevMarked(s.nextMarked(m)) == m);
    const BoundarySegment& b = s.segments()[m];
    CHECK(s.tri(b.tri).vertex[b.side] == m);
    CHECK(s.tri(b.tri).vertex[(b.side + 1) % 3] == b.to);
  }
}
