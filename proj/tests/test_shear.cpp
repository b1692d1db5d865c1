#include "doctest.h"
#include "fixtures.hpp"
#include "tsurf/shear.hpp"

using namespace tsurf;

TEST_CASE("elementary laminates of rotated arcs are co-elementary laminates") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {2}, 2}, {0, {1, 2}, 0}, {0, {3}, 1}}) {
    SurfaceModel s = build_surface(spec);
    for (const TaggedArc& a : enumerate_tagged_arcs(s, 4)) {
      CHECK(elementary_laminate(s, tagged_rotation(s, a, 1)) == co_elementary_laminate(s, a));
      CHECK(co_elementary_laminate(s, tagged_rotation(s, a, -1)) == elementary_laminate(s, a));
    }
  }
}

TEST_CASE("shear coordinates of triangulation arcs are unit vectors") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {4}, 0}, {0, {6}, 0}, {0, {3}, 1}, {0, {4}, 1}}) {
    SurfaceModel s = build_surface(spec);
    auto sets = fixtures::maximal_sets(s, enumerate_tagged_arcs(s, 8));
    for (const auto& set : sets) {
      REQUIRE(static_cast<int>(set.size()) == s.rank());
      PartialTaggedTriangulation t = make_partial(s, set, false);
      for (int d = 0; d < t.size(); ++d) {
        auto e = shear_vector(s, elementary_laminate(s, t.arcs[d]), t);
        auto eo = shear_vector(s, co_elementary_laminate(s, t.arcs[d]), t);
        for (int g = 0; g < t.size(); ++g) {
          CHECK(e[g] == (g == d ? -1 : 0));
          CHECK(eo[g] == (g == d ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("retagging a laminate matches the laminate of the retagged arc") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {3}, 1}, {0, {2}, 2}, {0, {1}, 2}}) {
    SurfaceModel s = build_surface(spec);
    for (int p = s.numMarked(); p < s.numVertices(); ++p) {
      std::map<int, int> kappa{{p, -1}};
      for (const auto& d : enumerate_tagged_arcs(s, 6)) {
        CHECK_MESSAGE(retag(s, elementary_laminate(s, d), kappa) == elementary_laminate(s, retag(d, s, kappa)), arc_label(s, d));
        CHECK_MESSAGE(reverse_spirals(s, reverse_spirals(s, co_elementary_laminate(s, d), p), p) == co_elementary_laminate(s, d),
                      arc_label(s, d));
      }
    }
  }
}
