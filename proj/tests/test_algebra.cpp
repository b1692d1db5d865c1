#include "doctest.h"
#include "fixtures.hpp"
#include "tsurf/algebra.hpp"

using namespace tsurf;

namespace {

TaggedArc by_label(const SurfaceModel& s, const std::string& label) {
  for (const auto& a : enumerate_tagged_arcs(s, 6))
    if (arc_label(s, a) == label) return a;
  FAIL("no arc labelled " << label);
  return {};
}

IdealTriangulation ideal_of(const SurfaceModel& s, const std::vector<std::string>& labels) {
  std::vector<TaggedArc> arcs;
  for (const auto& l : labels) arcs.push_back(by_label(s, l));
  return make_partial(s, arcs).ideal;
}

}  // namespace

TEST_CASE("pentagon fan gives a linear quiver without relations") {
  SurfaceModel s = build_surface({0, {5}, 0});
  QuiverPresentation p = tiling_presentation(s, ideal_of(s, {"m0=e0=m2", "m0=e1=m3"}));
  CHECK(p.text() ==
        "vertices: 0 = m0=e0=m2, 1 = m0=e1=m3\n"
        "arrows: a: 0 -> 1\n"
        "special: {}\n"
        "relations: []\n");
}

TEST_CASE("hexagon fan: arrows at the apex compose without relations") {
  SurfaceModel s = build_surface({0, {6}, 0});
  QuiverPresentation p = tiling_presentation(s, ideal_of(s, {"m0=e0=m2", "m0=e1=m3", "m0=e2=m4"}));
  REQUIRE(p.arrows.size() == 2);
  CHECK(p.arrows[0].source == 0);
  CHECK(p.arrows[0].target == 1);
  CHECK(p.arrows[1].source == 1);
  CHECK(p.arrows[1].target == 2);
  CHECK(p.relations.empty());
  CHECK(validate_skew_gentle(skew_tiling_presentation(s, ideal_of(s, {"m0=e0=m2", "m0=e1=m3", "m0=e2=m4"}))).relations.empty());
}

TEST_CASE("arcs without common endpoints give no arrows") {
  SurfaceModel s = build_surface({0, {6}, 0});
  QuiverPresentation p = tiling_presentation(s, ideal_of(s, {"m0=e0=m2", "m3~e2~m5"}));
  CHECK(p.arrows.empty());
  CHECK(p.relations.empty());
}

TEST_CASE("self-folded triangle gives a special loop") {
  SurfaceModel s = build_surface({0, {4}, 1});
  IdealTriangulation r = ideal_of(s, {"m0=e1=p0+", "m0=e1=p0-", "m0=e2=m2"});
  QuiverPresentation t = tiling_presentation(s, r);
  REQUIRE(t.vertices.size() == 2);
  REQUIRE(t.specialLoops.size() == 1);
  const Arrow& eps = t.arrows[t.specialLoops[0]];
  CHECK(eps.source == eps.target);
  CHECK(t.arrows.size() == 2);
  REQUIRE(t.relations.size() == 1);
  CHECK(t.relations[0] == Relation{t.specialLoops[0], t.specialLoops[0], false});

  QuiverPresentation sk = skew_tiling_presentation(s, r);
  CHECK(sk.specialLoops == t.specialLoops);
  REQUIRE(sk.relations.size() == 1);
  CHECK(sk.relations[0].idempotent);
  SkewGentleTriple g = validate_skew_gentle(sk);
  CHECK(g.special == std::vector<int>{eps.source});
  CHECK(g.arrows.size() == 1);
  CHECK(g.relations.empty());
}

TEST_CASE("skew-tiling presentations of admissible triangulations are skew-gentle") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {5}, 0}, {0, {6}, 0}, {0, {3}, 1}, {0, {4}, 1}, {0, {2}, 2},
                                                   {0, {1, 1}, 0}, {0, {1, 2}, 0}, {1, {1}, 0}, {0, {1}, 2}}) {
    SurfaceModel s = build_surface(spec);
    auto sets = fixtures::maximal_sets(s, enumerate_tagged_arcs(s, 4));
    int checked = 0;
    for (size_t k = 0; k < sets.size() && k < 40; ++k) {
      const auto& full = sets[k];
      int n = static_cast<int>(full.size());
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<TaggedArc> part;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) part.push_back(full[i]);
        PartialTaggedTriangulation r = make_partial(s, part);
        if (!is_admissible(s, r.ideal)) {
          CHECK_THROWS_AS(tiling_presentation(s, r.ideal), AlgebraError);
          continue;
        }
        QuiverPresentation p = skew_tiling_presentation(s, r.ideal);
        CHECK_NOTHROW(validate_skew_gentle(p));
        CHECK(p.specialLoops.size() == r.ideal.selfFolded.size());
        CHECK(p.vertices.size() == r.ideal.arcs.size() - r.ideal.selfFolded.size());
        if (s.numPunctures() == 0) CHECK(p.specialLoops.empty());
        QuiverPresentation t = tiling_presentation(s, r.ideal);
        CHECK(t.arrows.size() == p.arrows.size());
        if (r.ideal.selfFolded.empty()) CHECK(t.text() == p.text());
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("hand-built quivers") {
  QuiverPresentation empty;
  empty.mode = QuiverPresentation::Mode::SkewTiling;
  CHECK(validate_skew_gentle(empty).arrows.empty());

  QuiverPresentation three;
  three.mode = QuiverPresentation::Mode::SkewTiling;
  three.vertices = {"0", "1", "2", "3"};
  three.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 0, 3}};
  CHECK_THROWS_AS(validate_skew_gentle(three), AlgebraError);

  QuiverPresentation tiling = three;
  tiling.mode = QuiverPresentation::Mode::Tiling;
  CHECK_THROWS_AS(validate_skew_gentle(tiling), AlgebraError);
}
