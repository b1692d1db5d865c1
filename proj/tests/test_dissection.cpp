#include "doctest.h"
#include "fixtures.hpp"
#include "tsurf/dissection.hpp"

using namespace tsurf;

TEST_CASE("exchange graphs of small triangulated surfaces") {
  struct Case {
    SurfaceSpec spec;
    int vertices;
  };
  for (Case c : std::vector<Case>{{{0, {4}, 0}, 2}, {{0, {5}, 0}, 5}, {{0, {6}, 0}, 14}, {{0, {3}, 1}, 14}, {{0, {4}, 1}, 50}}) {
    SurfaceModel s = build_surface(c.spec);
    auto sets = fixtures::maximal_sets(s, enumerate_tagged_arcs(s, 8));
    PartialTaggedTriangulation r = make_partial(s, sets.front());
    ExchangeGraph g = exchange_graph(s, r, {});
    ConnectivityReport rep = check_connected(g, static_cast<int>(sets.size()));
    CHECK(rep.vertices == c.vertices);
    CHECK(rep.ok());
  }
}

TEST_CASE("standardness paths agree and partial graphs match enumeration") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {3}, 1}, {0, {4}, 1}, {0, {1, 1}, 0}, {0, {2}, 2}}) {
    SurfaceModel s = build_surface(spec);
    auto arcs = enumerate_tagged_arcs(s, 6);
    auto sets = fixtures::maximal_sets(s, enumerate_tagged_arcs(s, 4));
    int tested = 0;
    for (size_t k = 0; k < sets.size() && tested < 6; k += 3) {
      auto full = sets[k];
      if (static_cast<int>(full.size()) != s.rank()) continue;
      for (int drop = 0; drop < static_cast<int>(full.size()) && tested < 6; ++drop) {
        std::vector<TaggedArc> part;
        for (int i = 0; i < static_cast<int>(full.size()); ++i)
          if (i != drop && i != (drop + 1) % static_cast<int>(full.size())) part.push_back(full[i]);
        if (part.empty()) continue;
        PartialTaggedTriangulation r = make_partial(s, part);
        PartialTaggedTriangulation t = good_completion(s, r);
        for (const auto& d : arcs) {
          bool a = is_standard(s, d, r);
          bool b = is_standard_geometric(s, d, r);
          bool c = is_standard_by_completion(s, d, r, t);
          CHECK_MESSAGE(a == b, arc_label(s, d));
          CHECK_MESSAGE(a == c, arc_label(s, d));
        }
        if (connects_to_boundary(s, r.arcs)) {
          ExchangeGraph g = exchange_graph(s, r, {2000, 40});
          auto en = enumerate_dissections(s, r);
          ConnectivityReport rep = check_connected(g, static_cast<int>(en.dissections.size()));
          CHECK(rep.ok());
        }
        ++tested;
      }
    }
  }
}
