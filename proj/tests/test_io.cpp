#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "app.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "io.hpp"

using namespace tsurf;
using io::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run_job(const json& j) {
  std::ostringstream out, err;
  int code = app::kConfigError;
  try {
    code = app::run(app::parse_config(j), out, err);
  } catch (const io::ConfigError& e) {
    err << e.what();
  }
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("tsurf_io_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("surfaces round-trip through JSON") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {1, 1}, 0}, {1, {1}, 0}, {0, {2}, 2}}) {
    SurfaceModel s = build_surface(spec);
    json j = io::surface_to_json(s);
    SurfaceModel t = io::surface_from_json(json::parse(j.dump()));
    CHECK(t.spec() == spec);
    CHECK(io::surface_to_json(t) == j);
  }
  json bad = io::surface_to_json(build_surface({0, {6}, 0}));
  bad["triangles"][0]["vertices"][0] = 5;
  CHECK_THROWS_AS(io::surface_from_json(bad), io::ConfigError);
}

TEST_CASE("arc literals in every form name the same arc") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}, {0, {1, 1}, 0}, {0, {2}, 2}}) {
    SurfaceModel s = build_surface(spec);
    for (const auto& a : enumerate_tagged_arcs(s, 4)) {
      json j = io::arc_to_json(s, a);
      CHECK(io::arc_from_json(s, json::parse(j.dump())) == a);
      CHECK(io::arc_from_json(s, j["label"]) == a);
      CHECK(io::arc_from_json(s, json{{"walk", j["walk"]}, {"tags", j["tags"]}}) == a);
    }
  }
  SurfaceModel s = build_surface({0, {4}, 1});
  TaggedArc notched = io::arc_from_json(s, json::parse(R"({"from": "m0", "to": "p0", "edge": 1, "tags": {"to": -1}})"));
  CHECK(arc_label(s, notched) == "m0=e1=p0-");
  CHECK_THROWS_AS(io::arc_from_json(s, json::parse(R"({"from": "m0", "to": "p0", "crossings": []})")), io::ConfigError);
  int viaCrossings = 0;
  for (const auto& a : enumerate_tagged_arcs(s, 4)) {
    std::vector<int> crossed;
    for (const auto& step : walk_steps(s, a.walk))
      if (step.out >= 0) crossed.push_back(s.tri(step.tri).edge[step.out]);
    if (crossed.empty()) continue;
    json j = io::arc_to_json(s, a);
    CHECK(io::arc_from_json(s, json{{"from", j["from"]}, {"to", j["to"]}, {"crossings", crossed}, {"tags", j["tags"]}}) == a);
    ++viaCrossings;
  }
  CHECK(viaCrossings > 0);
}

TEST_CASE("malformed arc literals are config errors") {
  SurfaceModel s = build_surface({0, {6}, 0});
  for (const char* text : {R"("m0=e9=m2")", R"("m0~~m2")", R"(42)", R"({"edge": 99})", R"({"from": "m0"})",
                           R"({"from": "q7", "to": "m2", "crossings": []})",
                           R"({"walk": {"tri": 0, "corner": 0, "exits": [7], "end": 1}})",
                           R"({"label": "m0=e0=m2", "tags": {"from": 2}})"})
    CHECK_THROWS_AS(io::arc_from_json(s, json::parse(text)), io::ConfigError);
}

TEST_CASE("graphs, presentations and shear vectors round-trip") {
  for (SurfaceSpec spec : std::vector<SurfaceSpec>{{0, {6}, 0}, {0, {4}, 1}}) {
    SurfaceModel s = build_surface(spec);
    auto sets = fixtures::maximal_sets(s, enumerate_tagged_arcs(s, 6));
    PartialTaggedTriangulation r = make_partial(s, sets.front());
    ExchangeGraph g = exchange_graph(s, r, {});
    CHECK(io::graph_from_json(s, json::parse(io::graph_to_json(s, g, r).dump())) == g);

    std::vector<int> v = shear_vector(s, elementary_laminate(s, r.arcs[0]), r);
    auto entries = io::shear_from_json(io::shear_to_json(s, r, v));
    for (int i = 0; i < r.size(); ++i) CHECK(entries.at(arc_label(s, r.arcs[i])) == v[i]);

    for (const auto& set : sets) {
      PartialTaggedTriangulation t = make_partial(s, set);
      if (!is_admissible(s, t.ideal)) continue;
      QuiverPresentation p = skew_tiling_presentation(s, t.ideal);
      CHECK(io::presentation_from_json(s, json::parse(io::presentation_to_json(s, p).dump())) == p);
    }
  }
}

TEST_CASE("graph command on the hexagon") {
  auto dir = scratch("hexagon");
  json job = {{"command", "graph"}, {"surface", {{"boundary", {6}}}}, {"R", "base"}, {"format", "dot"}, {"out", dir.string()}};
  Run r = run_job(job);
  REQUIRE(r.code == app::kOk);
  std::regex node(R"(^  v\d+ \[label=)");
  int nodes = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) nodes += std::regex_search(line, node);
  CHECK(nodes == 14);
  json summary = json::parse(slurp(dir / "summary.json"));
  CHECK(summary["vertices"] == 14);
  CHECK(summary["regular"] == 3);
  CHECK(summary["connected"] == true);
  CHECK(slurp(dir / "graph.dot") == r.out);

  SurfaceModel s = build_surface({0, {6}, 0});
  json graph = json::parse(slurp(dir / "graph.json"));
  CHECK(io::graph_to_json(s, io::graph_from_json(s, graph), make_partial(s, io::arcs_from_json(s, graph["context"]))) == graph);
}

TEST_CASE("artifacts do not depend on the thread count") {
  std::string first;
  for (int threads : {1, 2, 8}) {
    auto dir = scratch("threads" + std::to_string(threads));
    json job = {{"command", "check-connected"}, {"surface", {{"boundary", {4}}, {"punctures", 1}}},
                {"R", "base"}, {"threads", threads}, {"out", dir.string()}};
    Run r = run_job(job);
    REQUIRE(r.code == app::kOk);
    std::string bytes = slurp(dir / "graph.json") + slurp(dir / "graph.dot") + slurp(dir / "report.json");
    if (first.empty()) first = bytes;
    CHECK(bytes == first);
  }
}

TEST_CASE("algebra command on the once-punctured square") {
  json job = {{"command", "algebra"},
              {"surface", {{"boundary", {4}}, {"punctures", 1}}},
              {"R", {"m0=e1=p0+", "m0=e1=p0-", "m0=e2=m2"}},
              {"format", "text"}};
  Run r = run_job(job);
  CHECK(r.code == app::kOk);
  CHECK(r.out ==
        "vertices: 0 = m0~e0.e3~m0, 1 = m0=e2=m2\n"
        "arrows: a: 0 -> 0; b: 0 -> 1\n"
        "special: {a}\n"
        "relations: [aa-a]\n");
}

TEST_CASE("exit codes") {
  json hexagon = {{"boundary", {6}}};
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}, {"R", {"m0=e9=m2"}}}).code == app::kConfigError);
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}, {"R", {{{"walk", 3}}}}}).code == app::kConfigError);
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}}).code == app::kConfigError);
  CHECK(run_job({{"command", "nope"}, {"surface", hexagon}, {"R", "base"}}).code == app::kConfigError);
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}, {"R", "base"}, {"limits", {{"maxVertices", -1}}}}).code ==
        app::kConfigError);
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}, {"R", {"m0=e0=m2", "m1~e0~m3"}}}).code == app::kConfigError);
  CHECK(run_job({{"command", "graph"}, {"surface", hexagon}, {"R", "base"}, {"limits", {{"maxVertices", 5}}}}).code ==
        app::kLimitExceeded);
  CHECK(run_job({{"command", "validate"}, {"surface", hexagon}, {"R", "base"}}).code == app::kOk);
  CHECK(run_job({{"command", "flip"}, {"surface", hexagon}, {"R", "base"}, {"arc", 1}}).code == app::kOk);
  CHECK(run_job({{"command", "standard"}, {"surface", hexagon}, {"R", {"m0=e1=m3"}}, {"arc", "m0=e0=m2"}}).code == app::kOk);
}
