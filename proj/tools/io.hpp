#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsurf/algebra.hpp"
#include "tsurf/dissection.hpp"

namespace tsurf::io {

using json = nlohmann::json;

// Malformed or inconsistent input (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json spec_to_json(const SurfaceSpec& spec);
SurfaceSpec spec_from_json(const json& j);

// Surface spec plus the base triangulation, so crossing words stay portable.
json surface_to_json(const SurfaceModel& s);
// Rebuilds the surface from its spec and checks an embedded triangulation, if any.
SurfaceModel surface_from_json(const json& j);

// Arc literal. Accepted forms:
//   "m0~e0.e3~m0"                                   a label as printed by arc_label
//   {"label": "m0=e1=p0-"}
//   {"from": "m0", "to": "p0", "edge": 1, "tags": {"to": -1}}
//   {"from": "m0", "to": "m0", "crossings": [0, 3], "tags": {...}}
//   {"walk": {"tri": 0, "corner": 0, "exits": [1], "end": 2}, "tags": {"from": 1, "to": -1}}
// Emitted arcs carry all of label, from, to, tags and walk.
json arc_to_json(const SurfaceModel& s, const TaggedArc& a);
TaggedArc arc_from_json(const SurfaceModel& s, const json& j);
json arcs_to_json(const SurfaceModel& s, const std::vector<TaggedArc>& arcs);
std::vector<TaggedArc> arcs_from_json(const SurfaceModel& s, const json& j);

// Short stable identifier of a set of arcs (FNV-1a over the sorted labels).
std::string set_id(const SurfaceModel& s, std::vector<TaggedArc> arcs);

// {"context": id, "entries": {arc label: value}} in the order of the context.
json shear_to_json(const SurfaceModel& s, const PartialTaggedTriangulation& r, const std::vector<int>& v);
std::map<std::string, int> shear_from_json(const json& j);

json graph_to_json(const SurfaceModel& s, const ExchangeGraph& g, const PartialTaggedTriangulation& r);
ExchangeGraph graph_from_json(const SurfaceModel& s, const json& j);
std::string graph_to_dot(const SurfaceModel& s, const ExchangeGraph& g, const PartialTaggedTriangulation& r);

json report_to_json(const ConnectivityReport& rep);

json presentation_to_json(const SurfaceModel& s, const QuiverPresentation& p);
QuiverPresentation presentation_from_json(const SurfaceModel& s, const json& j);

}  // namespace tsurf::io
