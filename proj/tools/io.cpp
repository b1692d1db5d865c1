#include "io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

namespace tsurf::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field '") + key + "' has the wrong type");
  }
}

int vertex_field(const SurfaceModel& s, const json& j, const char* key) {
  std::string label = get<std::string>(j, key);
  int v = vertex_by_label(s, label);
  if (v < 0) throw ConfigError("unknown endpoint '" + label + "'");
  return v;
}

std::array<int, 2> tags_field(const json& j) {
  std::array<int, 2> t{1, 1};
  if (!j.contains("tags")) return t;
  const json& tj = j.at("tags");
  auto one = [&](const char* key, int i) {
    if (!tj.contains(key) || tj.at(key).is_null()) return;
    int v = 0;
    try {
      v = tj.at(key).get<int>();
    } catch (const json::exception&) {
      throw ConfigError("tags must be integers");
    }
    if (v != 1 && v != -1 && v != 0) throw ConfigError("tags must be 1, -1 or 0");
    t[i] = v == 0 ? 1 : v;
  };
  if (!tj.is_object()) throw ConfigError("tags must be an object with 'from' and 'to'");
  one("from", 0);
  one("to", 1);
  return t;
}

json walk_to_json(const Walk& w) {
  return {{"tri", w.tri}, {"corner", w.corner}, {"exits", w.exits}, {"end", w.endCorner}};
}

Walk walk_from_json(const SurfaceModel& s, const json& j) {
  Walk w;
  w.tri = get<int>(j, "tri");
  w.corner = get<int>(j, "corner");
  w.exits = get<std::vector<int>>(j, "exits");
  w.endCorner = get<int>(j, "end");
  try {
    check_walk(s, w);
  } catch (const ArcError& e) {
    throw ConfigError(std::string("invalid walk: ") + e.what());
  }
  return w;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> labels(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  std::vector<std::string> out;
  for (const auto& a : arcs) out.push_back(arc_label(s, a));
  return out;
}

std::string joined(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

json spec_to_json(const SurfaceSpec& spec) {
  return {{"genus", spec.genus}, {"boundary", spec.boundary}, {"punctures", spec.punctures}};
}

SurfaceSpec spec_from_json(const json& j) {
  SurfaceSpec spec;
  spec.genus = j.contains("genus") ? get<int>(j, "genus") : 0;
  spec.boundary = get<std::vector<int>>(j, "boundary");
  spec.punctures = j.contains("punctures") ? get<int>(j, "punctures") : 0;
  return spec;
}

json surface_to_json(const SurfaceModel& s) {
  json tris = json::array();
  for (const auto& t : s.triangles())
    tris.push_back({{"vertices", t.vertex}, {"glueTri", t.glueTri}, {"glueSide", t.glueSide}, {"edges", t.edge},
                    {"segments", t.segment}});
  json labelsJ = json::array();
  for (int v = 0; v < s.numVertices(); ++v) labelsJ.push_back(s.vertexLabel(v));
  return {{"spec", spec_to_json(s.spec())}, {"rank", s.rank()}, {"labels", labelsJ}, {"triangles", tris}};
}

SurfaceModel surface_from_json(const json& j) {
  const json& specJ = j.contains("spec") ? j.at("spec") : j;
  SurfaceSpec spec = spec_from_json(specJ);
  SurfaceModel s = [&] {
    try {
      return build_surface(spec);
    } catch (const SurfaceError& e) {
      throw ConfigError(std::string("invalid surface: ") + e.what());
    }
  }();
  if (j.contains("triangles") && !(surface_to_json(s).at("triangles") == j.at("triangles")))
    throw ConfigError("embedded triangulation differs from the one built for this surface");
  return s;
}

json arc_to_json(const SurfaceModel& s, const TaggedArc& a) {
  ArcEnds e = arc_ends(s, a.walk);
  return {{"label", arc_label(s, a)},
          {"from", s.vertexLabel(e.v0)},
          {"to", s.vertexLabel(e.v1)},
          {"tags", {{"from", a.tag[0]}, {"to", a.tag[1]}}},
          {"walk", walk_to_json(a.walk)}};
}

TaggedArc arc_from_json(const SurfaceModel& s, const json& j) {
  try {
    if (j.is_string()) return parse_arc_label(s, j.get<std::string>());
    if (!j.is_object()) throw ConfigError("arc literal must be a string or an object");
    if (j.contains("walk")) {
      Walk w = walk_from_json(s, j.at("walk"));
      return normalize(s, w, tags_field(j));
    }
    if (j.contains("edge")) {
      int e = get<int>(j, "edge");
      if (e < 0 || e >= s.rank()) throw ConfigError("edge id out of range");
      std::array<int, 2> tags = tags_field(j);
      Walk w = edge_walk(s, e);
      if (j.contains("from")) {
        ArcEnds ends = arc_ends(s, w);
        int from = vertex_field(s, j, "from");
        if (ends.v0 != from) {
          w = reversed(s, w);
          if (ends.v1 != from) throw ConfigError("edge does not start at 'from'");
        }
        if (j.contains("to") && arc_ends(s, w).v1 != vertex_field(s, j, "to")) throw ConfigError("edge does not end at 'to'");
      }
      return normalize(s, w, tags);
    }
    if (j.contains("crossings"))
      return arc_from_crossings(s, vertex_field(s, j, "from"), vertex_field(s, j, "to"),
                                get<std::vector<int>>(j, "crossings"), tags_field(j));
    if (j.contains("label")) {
      if (j.contains("tags")) throw ConfigError("a labelled arc carries its tags in the label");
      return parse_arc_label(s, get<std::string>(j, "label"));
    }
    throw ConfigError("arc literal needs one of label, walk, edge or crossings");
  } catch (const ArcError& e) {
    throw ConfigError(std::string("invalid arc: ") + e.what());
  }
}

json arcs_to_json(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  json out = json::array();
  for (const auto& a : arcs) out.push_back(arc_to_json(s, a));
  return out;
}

std::vector<TaggedArc> arcs_from_json(const SurfaceModel& s, const json& j) {
  if (!j.is_array()) throw ConfigError("expected a list of arc literals");
  std::vector<TaggedArc> out;
  for (const auto& x : j) out.push_back(arc_from_json(s, x));
  return out;
}

std::string set_id(const SurfaceModel& s, std::vector<TaggedArc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& l : labels(s, arcs)) {
    for (unsigned char c : l + ";") {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  return hex64(h);
}

json shear_to_json(const SurfaceModel& s, const PartialTaggedTriangulation& r, const std::vector<int>& v) {
  json entries = json::object();
  for (int i = 0; i < r.size(); ++i) entries[arc_label(s, r.arcs[i])] = v.at(i);
  return {{"context", set_id(s, r.arcs)}, {"entries", entries}};
}

std::map<std::string, int> shear_from_json(const json& j) {
  std::map<std::string, int> out;
  const json& e = j.at("entries");
  for (auto it = e.begin(); it != e.end(); ++it) out[it.key()] = it.value().get<int>();
  return out;
}

json graph_to_json(const SurfaceModel& s, const ExchangeGraph& g, const PartialTaggedTriangulation& r) {
  json vs = json::array();
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    const GraphVertex& v = g.vertices[i];
    TauTiltingLabel tau = tau_tilting_label(s, v.arcs, r);
    vs.push_back({{"id", i},
                  {"hash", set_id(s, v.arcs)},
                  {"depth", v.depth},
                  {"arcs", arcs_to_json(s, v.arcs)},
                  {"tau", {{"modules", labels(s, tau.moduleArcs)}, {"shifted", labels(s, tau.projectiveShiftArcs)}}}});
  }
  json fs = json::array();
  for (const GraphFlip& f : g.flips)
    fs.push_back({{"from", f.from},
                  {"arc", f.arc},
                  {"to", f.to},
                  {"newArc", f.newArc},
                  {"sign", f.sign},
                  {"direction", f.sign > 0 ? "right" : "left"},
                  {"crossChecked", f.crossChecked}});
  return {{"context", arcs_to_json(s, g.context)},
          {"contextId", set_id(s, g.context)},
          {"complete", g.complete},
          {"limitReason", g.limitReason},
          {"vertices", vs},
          {"flips", fs}};
}

ExchangeGraph graph_from_json(const SurfaceModel& s, const json& j) {
  ExchangeGraph g;
  g.context = arcs_from_json(s, j.at("context"));
  g.complete = get<bool>(j, "complete");
  g.limitReason = get<std::string>(j, "limitReason");
  for (const auto& v : j.at("vertices")) g.vertices.push_back({arcs_from_json(s, v.at("arcs")), get<int>(v, "depth")});
  for (const auto& f : j.at("flips"))
    g.flips.push_back({get<int>(f, "from"), get<int>(f, "arc"), get<int>(f, "to"), get<int>(f, "newArc"),
                       get<int>(f, "sign"), get<bool>(f, "crossChecked")});
  return g;
}

std::string graph_to_dot(const SurfaceModel& s, const ExchangeGraph& g, const PartialTaggedTriangulation& r) {
  std::string out = "digraph exchange {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    const GraphVertex& v = g.vertices[i];
    TauTiltingLabel tau = tau_tilting_label(s, v.arcs, r);
    out += "  v" + std::to_string(i) + " [label=\"" + set_id(s, v.arcs) + "\\nM: " +
           joined(labels(s, tau.moduleArcs), ", ") + "\\nP[1]: " + joined(labels(s, tau.projectiveShiftArcs), ", ") +
           "\"];\n";
  }
  // Each edge is drawn once, pointing along its right mutation.
  std::set<std::pair<int, int>> drawn;
  for (const GraphFlip& f : g.flips) {
    int a = f.sign > 0 ? f.from : f.to, b = f.sign > 0 ? f.to : f.from;
    if (!drawn.insert({a, b}).second) continue;
    const TaggedArc& arc = f.sign > 0 ? g.vertices[f.from].arcs[f.arc] : g.vertices[f.to].arcs[f.newArc];
    out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + " [label=\"" + arc_label(s, arc) + " right\"];\n";
  }
  return out + "}\n";
}

json report_to_json(const ConnectivityReport& rep) {
  json j = {{"vertices", rep.vertices}, {"edges", rep.edges},         {"complete", rep.complete},
            {"connected", rep.connected}, {"regular", rep.regular ? json(rep.degree) : json(false)},
            {"symmetric", rep.symmetric}, {"oracleMatches", rep.oracleMatches}, {"ok", rep.ok()}};
  j["oracleCount"] = rep.oracleCount ? json(*rep.oracleCount) : json(nullptr);
  return j;
}

json presentation_to_json(const SurfaceModel& s, const QuiverPresentation& p) {
  json arrows = json::array();
  for (const Arrow& a : p.arrows)
    arrows.push_back({{"name", a.name},
                      {"source", a.source},
                      {"target", a.target},
                      {"point", a.point < 0 ? json(nullptr) : json(s.vertexLabel(a.point))},
                      {"sourceEnd", a.sourceEnd},
                      {"targetEnd", a.targetEnd}});
  json rels = json::array();
  for (const Relation& r : p.relations) rels.push_back({{"path", {r.first, r.second}}, {"idempotent", r.idempotent}});
  json arcs = json::array();
  for (const IdealArc& a : p.arcs) arcs.push_back(walk_to_json(a.walk));
  return {{"mode", p.mode == QuiverPresentation::Mode::Tiling ? "tiling" : "skew-tiling"},
          {"vertices", p.vertices},
          {"arcs", arcs},
          {"arrows", arrows},
          {"special", p.specialLoops},
          {"relations", rels},
          {"text", p.text()}};
}

QuiverPresentation presentation_from_json(const SurfaceModel& s, const json& j) {
  QuiverPresentation p;
  std::string mode = get<std::string>(j, "mode");
  if (mode != "tiling" && mode != "skew-tiling") throw ConfigError("mode must be tiling or skew-tiling");
  p.mode = mode == "tiling" ? QuiverPresentation::Mode::Tiling : QuiverPresentation::Mode::SkewTiling;
  p.vertices = get<std::vector<std::string>>(j, "vertices");
  if (j.contains("arcs"))
    for (const auto& a : j.at("arcs")) p.arcs.push_back(IdealArc{walk_from_json(s, a)});
  for (const auto& a : j.at("arrows")) {
    Arrow x;
    x.name = get<std::string>(a, "name");
    x.source = get<int>(a, "source");
    x.target = get<int>(a, "target");
    if (a.contains("point") && !a.at("point").is_null()) x.point = vertex_field(s, a, "point");
    x.sourceEnd = a.contains("sourceEnd") ? get<int>(a, "sourceEnd") : -1;
    x.targetEnd = a.contains("targetEnd") ? get<int>(a, "targetEnd") : -1;
    p.arrows.push_back(x);
  }
  p.specialLoops = get<std::vector<int>>(j, "special");
  for (const auto& r : j.at("relations")) {
    auto path = get<std::vector<int>>(r, "path");
    if (path.size() != 2) throw ConfigError("relations are paths of length two");
    p.relations.push_back({path[0], path[1], r.contains("idempotent") && get<bool>(r, "idempotent")});
  }
  return p;
}

}  // namespace tsurf::io
