#include "tsurf/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "tsurf/cover.hpp"

namespace tsurf {

namespace {

std::string arrow_name(int i) { return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i); }

struct ArcEnd {
  int arc;
  int end;
  auto operator<=>(const ArcEnd&) const = default;
};

// The arc end of R0 that follows (arc, end) immediately in the anticlockwise
// order around its endpoint, or arc = -1 when a boundary segment comes first.
ArcEnd next_anticlockwise(const SurfaceModel& s, const std::vector<IdealArc>& r0, ArcEnd from) {
  Walk w = from.end == 0 ? r0[from.arc].walk : reversed(s, r0[from.arc].walk);
  std::vector<SpineStep> steps = walk_spine(s, w);
  extend_spine_fan(s, steps, false, kAnticlockwise);
  Spine spine(s, std::move(steps));
  std::vector<Curve> walls;
  std::vector<bool> flipped;
  for (const auto& a : r0) {
    walls.push_back(curve_of(s, a.walk));
    flipped.push_back(!(walk_of(s, walls.back()) == a.walk));
  }
  int numArcs = static_cast<int>(walls.size());
  for (int b = 0; b < static_cast<int>(s.segments().size()); ++b) walls.push_back(Curve::segment(b));
  auto lifts = spine.place(walls);
  FanHit hit = first_at_vertex(lifts, spine.startEnd().key, Region::B, true);
  if (hit.lift < 0) throw AlgebraError(AlgebraError::Kind::AxiomViolation, "no neighbour around an arc end");
  int curve = lifts[hit.lift].curve;
  if (curve >= numArcs) return {-1, -1};
  int end = flipped[curve] ? 1 - hit.nearEnd : hit.nearEnd;
  return {curve, end};
}

int end_vertex(const SurfaceModel& s, const IdealArc& a, int end) {
  ArcEnds e = arc_ends(s, a.walk);
  return end == 0 ? e.v0 : e.v1;
}

}  // namespace

QuiverPresentation tiling_presentation(const SurfaceModel& s, const IdealTriangulation& r) {
  if (!is_admissible(s, r))
    throw AlgebraError(AlgebraError::Kind::NotAdmissible, "some puncture is not inside a self-folded triangle");
  std::set<int> folded;
  for (const auto& sf : r.selfFolded) folded.insert(sf.folded);
  QuiverPresentation p;
  std::vector<int> vertexOf(r.arcs.size(), -1);
  for (int i = 0; i < static_cast<int>(r.arcs.size()); ++i) {
    if (folded.count(i)) continue;
    vertexOf[i] = static_cast<int>(p.arcs.size());
    p.arcs.push_back(r.arcs[i]);
    p.vertices.push_back(arc_label(s, plain(s, r.arcs[i])));
  }

  for (int v = 0; v < static_cast<int>(p.arcs.size()); ++v) {
    for (int end = 0; end < 2; ++end) {
      int point = end_vertex(s, p.arcs[v], end);
      if (s.isPuncture(point)) continue;
      ArcEnd next = next_anticlockwise(s, p.arcs, {v, end});
      if (next.arc < 0) continue;
      Arrow a;
      a.source = v;
      a.target = next.arc;
      a.point = point;
      a.sourceEnd = end;
      a.targetEnd = next.end;
      p.arrows.push_back(a);
    }
  }
  std::sort(p.arrows.begin(), p.arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.source, x.target, x.sourceEnd) < std::tie(y.source, y.target, y.sourceEnd);
  });
  for (int i = 0; i < static_cast<int>(p.arrows.size()); ++i) p.arrows[i].name = arrow_name(i);

  // A path through an arc is zero unless it turns around the same end of it.
  for (int i = 0; i < static_cast<int>(p.arrows.size()); ++i)
    for (int j = 0; j < static_cast<int>(p.arrows.size()); ++j)
      if (p.arrows[i].target == p.arrows[j].source && p.arrows[i].targetEnd != p.arrows[j].sourceEnd)
        p.relations.push_back({i, j, false});

  for (const auto& sf : r.selfFolded) {
    int v = vertexOf[sf.loop];
    for (int i = 0; i < static_cast<int>(p.arrows.size()); ++i)
      if (p.arrows[i].source == v && p.arrows[i].target == v) p.specialLoops.push_back(i);
  }
  std::sort(p.specialLoops.begin(), p.specialLoops.end());
  return p;
}

QuiverPresentation skew_tiling_presentation(const SurfaceModel& s, const IdealTriangulation& r) {
  QuiverPresentation p = tiling_presentation(s, r);
  p.mode = QuiverPresentation::Mode::SkewTiling;
  for (auto& rel : p.relations)
    if (rel.first == rel.second && std::binary_search(p.specialLoops.begin(), p.specialLoops.end(), rel.first))
      rel.idempotent = true;
  return p;
}

std::string QuiverPresentation::text() const {
  std::string out = "vertices:";
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    out += (i ? ", " : " ") + std::to_string(i) + " = " + vertices[i];
  out += "\narrows:";
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    out += (i ? "; " : " ") + arrows[i].name + ": " + std::to_string(arrows[i].source) + " -> " +
           std::to_string(arrows[i].target);
  out += "\nspecial: {";
  for (int i = 0; i < static_cast<int>(specialLoops.size()); ++i) out += (i ? ", " : "") + arrows[specialLoops[i]].name;
  out += "}\nrelations: [";
  for (int i = 0; i < static_cast<int>(relations.size()); ++i) {
    const Relation& r = relations[i];
    out += (i ? ", " : "") + arrows[r.first].name + arrows[r.second].name;
    if (r.idempotent) out += "-" + arrows[r.first].name;
  }
  return out + "]\n";
}

SkewGentleTriple validate_skew_gentle(const QuiverPresentation& p) {
  if (p.mode != QuiverPresentation::Mode::SkewTiling)
    throw AlgebraError(AlgebraError::Kind::WrongMode, "presentation is not in skew-tiling mode");
  int nv = static_cast<int>(p.vertices.size());
  int na = static_cast<int>(p.arrows.size());
  auto fail = [](const std::string& clause) { throw AlgebraError(AlgebraError::Kind::AxiomViolation, clause); };
  for (const Arrow& a : p.arrows)
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv) fail("arrow with an unknown vertex");
  std::set<int> special(p.specialLoops.begin(), p.specialLoops.end());
  for (int e : special)
    if (e < 0 || e >= na || p.arrows[e].source != p.arrows[e].target) fail("special arrow that is not a loop");

  // In the augmented quiver the special loops are ordinary loops with zero square.
  std::set<std::pair<int, int>> rel;
  for (const Relation& r : p.relations) rel.insert({r.first, r.second});
  for (int e : special) rel.insert({e, e});

  std::vector<int> out(nv, 0), in(nv, 0);
  for (const Arrow& a : p.arrows) ++out[a.source], ++in[a.target];
  for (int v = 0; v < nv; ++v)
    if (out[v] > 2 || in[v] > 2)
      fail("vertex " + std::to_string(v) + " is the start or terminal of more than two arrows");
  for (int a = 0; a < na; ++a) {
    int after0 = 0, after1 = 0, before0 = 0, before1 = 0;
    for (int b = 0; b < na; ++b) {
      if (p.arrows[a].target == p.arrows[b].source) (rel.count({a, b}) ? after0 : after1)++;
      if (p.arrows[b].target == p.arrows[a].source) (rel.count({b, a}) ? before0 : before1)++;
    }
    if (after0 > 1) fail("arrow " + p.arrows[a].name + " is followed by more than one arrow in a relation");
    if (after1 > 1) fail("arrow " + p.arrows[a].name + " is followed by more than one arrow outside the relations");
    if (before0 > 1) fail("arrow " + p.arrows[a].name + " is preceded by more than one arrow in a relation");
    if (before1 > 1) fail("arrow " + p.arrows[a].name + " is preceded by more than one arrow outside the relations");
  }

  SkewGentleTriple t;
  t.numVertices = nv;
  std::vector<int> newIndex(na, -1);
  for (int a = 0; a < na; ++a) {
    if (special.count(a)) {
      t.special.push_back(p.arrows[a].source);
      continue;
    }
    newIndex[a] = static_cast<int>(t.arrows.size());
    t.arrows.push_back(p.arrows[a]);
  }
  std::sort(t.special.begin(), t.special.end());
  if (std::adjacent_find(t.special.begin(), t.special.end()) != t.special.end()) fail("two special loops at one vertex");
  for (const Relation& r : p.relations)
    if (newIndex[r.first] >= 0 && newIndex[r.second] >= 0) t.relations.push_back({newIndex[r.first], newIndex[r.second], false});
  return t;
}

}  // namespace tsurf
