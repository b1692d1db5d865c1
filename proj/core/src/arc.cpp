#include "tsurf/arc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsurf {

ArcEnds arc_ends(const SurfaceModel& s, const Walk& w) { return {start_vertex(s, w), end_vertex(s, w)}; }

namespace {

Walk reduced_or_throw(const SurfaceModel& s, const Walk& raw) {
  Reduction r = reduce_walk(s, raw);
  switch (r.status) {
    case Reduction::Status::Null: throw ArcError(ArcError::Kind::NullHomotopic, "curve is null-homotopic");
    case Reduction::Status::Boundary:
      throw ArcError(ArcError::Kind::BoundaryParallel, "curve is homotopic to a boundary segment");
    default: return r.walk;
  }
}

TaggedArc orient(const SurfaceModel& s, const Walk& w, std::array<int, 2> tags) {
  TaggedArc fwd{w, tags};
  TaggedArc rev{reversed(s, w), {tags[1], tags[0]}};
  return std::min(fwd, rev);
}

std::array<int, 2> fix_tags(const SurfaceModel& s, const Walk& w, std::array<int, 2> tags) {
  ArcEnds e = arc_ends(s, w);
  int v[2] = {e.v0, e.v1};
  for (int i = 0; i < 2; ++i) {
    if (!s.isPuncture(v[i])) tags[i] = 0;
    else if (tags[i] != -1) tags[i] = 1;
  }
  return tags;
}

}  // namespace

TaggedArc canonical_arc(const SurfaceModel& s, const Walk& raw, std::array<int, 2> tags) {
  Walk w = reduced_or_throw(s, raw);
  return orient(s, w, fix_tags(s, w, tags));
}

TaggedArc normalize(const SurfaceModel& s, const Walk& raw, std::array<int, 2> tags) {
  Walk w = reduced_or_throw(s, raw);
  tags = fix_tags(s, w, tags);
  ArcEnds e = arc_ends(s, w);
  if (e.v0 == e.v1 && s.isPuncture(e.v0) && tags[0] != tags[1])
    throw ArcError(ArcError::Kind::TagMismatch, "loop at a puncture with different tags at its ends");
  if (self_crossings(s, w) > 0) throw ArcError(ArcError::Kind::SelfIntersecting, "curve has self-intersections");
  if (e.v0 == e.v1 && cuts_out_punctured_monogon(s, w))
    throw ArcError(ArcError::Kind::IllegalMonogonCutout, "loop cuts out a once-punctured monogon");
  return orient(s, w, tags);
}

IdealArc normalize_ideal(const SurfaceModel& s, const Walk& raw) {
  Walk w = reduced_or_throw(s, raw);
  if (self_crossings(s, w) > 0) throw ArcError(ArcError::Kind::SelfIntersecting, "curve has self-intersections");
  return IdealArc{std::min(w, reversed(s, w))};
}

TaggedArc edge_arc(const SurfaceModel& s, int e, std::array<int, 2> tags) {
  Walk w = edge_walk(s, e);
  return orient(s, w, fix_tags(s, w, tags));
}

IdealArc underlying(const TaggedArc& a) {
  // Tagged arcs are oriented by their walk first, so the walk is already the
  // smaller of its two orientations.
  return IdealArc{a.walk};
}

TaggedArc plain(const SurfaceModel& s, const IdealArc& a) { return orient(s, a.walk, fix_tags(s, a.walk, {1, 1})); }

Curve curve_of(const SurfaceModel& s, const IdealArc& a) { return curve_of(s, a.walk); }

Walk oriented_walk(const SurfaceModel& s, const Walk& w, int e) { return e == 0 ? w : reversed(s, w); }

int interior_crossings(const SurfaceModel& s, const Walk& a, const Walk& b) {
  if (a.exits.empty() && b.exits.empty()) return 0;
  const Walk& spineWalk = a.exits.empty() ? b : a;
  const Walk& other = a.exits.empty() ? a : b;
  Spine spine(s, walk_spine(s, spineWalk));
  auto lifts = spine.place({curve_of(s, other)});
  int count = 0;
  for (const Lift& l : lifts) {
    Region r0 = region_of(l.end[0].key), r1 = region_of(l.end[1].key);
    if ((r0 == Region::A && r1 == Region::B) || (r0 == Region::B && r1 == Region::A)) ++count;
  }
  return count;
}

int self_crossings(const SurfaceModel& s, const Walk& a) {
  if (a.exits.empty()) return 0;
  return interior_crossings(s, a, a) / 2;
}

int intersection_number(const SurfaceModel& s, const TaggedArc& a, const TaggedArc& b) {
  int count = interior_crossings(s, a.walk, b.walk);
  ArcEnds ea = arc_ends(s, a.walk), eb = arc_ends(s, b.walk);
  int va[2] = {ea.v0, ea.v1}, vb[2] = {eb.v0, eb.v1};
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 2; ++t2) {
      if (va[t1] != vb[t2] || !s.isPuncture(va[t1])) continue;
      if (a.tag[t1] == b.tag[t2]) continue;
      Walk wa = oriented_walk(s, a.walk, t1), wb = oriented_walk(s, b.walk, t2);
      if (wa == wb) {
        int o1 = 1 - t1, o2 = 1 - t2;
        if (!(va[o1] == vb[o2] && s.isPuncture(va[o1]) && a.tag[o1] != b.tag[o2])) continue;
      }
      ++count;
    }
  }
  return count;
}

TaggedArc tagged_rotation(const SurfaceModel& s, const TaggedArc& a, int direction) {
  int sense = direction > 0 ? kAnticlockwise : kClockwise;
  ArcEnds e = arc_ends(s, a.walk);
  Walk w = a.walk;
  if (!s.isPuncture(e.v0)) w = slide_start_along_boundary(s, w, sense);
  if (!s.isPuncture(e.v1)) w = reversed(s, slide_start_along_boundary(s, reversed(s, w), sense));
  return canonical_arc(s, w, {-a.tag[0], -a.tag[1]});
}

IdealArc enclosing_loop(const SurfaceModel& s, const IdealArc& a, int pend) {
  Walk w = oriented_walk(s, a.walk, 1 - pend);
  return normalize_ideal(s, enclose_walk(s, w));
}

int enclosed_puncture(const SurfaceModel& s, const IdealArc& a) {
  int p = -1;
  if (cuts_out_punctured_monogon(s, a.walk, &p)) return p;
  return -1;
}

std::string arc_label(const SurfaceModel& s, const TaggedArc& a) {
  ArcEnds e = arc_ends(s, a.walk);
  auto endLabel = [&](int v, int tag) {
    std::string l = s.vertexLabel(v);
    if (s.isPuncture(v)) l += tag < 0 ? "-" : "+";
    return l;
  };
  std::string mid;
  if (a.walk.exits.empty()) {
    Curve c = curve_of(s, a.walk);
    mid = "=e" + std::to_string(c.id) + "=";
  } else {
    mid = "~";
    int t = a.walk.tri;
    for (size_t i = 0; i < a.walk.exits.size(); ++i) {
      int ex = a.walk.exits[i];
      if (i) mid += ".";
      mid += "e" + std::to_string(s.tri(t).edge[ex]);
      t = s.tri(t).glueTri[ex];
    }
    mid += "~";
  }
  return endLabel(e.v0, a.tag[0]) + mid + endLabel(e.v1, a.tag[1]);
}

}  // namespace tsurf

namespace tsurf {

int vertex_by_label(const SurfaceModel& s, const std::string& label) {
  for (int v = 0; v < s.numVertices(); ++v)
    if (s.vertexLabel(v) == label) return v;
  return -1;
}

TaggedArc arc_from_crossings(const SurfaceModel& s, int from, int to, const std::vector<int>& edges,
                             std::array<int, 2> tags) {
  auto bad = [](const std::string& what) { throw ArcError(ArcError::Kind::InvalidWalk, what); };
  if (from < 0 || to < 0 || from >= s.numVertices() || to >= s.numVertices()) bad("unknown endpoint");
  std::set<TaggedArc> found;
  if (edges.empty()) bad("an arc along a base edge is given by its edge id");
  int nt = static_cast<int>(s.triangles().size());
  Walk w;
  auto rec = [&](auto&& self, int t, int in, size_t k) -> void {
    if (k == edges.size()) {
      int end = (in + 2) % 3;
      if (s.tri(t).vertex[end] != to) return;
      w.endCorner = end;
      try {
        found.insert(normalize(s, w, tags));
      } catch (const ArcError&) {
      }
      return;
    }
    for (int d : {1, 2}) {
      int side = (in + d) % 3;
      if (s.isBoundarySide(t, side) || s.tri(t).edge[side] != edges[k]) continue;
      w.exits.push_back(side);
      self(self, s.tri(t).glueTri[side], s.tri(t).glueSide[side], k + 1);
      w.exits.pop_back();
    }
  };
  for (int t = 0; t < nt; ++t) {
    for (int c = 0; c < 3; ++c) {
      int side = (c + 1) % 3;
      if (s.tri(t).vertex[c] != from || s.isBoundarySide(t, side) || s.tri(t).edge[side] != edges[0]) continue;
      w.tri = t;
      w.corner = c;
      w.exits = {side};
      rec(rec, s.tri(t).glueTri[side], s.tri(t).glueSide[side], 1);
    }
  }
  if (found.empty()) bad("no arc crosses the given edges between the given endpoints");
  if (found.size() > 1) bad("the crossed edges do not determine a unique arc");
  return *found.begin();
}

TaggedArc parse_arc_label(const SurfaceModel& s, const std::string& label) {
  auto bad = [&](const std::string& why) { throw ArcError(ArcError::Kind::InvalidWalk, "arc label '" + label + "': " + why); };
  auto endpoint = [&](std::string tok, int& tag) {
    tag = 1;
    if (!tok.empty() && (tok.back() == '+' || tok.back() == '-')) {
      tag = tok.back() == '-' ? -1 : 1;
      tok.pop_back();
    }
    int v = vertex_by_label(s, tok);
    if (v < 0) bad("unknown endpoint " + tok);
    return v;
  };
  auto edgeId = [&](const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'e') bad("bad edge token " + tok);
    try {
      size_t used = 0;
      int e = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1 || e < 0 || e >= s.rank()) bad("bad edge token " + tok);
      return e;
    } catch (const std::logic_error&) {
      bad("bad edge token " + tok);
    }
    return -1;
  };
  char sep = label.find('~') != std::string::npos ? '~' : '=';
  size_t a = label.find(sep);
  size_t b = a == std::string::npos ? a : label.find(sep, a + 1);
  if (b == std::string::npos || label.find(sep, b + 1) != std::string::npos) bad("expected from~edges~to or from=edge=to");
  std::array<int, 2> tags{};
  int from = endpoint(label.substr(0, a), tags[0]);
  int to = endpoint(label.substr(b + 1), tags[1]);
  std::string mid = label.substr(a + 1, b - a - 1);
  if (sep == '=') {
    int e = edgeId(mid);
    Walk w = edge_walk(s, e);
    ArcEnds ends = arc_ends(s, w);
    if (ends.v0 == from && ends.v1 == to) return normalize(s, w, tags);
    if (ends.v0 == to && ends.v1 == from) return normalize(s, w, {tags[1], tags[0]});
    bad("edge does not join the given endpoints");
  }
  std::vector<int> edges;
  size_t pos = 0;
  while (pos <= mid.size()) {
    size_t dot = mid.find('.', pos);
    if (dot == std::string::npos) dot = mid.size();
    edges.push_back(edgeId(mid.substr(pos, dot - pos)));
    pos = dot + 1;
  }
  return arc_from_crossings(s, from, to, edges, tags);
}

}  // namespace tsurf
