#include "tsurf/rotation.hpp"

namespace tsurf {

namespace {

std::vector<Curve> walls_of(const SurfaceModel& s, const std::vector<IdealArc>& arcs) {
  std::vector<Curve> walls;
  for (const auto& a : arcs) walls.push_back(curve_of(s, a));
  for (int b = 0; b < static_cast<int>(s.segments().size()); ++b) walls.push_back(Curve::segment(b));
  return walls;
}

Walk reduced(const SurfaceModel& s, const Walk& w) {
  Reduction r = reduce_walk(s, w);
  if (r.status == Reduction::Status::Null || r.status == Reduction::Status::Boundary)
    throw ArcError(ArcError::Kind::DegenerateAfterCut, "rotation produced a trivial curve");
  return r.walk;
}

}  // namespace

Walk slide_ends(const SurfaceModel& s, const Walk& w, const std::vector<Curve>& walls, std::array<bool, 2> move, int sense) {
  std::vector<SpineStep> steps = walk_spine(s, move[0] && move[1] ? edge_walk_for_fans(s, w, sense, sense) : w);
  if (move[1]) extend_spine_fan(s, steps, true, sense);
  if (move[0]) extend_spine_fan(s, steps, false, sense);
  Spine spine(s, std::move(steps));
  auto lifts = spine.place(walls);
  bool acw = sense == kAnticlockwise;
  LiftEnd a = spine.startEnd(), b = spine.finishEnd();
  if (move[0]) {
    FanHit h = first_at_vertex(lifts, a.key, acw ? Region::B : Region::A, acw);
    if (h.lift >= 0) a = lifts[h.lift].end[1 - h.nearEnd];
  }
  if (move[1]) {
    FanHit h = first_at_vertex(lifts, b.key, acw ? Region::A : Region::B, acw);
    if (h.lift >= 0) b = lifts[h.lift].end[1 - h.nearEnd];
  }
  return spine.walkBetween(a, b);
}

CutSurface::CutSurface(const SurfaceModel& s, std::vector<TaggedArc> n) : s_(&s), n_(make_partial(s, std::move(n))) {
  walls_ = walls_of(s, n_.ideal.arcs);
}

CutArc CutSurface::forward(const TaggedArc& l) const {
  const SurfaceModel& s = *s_;
  for (const auto& h : n_.arcs)
    if (intersection_number(s, l, h) != 0)
      throw ArcError(ArcError::Kind::IncompatibleArc, "arc " + arc_label(s, l) + " crosses the cut");
  ArcEnds e = arc_ends(s, l.walk);
  int v[2] = {e.v0, e.v1};
  CutArc r{l.walk, l.tag};
  for (const auto& h : n_.arcs) {
    if (h.walk != l.walk) continue;
    for (int i = 0; i < 2; ++i) {
      if (s.isPuncture(v[i]) && h.tag[i] != l.tag[i]) r.walk = enclosing_loop(s, underlying(l), i).walk;
    }
  }
  ArcEnds re = arc_ends(s, r.walk);
  int rv[2] = {re.v0, re.v1};
  for (int i = 0; i < 2; ++i) {
    if (r.walk != l.walk) r.tag[i] = l.tag[v[0] == rv[i] ? 0 : 1];
    if (!s.isPuncture(rv[i]) || isCutPuncture(rv[i])) r.tag[i] = 0;
  }
  return r;
}

TaggedArc CutSurface::backward(const CutArc& a) const {
  const SurfaceModel& s = *s_;
  IdealArc mu{std::min(a.walk, reversed(s, a.walk))};
  int p = enclosed_puncture(s, mu);
  if (p >= 0 && isCutPuncture(p)) {
    for (const auto& h : n_.arcs) {
      ArcEnds he = arc_ends(s, h.walk);
      int hv[2] = {he.v0, he.v1};
      for (int i = 0; i < 2; ++i) {
        if (hv[i] != p || hv[0] == hv[1]) continue;
        if (!(enclosing_loop(s, underlying(h), i) == mu)) continue;
        std::array<int, 2> tags{};
        tags[i] = -n_.kappa.at(p);
        int q = hv[1 - i];
        if (s.isPuncture(q)) tags[1 - i] = isCutPuncture(q) ? n_.kappa.at(q) : a.tag[0];
        return canonical_arc(s, h.walk, tags);
      }
    }
  }
  ArcEnds e = arc_ends(s, a.walk);
  int v[2] = {e.v0, e.v1};
  std::array<int, 2> tags = a.tag;
  for (int i = 0; i < 2; ++i) {
    if (!s.isPuncture(v[i])) tags[i] = 0;
    else if (isCutPuncture(v[i])) tags[i] = n_.kappa.at(v[i]) < 0 ? -1 : 1;
  }
  return canonical_arc(s, a.walk, tags);
}

CutArc CutSurface::rotate(const CutArc& a, int direction) const {
  const SurfaceModel& s = *s_;
  ArcEnds e = arc_ends(s, a.walk);
  int v[2] = {e.v0, e.v1};
  std::array<bool, 2> move{};
  CutArc r;
  for (int i = 0; i < 2; ++i) {
    move[i] = !s.isPuncture(v[i]) || isCutPuncture(v[i]);
    r.tag[i] = move[i] ? 0 : -a.tag[i];
  }
  int sense = direction > 0 ? kAnticlockwise : kClockwise;
  r.walk = reduced(s, slide_ends(s, a.walk, walls_, move, sense));
  return r;
}

CutSurface cut(const SurfaceModel& s, const TaggedArc& eta) { return CutSurface(s, {eta}); }

TaggedArc relative_rotation(const SurfaceModel& s, const TaggedArc& l, const std::vector<TaggedArc>& n, int direction) {
  CutSurface c(s, n);
  return c.backward(c.rotate(c.forward(l), direction));
}

IdealArc slide_flip(const SurfaceModel& s, const IdealTriangulation& v, int idx, int sign) {
  std::vector<IdealArc> others;
  for (int i = 0; i < static_cast<int>(v.arcs.size()); ++i)
    if (i != idx) others.push_back(v.arcs[i]);
  const Walk& w = v.arcs[idx].walk;
  Walk moved = slide_ends(s, w, walls_of(s, others), {true, true}, sign > 0 ? kAnticlockwise : kClockwise);
  Walk r = reduced(s, moved);
  return IdealArc{std::min(r, reversed(s, r))};
}

}  // namespace tsurf
