#include "tsurf/shear.hpp"

#include <algorithm>
#include <array>

namespace tsurf {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

std::vector<SpineStep> reverse_path(const std::vector<SpineStep>& p) {
  std::vector<SpineStep> r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r.push_back({it->tri, it->out, it->in});
  return r;
}

// Corner of the spiral puncture in a step whose terminal slot is the side
// `side`, crossed when rotating with `sense` around it.
int spiral_corner(int side, int sense) { return sense > 0 ? side : mod3(side + 1); }

// Rotates around the corner in the terminal (out) slot of the last step until
// a boundary side is crossed or `cap` triangles were added.
void unroll_end(const SurfaceModel& s, std::vector<SpineStep>& steps, int sense, int cap) {
  Corner cur{steps.back().tri, steps.back().out / 2};
  for (int count = 0;; ++count) {
    int side = rotation_exit_side(cur, sense);
    if (s.isBoundarySide(cur.tri, side) || count == cap) {
      steps.back().out = side_slot(side);
      return;
    }
    Corner next = rotate_corner(s, cur, sense);
    steps.back().out = side_slot(side);
    steps.push_back({next.tri, side_slot(s.tri(cur.tri).glueSide[side]), corner_slot(next.corner)});
    cur = next;
  }
}

// Removes the unrolled turns of a spiral at the end of the path and stops the
// path at the corner of the puncture.
void trim_spiral_end(const SurfaceModel& s, std::vector<SpineStep>& steps, int sense) {
  int c = spiral_corner(steps.back().out / 2, sense);
  while (steps.size() > 1) {
    const SpineStep& st = steps.back();
    if (!is_side_slot(st.in)) break;
    int sIn = st.in / 2;
    if (sIn != c && sIn != mod3(c - 1)) break;
    int sPrev = steps[steps.size() - 2].out / 2;
    c = c == sIn ? mod3(sPrev + 1) : sPrev;
    steps.pop_back();
  }
  (void)s;
  steps.back().out = corner_slot(c);
}

LaminateEnd end_record(const SurfaceModel& s, const SpineStep& st, int slot, int sense) {
  LaminateEnd e;
  int side = slot / 2;
  if (s.isBoundarySide(st.tri, side)) {
    e.kind = LaminateEnd::Kind::Boundary;
    e.segment = s.tri(st.tri).segment[side];
  } else {
    e.kind = LaminateEnd::Kind::Spiral;
    e.puncture = s.tri(st.tri).vertex[spiral_corner(side, sense)];
    e.sense = sense;
  }
  return e;
}

Laminate canonical(Laminate l) {
  Laminate r{reverse_path(l.path), {l.ends[1], l.ends[0]}};
  return std::min(l, r);
}

Laminate build(const SurfaceModel& s, const TaggedArc& a, bool op) {
  ArcEnds ends = arc_ends(s, a.walk);
  int v[2] = {ends.v0, ends.v1};
  int sense[2];
  for (int i = 0; i < 2; ++i) {
    int base = s.isPuncture(v[i]) ? (a.tag[i] < 0 ? kAnticlockwise : kClockwise) : kClockwise;
    sense[i] = op ? -base : base;
  }
  std::vector<SpineStep> steps = walk_spine(s, edge_walk_for_fans(s, a.walk, sense[0], sense[1]));
  auto capFor = [&](int i) { return s.isPuncture(v[i]) ? s.cornerCount(v[i]) + 2 : 1 << 30; };
  unroll_end(s, steps, sense[1], capFor(1));
  steps = reverse_path(steps);
  unroll_end(s, steps, sense[0], capFor(0));
  steps = reverse_path(steps);
  reduce_spine(steps);
  Laminate l;
  l.ends[0] = end_record(s, steps.front(), steps.front().in, sense[0]);
  l.ends[1] = end_record(s, steps.back(), steps.back().out, sense[1]);
  if (l.ends[1].kind == LaminateEnd::Kind::Spiral) trim_spiral_end(s, steps, sense[1]);
  if (l.ends[0].kind == LaminateEnd::Kind::Spiral) {
    steps = reverse_path(steps);
    trim_spiral_end(s, steps, sense[0]);
    steps = reverse_path(steps);
  }
  l.path = std::move(steps);
  return canonical(std::move(l));
}

// Re-spirals the spiral ends of a laminate in the given senses. The stored
// path stops at the corner of the puncture, so it is unrolled again in the
// new sense and trimmed.
Laminate resense(const SurfaceModel& s, const Laminate& l, std::array<int, 2> sense) {
  bool spiral[2];
  for (int i = 0; i < 2; ++i) {
    spiral[i] = l.ends[i].kind == LaminateEnd::Kind::Spiral;
    if (!spiral[i]) sense[i] = l.ends[i].sense;
  }
  if (sense[0] == l.ends[0].sense && sense[1] == l.ends[1].sense) return l;
  std::vector<SpineStep> steps = l.path;
  if (steps.size() == 1 && spiral[0] && spiral[1]) {
    Walk w{steps[0].tri, steps[0].in / 2, {}, steps[0].out / 2};
    steps = walk_spine(s, edge_walk_for_fans(s, w, sense[0], sense[1]));
  }
  auto capAt = [&](int i) { return s.cornerCount(l.ends[i].puncture) + 2; };
  if (spiral[1]) unroll_end(s, steps, sense[1], capAt(1));
  if (spiral[0]) {
    steps = reverse_path(steps);
    unroll_end(s, steps, sense[0], capAt(0));
    steps = reverse_path(steps);
  }
  reduce_spine(steps);
  Laminate r = l;
  if (spiral[1]) trim_spiral_end(s, steps, sense[1]);
  if (spiral[0]) {
    steps = reverse_path(steps);
    trim_spiral_end(s, steps, sense[0]);
    steps = reverse_path(steps);
  }
  for (int i = 0; i < 2; ++i) r.ends[i].sense = sense[i];
  r.path = std::move(steps);
  return canonical(std::move(r));
}

}  // namespace

Laminate elementary_laminate(const SurfaceModel& s, const TaggedArc& a) { return build(s, a, false); }

Laminate co_elementary_laminate(const SurfaceModel& s, const TaggedArc& a) { return build(s, a, true); }

Laminate reverse_spirals(const SurfaceModel& s, const Laminate& l, int p) {
  std::array<int, 2> sense{};
  for (int i = 0; i < 2; ++i) {
    const LaminateEnd& e = l.ends[i];
    sense[i] = e.kind == LaminateEnd::Kind::Spiral && e.puncture == p ? -e.sense : e.sense;
  }
  return resense(s, l, sense);
}

Laminate retag(const SurfaceModel& s, const Laminate& l, const std::map<int, int>& kappa) {
  std::array<int, 2> sense{};
  for (int i = 0; i < 2; ++i) {
    const LaminateEnd& e = l.ends[i];
    sense[i] = e.sense;
    if (e.kind != LaminateEnd::Kind::Spiral) continue;
    auto it = kappa.find(e.puncture);
    if (it != kappa.end() && it->second < 0) sense[i] = -e.sense;
  }
  return resense(s, l, sense);
}

std::vector<SpineStep> unroll(const SurfaceModel& s, const Laminate& l, int turnSteps) {
  std::vector<SpineStep> steps = l.path;
  if (l.ends[1].kind == LaminateEnd::Kind::Spiral) unroll_end(s, steps, l.ends[1].sense, turnSteps);
  if (l.ends[0].kind == LaminateEnd::Kind::Spiral) {
    steps = reverse_path(steps);
    unroll_end(s, steps, l.ends[0].sense, turnSteps);
    steps = reverse_path(steps);
  }
  return steps;
}

ShearSequence shear_sequence(const SurfaceModel& s, const Laminate& l, const std::vector<IdealArc>& arcs) {
  int maxLen = 0, maxDeg = 0;
  std::vector<Curve> curves;
  for (const auto& a : arcs) {
    maxLen = std::max(maxLen, static_cast<int>(a.walk.exits.size()));
    curves.push_back(curve_of(s, a));
  }
  for (const auto& e : l.ends)
    if (e.kind == LaminateEnd::Kind::Spiral) maxDeg = std::max(maxDeg, s.cornerCount(e.puncture));
  Spine spine(s, unroll(s, l, maxLen + 3 * maxDeg + 6));
  int last = spine.size() - 1;

  auto endObject = [&](int step, int slot, const LaminateEnd& e) {
    int side = slot / 2;
    if (e.kind == LaminateEnd::Kind::Boundary) return std::vector<Key>{spine.cornerKey(step, side), spine.cornerKey(step, mod3(side + 1))};
    return std::vector<Key>{spine.cornerKey(step, spiral_corner(side, e.sense))};
  };

  ShearSequence seq;
  for (const Lift& lift : spine.place(curves)) {
    Region r0 = region_of(lift.end[0].key), r1 = region_of(lift.end[1].key);
    if (r0 == Region::A && r1 == Region::B) seq.crossings.push_back({lift.curve, lift.end[0].key, lift.end[1].key, 0});
    else if (r0 == Region::B && r1 == Region::A) seq.crossings.push_back({lift.curve, lift.end[1].key, lift.end[0].key, 0});
  }
  std::sort(seq.crossings.begin(), seq.crossings.end(), [](const ShearCrossing& x, const ShearCrossing& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b > y.b;
  });

  std::vector<std::vector<Key>> objects;
  objects.push_back(endObject(0, spine.steps().front().in, l.ends[0]));
  for (const auto& c : seq.crossings) objects.push_back({c.a, c.b});
  objects.push_back(endObject(last, spine.steps().back().out, l.ends[1]));
  auto has = [](const std::vector<Key>& obj, const Key& k) { return std::find(obj.begin(), obj.end(), k) != obj.end(); };
  for (size_t i = 0; i + 1 < objects.size(); ++i) {
    bool share = false;
    for (const Key& k : objects[i]) share |= has(objects[i + 1], k);
    if (!share) seq.shears = false;
  }
  for (size_t k = 0; k < seq.crossings.size(); ++k) {
    ShearCrossing& c = seq.crossings[k];
    const auto& prev = objects[k];
    const auto& next = objects[k + 2];
    if (has(prev, c.a) && has(next, c.b)) c.contribution = 1;
    else if (has(prev, c.b) && has(next, c.a)) c.contribution = -1;
  }
  return seq;
}

std::vector<int> shear_vector_ideal(const SurfaceModel& s, const Laminate& l, const IdealTriangulation& r) {
  std::vector<int> v(r.arcs.size(), 0);
  for (const auto& c : shear_sequence(s, l, r.arcs).crossings) v[c.curve] += c.contribution;
  for (const auto& sf : r.selfFolded) {
    if (sf.folded < 0) continue;
    v[sf.folded] = 0;
    for (const auto& c : shear_sequence(s, reverse_spirals(s, l, sf.puncture), r.arcs).crossings)
      if (c.curve == sf.loop) v[sf.folded] += c.contribution;
  }
  return v;
}

bool shears_ideal(const SurfaceModel& s, const Laminate& l, const IdealTriangulation& r) {
  return shear_sequence(s, l, r.arcs).shears;
}

bool shears(const SurfaceModel& s, const Laminate& l, const PartialTaggedTriangulation& r) {
  return shears_ideal(s, retag(s, l, r.kappa), r.ideal);
}

std::vector<int> shear_vector(const SurfaceModel& s, const Laminate& l, const PartialTaggedTriangulation& r) {
  Laminate lr = retag(s, l, r.kappa);
  if (!shears_ideal(s, lr, r.ideal)) throw ShearError("laminate does not shear the partial triangulation");
  std::vector<int> iv = shear_vector_ideal(s, lr, r.ideal);
  std::vector<int> out;
  for (int i = 0; i < r.size(); ++i) out.push_back(iv[r.circ[i]]);
  return out;
}

}  // namespace tsurf
