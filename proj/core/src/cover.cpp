#include "tsurf/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tsurf {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

const Key kP{-1, 0};
const Key kQ{1, 0};

// Sub-level position of an exit slot relative to the entry side of an off-spine triangle.
int sub_position(int entrySide, int exitSlot) {
  if (exitSlot == side_slot(mod3(entrySide + 1))) return 1;
  if (exitSlot == corner_slot(mod3(entrySide + 2))) return 4;
  return 7;
}

}  // namespace

Region region_of(const Key& k) {
  switch (k.front()) {
    case -1: return Region::P;
    case 0: return Region::A;
    case 1: return Region::Q;
    case 2: return Region::B;
    default: return Region::PMinus;
  }
}

Key shifted(const Key& k, int eps) {
  if (k == kP && eps < 0) return Key{3};
  Key r = k;
  r.back() += eps;
  return r;
}

Curve curve_of(const SurfaceModel& s, const Walk& w) {
  if (!w.exits.empty()) return Curve::fromWalk(w);
  int side = w.endCorner == mod3(w.corner + 1) ? w.corner : w.endCorner;
  const Triangle& tr = s.tri(w.tri);
  if (tr.segment[side] >= 0) return Curve::segment(tr.segment[side]);
  return Curve::edge(tr.edge[side]);
}

Walk walk_of(const SurfaceModel& s, const Curve& c) {
  switch (c.kind) {
    case Curve::Kind::Walk: return c.walk;
    case Curve::Kind::Edge: return edge_walk(s, c.id);
    case Curve::Kind::Segment: {
      const BoundarySegment& b = s.segments()[c.id];
      return Walk{b.tri, b.side, {}, mod3(b.side + 1)};
    }
  }
  return {};
}

Spine::Spine(const SurfaceModel& s, std::vector<SpineStep> steps) : s_(&s), steps_(std::move(steps)) {
  int n = size();
  int last = n - 1;
  cornerKeys_.assign(n, {});
  sideKeys_.assign(n, {});
  std::vector<std::array<Key, 3>> groupKey(n);
  for (int i = 0; i < n; ++i) {
    const SpineStep& st = steps_[i];
    int r = 0;
    for (int slot = (st.in + 1) % 6; slot != st.out; slot = (slot + 1) % 6, ++r) {
      Key k{0, i, 3 * r + 1};
      if (is_side_slot(slot)) sideKeys_[i][slot / 2] = k; else groupKey[i][slot / 2] = k;
    }
    r = 0;
    for (int slot = (st.out + 1) % 6; slot != st.in; slot = (slot + 1) % 6, ++r) {
      Key k{2, last - i, 3 * r + 1};
      if (is_side_slot(slot)) sideKeys_[i][slot / 2] = k; else groupKey[i][slot / 2] = k;
    }
  }
  // Identify corners shared by consecutive spine triangles.
  std::vector<int> parent(3 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 0; i + 1 < n; ++i) {
    int so = steps_[i].out / 2, si = steps_[i + 1].in / 2;
    unite(3 * i + so, 3 * (i + 1) + mod3(si + 1));
    unite(3 * i + mod3(so + 1), 3 * (i + 1) + si);
  }
  std::map<int, Key> classKey;
  if (!is_side_slot(steps_[0].in)) classKey[find(steps_[0].in / 2)] = kP;
  if (!is_side_slot(steps_[last].out)) classKey[find(3 * last + steps_[last].out / 2)] = kQ;
  cornerClass_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < 3; ++c) {
      int cl = find(3 * i + c);
      cornerClass_[i][c] = cl;
      auto it = classKey.find(cl);
      if (it == classKey.end()) it = classKey.emplace(cl, groupKey[i][c]).first;
      cornerKeys_[i][c] = it->second;
    }
  }
}

void Spine::placeWalk(int idx, const Walk& w0, std::vector<Lift>& out) const {
  const SurfaceModel& s = *s_;
  int n = size();
  for (int orient = 0; orient < 2; ++orient) {
    Walk w = orient == 0 ? w0 : reversed(s, w0);
    auto g = walk_steps(s, w);
    int m = static_cast<int>(g.size()) - 1;
    std::vector<int> gin(m + 1), gout(m + 1);
    for (int j = 0; j <= m; ++j) {
      gin[j] = j == 0 ? corner_slot(w.corner) : side_slot(g[j].in);
      gout[j] = j == m ? corner_slot(w.endCorner) : side_slot(g[j].out);
    }
    for (int i = 0; i < n; ++i) {
      const SpineStep& sp = steps_[i];
      for (int j = 0; j <= m; ++j) {
        if (g[j].tri != sp.tri) continue;
        if (is_side_slot(gin[j]) && (gin[j] == sp.in || gin[j] == sp.out)) continue;
        int k = 0;
        while (i + k < n - 1 && j + k < m && gout[j + k] == steps_[i + k].out) ++k;
        int i2 = i + k, j2 = j + k;
        if (is_side_slot(gout[j2]) && (gout[j2] == steps_[i2].out || gout[j2] == steps_[i2].in)) continue;
        Lift lift;
        lift.curve = idx;
        LiftEnd a, b;
        // Backward end.
        a.step = i;
        if (j == 0) {
          a.key = cornerKey(i, w.corner);
          a.corner = w.corner;
          a.vertex = s.tri(g[0].tri).vertex[w.corner];
        } else {
          int side = g[j].in;
          a.key = sideKey(i, side);
          a.exits.push_back(side);
          for (int x = j - 1; x >= 0; --x) {
            int exitSlot = x == 0 ? corner_slot(w.corner) : side_slot(g[x].in);
            a.key.push_back(sub_position(g[x].out, exitSlot));
            if (x > 0) a.exits.push_back(g[x].in);
          }
          a.corner = w.corner;
          a.vertex = s.tri(g[0].tri).vertex[w.corner];
        }
        // Forward end.
        b.step = i2;
        if (j2 == m) {
          b.key = cornerKey(i2, w.endCorner);
          b.corner = w.endCorner;
        } else {
          int side = g[j2].out;
          b.key = sideKey(i2, side);
          b.exits.push_back(side);
          for (int x = j2 + 1; x <= m; ++x) {
            int exitSlot = x == m ? corner_slot(w.endCorner) : side_slot(g[x].out);
            b.key.push_back(sub_position(g[x].in, exitSlot));
            if (x < m) b.exits.push_back(g[x].out);
          }
          b.corner = w.endCorner;
        }
        b.vertex = s.tri(g[m].tri).vertex[w.endCorner];
        if (orient == 0) {
          lift.end[0] = std::move(a);
          lift.end[1] = std::move(b);
        } else {
          lift.end[0] = std::move(b);
          lift.end[1] = std::move(a);
        }
        out.push_back(std::move(lift));
      }
    }
  }
}

void Spine::placeSides(int idx, const Curve& c, std::vector<Lift>& out) const {
  const SurfaceModel& s = *s_;
  for (int i = 0; i < size(); ++i) {
    const Triangle& tr = s.tri(steps_[i].tri);
    for (int side = 0; side < 3; ++side) {
      bool match = c.kind == Curve::Kind::Edge ? tr.edge[side] == c.id : tr.segment[side] == c.id;
      if (!match) continue;
      int startCorner = side;
      if (c.kind == Curve::Kind::Edge) {
        const EdgeRecord& er = s.edges()[c.id];
        if (!(er.tri == steps_[i].tri && er.side == side)) startCorner = mod3(side + 1);
      }
      int endCorner = startCorner == side ? mod3(side + 1) : side;
      Lift lift;
      lift.curve = idx;
      lift.end[0] = {cornerKey(i, startCorner), i, {}, startCorner, tr.vertex[startCorner]};
      lift.end[1] = {cornerKey(i, endCorner), i, {}, endCorner, tr.vertex[endCorner]};
      out.push_back(std::move(lift));
    }
  }
}

std::vector<Lift> Spine::place(const std::vector<Curve>& curves) const {
  std::vector<Lift> raw;
  for (int idx = 0; idx < static_cast<int>(curves.size()); ++idx) {
    const Curve& c = curves[idx];
    if (c.kind == Curve::Kind::Walk) placeWalk(idx, c.walk, raw); else placeSides(idx, c, raw);
  }
  std::vector<Lift> result;
  std::set<std::tuple<int, Key, Key>> seen;
  for (auto& l : raw) {
    Key lo = std::min(l.end[0].key, l.end[1].key), hi = std::max(l.end[0].key, l.end[1].key);
    if (seen.insert({l.curve, lo, hi}).second) result.push_back(std::move(l));
  }
  return result;
}

LiftEnd Spine::startEnd() const {
  int c = steps_.front().in / 2;
  return {kP, 0, {}, c, s_->tri(steps_.front().tri).vertex[c]};
}

LiftEnd Spine::finishEnd() const {
  int c = steps_.back().out / 2;
  return {kQ, size() - 1, {}, c, s_->tri(steps_.back().tri).vertex[c]};
}

Walk Spine::walkBetween(const LiftEnd& a, const LiftEnd& b) const {
  const SurfaceModel& s = *s_;
  // Triangles along a's sub-path, to reverse it.
  std::vector<int> tris{steps_[a.step].tri};
  std::vector<int> entries;
  for (int e : a.exits) {
    entries.push_back(s.tri(tris.back()).glueSide[e]);
    tris.push_back(s.tri(tris.back()).glueTri[e]);
  }
  Walk w;
  w.tri = tris.back();
  w.corner = a.corner;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) w.exits.push_back(*it);
  if (a.step < b.step) {
    for (int i = a.step; i < b.step; ++i) w.exits.push_back(steps_[i].out / 2);
  } else {
    for (int i = a.step; i > b.step; --i) w.exits.push_back(steps_[i].in / 2);
  }
  w.exits.insert(w.exits.end(), b.exits.begin(), b.exits.end());
  w.endCorner = b.corner;
  return w;
}

std::vector<SpineStep> walk_spine(const SurfaceModel& s, const Walk& w) {
  auto g = walk_steps(s, w);
  std::vector<SpineStep> steps;
  int m = static_cast<int>(g.size()) - 1;
  for (int j = 0; j <= m; ++j) {
    steps.push_back({g[j].tri, j == 0 ? corner_slot(w.corner) : side_slot(g[j].in),
                     j == m ? corner_slot(w.endCorner) : side_slot(g[j].out)});
  }
  return steps;
}

void extend_spine_fan(const SurfaceModel& s, std::vector<SpineStep>& steps, bool atEnd, int dir) {
  SpineStep& edge = atEnd ? steps.back() : steps.front();
  int slot = atEnd ? edge.out : edge.in;
  Corner cur{edge.tri, slot / 2};
  int v = s.tri(cur.tri).vertex[cur.corner];
  int limit = s.isPuncture(v) ? s.cornerCount(v) + 1 : 1 << 30;
  std::vector<SpineStep> added;
  for (int count = 0; count < limit; ++count) {
    int side = rotation_exit_side(cur, dir);
    if (s.isBoundarySide(cur.tri, side)) break;
    Corner next = rotate_corner(s, cur, dir);
    int entry = s.tri(cur.tri).glueSide[side];
    if (atEnd) {
      steps.back().out = side_slot(side);
      steps.push_back({next.tri, side_slot(entry), corner_slot(next.corner)});
    } else {
      if (added.empty()) steps.front().in = side_slot(side); else added.back().in = side_slot(side);
      added.push_back({next.tri, corner_slot(next.corner), side_slot(entry)});
    }
    cur = next;
  }
  if (!atEnd && !added.empty()) steps.insert(steps.begin(), added.rbegin(), added.rend());
}

void reduce_spine(std::vector<SpineStep>& steps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 1; i + 1 < steps.size(); ++i) {
      if (steps[i].in != steps[i].out) continue;
      SpineStep merged{steps[i - 1].tri, steps[i - 1].in, steps[i + 1].out};
      steps[i - 1] = merged;
      steps.erase(steps.begin() + static_cast<long>(i), steps.begin() + static_cast<long>(i) + 2);
      changed = true;
      break;
    }
  }
}

FanHit first_at_vertex(const std::vector<Lift>& lifts, const Key& vertexKey, Region r, bool smallest) {
  FanHit best;
  const Key* bestKey = nullptr;
  for (int i = 0; i < static_cast<int>(lifts.size()); ++i) {
    for (int e = 0; e < 2; ++e) {
      if (lifts[i].end[e].key != vertexKey) continue;
      const Key& other = lifts[i].end[1 - e].key;
      if (region_of(other) != r) continue;
      if (!bestKey || (smallest ? other < *bestKey : other > *bestKey)) {
        bestKey = &other;
        best = {i, e};
      }
    }
  }
  return best;
}

}  // namespace tsurf
