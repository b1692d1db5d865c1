#include "tsurf/walk.hpp"

#include <algorithm>

namespace tsurf {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Corner of the neighbour across side `side` that coincides with corner `c` of the
// current triangle (c must be an endpoint of the side).
int corner_across(const SurfaceModel& s, int t, int side, int c) {
  int gs = s.tri(t).glueSide[side];
  return c == side ? mod3(gs + 1) : gs;
}

struct Node {
  int tri;
  int in;  // entry side, -1 for the first node
};

}  // namespace

std::vector<WalkStep> walk_steps(const SurfaceModel& s, const Walk& w) {
  std::vector<WalkStep> steps;
  steps.reserve(w.exits.size() + 1);
  int t = w.tri, in = -1;
  for (int e : w.exits) {
    steps.push_back({t, in, e});
    in = s.tri(t).glueSide[e];
    t = s.tri(t).glueTri[e];
  }
  steps.push_back({t, in, -1});
  return steps;
}

int last_triangle(const SurfaceModel& s, const Walk& w) {
  int t = w.tri;
  for (int e : w.exits) t = s.tri(t).glueTri[e];
  return t;
}

int start_vertex(const SurfaceModel& s, const Walk& w) { return s.tri(w.tri).vertex[w.corner]; }

int end_vertex(const SurfaceModel& s, const Walk& w) { return s.tri(last_triangle(s, w)).vertex[w.endCorner]; }

Walk reversed(const SurfaceModel& s, const Walk& w) {
  auto steps = walk_steps(s, w);
  Walk r;
  r.tri = steps.back().tri;
  r.corner = w.endCorner;
  for (int i = static_cast<int>(steps.size()) - 1; i > 0; --i) r.exits.push_back(steps[i].in);
  r.endCorner = w.corner;
  return r;
}

void check_walk(const SurfaceModel& s, const Walk& w) {
  int nt = static_cast<int>(s.triangles().size());
  if (w.tri < 0 || w.tri >= nt || w.corner < 0 || w.corner > 2 || w.endCorner < 0 || w.endCorner > 2)
    throw ArcError(ArcError::Kind::InvalidWalk, "walk refers to a missing triangle or corner");
  int t = w.tri;
  for (int e : w.exits) {
    if (e < 0 || e > 2) throw ArcError(ArcError::Kind::InvalidWalk, "walk exit side out of range");
    if (s.isBoundarySide(t, e)) throw ArcError(ArcError::Kind::InvalidWalk, "walk crosses the boundary");
    t = s.tri(t).glueTri[e];
  }
}

Walk edge_walk(const SurfaceModel& s, int e, bool reverse) {
  const EdgeRecord& er = s.edges()[e];
  Walk w;
  w.tri = er.tri;
  w.corner = reverse ? mod3(er.side + 1) : er.side;
  w.endCorner = reverse ? er.side : mod3(er.side + 1);
  return w;
}

Reduction reduce_walk(const SurfaceModel& s, const Walk& w) {
  check_walk(s, w);
  // Cancel backtracks with a stack of visited triangles.
  std::vector<Node> path{{w.tri, -1}};
  for (int e : w.exits) {
    const Node& cur = path.back();
    if (e == cur.in) {
      path.pop_back();
    } else {
      const Triangle& tr = s.tri(cur.tri);
      path.push_back({tr.glueTri[e], tr.glueSide[e]});
    }
  }
  int startCorner = w.corner, endCorner = w.endCorner;
  // Exit side of path[i] towards path[i+1].
  auto exitOf = [&](size_t i) { return s.tri(path[i + 1].tri).glueSide[path[i + 1].in]; };
  size_t head = 0;
  bool changed = true;
  while (changed && path.size() - head > 1) {
    changed = false;
    int e0 = exitOf(head);
    if (e0 == startCorner || e0 == mod3(startCorner - 1)) {
      startCorner = corner_across(s, path[head].tri, e0, startCorner);
      ++head;
      changed = true;
      if (path.size() - head <= 1) break;
    }
    const Node& last = path.back();
    int j = last.in;
    if (j == endCorner || j == mod3(endCorner - 1)) {
      endCorner = corner_across(s, last.tri, j, endCorner);
      path.pop_back();
      changed = true;
    }
  }
  Reduction r;
  if (path.size() - head == 1) {
    int t = path[head].tri;
    if (startCorner == endCorner) {
      r.status = Reduction::Status::Null;
      return r;
    }
    int side = endCorner == mod3(startCorner + 1) ? startCorner : endCorner;
    bool forward = endCorner == mod3(startCorner + 1);
    if (s.isBoundarySide(t, side)) {
      r.status = Reduction::Status::Boundary;
      r.id = s.tri(t).segment[side];
      return r;
    }
    int e = s.tri(t).edge[side];
    const EdgeRecord& er = s.edges()[e];
    bool primary = er.tri == t && er.side == side;
    r.status = Reduction::Status::Edge;
    r.id = e;
    r.walk = edge_walk(s, e, primary ? !forward : forward);
    return r;
  }
  r.status = Reduction::Status::Arc;
  r.walk.tri = path[head].tri;
  r.walk.corner = startCorner;
  for (size_t i = head; i + 1 < path.size(); ++i) r.walk.exits.push_back(exitOf(i));
  r.walk.endCorner = endCorner;
  return r;
}

int rotation_exit_side(Corner c, int dir) { return dir > 0 ? c.corner : mod3(c.corner - 1); }

Corner rotate_corner(const SurfaceModel& s, Corner c, int dir) {
  int side = rotation_exit_side(c, dir);
  const Triangle& tr = s.tri(c.tri);
  if (tr.glueTri[side] < 0) return {-1, -1};
  return {tr.glueTri[side], corner_across(s, c.tri, side, c.corner)};
}

Walk edge_walk_for_fans(const SurfaceModel& s, const Walk& w, int senseStart, int senseEnd) {
  if (!w.exits.empty()) return w;
  int side = w.endCorner == mod3(w.corner + 1) ? w.corner : w.endCorner;
  if (rotation_exit_side({w.tri, w.corner}, senseStart) != side) return w;
  if (rotation_exit_side({w.tri, w.endCorner}, senseEnd) != side) return w;
  const Triangle& tr = s.tri(w.tri);
  int t2 = tr.glueTri[side];
  return Walk{t2, corner_across(s, w.tri, side, w.corner), {}, corner_across(s, w.tri, side, w.endCorner)};
}

Walk slide_start_along_boundary(const SurfaceModel& s, const Walk& w, int dir) {
  // dir = -1 rotates anticlockwise (towards the predecessor), dir = +1 clockwise.
  Corner cur{w.tri, w.corner};
  std::vector<int> back;
  for (;;) {
    int side = rotation_exit_side(cur, dir);
    if (s.isBoundarySide(cur.tri, side)) break;
    Corner next = rotate_corner(s, cur, dir);
    back.push_back(s.tri(cur.tri).glueSide[side]);
    cur = next;
  }
  Walk r;
  r.tri = cur.tri;
  r.corner = mod3(cur.corner + (dir > 0 ? 1 : -1));
  r.exits.assign(back.rbegin(), back.rend());
  r.exits.insert(r.exits.end(), w.exits.begin(), w.exits.end());
  r.endCorner = w.endCorner;
  return r;
}

Walk enclose_walk(const SurfaceModel& s, const Walk& w) {
  int tm = last_triangle(s, w);
  int p = s.tri(tm).vertex[w.endCorner];
  int dir = 1;
  if (w.exits.empty()) {
    // Turn away from the side joining the two ends.
    dir = w.corner == mod3(w.endCorner + 1) ? -1 : 1;
  }
  Walk loop;
  loop.tri = w.tri;
  loop.corner = w.corner;
  loop.exits = w.exits;
  Corner cur{tm, w.endCorner};
  for (int i = 0; i < s.cornerCount(p); ++i) {
    loop.exits.push_back(rotation_exit_side(cur, dir));
    cur = rotate_corner(s, cur, dir);
  }
  Walk back = reversed(s, w);
  loop.exits.insert(loop.exits.end(), back.exits.begin(), back.exits.end());
  loop.endCorner = w.corner;
  return loop;
}

namespace {

struct CycleItem {
  int tri, in, out;
};

// Common corner of two distinct sides of a triangle.
int common_corner(int a, int b) {
  if (mod3(a + 1) == b) return b;
  return a;
}

// Reduces a closed dual path by cancelling backtracks cyclically.
std::vector<CycleItem> reduce_cycle(std::vector<CycleItem> c) {
  bool changed = true;
  while (changed && !c.empty()) {
    changed = false;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].in != c[i].out) continue;
      if (c.size() <= 2) return {};
      size_t n = c.size();
      size_t prev = (i + n - 1) % n, next = (i + 1) % n;
      CycleItem merged{c[prev].tri, c[prev].in, c[next].out};
      std::vector<CycleItem> d;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == next) continue;
        d.push_back(k == prev ? merged : c[k]);
      }
      c = std::move(d);
      changed = true;
      break;
    }
  }
  return c;
}

// True when the closed path turns exactly once around a puncture.
bool is_puncture_turn(const SurfaceModel& s, const std::vector<CycleItem>& c, int* puncture) {
  if (c.empty()) return false;
  int sense = 0;
  int v = -1;
  for (const auto& it : c) {
    int k = common_corner(it.in, it.out);
    int dirHere = it.out == k ? 1 : -1;
    if (sense == 0) sense = dirHere;
    if (sense != dirHere) return false;
    int vert = s.tri(it.tri).vertex[k];
    if (v < 0) v = vert;
    if (vert != v) return false;
  }
  if (!s.isPuncture(v) || static_cast<int>(c.size()) != s.cornerCount(v)) return false;
  if (puncture) *puncture = v;
  return true;
}

}  // namespace

bool cuts_out_punctured_monogon(const SurfaceModel& s, const Walk& w, int* puncture) {
  auto steps = walk_steps(s, w);
  int q = start_vertex(s, w);
  if (end_vertex(s, w) != q) return false;
  Corner target{w.tri, w.corner};
  Corner from{steps.back().tri, w.endCorner};
  int deg = s.cornerCount(q);
  // Candidate closing rotations from the end corner back to the start corner.
  std::vector<std::pair<int, std::vector<int>>> closings;
  for (int dir : {1, -1}) {
    Corner cur = from;
    std::vector<int> sides;
    bool found = cur == target && dir == 1;
    while (!found && static_cast<int>(sides.size()) < deg) {
      int side = rotation_exit_side(cur, dir);
      if (s.isBoundarySide(cur.tri, side)) break;
      sides.push_back(side);
      cur = rotate_corner(s, cur, dir);
      found = cur == target;
    }
    if (found) closings.push_back({dir, sides});
  }
  for (const auto& [dir, sides] : closings) {
    std::vector<CycleItem> cyc;
    for (const auto& st : steps) cyc.push_back({st.tri, st.in, st.out});
    if (sides.empty()) {
      if (cyc.size() < 2) continue;
      cyc.front().in = cyc.back().in;
      cyc.pop_back();
    } else {
      cyc.back().out = sides.front();
      Corner r = from;
      for (size_t i = 0; i < sides.size(); ++i) {
        int in = s.tri(r.tri).glueSide[sides[i]];
        r = rotate_corner(s, r, dir);
        if (i + 1 < sides.size()) {
          cyc.push_back({r.tri, in, sides[i + 1]});
        } else {
          cyc.front().in = in;
        }
      }
    }
    auto red = reduce_cycle(cyc);
    if (is_puncture_turn(s, red, puncture)) return true;
  }
  return false;
}

}  // namespace tsurf
