#include "tsurf/enumerate.hpp"

#include <algorithm>
#include <set>

namespace tsurf {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Triangles visited by a walk prefix: triangle m is entered through side
// in[m] (none for the start) and left through side out[m]; the last triangle
// has no exit yet.
struct Prefix {
  std::vector<int> tri, in, out;
  int last() const { return static_cast<int>(tri.size()) - 1; }
};

// Position of a strand leaving a triangle, relative to its direction of travel.
enum Turn { kLeft = 0, kMiddle = 1, kRight = 2, kUnknown = 3 };

Turn turn_of(int entry, int exit) { return mod3(exit - entry) == 1 ? kRight : kLeft; }

Turn forward_turn(const Prefix& p, int m) {
  if (m >= p.last()) return kUnknown;
  return turn_of(p.in[m], p.out[m]);
}

Turn backward_turn(const Prefix& p, int m) { return m == 0 ? kMiddle : turn_of(p.out[m], p.in[m]); }

// +1 when the first strand lies to the left of the second, -1 when to the
// right, 0 when the prefix does not decide it yet.
template <class A, class B>
int side_order(A first, B second) {
  for (int m = 0;; ++m) {
    Turn a = first(m), b = second(m);
    if (a == kUnknown || b == kUnknown) return 0;
    if (a != b) return a < b ? 1 : -1;
    if (a == kMiddle) return 0;
  }
}

// True when two passes of the prefix through one edge are forced to cross
// whatever the continuation: their order read forwards and backwards disagree.
bool forced_crossing(const SurfaceModel& s, const Prefix& p) {
  int n = p.last();
  (void)s;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int lhs, rhs;
      if (p.tri[j] == p.tri[i] && p.out[j] == p.out[i]) {
        lhs = side_order([&](int m) { return forward_turn(p, i + 1 + m); },
                         [&](int m) { return forward_turn(p, j + 1 + m); });
        rhs = side_order([&](int m) { return backward_turn(p, i - m); }, [&](int m) { return backward_turn(p, j - m); });
      } else if (p.tri[j] == p.tri[i + 1] && p.out[j] == p.in[i + 1]) {
        lhs = side_order([&](int m) { return forward_turn(p, i + 1 + m); },
                         [&](int m) { return backward_turn(p, j - m); });
        rhs = side_order([&](int m) { return backward_turn(p, i - m); },
                         [&](int m) { return forward_turn(p, j + 1 + m); });
      } else {
        continue;
      }
      if (lhs != 0 && lhs == rhs) return true;
    }
  }
  return false;
}

// Calls f on every reduced walk of positive length at most maxLen, skipping
// walks with a self-crossing that is already forced by a shorter prefix.
template <class F>
void for_each_reduced_walk(const SurfaceModel& s, int maxLen, F&& f) {
  int nt = static_cast<int>(s.triangles().size());
  Walk w;
  Prefix p;
  auto rec = [&](auto&& self, int t, int in) -> void {
    p.tri.push_back(t);
    p.in.push_back(in);
    p.out.push_back(-1);
    if (!forced_crossing(s, p)) {
      w.endCorner = mod3(in + 2);
      f(w);
      if (static_cast<int>(w.exits.size()) < maxLen) {
        for (int d : {1, 2}) {
          int side = mod3(in + d);
          if (s.isBoundarySide(t, side)) continue;
          w.exits.push_back(side);
          p.out.back() = side;
          self(self, s.tri(t).glueTri[side], s.tri(t).glueSide[side]);
          w.exits.pop_back();
        }
      }
    }
    p.tri.pop_back();
    p.in.pop_back();
    p.out.pop_back();
  };
  for (int t = 0; t < nt; ++t) {
    for (int c = 0; c < 3; ++c) {
      int side = mod3(c + 1);
      if (s.isBoundarySide(t, side)) continue;
      w.tri = t;
      w.corner = c;
      w.exits = {side};
      p.tri = {t};
      p.in = {-1};
      p.out = {side};
      rec(rec, s.tri(t).glueTri[side], s.tri(t).glueSide[side]);
    }
  }
}

}  // namespace

std::vector<IdealArc> enumerate_ideal_arcs(const SurfaceModel& s, int maxCrossings) {
  std::set<IdealArc> found;
  for (int e = 0; e < s.rank(); ++e) found.insert(IdealArc{std::min(edge_walk(s, e), edge_walk(s, e, true))});
  for_each_reduced_walk(s, maxCrossings, [&](const Walk& w) {
    if (w > reversed(s, w)) return;
    try {
      found.insert(normalize_ideal(s, w));
    } catch (const ArcError&) {
    }
  });
  return {found.begin(), found.end()};
}

std::vector<TaggedArc> enumerate_tagged_arcs(const SurfaceModel& s, int maxCrossings) {
  std::set<TaggedArc> found;
  for (const IdealArc& a : enumerate_ideal_arcs(s, maxCrossings)) {
    ArcEnds e = arc_ends(s, a.walk);
    std::vector<int> t0 = s.isPuncture(e.v0) ? std::vector<int>{1, -1} : std::vector<int>{0};
    std::vector<int> t1 = s.isPuncture(e.v1) ? std::vector<int>{1, -1} : std::vector<int>{0};
    for (int x : t0) {
      for (int y : t1) {
        try {
          found.insert(normalize(s, a.walk, {x, y}));
        } catch (const ArcError&) {
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<TaggedArc> enumerate_stable(const SurfaceModel& s, const std::function<bool(const TaggedArc&)>& keep,
                                        int startBound, int margin, int maxBound, int* usedBound) {
  auto collect = [&](int bound) {
    std::vector<TaggedArc> r;
    for (auto& a : enumerate_tagged_arcs(s, bound))
      if (keep(a)) r.push_back(std::move(a));
    return r;
  };
  int bound = startBound;
  auto cur = collect(bound);
  for (;;) {
    int next = std::min(bound + margin, maxBound);
    if (next == bound) break;
    auto more = collect(next);
    if (more.size() == cur.size()) break;
    bound = next;
    cur = std::move(more);
  }
  if (usedBound) *usedBound = bound;
  return cur;
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, std::vector<int> P, std::vector<int> X) -> void {
    if (P.empty()) {
      if (X.empty()) {
        auto c = current;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    int pivot = P.front();
    size_t best = 0;
    for (int u : P) {
      size_t cnt = std::count_if(P.begin(), P.end(), [&](int v) { return adj[u][v]; });
      if (cnt > best) best = cnt, pivot = u;
    }
    std::vector<int> cand;
    for (int v : P)
      if (!adj[pivot][v]) cand.push_back(v);
    for (int v : cand) {
      std::vector<int> P2, X2;
      for (int u : P)
        if (adj[v][u]) P2.push_back(u);
      for (int u : X)
        if (adj[v][u]) X2.push_back(u);
      current.push_back(v);
      self(self, P2, X2);
      current.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  rec(rec, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tsurf
