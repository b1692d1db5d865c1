#include "tsurf/triangulation.hpp"

#include <algorithm>
#include <numeric>

namespace tsurf {

int PartialTaggedTriangulation::indexOf(const TaggedArc& a) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
  if (it == arcs.end() || !(*it == a)) return -1;
  return static_cast<int>(it - arcs.begin());
}

bool compatible(const SurfaceModel& s, const TaggedArc& a, const TaggedArc& b) {
  return intersection_number(s, a, b) == 0;
}

std::map<int, int> compute_kappa(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  std::map<int, std::pair<bool, bool>> seen;  // (has +1, has -1)
  for (const auto& a : arcs) {
    ArcEnds e = arc_ends(s, a.walk);
    int v[2] = {e.v0, e.v1};
    for (int i = 0; i < 2; ++i) {
      if (!s.isPuncture(v[i])) continue;
      auto& f = seen[v[i]];
      (a.tag[i] > 0 ? f.first : f.second) = true;
    }
  }
  std::map<int, int> kappa;
  for (auto& [p, f] : seen) kappa[p] = f.first && f.second ? 0 : (f.first ? 1 : -1);
  return kappa;
}

IdealArc circ_arc(const SurfaceModel& s, const TaggedArc& a, const std::map<int, int>& kappa) {
  ArcEnds e = arc_ends(s, a.walk);
  int v[2] = {e.v0, e.v1};
  for (int i = 0; i < 2; ++i) {
    if (!s.isPuncture(v[i]) || a.tag[i] > 0) continue;
    auto it = kappa.find(v[i]);
    if (it != kappa.end() && it->second == 0) return enclosing_loop(s, underlying(a), i);
  }
  return underlying(a);
}

IdealTriangulation make_ideal(const SurfaceModel& s, std::vector<IdealArc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  IdealTriangulation r;
  r.arcs = arcs;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    int p = enclosed_puncture(s, arcs[i]);
    if (p < 0) continue;
    SelfFolded sf;
    sf.loop = i;
    sf.puncture = p;
    for (int j = 0; j < static_cast<int>(arcs.size()); ++j) {
      ArcEnds e = arc_ends(s, arcs[j].walk);
      int pend = e.v1 == p ? 1 : (e.v0 == p ? 0 : -1);
      if (pend < 0 || e.v0 == e.v1) continue;
      if (enclosing_loop(s, arcs[j], pend) == arcs[i]) {
        sf.folded = j;
        break;
      }
    }
    r.selfFolded.push_back(sf);
  }
  return r;
}

PartialTaggedTriangulation make_partial(const SurfaceModel& s, std::vector<TaggedArc> arcs, bool check) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (check) {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (!compatible(s, arcs[i], arcs[j]))
          throw TriangulationError(TriangulationError::Kind::Incompatible,
                                   "arcs " + arc_label(s, arcs[j]) + " and " + arc_label(s, arcs[i]) + " intersect");
  }
  PartialTaggedTriangulation r;
  r.arcs = std::move(arcs);
  r.kappa = compute_kappa(s, r.arcs);
  std::vector<IdealArc> circ;
  for (const auto& a : r.arcs) circ.push_back(circ_arc(s, a, r.kappa));
  r.ideal = make_ideal(s, circ);
  for (const auto& c : circ)
    r.circ.push_back(static_cast<int>(std::lower_bound(r.ideal.arcs.begin(), r.ideal.arcs.end(), c) - r.ideal.arcs.begin()));
  return r;
}

std::vector<TaggedArc> tagged_form(const SurfaceModel& s, const IdealTriangulation& r) {
  std::vector<TaggedArc> out;
  for (int i = 0; i < static_cast<int>(r.arcs.size()); ++i) {
    auto sf = std::find_if(r.selfFolded.begin(), r.selfFolded.end(), [&](const SelfFolded& f) { return f.loop == i; });
    if (sf == r.selfFolded.end()) {
      out.push_back(plain(s, r.arcs[i]));
      continue;
    }
    if (sf->folded < 0)
      throw TriangulationError(TriangulationError::Kind::FoldedClosureViolated,
                               "loop around a puncture without its folded side");
    TaggedArc t = plain(s, r.arcs[sf->folded]);
    ArcEnds e = arc_ends(s, t.walk);
    t.tag[e.v0 == sf->puncture ? 0 : 1] = -1;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TaggedArc retag(const TaggedArc& a, const SurfaceModel& s, const std::map<int, int>& kappa) {
  ArcEnds e = arc_ends(s, a.walk);
  int v[2] = {e.v0, e.v1};
  TaggedArc r = a;
  for (int i = 0; i < 2; ++i) {
    if (!s.isPuncture(v[i])) continue;
    auto it = kappa.find(v[i]);
    if (it != kappa.end() && it->second < 0) r.tag[i] = -r.tag[i];
  }
  return canonical_arc(s, r.walk, r.tag);
}

bool is_admissible(const SurfaceModel& s, const IdealTriangulation& r) {
  for (int p = 0; p < s.numPunctures(); ++p) {
    int v = s.punctureVertex(p);
    bool ok = std::any_of(r.selfFolded.begin(), r.selfFolded.end(),
                          [&](const SelfFolded& f) { return f.puncture == v && f.folded >= 0; });
    if (!ok) return false;
  }
  return true;
}

bool connects_to_boundary(const SurfaceModel& s, const std::vector<TaggedArc>& r) {
  int n = static_cast<int>(r.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<ArcEnds> ends;
  for (const auto& a : r) ends.push_back(arc_ends(s, a.walk));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      int a[2] = {ends[i].v0, ends[i].v1}, b[2] = {ends[j].v0, ends[j].v1};
      bool share = false;
      for (int x : a)
        for (int y : b) share |= x == y;
      if (share) parent[find(i)] = find(j);
    }
  std::vector<bool> reaches(n, false);
  for (int i = 0; i < n; ++i)
    if (!s.isPuncture(ends[i].v0) || !s.isPuncture(ends[i].v1)) reaches[find(i)] = true;
  for (int i = 0; i < n; ++i)
    if (!reaches[find(i)]) return false;
  return true;
}

}  // namespace tsurf
