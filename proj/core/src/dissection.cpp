#include "tsurf/dissection.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "tsurf/enumerate.hpp"

namespace tsurf {

namespace {

bool contains(const std::vector<TaggedArc>& sorted, const TaggedArc& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

struct Crossing {
  Key a, b;
};

}  // namespace

bool is_standard(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  return shears(s, elementary_laminate(s, d), r);
}

bool is_costandard(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  return shears(s, co_elementary_laminate(s, d), r);
}

bool is_standard_geometric(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  TaggedArc dr = retag(d, s, r.kappa);
  std::vector<TaggedArc> rx = tagged_form(s, r.ideal);
  if (contains(rx, dr)) return true;
  ArcEnds e = arc_ends(s, dr.walk);
  if (s.isPuncture(e.v0) && s.isPuncture(e.v1) && contains(rx, tagged_rotation(s, dr, 1))) return true;

  // Rotation sense in which the first neighbour at each end is taken.
  auto senseAt = [&](int v, int tag) { return s.isPuncture(v) && tag < 0 ? kAnticlockwise : kClockwise; };
  int senseP = senseAt(e.v0, dr.tag[0]), senseQ = senseAt(e.v1, dr.tag[1]);
  std::vector<SpineStep> steps = walk_spine(s, edge_walk_for_fans(s, dr.walk, senseP, senseQ));
  extend_spine_fan(s, steps, true, senseQ);
  extend_spine_fan(s, steps, false, senseP);
  Spine spine(s, std::move(steps));
  std::vector<Curve> walls;
  for (const auto& a : r.ideal.arcs) walls.push_back(curve_of(s, a));
  int numArcs = static_cast<int>(walls.size());
  for (int b = 0; b < static_cast<int>(s.segments().size()); ++b) walls.push_back(Curve::segment(b));
  auto lifts = spine.place(walls);

  bool acwP = senseP == kAnticlockwise, acwQ = senseQ == kAnticlockwise;
  LiftEnd p = spine.startEnd(), q = spine.finishEnd();
  FanHit hp = first_at_vertex(lifts, p.key, acwP ? Region::B : Region::A, acwP);
  FanHit hq = first_at_vertex(lifts, q.key, acwQ ? Region::A : Region::B, acwQ);
  if (hp.lift < 0 || hq.lift < 0) return false;
  const Key& zp = lifts[hp.lift].end[1 - hp.nearEnd].key;
  const Key& zq = lifts[hq.lift].end[1 - hq.nearEnd].key;

  std::vector<Crossing> cross;
  for (const Lift& l : lifts) {
    if (l.curve >= numArcs) continue;
    Region r0 = region_of(l.end[0].key), r1 = region_of(l.end[1].key);
    if (r0 == Region::A && r1 == Region::B) cross.push_back({l.end[0].key, l.end[1].key});
    else if (r0 == Region::B && r1 == Region::A) cross.push_back({l.end[1].key, l.end[0].key});
  }
  if (cross.empty()) return zp == zq;
  std::sort(cross.begin(), cross.end(), [](const Crossing& x, const Crossing& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b > y.b;
  });
  for (size_t i = 0; i + 1 < cross.size(); ++i) {
    const Crossing& x = cross[i];
    const Crossing& y = cross[i + 1];
    if (x.a != y.a && x.b != y.b) return false;
  }
  auto touches = [](const Crossing& c, const Key& k) { return c.a == k || c.b == k; };
  return touches(cross.front(), zp) && touches(cross.back(), zq);
}

bool is_costandard_geometric(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  return is_standard_geometric(s, tagged_rotation(s, d, 1), r);
}

PartialTaggedTriangulation good_completion(const SurfaceModel& s, const PartialTaggedTriangulation& r, int maxBound) {
  int bound = 4;
  for (const auto& a : r.arcs) bound = std::max(bound, static_cast<int>(a.walk.exits.size()) + 2);
  auto tagAllowed = [&](int v, int tag) {
    auto it = r.kappa.find(v);
    if (it == r.kappa.end()) return tag > 0;
    return it->second == 0 || it->second == tag;
  };
  for (; bound <= maxBound; bound += 4) {
    std::vector<TaggedArc> cands;
    for (auto& a : enumerate_tagged_arcs(s, bound)) {
      ArcEnds e = arc_ends(s, a.walk);
      if (s.isPuncture(e.v0) && !tagAllowed(e.v0, a.tag[0])) continue;
      if (s.isPuncture(e.v1) && !tagAllowed(e.v1, a.tag[1])) continue;
      cands.push_back(std::move(a));
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const TaggedArc& x, const TaggedArc& y) { return x.walk.exits.size() < y.walk.exits.size(); });
    std::vector<TaggedArc> t = r.arcs;
    for (const auto& c : cands) {
      if (static_cast<int>(t.size()) == s.rank()) break;
      if (std::find(t.begin(), t.end(), c) != t.end()) continue;
      bool ok = std::all_of(t.begin(), t.end(), [&](const TaggedArc& x) { return compatible(s, x, c); });
      if (ok) t.push_back(c);
    }
    if (static_cast<int>(t.size()) == s.rank()) return make_partial(s, std::move(t), false);
  }
  throw DissectionError(DissectionError::Kind::LimitExceeded, "no completion found within the crossing bound");
}

bool is_standard_by_completion(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r,
                               const PartialTaggedTriangulation& t) {
  std::vector<int> v = shear_vector(s, elementary_laminate(s, d), t);
  for (int i = 0; i < t.size(); ++i)
    if (r.indexOf(t.arcs[i]) < 0 && v[i] != 0) return false;
  return true;
}

std::vector<int> index_vector(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  if (!is_standard(s, d, r)) throw DissectionError(DissectionError::Kind::NotStandard, arc_label(s, d) + " is not standard");
  std::vector<int> v = shear_vector(s, elementary_laminate(s, d), r);
  for (int& x : v) x = -x;
  return v;
}

std::vector<int> co_index_vector(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r) {
  if (!is_costandard(s, d, r))
    throw DissectionError(DissectionError::Kind::NotStandard, arc_label(s, d) + " is not co-standard");
  std::vector<int> v = shear_vector(s, co_elementary_laminate(s, d), r);
  for (int& x : v) x = -x;
  return v;
}

bool is_dissection(const SurfaceModel& s, const std::vector<TaggedArc>& u, const PartialTaggedTriangulation& r) {
  if (static_cast<int>(u.size()) != r.size()) return false;
  for (size_t i = 0; i < u.size(); ++i) {
    if (!is_standard(s, u[i], r)) return false;
    for (size_t j = 0; j < i; ++j)
      if (u[i] == u[j] || !compatible(s, u[i], u[j])) return false;
  }
  return true;
}

std::vector<int> flip_values(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l,
                             const PartialTaggedTriangulation& r) {
  std::vector<int> vals;
  for (const auto& g : r.arcs) {
    try {
      vals.push_back(shear_vector(s, co_elementary_laminate(s, g), u)[l]);
    } catch (const ShearError&) {
      throw DissectionError(DissectionError::Kind::InternalInconsistency,
                            arc_label(s, g) + " is not co-standard for the dissection");
    }
  }
  return vals;
}

int flip_sign(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l, const PartialTaggedTriangulation& r) {
  bool pos = false, neg = false;
  for (int v : flip_values(s, u, l, r)) {
    pos |= v > 0;
    neg |= v < 0;
  }
  if (pos && neg) throw DissectionError(DissectionError::Kind::InternalInconsistency, "flip values of mixed signs");
  if (!pos && !neg) throw DissectionError(DissectionError::Kind::InternalInconsistency, "all flip values vanish");
  return pos ? 1 : -1;
}

FlipResult flip(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l, const PartialTaggedTriangulation& r) {
  FlipResult res;
  res.sign = flip_sign(s, u, l, r);
  std::vector<TaggedArc> rest;
  for (int i = 0; i < u.size(); ++i)
    if (i != l) rest.push_back(u.arcs[i]);
  res.newArc = relative_rotation(s, u.arcs[l], rest, res.sign);
  res.dissection = rest;
  res.dissection.push_back(res.newArc);
  std::sort(res.dissection.begin(), res.dissection.end());

  int lc = u.circ[l];
  bool folded = std::any_of(u.ideal.selfFolded.begin(), u.ideal.selfFolded.end(),
                            [&](const SelfFolded& f) { return f.folded == lc; });
  if (!folded) {
    IdealArc slid = slide_flip(s, u.ideal, lc, res.sign);
    std::vector<IdealArc> expected;
    for (int i = 0; i < static_cast<int>(u.ideal.arcs.size()); ++i)
      if (i != lc) expected.push_back(u.ideal.arcs[i]);
    expected.push_back(slid);
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (make_partial(s, res.dissection, false).ideal.arcs != expected)
      throw DissectionError(DissectionError::Kind::CrossCheckMismatch,
                            "rotation and sliding disagree when flipping " + arc_label(s, u.arcs[l]));
    res.crossChecked = true;
  }
  return res;
}

MutationDirection mutation_direction(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l,
                                     const PartialTaggedTriangulation& r) {
  return flip_sign(s, u, l, r) > 0 ? MutationDirection::Right : MutationDirection::Left;
}

TauTiltingLabel tau_tilting_label(const SurfaceModel& s, const std::vector<TaggedArc>& u, const PartialTaggedTriangulation& r) {
  std::vector<TaggedArc> rho;
  for (const auto& g : r.arcs) rho.push_back(tagged_rotation(s, g, 1));
  std::sort(rho.begin(), rho.end());
  TauTiltingLabel label;
  for (const auto& a : u) (contains(rho, a) ? label.projectiveShiftArcs : label.moduleArcs).push_back(a);
  return label;
}

int int_circ(const SurfaceModel& s, const TaggedArc& g, const PartialTaggedTriangulation& u) {
  int total = 0;
  for (const auto& a : u.ideal.arcs) total += interior_crossings(s, g.walk, a.walk);
  return total;
}

int ExchangeGraph::vertexOf(const std::vector<TaggedArc>& arcs) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (vertices[i].arcs == arcs) return i;
  return -1;
}

ExchangeGraph exchange_graph(const SurfaceModel& s, const PartialTaggedTriangulation& r, const GraphLimits& limits,
                             int threads) {
  ExchangeGraph g;
  g.context = r.arcs;
  std::map<std::vector<TaggedArc>, int> index;
  g.vertices.push_back({r.arcs, 0});
  index[r.arcs] = 0;
  int n = r.size();
  size_t levelStart = 0;
  threads = std::max(1, threads);
  while (levelStart < g.vertices.size()) {
    size_t levelEnd = g.vertices.size();
    size_t tasks = (levelEnd - levelStart) * static_cast<size_t>(n);
    std::vector<FlipResult> results(tasks);
    std::vector<std::exception_ptr> errors(tasks);
    std::vector<PartialTaggedTriangulation> parts(levelEnd - levelStart);
    for (size_t v = levelStart; v < levelEnd; ++v) parts[v - levelStart] = make_partial(s, g.vertices[v].arcs, false);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t t = next++; t < tasks; t = next++) {
        try {
          results[t] = flip(s, parts[t / n], static_cast<int>(t % n), r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads && static_cast<size_t>(i) < tasks; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (size_t t = 0; t < tasks; ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      const FlipResult& fr = results[t];
      int from = static_cast<int>(levelStart + t / n);
      for (const auto& a : fr.dissection) {
        if (static_cast<int>(a.walk.exits.size()) > limits.maxWordLength) {
          g.complete = false;
          g.limitReason = "crossing word longer than " + std::to_string(limits.maxWordLength);
          return g;
        }
      }
      auto it = index.find(fr.dissection);
      if (it == index.end()) {
        if (static_cast<int>(g.vertices.size()) >= limits.maxVertices) {
          g.complete = false;
          g.limitReason = "more than " + std::to_string(limits.maxVertices) + " vertices";
          return g;
        }
        it = index.emplace(fr.dissection, static_cast<int>(g.vertices.size())).first;
        g.vertices.push_back({fr.dissection, g.vertices[from].depth + 1});
      }
      const auto& to = g.vertices[it->second].arcs;
      int na = static_cast<int>(std::lower_bound(to.begin(), to.end(), fr.newArc) - to.begin());
      g.flips.push_back({from, static_cast<int>(t % n), it->second, na, fr.sign, fr.crossChecked});
    }
    levelStart = levelEnd;
  }
  return g;
}

ConnectivityReport check_connected(const ExchangeGraph& g, std::optional<int> oracleCount) {
  ConnectivityReport rep;
  int nv = static_cast<int>(g.vertices.size());
  int n = static_cast<int>(g.context.size());
  rep.vertices = nv;
  rep.complete = g.complete;
  rep.degree = n;
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<int, int>> edges;
  std::set<std::tuple<int, int, int, int>> directed;
  std::vector<std::set<int>> neighbours(nv);
  std::vector<int> flipsAt(nv, 0);
  for (const auto& f : g.flips) {
    edges.insert({std::min(f.from, f.to), std::max(f.from, f.to)});
    directed.insert({f.from, f.arc, f.to, f.newArc});
    neighbours[f.from].insert(f.to);
    ++flipsAt[f.from];
    parent[find(f.from)] = find(f.to);
  }
  rep.edges = static_cast<int>(edges.size());
  rep.connected = true;
  for (int v = 0; v < nv; ++v) rep.connected &= find(v) == find(0);
  rep.regular = true;
  for (int v = 0; v < nv; ++v)
    rep.regular &= flipsAt[v] == n && static_cast<int>(neighbours[v].size()) == n;
  rep.symmetric = true;
  for (const auto& f : g.flips) rep.symmetric &= directed.count({f.to, f.newArc, f.from, f.arc}) > 0;
  rep.oracleCount = oracleCount;
  if (oracleCount) rep.oracleMatches = *oracleCount == nv;
  return rep;
}

DissectionEnumeration enumerate_dissections(const SurfaceModel& s, const PartialTaggedTriangulation& r, int startBound,
                                            int margin, int maxBound) {
  DissectionEnumeration out;
  out.standardArcs = enumerate_stable(
      s, [&](const TaggedArc& a) { return is_standard(s, a, r); }, startBound, margin, maxBound, &out.bound);
  int m = static_cast<int>(out.standardArcs.size());
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) adj[i][j] = adj[j][i] = compatible(s, out.standardArcs[i], out.standardArcs[j]);
  for (const auto& c : maximal_cliques(adj)) {
    std::vector<TaggedArc> set;
    for (int i : c) set.push_back(out.standardArcs[i]);
    out.dissections.push_back(std::move(set));
  }
  return out;
}

}  // namespace tsurf
