#include "tsurf/surface.hpp"

#include <numeric>

namespace tsurf {

int surface_rank(const SurfaceSpec& spec) {
  int c = std::accumulate(spec.boundary.begin(), spec.boundary.end(), 0);
  return 6 * spec.genus + 3 * static_cast<int>(spec.boundary.size()) + 3 * spec.punctures + c - 6;
}

void validate_spec(const SurfaceSpec& spec) {
  using K = SurfaceError::Kind;
  if (spec.genus < 0 || spec.punctures < 0) throw SurfaceError(K::InvalidSpec, "negative genus or puncture count");
  if (spec.boundary.empty()) throw SurfaceError(K::NoBoundary, "surface has no boundary component");
  for (int c : spec.boundary)
    if (c < 1) throw SurfaceError(K::InvalidSpec, "boundary component without marked points");
  if (surface_rank(spec) < 1) throw SurfaceError(K::DegenerateSurface, "surface rank is below 1");
  bool disc = spec.genus == 0 && spec.boundary.size() == 1;
  if (disc && spec.punctures == 0 && spec.boundary[0] <= 3)
    throw SurfaceError(K::DegenerateSurface, "unpunctured monogon, digon or triangle");
  if (disc && spec.punctures == 1 && spec.boundary[0] == 1)
    throw SurfaceError(K::DegenerateSurface, "once-punctured monogon");
}

namespace {

struct Builder {
  std::vector<Triangle> tris;

  int add(int a, int b, int c) {
    Triangle t;
    t.vertex = {a, b, c};
    tris.push_back(t);
    return static_cast<int>(tris.size()) - 1;
  }
  void glue(int t1, int s1, int t2, int s2) {
    tris[t1].glueTri[s1] = t2;
    tris[t1].glueSide[s1] = s2;
    tris[t2].glueTri[s2] = t1;
    tris[t2].glueSide[s2] = s1;
  }
  // Moves side s of triangle `from` to side ns of triangle `to`, keeping its gluing.
  void moveSide(int from, int s, int to, int ns) {
    int gt = tris[from].glueTri[s], gs = tris[from].glueSide[s];
    tris[to].glueTri[ns] = -1;
    if (gt < 0) return;
    if (gt == from) {
      // The side was glued to another side of the same triangle; callers never need this case.
      throw std::logic_error("cone over a self-glued triangle");
    }
    glue(to, ns, gt, gs);
  }
  // Cones puncture vertex p into triangle t.
  void cone(int t, int p) {
    auto [a, b, c] = tris[t].vertex;
    int t1 = add(b, c, p);
    int t2 = add(c, a, p);
    moveSide(t, 1, t1, 0);
    moveSide(t, 2, t2, 0);
    tris[t].vertex = {a, b, p};
    tris[t].glueTri[1] = tris[t].glueTri[2] = -1;
    glue(t, 1, t1, 2);
    glue(t1, 1, t2, 2);
    glue(t2, 1, t, 2);
  }
};

}  // namespace

SurfaceModel build_surface(const SurfaceSpec& spec) {
  validate_spec(spec);
  SurfaceModel model;
  model.spec_ = spec;
  for (int comp = 0; comp < static_cast<int>(spec.boundary.size()); ++comp) {
    model.componentStart_.push_back(static_cast<int>(model.marked_.size()));
    for (int i = 0; i < spec.boundary[comp]; ++i) model.marked_.push_back({comp, i});
  }
  auto point = [&](int comp, int i) { return model.componentStart_[comp] + i % spec.boundary[comp]; };
  int nm = static_cast<int>(model.marked_.size());

  // Polygon sides: corner vertex at the start of each side and a gluing label
  // (-1 for boundary, otherwise the index of the partner side).
  std::vector<int> corner;
  std::vector<int> partner;
  auto addSide = [&](int v) {
    corner.push_back(v);
    partner.push_back(-1);
    return static_cast<int>(corner.size()) - 1;
  };
  auto pair = [&](int i, int j) { partner[i] = j; partner[j] = i; };
  int base = point(0, 0);
  for (int i = 0; i < spec.boundary[0]; ++i) addSide(point(0, i));
  for (int g = 0; g < spec.genus; ++g) {
    int a = addSide(base), b = addSide(base), ai = addSide(base), bi = addSide(base);
    pair(a, ai);
    pair(b, bi);
  }
  for (int comp = 1; comp < static_cast<int>(spec.boundary.size()); ++comp) {
    int t = addSide(base);
    for (int i = 0; i < spec.boundary[comp]; ++i) addSide(point(comp, i));
    int ti = addSide(point(comp, 0));
    pair(t, ti);
  }
  int L = static_cast<int>(corner.size());

  Builder bld;
  // Location (triangle, side) of each polygon side.
  std::vector<std::pair<int, int>> where(L);
  int nextPuncture = 0;
  if (L >= 3) {
    for (int i = 1; i + 1 < L; ++i) {
      int t = bld.add(corner[0], corner[i], corner[i + 1]);
      where[i] = {t, 1};
      if (i == 1) where[0] = {t, 0};
      if (i + 2 == L) where[L - 1] = {t, 2};
      if (i > 1) bld.glue(t - 1, 2, t, 0);
    }
  } else if (L == 2) {
    int p = nm + nextPuncture++;
    int t0 = bld.add(corner[0], corner[1], p);
    int t1 = bld.add(corner[1], corner[0], p);
    bld.glue(t0, 1, t1, 2);
    bld.glue(t0, 2, t1, 1);
    where[0] = {t0, 0};
    where[1] = {t1, 0};
  } else {
    // Monogon with at least two punctures: a triangle on the boundary loop with
    // apex at the first puncture, and the remaining digon coned at the second.
    int p1 = nm + nextPuncture++;
    int p2 = nm + nextPuncture++;
    int v = corner[0];
    int ta = bld.add(v, v, p1);
    int tb = bld.add(v, p1, p2);
    int tc = bld.add(p1, v, p2);
    bld.glue(ta, 2, tb, 0);
    bld.glue(ta, 1, tc, 0);
    bld.glue(tb, 1, tc, 2);
    bld.glue(tb, 2, tc, 1);
    where[0] = {ta, 0};
  }
  for (int i = 0; i < L; ++i)
    if (partner[i] > i) bld.glue(where[i].first, where[i].second, where[partner[i]].first, where[partner[i]].second);
  for (; nextPuncture < spec.punctures; ++nextPuncture) bld.cone(0, nm + nextPuncture);

  model.tris_ = std::move(bld.tris);
  model.finalize();
  return model;
}

void SurfaceModel::finalize() {
  edges_.clear();
  segments_.assign(marked_.size(), {});
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    for (int s = 0; s < 3; ++s) {
      Triangle& tr = tris_[t];
      if (tr.glueTri[s] < 0) {
        int from = tr.vertex[s];
        segments_[from] = {from, tr.vertex[(s + 1) % 3], t, s};
        tr.segment[s] = from;
      } else if (tr.edge[s] < 0) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({t, s, tr.glueTri[s], tr.glueSide[s]});
        tr.edge[s] = id;
        tris_[tr.glueTri[s]].edge[tr.glueSide[s]] = id;
      }
    }
  }
  cornerCount_.assign(numVertices(), 0);
  for (const auto& tr : tris_)
    for (int v : tr.vertex) ++cornerCount_[v];
}

int SurfaceModel::nextMarked(int m) const { return segments_[m].to; }

int SurfaceModel::prevMarked(int m) const {
  const MarkedPoint& mp = marked_[m];
  int size = spec_.boundary[mp.component];
  return componentStart_[mp.component] + (mp.position + size - 1) % size;
}

std::string SurfaceModel::vertexLabel(int v) const {
  if (isPuncture(v)) return "p" + std::to_string(punctureIndex(v));
  return "m" + std::to_string(v);
}

int SurfaceModel::eulerCharacteristic() const {
  // Vertices minus edges (interior and boundary) plus faces of the glued complex.
  int e = static_cast<int>(edges_.size()) + static_cast<int>(segments_.size());
  return numVertices() - e + static_cast<int>(tris_.size());
}

}  // namespace tsurf
