#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "tsurf/algebra.hpp"
#include "tsurf/dissection.hpp"
#include "tsurf/enumerate.hpp"

namespace tsurf::selftest {

namespace {

struct Fixture {
  std::string name;
  SurfaceModel s;
};

struct GraphCase {
  const Fixture* f;
  PartialTaggedTriangulation r;
  ExchangeGraph g;
};

std::string label(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  std::string out;
  for (const auto& a : arcs) out += (out.empty() ? "" : ", ") + arc_label(s, a);
  return "{" + out + "}";
}

std::vector<TaggedArc> base_arcs(const SurfaceModel& s) {
  std::vector<TaggedArc> arcs;
  for (int e = 0; e < s.rank(); ++e) arcs.push_back(edge_arc(s, e));
  return arcs;
}

// Triangulations of the convex polygon on vertices i..j as sets of diagonals.
using Diagonals = std::set<std::pair<int, int>>;
std::vector<Diagonals> polygon_triangulations(int i, int j) {
  if (j - i < 2) return {Diagonals{}};
  std::vector<Diagonals> out;
  for (int k = i + 1; k < j; ++k) {
    for (const auto& left : polygon_triangulations(i, k)) {
      for (const auto& right : polygon_triangulations(k, j)) {
        Diagonals d = left;
        d.insert(right.begin(), right.end());
        if (k - i > 1) d.insert({i, k});
        if (j - k > 1) d.insert({k, j});
        out.push_back(d);
      }
    }
  }
  return out;
}

Diagonals diagonals_of(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  Diagonals d;
  for (const auto& a : arcs) {
    ArcEnds e = arc_ends(s, a.walk);
    int p = s.markedPoints()[e.v0].position, q = s.markedPoints()[e.v1].position;
    d.insert({std::min(p, q), std::max(p, q)});
  }
  return d;
}

// Maximal sets of tagged arcs with vanishing pairwise intersection number
// among the arcs crossing at most `bound` base edges. With `stabilise` the
// bound grows until the arc count no longer changes, which makes the result
// exhaustive on surfaces with finitely many arcs.
std::vector<std::vector<TaggedArc>> compatible_sets_oracle(const SurfaceModel& s, int bound, bool stabilise = false) {
  auto arcs = enumerate_tagged_arcs(s, bound);
  while (stabilise && enumerate_tagged_arcs(s, bound + 2).size() != arcs.size())
    arcs = enumerate_tagged_arcs(s, bound += 2);
  int n = static_cast<int>(arcs.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) adj[i][j] = adj[j][i] = intersection_number(s, arcs[i], arcs[j]) == 0;
  std::vector<std::vector<TaggedArc>> out;
  for (const auto& c : maximal_cliques(adj)) {
    std::vector<TaggedArc> set;
    for (int i : c) set.push_back(arcs[i]);
    std::sort(set.begin(), set.end());
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<TaggedArc>> graph_vertex_sets(const ExchangeGraph& g) {
  std::vector<std::vector<TaggedArc>> out;
  for (const auto& v : g.vertices) out.push_back(v.arcs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialTaggedTriangulation> vertex_parts(const SurfaceModel& s, const ExchangeGraph& g) {
  std::vector<PartialTaggedTriangulation> out;
  for (const auto& v : g.vertices) out.push_back(make_partial(s, v.arcs, false));
  return out;
}

std::vector<int> unit(int n, int i, int value) {
  std::vector<int> v(n, 0);
  v[i] = value;
  return v;
}

class Suite {
 public:
  explicit Suite(int threads) : threads_(threads) {
    for (auto [name, spec] : std::vector<std::pair<std::string, SurfaceSpec>>{{"hexagon", {0, {6}, 0}},
                                                                             {"heptagon", {0, {7}, 0}},
                                                                             {"punctured triangle", {0, {3}, 1}},
                                                                             {"punctured square", {0, {4}, 1}},
                                                                             {"annulus (1,1)", {0, {1, 1}, 0}},
                                                                             {"twice-punctured digon", {0, {2}, 2}}})
      fixtures_.push_back({name, build_surface(spec)});
  }

  const Fixture& fixture(const std::string& name) const {
    for (const auto& f : fixtures_)
      if (f.name == name) return f;
    throw std::logic_error("unknown fixture " + name);
  }

  GraphCase make_case(const Fixture& f, const std::vector<TaggedArc>& r) const {
    GraphCase c{&f, make_partial(f.s, r), {}};
    c.g = exchange_graph(f.s, c.r, {}, threads_);
    return c;
  }

  CriterionResult polygon_sanity() {
    CriterionResult res{1, "polygon exchange graphs", true, ""};
    for (auto [name, n, count] : std::vector<std::tuple<std::string, int, int>>{{"hexagon", 6, 14}, {"heptagon", 7, 42}}) {
      const Fixture& f = fixture(name);
      GraphCase c = make_case(f, base_arcs(f.s));
      std::vector<Diagonals> oracle = polygon_triangulations(0, n - 1);
      std::set<Diagonals> fromGraph;
      for (const auto& v : c.g.vertices) fromGraph.insert(diagonals_of(f.s, v.arcs));
      ConnectivityReport rep = check_connected(c.g, static_cast<int>(oracle.size()));
      bool ok = rep.ok() && rep.vertices == count && rep.degree == n - 3 &&
                fromGraph == std::set<Diagonals>(oracle.begin(), oracle.end());
      res.pass &= ok;
      res.detail += name + ": " + std::to_string(rep.vertices) + " vertices (oracle " + std::to_string(oracle.size()) +
                    "), " + (rep.regular ? std::to_string(rep.degree) + "-regular" : "not regular") +
                    (rep.connected ? ", connected" : ", disconnected") + "; ";
      full_.push_back(std::move(c));
    }
    return res;
  }

  CriterionResult punctured_counts() {
    CriterionResult res{2, "punctured exchange graphs", true, ""};
    for (auto [name, count] : std::vector<std::pair<std::string, int>>{{"punctured triangle", 14}, {"punctured square", 50}}) {
      const Fixture& f = fixture(name);
      auto oracle = compatible_sets_oracle(f.s, 6, true);
      GraphCase c = make_case(f, base_arcs(f.s));
      ConnectivityReport rep = check_connected(c.g, static_cast<int>(oracle.size()));
      bool ok = rep.ok() && rep.vertices == count && rep.degree == f.s.rank() && graph_vertex_sets(c.g) == oracle;
      res.pass &= ok;
      res.detail += name + ": " + std::to_string(rep.vertices) + " vertices (oracle " + std::to_string(oracle.size()) +
                    "), " + (rep.regular ? std::to_string(rep.degree) + "-regular" : "not regular") +
                    (rep.connected ? ", connected" : ", disconnected") + "; ";
      full_.push_back(std::move(c));
    }
    return res;
  }

  CriterionResult rank_one() {
    CriterionResult res{3, "single-arc contexts", true, ""};
    int tested = 0;
    for (const char* name : {"hexagon", "heptagon", "punctured triangle", "punctured square", "annulus (1,1)"}) {
      const Fixture& f = fixture(name);
      for (const auto& a : enumerate_tagged_arcs(f.s, 4)) {
        if (!connects_to_boundary(f.s, {a})) continue;
        GraphCase c = make_case(f, {a});
        ConnectivityReport rep = check_connected(c.g);
        if (!(rep.complete && rep.vertices == 2 && rep.edges == 1)) {
          res.pass = false;
          res.detail += "R = {" + arc_label(f.s, a) + "} on " + f.name + " gives " + std::to_string(rep.vertices) +
                        " vertices; ";
        }
        ++tested;
        single_.push_back(std::move(c));
      }
    }
    res.detail += std::to_string(tested) + " arcs (crossing at most 4 base edges) on 5 surfaces";
    res.pass &= tested > 0;
    return res;
  }

  CriterionResult shear_identities() {
    CriterionResult res{4, "shear coordinates of triangulation arcs", true, ""};
    int pairs = 0, bad = 0;
    for (const auto& c : full_) {
      const SurfaceModel& s = c.f->s;
      for (const auto& t : vertex_parts(s, c.g)) {
        for (int d = 0; d < t.size(); ++d) {
          try {
            bad += shear_vector(s, elementary_laminate(s, t.arcs[d]), t) != unit(t.size(), d, -1);
            bad += shear_vector(s, co_elementary_laminate(s, t.arcs[d]), t) != unit(t.size(), d, 1);
          } catch (const std::exception&) {
            bad += 2;
          }
          pairs += t.size();
        }
      }
    }
    res.pass = bad == 0 && pairs > 0;
    res.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
    return res;
  }

  CriterionResult restriction() {
    CriterionResult res{5, "restriction of shear vectors", true, ""};
    std::mt19937 rng(20240521);
    std::vector<std::pair<const Fixture*, std::vector<std::vector<TaggedArc>>>> pools;
    for (const char* name : {"hexagon", "heptagon", "punctured triangle", "punctured square", "annulus (1,1)"}) {
      const Fixture& f = fixture(name);
      std::vector<std::vector<TaggedArc>> ts;
      for (const auto& set : compatible_sets_oracle(f.s, 4))
        if (static_cast<int>(set.size()) == f.s.rank()) ts.push_back(set);
      pools.push_back({&f, ts});
    }
    int samples = 0, bad = 0, skipped = 0;
    while (samples < 200 && skipped < 20000) {
      auto& [f, ts] = pools[rng() % pools.size()];
      const SurfaceModel& s = f->s;
      const auto& tArcs = ts[rng() % ts.size()];
      int n = static_cast<int>(tArcs.size());
      int mask = 1 + static_cast<int>(rng() % ((1u << n) - 2));
      std::vector<TaggedArc> rArcs;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) rArcs.push_back(tArcs[i]);
      PartialTaggedTriangulation t = make_partial(s, tArcs), r = make_partial(s, rArcs);
      auto& arcs = arcCache_[&s];
      if (arcs.empty()) arcs = enumerate_tagged_arcs(s, 5);
      const TaggedArc& d = arcs[rng() % arcs.size()];
      Laminate l = rng() % 2 ? elementary_laminate(s, d) : co_elementary_laminate(s, d);
      if (!shears(s, l, r)) {
        ++skipped;
        continue;
      }
      std::vector<int> vt = shear_vector(s, l, t), vr = shear_vector(s, l, r), restricted;
      for (const auto& a : r.arcs) restricted.push_back(vt[t.indexOf(a)]);
      if (vr != restricted) {
        ++bad;
        if (bad <= 3) res.detail += "mismatch for " + arc_label(s, d) + " with R = " + label(s, r.arcs) + "; ";
      }
      ++samples;
    }
    res.pass = bad == 0 && samples == 200;
    res.detail += std::to_string(samples) + " samples (" + std::to_string(skipped) + " draws skipped), " + std::to_string(bad) + " mismatches";
    return res;
  }

  // Partial contexts used by criteria 6, 9 and 11: subsets of a few complete
  // sets on every fixture surface.
  std::vector<std::pair<const Fixture*, std::vector<TaggedArc>>> partial_contexts(bool requireBoundary, int perSurface) const {
    std::vector<std::pair<const Fixture*, std::vector<TaggedArc>>> out;
    for (const auto& f : fixtures_) {
      auto sets = compatible_sets_oracle(f.s, 4);
      int taken = 0;
      for (size_t k = 0; k < sets.size() && taken < perSurface; k += 1 + sets.size() / 3) {
        const auto& full = sets[k];
        int n = static_cast<int>(full.size());
        for (int mask = 1; mask + 1 < (1 << n) && taken < perSurface; mask = mask * 2 + 1 + (mask & 2)) {
          std::vector<TaggedArc> part;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) part.push_back(full[i]);
          if (static_cast<int>(part.size()) == n) continue;
          if (requireBoundary && !connects_to_boundary(f.s, part)) continue;
          out.push_back({&f, part});
          ++taken;
        }
      }
    }
    return out;
  }

  CriterionResult standardness_equivalence() {
    CriterionResult res{6, "standardness tests agree", true, ""};
    int checks = 0, bad = 0, contexts = 0;
    for (const auto& [f, arcs] : partial_contexts(false, 5)) {
      const SurfaceModel& s = f->s;
      PartialTaggedTriangulation r = make_partial(s, arcs);
      PartialTaggedTriangulation t = good_completion(s, r);
      for (const auto& d : enumerate_tagged_arcs(s, 7)) {
        bool a = is_standard(s, d, r);
        bool ok = a == is_standard_geometric(s, d, r) && a == is_standard_by_completion(s, d, r, t) &&
                  is_costandard(s, d, r) == is_costandard_geometric(s, d, r);
        if (!ok && ++bad <= 3) res.detail += arc_label(s, d) + " against " + label(s, r.arcs) + "; ";
        ++checks;
      }
      ++contexts;
    }
    res.pass = bad == 0 && checks > 0;
    res.detail += std::to_string(checks) + " arcs over " + std::to_string(contexts) + " contexts, " +
                  std::to_string(bad) + " disagreements";
    return res;
  }

  CriterionResult flip_algebra() {
    CriterionResult res{7, "flips", true, ""};
    int edges = 0, crossChecked = 0, bad = 0;
    for (const auto* list : {&full_, &single_}) {
      for (const auto& c : *list) {
        const SurfaceModel& s = c.f->s;
        auto parts = vertex_parts(s, c.g);
        for (const auto& fl : c.g.flips) {
          const PartialTaggedTriangulation& u = parts[fl.from];
          const PartialTaggedTriangulation& v = parts[fl.to];
          try {
            FlipResult there = flip(s, u, fl.arc, c.r);
            FlipResult back = flip(s, v, fl.newArc, c.r);
            int changed = 0;
            for (const auto& a : u.arcs) changed += v.indexOf(a) < 0;
            int lc = u.circ[fl.arc];
            bool folded = std::any_of(u.ideal.selfFolded.begin(), u.ideal.selfFolded.end(),
                                      [&](const SelfFolded& sf) { return sf.folded == lc; });
            bool ok = there.dissection == v.arcs && back.dissection == u.arcs && changed == 1 &&
                      there.crossChecked == !folded;
            crossChecked += there.crossChecked;
            if (!ok && ++bad <= 3) res.detail += "flip of " + arc_label(s, u.arcs[fl.arc]) + " on " + c.f->name + "; ";
          } catch (const std::exception& e) {
            if (++bad <= 3) res.detail += std::string(e.what()) + "; ";
          }
          ++edges;
        }
      }
    }
    res.pass = bad == 0 && edges > 0;
    res.detail += std::to_string(edges) + " flips, " + std::to_string(crossChecked) + " compared with sliding, " +
                  std::to_string(bad) + " failures";
    return res;
  }

  CriterionResult sign_coherence() {
    CriterionResult res{8, "sign coherence", true, ""};
    long values = 0, bad = 0, crossings = 0;
    for (const auto* list : {&full_, &single_, &partial_}) {
      for (const auto& c : *list) {
        const SurfaceModel& s = c.f->s;
        for (const auto& u : vertex_parts(s, c.g)) {
          for (int l = 0; l < u.size(); ++l) {
            bool pos = false, neg = false;
            try {
              for (int v : flip_values(s, u, l, c.r)) {
                pos |= v > 0;
                neg |= v < 0;
                ++values;
              }
            } catch (const std::exception&) {
              pos = neg = true;
            }
            bool ok = pos != neg;
            int lc = u.circ[l];
            auto sf = std::find_if(u.ideal.selfFolded.begin(), u.ideal.selfFolded.end(),
                                   [&](const SelfFolded& x) { return x.folded == lc; });
            for (const auto& g : c.r.arcs) {
              Laminate lam = retag(s, co_elementary_laminate(s, g), u.kappa);
              int curve = lc;
              if (sf != u.ideal.selfFolded.end()) {
                lam = reverse_spirals(s, lam, sf->puncture);
                curve = sf->loop;
              }
              bool p = false, n = false;
              for (const auto& x : shear_sequence(s, lam, u.ideal.arcs).crossings) {
                if (x.curve != curve) continue;
                p |= x.contribution > 0;
                n |= x.contribution < 0;
                ++crossings;
              }
              ok &= !(p && n);
            }
            if (!ok && ++bad <= 3) res.detail += arc_label(s, u.arcs[l]) + " in " + label(s, u.arcs) + "; ";
          }
        }
      }
    }
    res.pass = bad == 0 && values > 0;
    res.detail += std::to_string(values) + " flip values and " + std::to_string(crossings) + " crossings, " +
                  std::to_string(bad) + " violations";
    return res;
  }

  CriterionResult main_theorem() {
    CriterionResult res{9, "partial contexts: connected and complete", true, ""};
    int contexts = 0;
    for (const auto& [f, arcs] : partial_contexts(true, 4)) {
      GraphCase c = make_case(*f, arcs);
      DissectionEnumeration en = enumerate_dissections(f->s, c.r);
      for (auto& d : en.dissections) std::sort(d.begin(), d.end());
      std::sort(en.dissections.begin(), en.dissections.end());
      ConnectivityReport rep = check_connected(c.g, static_cast<int>(en.dissections.size()));
      bool ok = rep.complete && rep.connected && rep.oracleMatches && graph_vertex_sets(c.g) == en.dissections;
      if (!ok) {
        res.pass = false;
        res.detail += "R = " + label(f->s, c.r.arcs) + " on " + f->name + ": " + std::to_string(rep.vertices) +
                      " vertices, oracle " + std::to_string(en.dissections.size()) + "; ";
      }
      enumerated_.push_back(en.dissections);
      partial_.push_back(std::move(c));
      ++contexts;
    }
    res.pass &= contexts >= 10;
    res.detail += std::to_string(contexts) + " contexts on " + std::to_string(fixtures_.size()) + " surfaces";
    return res;
  }

  CriterionResult reach_context() {
    CriterionResult res{10, "paths to dissections sharing an arc with R", true, ""};
    int total = 0, reached = 0;
    for (size_t k = 0; k < partial_.size(); ++k) {
      const ExchangeGraph& g = partial_[k].g;
      const auto& r = partial_[k].r.arcs;
      std::vector<std::vector<int>> adj(g.vertices.size());
      for (const auto& f : g.flips) {
        adj[f.from].push_back(f.to);
        adj[f.to].push_back(f.from);
      }
      for (const auto& d : enumerated_[k]) {
        ++total;
        int start = g.vertexOf(d);
        if (start < 0) continue;
        std::vector<bool> seen(g.vertices.size(), false);
        std::vector<int> queue{start};
        seen[start] = true;
        bool found = false;
        for (size_t i = 0; i < queue.size() && !found; ++i) {
          const auto& arcs = g.vertices[queue[i]].arcs;
          found = std::any_of(arcs.begin(), arcs.end(),
                              [&](const TaggedArc& a) { return std::binary_search(r.begin(), r.end(), a); });
          for (int w : adj[queue[i]])
            if (!seen[w]) seen[w] = true, queue.push_back(w);
        }
        reached += found;
      }
    }
    res.pass = total > 0 && reached == total;
    res.detail = std::to_string(reached) + " of " + std::to_string(total) + " dissections";
    return res;
  }

  CriterionResult skew_gentle() {
    CriterionResult res{11, "skew-gentle presentations", true, ""};
    const Fixture pentagon{"pentagon", build_surface({0, {5}, 0})};
    std::vector<TaggedArc> fan{parse_arc_label(pentagon.s, "m0=e0=m2"), parse_arc_label(pentagon.s, "m0=e1=m3")};
    std::string golden =
        "vertices: 0 = m0=e0=m2, 1 = m0=e1=m3\n"
        "arrows: a: 0 -> 1\n"
        "special: {}\n"
        "relations: []\n";
    bool goldenOk = skew_tiling_presentation(pentagon.s, make_partial(pentagon.s, fan).ideal).text() == golden;
    int cases = 0, bad = 0, special = 0;
    for (const auto& f : fixtures_) {
      auto sets = compatible_sets_oracle(f.s, 4);
      for (size_t k = 0; k < sets.size() && k < 12; ++k) {
        int n = static_cast<int>(sets[k].size());
        for (int mask = 1; mask < (1 << n); ++mask) {
          std::vector<TaggedArc> part;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) part.push_back(sets[k][i]);
          PartialTaggedTriangulation r = make_partial(f.s, part);
          if (!is_admissible(f.s, r.ideal)) continue;
          try {
            QuiverPresentation p = skew_tiling_presentation(f.s, r.ideal);
            validate_skew_gentle(p);
            special += !p.specialLoops.empty();
          } catch (const std::exception& e) {
            if (++bad <= 3) res.detail += label(f.s, r.arcs) + ": " + e.what() + "; ";
          }
          ++cases;
        }
      }
    }
    res.pass = goldenOk && bad == 0 && cases >= 10;
    res.detail += std::string("pentagon fan ") + (goldenOk ? "matches" : "differs") + "; " + std::to_string(cases) +
                  " admissible contexts (" + std::to_string(special) + " with special loops), " + std::to_string(bad) +
                  " failures";
    return res;
  }

  CriterionResult dichotomy() {
    CriterionResult res{12, "right/left mutation dichotomy", true, ""};
    int edges = 0, bad = 0;
    for (const auto* list : {&full_, &single_, &partial_}) {
      for (const auto& c : *list) {
        const SurfaceModel& s = c.f->s;
        auto parts = vertex_parts(s, c.g);
        for (const auto& f : c.g.flips) {
          if (f.from > f.to) continue;
          try {
            bool here = mutation_direction(s, parts[f.from], f.arc, c.r) == MutationDirection::Right;
            bool there = mutation_direction(s, parts[f.to], f.newArc, c.r) == MutationDirection::Right;
            if (here == there && ++bad <= 3) res.detail += "edge " + std::to_string(f.from) + "-" + std::to_string(f.to) + " on " + c.f->name + "; ";
          } catch (const std::exception& e) {
            if (++bad <= 3) res.detail += std::string(e.what()) + "; ";
          }
          ++edges;
        }
      }
    }
    res.pass = bad == 0 && edges > 0;
    res.detail += std::to_string(edges) + " edges, " + std::to_string(bad) + " violations";
    return res;
  }

 private:
  int threads_;
  std::vector<Fixture> fixtures_;
  std::vector<GraphCase> full_, single_, partial_;
  std::vector<std::vector<std::vector<TaggedArc>>> enumerated_;
  std::map<const SurfaceModel*, std::vector<TaggedArc>> arcCache_;
};

}  // namespace

std::vector<CriterionResult> run_all(int threads, const std::function<void(const CriterionResult&)>& onResult) {
  Suite suite(threads);
  // Criterion 9 builds the partial-context graphs that 8, 10 and 12 reuse.
  std::vector<std::pair<int, CriterionResult (Suite::*)()>> steps = {
      {1, &Suite::polygon_sanity}, {2, &Suite::punctured_counts},         {3, &Suite::rank_one},
      {4, &Suite::shear_identities}, {5, &Suite::restriction},           {6, &Suite::standardness_equivalence},
      {9, &Suite::main_theorem},   {7, &Suite::flip_algebra},            {8, &Suite::sign_coherence},
      {10, &Suite::reach_context}, {11, &Suite::skew_gentle},            {12, &Suite::dichotomy}};
  std::vector<CriterionResult> results;
  for (auto [id, step] : steps) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = (suite.*step)();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("aborted: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (onResult) onResult(r);
    results.push_back(r);
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

std::string format_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s criterion %2d ", r.pass ? "PASS" : "FAIL", r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
  std::string detail = r.detail;
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  return head + r.name + ": " + detail + tail + "\n";
}

}  // namespace tsurf::selftest
