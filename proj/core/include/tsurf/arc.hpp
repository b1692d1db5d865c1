#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tsurf/cover.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/walk.hpp"

namespace tsurf {

// Rotation senses around a vertex.
inline constexpr int kClockwise = 1;
inline constexpr int kAnticlockwise = -1;

// Homotopy class of a tagged arc. The walk is reduced and canonically
// oriented; tag[i] is +1 or -1 at a puncture end and 0 at a marked point.
struct TaggedArc {
  Walk walk;
  std::array<int, 2> tag{0, 0};

  auto operator<=>(const TaggedArc&) const = default;
  bool operator==(const TaggedArc&) const = default;
};

// Homotopy class of a plain (ideal) arc; loops cutting out a once-punctured
// monogon are allowed here.
struct IdealArc {
  Walk walk;

  auto operator<=>(const IdealArc&) const = default;
  bool operator==(const IdealArc&) const = default;
};

struct ArcEnds {
  int v0;
  int v1;
};

ArcEnds arc_ends(const SurfaceModel& s, const Walk& w);

// Canonical forms. `normalize` validates the tagged-arc conditions;
// `canonical_arc` only reduces and orients.
TaggedArc normalize(const SurfaceModel& s, const Walk& raw, std::array<int, 2> tags);
TaggedArc canonical_arc(const SurfaceModel& s, const Walk& raw, std::array<int, 2> tags);
IdealArc normalize_ideal(const SurfaceModel& s, const Walk& raw);
TaggedArc edge_arc(const SurfaceModel& s, int e, std::array<int, 2> tags = {1, 1});

IdealArc underlying(const TaggedArc& a);
// Tagged arc with plain tags at every puncture end.
TaggedArc plain(const SurfaceModel& s, const IdealArc& a);
Curve curve_of(const SurfaceModel& s, const IdealArc& a);

// Walk of the arc oriented from end `e` (0 or 1).
Walk oriented_walk(const SurfaceModel& s, const Walk& w, int e);

// Number of transverse interior crossings in minimal position.
int interior_crossings(const SurfaceModel& s, const Walk& a, const Walk& b);
int self_crossings(const SurfaceModel& s, const Walk& a);

// Interior intersections plus tagged intersections.
int intersection_number(const SurfaceModel& s, const TaggedArc& a, const TaggedArc& b);

// Tagged rotation: marked ends move one step anticlockwise (direction +1) or
// clockwise (-1) along the boundary, and all tags are negated.
TaggedArc tagged_rotation(const SurfaceModel& s, const TaggedArc& a, int direction);

// Loop around the puncture at end `pend` of the arc, based at its other end.
IdealArc enclosing_loop(const SurfaceModel& s, const IdealArc& a, int pend);
// Puncture enclosed when the arc is a loop cutting out a once-punctured monogon, else -1.
int enclosed_puncture(const SurfaceModel& s, const IdealArc& a);

std::string arc_label(const SurfaceModel& s, const TaggedArc& a);

// Vertex with the given label ("m3", "p0"), or -1.
int vertex_by_label(const SurfaceModel& s, const std::string& label);

// The tagged arc from `from` to `to` crossing the listed base edges in order.
// Throws ArcError when no walk or more than one arc matches.
TaggedArc arc_from_crossings(const SurfaceModel& s, int from, int to, const std::vector<int>& edges,
                             std::array<int, 2> tags);

// Inverse of arc_label: "m0~e0.e3~m0", "m0=e1=p0-" (tags as +/- after puncture labels).
TaggedArc parse_arc_label(const SurfaceModel& s, const std::string& label);

}  // namespace tsurf
