#pragma once

#include <vector>

#include "tsurf/surface.hpp"
#include "tsurf/walk.hpp"

namespace tsurf {

// Position of a point on the circle at infinity of the universal cover,
// relative to a fixed spine. Keys compare lexicographically in the
// anticlockwise order starting just before the spine start P:
//   [-1,0] P, [-1,1] P+eps, [0,...] the arc from P to Q, [1,-1] Q-eps, [1,0] Q,
//   [1,1] Q+eps, [2,...] the arc from Q back to P, [3] P-eps.
using Key = std::vector<int>;

enum class Region { P, A, Q, B, PMinus };
Region region_of(const Key& k);
Key shifted(const Key& k, int eps);

// Triangle slots in anticlockwise order: corner k is slot 2k and side k is slot 2k+1.
inline int corner_slot(int c) { return 2 * c; }
inline int side_slot(int s) { return 2 * s + 1; }
inline bool is_side_slot(int slot) { return slot % 2 == 1; }

struct SpineStep {
  int tri;
  int in;   // entry slot
  int out;  // exit slot

  auto operator<=>(const SpineStep&) const = default;
  bool operator==(const SpineStep&) const = default;
};

// An object whose lifts can be placed against a spine: an arc given by a walk
// of positive length, a base edge, or a boundary segment.
struct Curve {
  enum class Kind { Walk, Edge, Segment } kind = Kind::Walk;
  Walk walk;
  int id = -1;

  static Curve fromWalk(const Walk& w) { return {Kind::Walk, w, -1}; }
  static Curve edge(int e) { return {Kind::Edge, {}, e}; }
  static Curve segment(int b) { return {Kind::Segment, {}, b}; }
};

// Curve from a reduced walk (length-zero walks become base edges).
Curve curve_of(const SurfaceModel& s, const Walk& w);
// Walk representing the curve (boundary segments as a length-zero walk).
Walk walk_of(const SurfaceModel& s, const Curve& c);

// Endpoint of a placed lift: reached from spine step `step` by leaving through
// the listed sides and stopping at `corner` of the last triangle.
struct LiftEnd {
  Key key;
  int step = 0;
  std::vector<int> exits;
  int corner = -1;
  int vertex = -1;
};

struct Lift {
  int curve = -1;   // index into the placed curve list
  LiftEnd end[2];   // end[0] corresponds to the start of the curve's walk
};

class Spine {
 public:
  Spine(const SurfaceModel& s, std::vector<SpineStep> steps);

  const SurfaceModel& surface() const { return *s_; }
  const std::vector<SpineStep>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }

  // Key of a corner of a spine triangle.
  const Key& cornerKey(int step, int corner) const { return cornerKeys_[step][corner]; }
  // Key prefix of the points beyond a side slot that is not on the spine path.
  const Key& sideKey(int step, int side) const { return sideKeys_[step][side]; }

  // All lifts of the given curves that meet a spine triangle, each reported once.
  std::vector<Lift> place(const std::vector<Curve>& curves) const;

  // Unreduced walk between two lift endpoints along the spine.
  Walk walkBetween(const LiftEnd& a, const LiftEnd& b) const;

  // Walk from a lift endpoint to the corner at the end of the spine.
  LiftEnd startEnd() const;
  LiftEnd finishEnd() const;

 private:
  void placeWalk(int idx, const Walk& w, std::vector<Lift>& out) const;
  void placeSides(int idx, const Curve& c, std::vector<Lift>& out) const;

  const SurfaceModel* s_;
  std::vector<SpineStep> steps_;
  std::vector<std::array<Key, 3>> cornerKeys_;
  std::vector<std::array<Key, 3>> sideKeys_;
  std::vector<std::array<int, 3>> cornerClass_;
};

// Spine following a walk from its start corner to its end corner.
std::vector<SpineStep> walk_spine(const SurfaceModel& s, const Walk& w);

// Extends a walk spine around its end vertex (atEnd) or start vertex by
// rotating in direction dir (+1 clockwise, -1 anticlockwise) until a boundary
// side is reached, or for punctures one full turn plus one triangle.
void extend_spine_fan(const SurfaceModel& s, std::vector<SpineStep>& steps, bool atEnd, int dir);

// Cancels backtracks (a step whose entry and exit slots coincide).
void reduce_spine(std::vector<SpineStep>& steps);

// Among lifts with one end at the vertex `vertexKey`, the other end lying in
// region `r`, returns the index of the lift whose far end is first (smallest
// key when first = true, largest otherwise); -1 when none.
struct FanHit {
  int lift = -1;
  int nearEnd = -1;  // which end of the lift sits at the vertex
};
FanHit first_at_vertex(const std::vector<Lift>& lifts, const Key& vertexKey, Region r, bool smallest);

}  // namespace tsurf
