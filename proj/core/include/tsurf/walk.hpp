#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsurf/surface.hpp"

namespace tsurf {

class ArcError : public std::runtime_error {
 public:
  enum class Kind {
    NullHomotopic,
    BoundaryParallel,
    SelfIntersecting,
    IllegalMonogonCutout,
    InvalidWalk,
    TagMismatch,
    IncompatibleArc,
    DegenerateAfterCut,
  };
  ArcError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A curve between two corners, recorded as a path in the dual graph of the
// base triangulation. The curve starts at corner `corner` of triangle `tri`,
// leaves each visited triangle through the listed side and ends at corner
// `endCorner` of the last triangle.
struct Walk {
  int tri = -1;
  int corner = -1;
  std::vector<int> exits;
  int endCorner = -1;

  auto operator<=>(const Walk&) const = default;
  bool operator==(const Walk&) const = default;
};

// Triangle visited at each step of a walk, with entry and exit sides
// (entry of the first step and exit of the last step are -1).
struct WalkStep {
  int tri;
  int in;
  int out;
};

std::vector<WalkStep> walk_steps(const SurfaceModel& s, const Walk& w);
int last_triangle(const SurfaceModel& s, const Walk& w);
int start_vertex(const SurfaceModel& s, const Walk& w);
int end_vertex(const SurfaceModel& s, const Walk& w);
Walk reversed(const SurfaceModel& s, const Walk& w);
void check_walk(const SurfaceModel& s, const Walk& w);

// Result of bringing a walk into minimal position with the base triangulation.
struct Reduction {
  enum class Status { Arc, Edge, Boundary, Null } status;
  Walk walk;
  int id = -1;  // edge id or boundary segment id for the Edge and Boundary cases
};

// Removes backtracks and slides the ends off adjacent sides. Length-zero arcs
// are reported as base edges in their canonical triangle.
Reduction reduce_walk(const SurfaceModel& s, const Walk& w);

// Walk along base edge e, oriented from its record's start corner (or reversed).
Walk edge_walk(const SurfaceModel& s, int e, bool reverse = false);

// Corner reached by rotating once around the vertex at (tri, corner):
// dir = +1 crosses side `corner`, dir = -1 crosses side `corner - 1`.
struct Corner {
  int tri;
  int corner;
  bool operator==(const Corner&) const = default;
};
Corner rotate_corner(const SurfaceModel& s, Corner c, int dir);
int rotation_exit_side(Corner c, int dir);

// For a walk along a base edge, the representation in the triangle on the
// other side of the edge when rotating around both ends with the given senses
// would leave the current triangle through the edge itself. Other walks are
// returned unchanged.
Walk edge_walk_for_fans(const SurfaceModel& s, const Walk& w, int senseStart, int senseEnd);

// Moves the start of the walk to the neighbouring marked point: dir = +1 goes
// to the predecessor along the boundary, dir = -1 to the successor. The result
// is unreduced.
Walk slide_start_along_boundary(const SurfaceModel& s, const Walk& w, int dir);

// Loop based at the start of `w` going once around the puncture at its end.
Walk enclose_walk(const SurfaceModel& s, const Walk& w);

// True when the walk is a loop cutting out a once-punctured monogon; `puncture`
// receives the enclosed puncture vertex.
bool cuts_out_punctured_monogon(const SurfaceModel& s, const Walk& w, int* puncture = nullptr);

}  // namespace tsurf
