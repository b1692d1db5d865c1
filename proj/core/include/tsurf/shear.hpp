#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "tsurf/triangulation.hpp"

namespace tsurf {

class ShearError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// End of a laminate: a point of a boundary segment strictly between its two
// marked points, or a spiral around a puncture.
struct LaminateEnd {
  enum class Kind { Boundary, Spiral } kind = Kind::Boundary;
  int segment = -1;   // boundary segment id
  int puncture = -1;  // puncture vertex
  int sense = 0;      // kClockwise or kAnticlockwise, for spirals

  auto operator<=>(const LaminateEnd&) const = default;
  bool operator==(const LaminateEnd&) const = default;
};

// Laminate recorded by the triangles it passes through. A boundary end enters
// through the boundary side; a spiral end is cut off where the curve first
// reaches the corner of its puncture, and the spiral itself stays symbolic.
struct Laminate {
  std::vector<SpineStep> path;
  std::array<LaminateEnd, 2> ends;

  auto operator<=>(const Laminate&) const = default;
  bool operator==(const Laminate&) const = default;
};

Laminate elementary_laminate(const SurfaceModel& s, const TaggedArc& a);
Laminate co_elementary_laminate(const SurfaceModel& s, const TaggedArc& a);

// Reverses the spirals at puncture vertex p.
Laminate reverse_spirals(const SurfaceModel& s, const Laminate& l, int p);
// L^R: spirals reversed at punctures where kappa is -1.
Laminate retag(const SurfaceModel& s, const Laminate& l, const std::map<int, int>& kappa);

// Path of the laminate with each spiral unrolled for `turnSteps` triangles.
std::vector<SpineStep> unroll(const SurfaceModel& s, const Laminate& l, int turnSteps);

struct ShearCrossing {
  int curve = -1;  // index of the crossed arc
  Key a, b;        // ends of the crossed lift on either side of the laminate
  int contribution = 0;
};

// Crossings of a laminate with the lifts of a set of ideal arcs, in order
// along the laminate, together with the angle test.
struct ShearSequence {
  bool shears = true;
  std::vector<ShearCrossing> crossings;
};

ShearSequence shear_sequence(const SurfaceModel& s, const Laminate& l, const std::vector<IdealArc>& arcs);

// Shear coordinates against an ideal partial triangulation, with the rule for
// folded sides of self-folded triangles. Entries follow r.arcs.
std::vector<int> shear_vector_ideal(const SurfaceModel& s, const Laminate& l, const IdealTriangulation& r);
bool shears_ideal(const SurfaceModel& s, const Laminate& l, const IdealTriangulation& r);

// Shear coordinates b_R(L) and the shearing test, applying L -> L^R first.
// Entries follow R.arcs.
std::vector<int> shear_vector(const SurfaceModel& s, const Laminate& l, const PartialTaggedTriangulation& r);
bool shears(const SurfaceModel& s, const Laminate& l, const PartialTaggedTriangulation& r);

}  // namespace tsurf
