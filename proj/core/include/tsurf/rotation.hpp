#pragma once

#include <array>
#include <vector>

#include "tsurf/triangulation.hpp"

namespace tsurf {

// Arc on the surface cut along a partial tagged triangulation N, expressed as
// a curve on the original surface. Ends at punctures of N have become marked
// points of the cut surface and carry no tag.
struct CutArc {
  Walk walk;
  std::array<int, 2> tag{0, 0};

  bool operator==(const CutArc&) const = default;
};

// The surface cut along the ideal form of N. The cut is realized on the
// original triangulation: arcs of N become boundary segments of the cut
// surface, and transport maps F_N and its inverse act on arc records.
class CutSurface {
 public:
  CutSurface(const SurfaceModel& s, std::vector<TaggedArc> n);

  const SurfaceModel& surface() const { return *s_; }
  const PartialTaggedTriangulation& cutSet() const { return n_; }
  // True when v is a puncture touched by N (a marked point after cutting).
  bool isCutPuncture(int v) const { return n_.kappa.count(v) > 0; }

  // F_N; throws ArcError(IncompatibleArc) when the arc crosses N.
  CutArc forward(const TaggedArc& l) const;
  // F_N^{-1}.
  TaggedArc backward(const CutArc& a) const;
  // Tagged rotation of the cut surface.
  CutArc rotate(const CutArc& a, int direction) const;

 private:
  const SurfaceModel* s_;
  PartialTaggedTriangulation n_;
  std::vector<Curve> walls_;  // arcs of N° and boundary segments
};

CutSurface cut(const SurfaceModel& s, const TaggedArc& eta);

// rho_N^{direction}(l) = F_N^{-1} rho_{S/N}^{direction} F_N (l).
TaggedArc relative_rotation(const SurfaceModel& s, const TaggedArc& l, const std::vector<TaggedArc>& n, int direction);

// Moves the ends of a walk along the first neighbouring wall in the given
// rotation sense around each end that is allowed to move. Returns the
// unreduced walk.
Walk slide_ends(const SurfaceModel& s, const Walk& w, const std::vector<Curve>& walls, std::array<bool, 2> move, int sense);

// Positive (sign = +1) or negative (sign = -1) flip of arc idx of a partial
// ideal triangulation by sliding its ends along neighbouring arcs.
IdealArc slide_flip(const SurfaceModel& s, const IdealTriangulation& v, int idx, int sign);

}  // namespace tsurf
