#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsurf/arc.hpp"

namespace tsurf {

class TriangulationError : public std::runtime_error {
 public:
  enum class Kind { Incompatible, FoldedClosureViolated, NotAdmissible };
  TriangulationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Self-folded triangle of a partial ideal triangulation: the loop `loop`
// encloses puncture `puncture`, and `folded` joins the loop's base point to it.
struct SelfFolded {
  int loop = -1;    // index of the non-folded side
  int folded = -1;  // index of the folded side
  int puncture = -1;
};

// Partial ideal triangulation: pairwise compatible ideal arcs closed under
// adding the folded side of every loop around a single puncture.
struct IdealTriangulation {
  std::vector<IdealArc> arcs;
  std::vector<SelfFolded> selfFolded;
};

// Partial tagged triangulation with its derived data.
struct PartialTaggedTriangulation {
  std::vector<TaggedArc> arcs;      // sorted canonical arcs
  std::map<int, int> kappa;         // puncture vertex -> -1, 0 or +1 on touched punctures
  IdealTriangulation ideal;         // the ideal form
  std::vector<int> circ;            // arcs[i] corresponds to ideal.arcs[circ[i]]

  int size() const { return static_cast<int>(arcs.size()); }
  int indexOf(const TaggedArc& a) const;
};

// Builds a partial tagged triangulation, checking pairwise compatibility.
PartialTaggedTriangulation make_partial(const SurfaceModel& s, std::vector<TaggedArc> arcs, bool check = true);

std::map<int, int> compute_kappa(const SurfaceModel& s, const std::vector<TaggedArc>& arcs);

// Ideal form of a single arc of R: plain underlying arc, except that an arc
// tagged -1 at a puncture with kappa 0 becomes the loop around that puncture.
IdealArc circ_arc(const SurfaceModel& s, const TaggedArc& a, const std::map<int, int>& kappa);

// Completes the self-folded data of a set of ideal arcs.
IdealTriangulation make_ideal(const SurfaceModel& s, std::vector<IdealArc> arcs);

// Tagged form of a partial ideal triangulation (loops around a puncture
// become the notched folded side).
std::vector<TaggedArc> tagged_form(const SurfaceModel& s, const IdealTriangulation& r);

// Changes tags at punctures where kappa is -1.
TaggedArc retag(const TaggedArc& a, const SurfaceModel& s, const std::map<int, int>& kappa);

bool is_admissible(const SurfaceModel& s, const IdealTriangulation& r);

// Every connected component of R (arcs linked by shared endpoints) contains an
// arc with an end at a marked point.
bool connects_to_boundary(const SurfaceModel& s, const std::vector<TaggedArc>& r);

bool compatible(const SurfaceModel& s, const TaggedArc& a, const TaggedArc& b);

}  // namespace tsurf
