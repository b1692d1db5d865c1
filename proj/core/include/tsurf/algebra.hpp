#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tsurf/triangulation.hpp"

namespace tsurf {

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { NotAdmissible, WrongMode, AxiomViolation };
  AlgebraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
  // Geometric origin when extracted from a triangulation: the shared marked
  // point and the arc ends (0 or 1) at which the arrow starts and ends.
  int point = -1;
  int sourceEnd = -1;
  int targetEnd = -1;

  bool operator==(const Arrow&) const = default;
};

// Path of length two: arrow `first` followed by arrow `second`. An idempotent
// relation stands for e^2 - e on a special loop e (first == second).
struct Relation {
  int first = -1;
  int second = -1;
  bool idempotent = false;

  auto operator<=>(const Relation&) const = default;
};

struct QuiverPresentation {
  enum class Mode { Tiling, SkewTiling };
  Mode mode = Mode::Tiling;
  std::vector<std::string> vertices;
  std::vector<IdealArc> arcs;     // vertex i is arcs[i] when extracted from a triangulation
  std::vector<Arrow> arrows;
  std::vector<int> specialLoops;  // arrow indices of the loops at non-folded sides of self-folded triangles
  std::vector<Relation> relations;

  // "vertices: ...; arrows: a: i -> j; special: {..}; relations: [ab, ...]" on four lines.
  std::string text() const;
  bool operator==(const QuiverPresentation&) const = default;
};

struct SkewGentleTriple {
  int numVertices = 0;
  std::vector<Arrow> arrows;        // Q, without the special loops
  std::vector<int> special;         // Sp
  std::vector<Relation> relations;  // I, indices into `arrows`
};

QuiverPresentation tiling_presentation(const SurfaceModel& s, const IdealTriangulation& r);
QuiverPresentation skew_tiling_presentation(const SurfaceModel& s, const IdealTriangulation& r);

// Checks the skew-gentle conditions on the quiver with the special loops and
// their squares added, and returns the triple (Q, Sp, I).
SkewGentleTriple validate_skew_gentle(const QuiverPresentation& p);

}  // namespace tsurf
