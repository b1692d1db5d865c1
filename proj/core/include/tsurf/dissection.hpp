#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsurf/rotation.hpp"
#include "tsurf/shear.hpp"

namespace tsurf {

class DissectionError : public std::runtime_error {
 public:
  enum class Kind { NotStandard, InternalInconsistency, CrossCheckMismatch, LimitExceeded };
  DissectionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Standardness through the shear criterion: e(delta) (resp. e^op(delta)) shears R.
bool is_standard(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);
bool is_costandard(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);

// Standardness read off the geometry of delta^R against R° and the boundary:
// membership or adjointness, or every arc segment cutting out an angle with
// the prescribed first neighbours at the ends.
bool is_standard_geometric(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);
bool is_costandard_geometric(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);

// Tagged triangulation T containing R with kappa_T = kappa_R on the punctures
// of R and +1 elsewhere, built greedily from short arcs.
PartialTaggedTriangulation good_completion(const SurfaceModel& s, const PartialTaggedTriangulation& r, int maxBound = 24);

// Standardness through vanishing of b_{gamma,T}(e(delta)) for gamma in T \ R.
bool is_standard_by_completion(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r,
                               const PartialTaggedTriangulation& t);

// Index with respect to R: -b_R(e(delta)); the co-variant uses e^op(delta).
std::vector<int> index_vector(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);
std::vector<int> co_index_vector(const SurfaceModel& s, const TaggedArc& d, const PartialTaggedTriangulation& r);

bool is_dissection(const SurfaceModel& s, const std::vector<TaggedArc>& u, const PartialTaggedTriangulation& r);

// Values b_{l,U}(e^op(gamma)) for gamma in R, in the order of R.arcs.
std::vector<int> flip_values(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l,
                             const PartialTaggedTriangulation& r);
// Common sign of the nonzero flip values.
int flip_sign(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l, const PartialTaggedTriangulation& r);

struct FlipResult {
  std::vector<TaggedArc> dissection;  // sorted
  TaggedArc newArc;
  int sign = 0;
  bool crossChecked = false;  // the sliding construction was compared
};

FlipResult flip(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l, const PartialTaggedTriangulation& r);

enum class MutationDirection { Left, Right };
MutationDirection mutation_direction(const SurfaceModel& s, const PartialTaggedTriangulation& u, int l,
                                     const PartialTaggedTriangulation& r);

struct TauTiltingLabel {
  std::vector<TaggedArc> moduleArcs;
  std::vector<TaggedArc> projectiveShiftArcs;
};
TauTiltingLabel tau_tilting_label(const SurfaceModel& s, const std::vector<TaggedArc>& u, const PartialTaggedTriangulation& r);

// Interior crossings of gamma with the ideal form of U.
int int_circ(const SurfaceModel& s, const TaggedArc& g, const PartialTaggedTriangulation& u);

struct GraphLimits {
  int maxVertices = 100000;
  int maxWordLength = 64;
};

struct GraphVertex {
  std::vector<TaggedArc> arcs;  // sorted
  int depth = 0;

  bool operator==(const GraphVertex&) const = default;
};

// Flip of vertex `from` at its arc `arc`, landing in vertex `to` whose new arc
// has index `newArc`.
struct GraphFlip {
  int from = -1;
  int arc = -1;
  int to = -1;
  int newArc = -1;
  int sign = 0;
  bool crossChecked = false;

  bool operator==(const GraphFlip&) const = default;
};

struct ExchangeGraph {
  std::vector<TaggedArc> context;
  std::vector<GraphVertex> vertices;
  std::vector<GraphFlip> flips;  // one per (vertex, arc) for expanded vertices
  bool complete = true;
  std::string limitReason;

  int vertexOf(const std::vector<TaggedArc>& arcs) const;
  bool operator==(const ExchangeGraph&) const = default;
};

// Breadth-first closure of {R} under flips. Stops with complete = false when a
// limit is hit.
ExchangeGraph exchange_graph(const SurfaceModel& s, const PartialTaggedTriangulation& r, const GraphLimits& limits,
                             int threads = 1);

struct ConnectivityReport {
  int vertices = 0;
  int edges = 0;
  bool complete = false;
  bool connected = false;
  bool regular = false;
  int degree = 0;
  bool symmetric = false;  // flipping back along every edge returns to the start
  std::optional<int> oracleCount;
  bool oracleMatches = true;
  bool ok() const { return complete && connected && regular && symmetric && oracleMatches; }
};

ConnectivityReport check_connected(const ExchangeGraph& g, std::optional<int> oracleCount = std::nullopt);

// Independent enumeration: R-standard arcs by bounded search with a
// stabilised bound, then maximal pairwise compatible sets.
struct DissectionEnumeration {
  std::vector<TaggedArc> standardArcs;
  std::vector<std::vector<TaggedArc>> dissections;
  int bound = 0;
};
DissectionEnumeration enumerate_dissections(const SurfaceModel& s, const PartialTaggedTriangulation& r, int startBound = 4,
                                            int margin = 8, int maxBound = 40);

}  // namespace tsurf
