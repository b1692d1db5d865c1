#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

class SurfaceError : public std::runtime_error {
 public:
  enum class Kind { DegenerateSurface, NoBoundary, InvalidSpec };
  SurfaceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SurfaceSpec {
  int genus = 0;
  std::vector<int> boundary;  // marked points per boundary component
  int punctures = 0;

  bool operator==(const SurfaceSpec&) const = default;
};

// Rank of the surface: the number of arcs in any triangulation.
int surface_rank(const SurfaceSpec& spec);

// One triangle of the base triangulation. Corners are listed anticlockwise and
// side k joins corner k to corner k+1, so the triangle lies to its left.
struct Triangle {
  std::array<int, 3> vertex{};
  std::array<int, 3> glueTri{-1, -1, -1};   // neighbouring triangle, -1 on the boundary
  std::array<int, 3> glueSide{-1, -1, -1};  // side index in the neighbour
  std::array<int, 3> edge{-1, -1, -1};      // interior edge id or -1
  std::array<int, 3> segment{-1, -1, -1};   // boundary segment id or -1
};

struct EdgeRecord {
  int tri = -1;
  int side = -1;
  int twinTri = -1;
  int twinSide = -1;
};

struct MarkedPoint {
  int component = 0;
  int position = 0;
};

// Boundary segment from marked point `from` to its successor `to`, traversed
// with the surface on the left.
struct BoundarySegment {
  int from = -1;
  int to = -1;
  int tri = -1;
  int side = -1;
};

class SurfaceModel {
 public:
  const SurfaceSpec& spec() const { return spec_; }
  int rank() const { return static_cast<int>(edges_.size()); }

  // Vertices 0..numMarked()-1 are marked points, the rest are punctures.
  int numMarked() const { return static_cast<int>(marked_.size()); }
  int numPunctures() const { return spec_.punctures; }
  int numVertices() const { return numMarked() + numPunctures(); }
  bool isPuncture(int v) const { return v >= numMarked(); }
  int punctureVertex(int p) const { return numMarked() + p; }
  int punctureIndex(int v) const { return v - numMarked(); }

  const std::vector<Triangle>& triangles() const { return tris_; }
  const Triangle& tri(int t) const { return tris_[t]; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<BoundarySegment>& segments() const { return segments_; }
  const std::vector<MarkedPoint>& markedPoints() const { return marked_; }

  bool isBoundarySide(int t, int s) const { return tris_[t].glueTri[s] < 0; }

  // Successor and predecessor of a marked point along its boundary component.
  int nextMarked(int m) const;
  int prevMarked(int m) const;

  // Number of triangle corners at a vertex (its degree in the base triangulation).
  int cornerCount(int v) const { return cornerCount_[v]; }

  std::string vertexLabel(int v) const;

  int eulerCharacteristic() const;

 private:
  friend SurfaceModel build_surface(const SurfaceSpec& spec);
  void finalize();

  SurfaceSpec spec_;
  std::vector<MarkedPoint> marked_;
  std::vector<Triangle> tris_;
  std::vector<EdgeRecord> edges_;
  std::vector<BoundarySegment> segments_;
  std::vector<int> componentStart_;
  std::vector<int> cornerCount_;
};

void validate_spec(const SurfaceSpec& spec);
SurfaceModel build_surface(const SurfaceSpec& spec);

}  // namespace tsurf
