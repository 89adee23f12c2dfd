#pragma once

#include <span>
#include <vector>

#include "fiberslice/mesh.hpp"

namespace fiberslice {

struct CriticalContours {
  std::vector<std::vector<int>> critical;  // closed loops {H_i}
  std::vector<std::vector<int>> outer;     // every other boundary loop
};

/// Boundary loops with a vertex inside any selector are critical. Throws
/// TopologyError on an open boundary chain.
CriticalContours detect_contours(const TriMesh& surface, std::span<const Selector> critical);

/// Region id per vertex: nearest source (smallest field value), ties to the lowest
/// field index. `farthest` flips the comparison. Vertices no field reaches get -1.
std::vector<int> voronoi_partition(std::span<const VertexField> fields, bool farthest = false);

/// Region vertex closest to the area-weighted centroid of the faces whose three
/// corners lie in the region (vertex average when there are none). Lowest index wins ties.
int region_center(const TriMesh& surface, std::span<const int> region_vertices);
Vec3 region_centroid(const TriMesh& surface, std::span<const int> region_vertices);

struct CutPath {
  enum class Kind { CenterToContour, CenterToCenter, ContourToOuter };
  Kind kind = Kind::CenterToContour;
  std::vector<int> vertices;  // consecutive entries share a mesh edge
  int from = -1;              // contour / center indices, -1 for the outer boundary
  int to = -1;
};

struct CutGraph {
  std::vector<CutPath> paths;
  bool empty() const { return paths.empty(); }
};

struct CutGraphOptions {
  /// Adds one path from the critical contours' tree to the outer boundary, so all
  /// contours merge with the outer loop into one boundary.
  bool link_outer = true;
};

/// Shortest edge paths c_i -> H_i, a minimum spanning tree over the centers (each tree
/// edge realized as the shortest link between the cut components of its two centers), and
/// optionally one link to the outer boundary. Intermediate path vertices avoid the
/// boundary and earlier paths, so the cut never encloses a patch. Throws Error
/// naming the pair when a required connection is unreachable.
CutGraph build_cut_graph(const TriMesh& surface, std::span<const int> centers, const CriticalContours& contours,
                         std::span<const VertexField> geodesics, const CutGraphOptions& options = {});

struct CutMesh {
  TriMesh mesh;
  std::vector<int> original_vertex;  // per vertex of `mesh`
};

/// Duplicates vertices along the cut so faces on either side reference distinct
/// copies. Face order and count are preserved. Throws TopologyError if a path step
/// is not a mesh edge.
CutMesh cut_mesh(const TriMesh& surface, const CutGraph& cut);

/// Number of boundary loops (union-find over boundary edges).
int boundary_component_count(const TriMesh& surface);

}  // namespace fiberslice
