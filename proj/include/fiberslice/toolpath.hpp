#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberslice/layer_field.hpp"
#include "fiberslice/mesh.hpp"
#include "fiberslice/stress.hpp"
#include "fiberslice/topology.hpp"

namespace fiberslice {

/// Projection magnitude below which a face's stress counts as normal to the layer.
inline constexpr double kProjectionDegenerate = 0.1;

struct LayerStress {
  std::vector<double> magnitude;   // |sigma_1| of the source tet
  std::vector<Vec3> direction;     // unit, tangent to the face (zero when degenerate)
  std::vector<double> projection;  // length of the projected unit direction before normalization
  std::vector<char> degenerate;
};

LayerStress project_stress(const TriMesh& surface, std::span<const PrincipalStress> tet_stress);
inline LayerStress project_stress(const CurvedLayer& layer, std::span<const PrincipalStress> tet_stress) {
  return project_stress(layer.surface, tet_stress);
}

struct ToolpathWeights {
  double sf = 1.0;  // stress following
  double cp = 1.0;  // continuity protection along the cut
  double hf = 0.5;  // gradient compatibility
};

struct ToolpathField {
  VertexField values;  // per vertex of the cut mesh, normalized to [0, 1] per component
  std::vector<std::string> notes;  // gauge fallbacks taken
};

/// Least-squares toolpath field on the cut layer. Components containing critical
/// contours are pinned to 1 there and 0 on their outer boundary; other components are
/// pinned at the two extreme vertices of the sweep across the dominant stress direction.
ToolpathField solve_toolpath_field(const CutMesh& cut_surface, const LayerStress& stress, const CutGraph& cut,
                                   const CriticalContours& contours, const ToolpathWeights& weights);

enum class PathMaterial { Fiber, Matrix };
std::string_view to_string(PathMaterial m);

struct Waypoint {
  Vec3 position = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  double parameter = 0.0;  // arc length from the path start
};

struct Toolpath {
  std::vector<Waypoint> waypoints;
  bool closed = false;
  int layer_index = 0;
  int path_index = 0;
  PathMaterial material = PathMaterial::Fiber;
  double iso_value = 0.0;

  double length() const;
};

/// Iso-values (i + 0.5) / n_paths.
std::vector<double> path_iso_values(int n_paths);

/// Marching triangles at every iso-value, linked into maximal polylines and ordered by
/// decreasing iso-value. A vertex equal to the iso-value counts as above it.
std::vector<Toolpath> extract_isocurves(const TriMesh& surface, const VertexField& p, int n_paths,
                                        int layer_index = 0, PathMaterial material = PathMaterial::Fiber);
std::vector<Toolpath> extract_isocurves_at(const TriMesh& surface, const VertexField& p,
                                           std::span<const double> iso_values, int layer_index, PathMaterial material);

/// Path count whose mean spacing matches `spacing`: area / (mean iso-curve length * spacing).
int estimate_path_count(const TriMesh& surface, const VertexField& p, double spacing, int max_paths = 2000);

/// Distance-from-boundary field normalized to [0, 1] per component (contour-parallel pattern).
VertexField boundary_offset_field(const TriMesh& surface);

struct LayerToolpathOptions {
  ToolpathWeights weights;
  std::vector<Selector> critical;
  double fiber_width = 0.37;           // mm, path spacing
  std::optional<int> n_paths;          // overrides the spacing estimate
  bool matrix_paths = true;
  double matrix_spacing = 0.37;
  bool voronoi_farthest = false;
  CutGraphOptions cut;
};

struct LayerToolpaths {
  LayerStress stress;
  CriticalContours contours;
  std::vector<int> centers;
  CutGraph cut;
  CutMesh cut_surface;
  ToolpathField field;
  std::vector<Toolpath> fiber;
  std::vector<Toolpath> matrix;
};

/// Projection, topology analysis, field solve and extraction for one layer.
LayerToolpaths plan_layer_toolpaths(const CurvedLayer& layer, std::span<const PrincipalStress> tet_stress,
                                    const LayerToolpathOptions& options);

/// CSV "layer,path,seq,x,y,z,nx,ny,nz,material", six decimals, sorted by (layer, path, seq).
void export_waypoints(std::span<const Toolpath> toolpaths, const std::filesystem::path& path);
std::vector<Toolpath> load_waypoints(const std::filesystem::path& path);

}  // namespace fiberslice
