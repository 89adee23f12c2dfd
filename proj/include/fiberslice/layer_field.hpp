#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "fiberslice/mesh.hpp"
#include "fiberslice/psl.hpp"
#include "fiberslice/stress.hpp"

namespace fiberslice {

struct LayerWeights {
  double sf = 1.0;  // stress following
  double cg = 0.5;  // compatibility in gradient
  double cp = 0.1;  // continuity protection
};

struct LayerFieldProblem {
  LayerWeights weights;
  std::vector<std::vector<int>> roi_regions;  // each a sorted vertex set
  std::vector<int> anchor_low;                // pinned to 0
  std::vector<int> anchor_high;               // pinned to 1
};

/// Unweighted energy terms of a field.
struct LayerEnergies {
  double sf = 0.0;
  double cg = 0.0;
  double cp = 0.0;
};

struct GuidanceSolution {
  VertexField field;         // normalized to [0, 1]
  VertexField raw;           // anchored solution before normalization
  LayerEnergies energies;    // evaluated on `raw`
  double relative_residual = 0.0;
};

/// Vertices within one ring of the lowest and highest vertex along `build_dir`
/// (lowest vertex index wins ties).
std::pair<std::vector<int>, std::vector<int>> default_anchors(const TetMesh& mesh, const Vec3& build_dir);

/// roi_rings-ring neighbourhoods of the fixture and load label sets, plus any labelled ROI sets.
std::vector<std::vector<int>> label_roi_regions(const TetMesh& mesh, int roi_rings);

LayerEnergies layer_energies(const TetMesh& mesh, std::span<const PrincipalStress> principal, const PslWeights& w,
                             std::span<const std::vector<int>> roi_regions, const VertexField& g);

/// Affine map of `g` onto [0, 1]. Throws SolverError on a constant field.
VertexField normalize_field(const VertexField& g);

/// Least-squares guidance field with hard anchors. Throws SolverError naming any mesh
/// component that no anchor reaches.
GuidanceSolution solve_guidance(const TetMesh& mesh, std::span<const PrincipalStress> principal, const PslWeights& w,
                                const LayerFieldProblem& problem);
VertexField solve_guidance_field(const TetMesh& mesh, std::span<const PrincipalStress> principal,
                                 const PslWeights& w, const LayerFieldProblem& problem);

struct CurvedLayer {
  TriMesh surface;
  double iso_value = 0.0;
  int layer_index = 0;
};

/// Iso-values (i + 0.5) / n_layers.
std::vector<double> layer_iso_values(int n_layers);

/// Marching tetrahedra at a single iso-value. A vertex whose value equals the iso-value
/// is treated as lying above it. Faces are oriented along increasing G.
CurvedLayer extract_isosurface(const TetMesh& mesh, const VertexField& g, double iso, int layer_index);
std::vector<CurvedLayer> extract_isosurfaces(const TetMesh& mesh, const VertexField& g, int n_layers,
                                             int threads = 1);

// Closest-point queries against a fixed triangle mesh.
class SurfaceDistance {
 public:
  explicit SurfaceDistance(const TriMesh& surface);
  bool empty() const { return surface_->num_faces() == 0; }
  double distance(const Vec3& p) const;

 private:
  const TriMesh* surface_;
  Bvh bvh_;
};

/// Distance from each sample to layer_prev; nullopt when layer_prev is empty.
std::vector<std::optional<double>> measure_layer_thickness(const CurvedLayer& layer_i, const CurvedLayer& layer_prev,
                                                           std::span<const Vec3> samples);

void save_vertex_field(const std::filesystem::path& path, const VertexField& f);
VertexField load_vertex_field(const std::filesystem::path& path, std::size_t expected_size);
void save_layer_obj(const std::filesystem::path& path, const TriMesh& surface);
/// Sidecar CSV "layer,iso_value,face_count,area_mm2".
void save_layer_table(const std::filesystem::path& path, std::span<const CurvedLayer> layers);

}  // namespace fiberslice
