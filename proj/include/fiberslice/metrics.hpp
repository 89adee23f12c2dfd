#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "fiberslice/layer_field.hpp"
#include "fiberslice/mesh.hpp"
#include "fiberslice/psl.hpp"
#include "fiberslice/stress.hpp"
#include "fiberslice/toolpath.hpp"

namespace fiberslice {

// Point location in a tet mesh. A point within 1e-9 (barycentric) of several tets
// belongs to the lowest-index one.
class TetLocator {
 public:
  explicit TetLocator(const TetMesh& mesh);
  int locate(const Vec3& p) const;  // -1 when outside

 private:
  const TetMesh* mesh_;
  Bvh bvh_;
};

inline constexpr double kLocateTolerance = 1e-9;
inline constexpr double kHistogramBinDeg = 2.0;

struct AlignmentReport {
  // Segments whose midpoint lies in a tet with N_PSL > 0.
  std::vector<double> angles;  // degrees in [0, 90]
  std::vector<double> lengths;
  double mean = 0.0;                  // per segment
  double mean_length_weighted = 0.0;
  double median = 0.0;
  double fraction_within_10 = 0.0;
  std::vector<double> histogram;  // fraction per 2 degree bin, 45 bins

  // Segments located outside the critical region, reported separately.
  std::size_t noncritical_count = 0;
  double noncritical_mean = 0.0;
  std::size_t skipped = 0;  // midpoints outside the mesh or zero-length segments
};

/// Angle between each toolpath segment and sigma_max of the tet containing its midpoint.
AlignmentReport alignment_stats(std::span<const Toolpath> toolpaths, std::span<const PrincipalStress> tet_stress,
                                const PslWeights& weights, const TetMesh& mesh, int threads = 1);

/// Aggregates per-segment samples into a report. Exposed for recomputation checks.
void summarize_alignment(AlignmentReport& report);

struct ThicknessBand {
  double lo = 0.3;
  double hi = 0.7;
  bool relative = false;  // band is a multiple of the median when set
};

struct ThicknessReport {
  std::vector<double> samples;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
  double fraction_in_band = 0.0;
  double band_lo = 0.0;  // absolute band actually used
  double band_hi = 0.0;
  std::size_t skipped = 0;
};

/// Distance from each waypoint on layer i to layer i-1. Layers are matched by
/// layer_index; a single layer gives an empty report.
ThicknessReport thickness_stats(std::span<const CurvedLayer> layers, std::span<const Toolpath> toolpaths,
                                const ThicknessBand& band, int threads = 1);

struct LayerContourSet {
  int layer_index = 0;
  std::vector<std::vector<Vec3>> critical;  // closed polylines
  double tolerance = 0.0;                   // typically two edge lengths
};

struct LayerContinuity {
  int layer_index = 0;
  int components = 0;
  bool all_contours_visited = true;
  int sharp_turns = 0;  // turning angles >= 30 degrees
};

struct ContinuityReport {
  std::vector<LayerContinuity> layers;
};

inline constexpr double kSharpTurnDeg = 30.0;

ContinuityReport continuity_report(std::span<const Toolpath> toolpaths, std::span<const LayerContourSet> contours);

/// Number of turning angles >= kSharpTurnDeg along one path (wraps for closed paths).
int count_sharp_turns(const Toolpath& path);

void save_alignment_report(const std::filesystem::path& path, const AlignmentReport& r);
/// CSV "bin_start_deg,fraction".
void save_alignment_histogram(const std::filesystem::path& path, const AlignmentReport& r);
void save_thickness_report(const std::filesystem::path& path, const ThicknessReport& r);
/// CSV "layer,components,all_contours_visited,sharp_turns".
void save_continuity_report(const std::filesystem::path& path, const ContinuityReport& r);

}  // namespace fiberslice
