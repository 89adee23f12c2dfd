#pragma once

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "fiberslice/mesh.hpp"

namespace fiberslice {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Shortest edge-path distances from the sources; kUnreachable where no path exists.
std::vector<double> dijkstra_distance(const TriMesh& mesh, std::span<const int> sources);

// Heat-method geodesic distance. The two factorizations depend only on the mesh,
// so one instance serves any number of source sets.
class HeatGeodesic {
 public:
  explicit HeatGeodesic(const TriMesh& mesh);
  ~HeatGeodesic();
  HeatGeodesic(const HeatGeodesic&) = delete;
  HeatGeodesic& operator=(const HeatGeodesic&) = delete;

  /// Distance field: zero on sources, non-negative, kUnreachable on components
  /// without a source. Falls back to edge-graph Dijkstra if the heat solve fails.
  VertexField distance(std::span<const int> sources) const;

  double time_step() const { return t_; }

 private:
  struct Impl;
  const TriMesh& mesh_;
  double t_ = 0.0;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper for a single source set.
VertexField geodesic_field(const TriMesh& mesh, std::span<const int> sources);

}  // namespace fiberslice
