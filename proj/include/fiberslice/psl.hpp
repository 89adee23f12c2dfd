#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "fiberslice/mesh.hpp"
#include "fiberslice/stress.hpp"

namespace fiberslice {

enum class Termination { Boundary, MaxLength, ZeroDirection };
std::string_view to_string(Termination t);

struct PrincipalStressLine {
  std::vector<Vec3> points;
  // crossed_elements[i] holds the segment points[i] -> points[i + 1]. A trace that
  // never left its seed keeps a single entry, the seed itself.
  std::vector<int> crossed_elements;
  int source_element = -1;
  Termination terminated_by = Termination::Boundary;

  double length() const;
};

struct PslWeights {
  std::vector<int> n_psl;  // one per tet
};

/// Default trace budget: 100 average edge lengths.
double default_max_psl_length(const TetMesh& mesh);

/// Streamline of the major principal direction through the centroid of e0, traced in
/// both directions from the seed. Total length never exceeds l_max.
PrincipalStressLine trace_psl(const TetMesh& mesh, std::span<const PrincipalStress> principal, int e0, double l_max);

/// One trace per element, in element order.
std::vector<PrincipalStressLine> trace_all_psls(const TetMesh& mesh, std::span<const PrincipalStress> principal,
                                                double l_max, int threads = 1);

/// Keeps traces that cross both a fixture-adjacent and a load-adjacent element.
/// Throws Error when the mesh lacks fixture or load labels.
std::vector<PrincipalStressLine> select_psls(std::span<const PrincipalStressLine> psls, const TetMesh& mesh);

PslWeights count_psl_weights(const TetMesh& mesh, std::span<const PrincipalStressLine> selected);

/// "e0;x0,y0,z0;x1,y1,z1;..." one trace per line.
void save_psls(const std::filesystem::path& path, std::span<const PrincipalStressLine> psls);
/// CSV "elem,n_psl".
void save_psl_weights(const std::filesystem::path& path, const PslWeights& w);
PslWeights load_psl_weights(const std::filesystem::path& path, const TetMesh& mesh);

}  // namespace fiberslice
