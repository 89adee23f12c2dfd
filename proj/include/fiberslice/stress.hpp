#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "fiberslice/geometry.hpp"
#include "fiberslice/mesh.hpp"

namespace fiberslice {

/// Symmetric Cauchy stress in MPa, Voigt-style storage.
struct StressTensor {
  double xx = 0, yy = 0, zz = 0, xy = 0, yz = 0, zx = 0;

  Mat3 matrix() const;
  static StressTensor from_matrix(const Mat3& m);
  bool finite() const;
  friend bool operator==(const StressTensor&, const StressTensor&) = default;
};

/// Principal values sorted by magnitude, |values[0]| >= |values[1]| >= |values[2]|.
struct PrincipalStress {
  std::array<double, 3> values{0, 0, 0};
  std::array<Vec3, 3> directions{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  bool degenerate = true;  // |s1| - |s2| below the tie tolerance

  double max_value() const { return values[0]; }
  double max_magnitude() const { return std::abs(values[0]); }
  const Vec3& max_direction() const { return directions[0]; }
};

struct Material {
  double youngs_modulus = 3500.0;  // MPa, PLA
  double poisson_ratio = 0.36;
};

struct SurfaceLoad {
  std::vector<int> boundary_faces;  // indices into TetMesh::boundary_faces()
  Vec3 traction = Vec3::Zero();     // MPa
};

struct PrescribedDisplacement {
  int vertex = -1;
  Vec3 displacement = Vec3::Zero();  // mm
};

struct BoundaryCondition {
  std::vector<int> fixed_vertices;  // displacement pinned to zero
  std::vector<SurfaceLoad> loads;
  std::vector<PrescribedDisplacement> prescribed;  // non-zero Dirichlet data
  Material material;
};

struct ElasticitySolution {
  std::vector<Vec3> displacement;
  std::vector<StressTensor> stress;
  double relative_residual = 0.0;
};

/// Relative tie tolerance for the degenerate flag: |s1| - |s2| < kPrincipalTieTol * max(1, |s1|).
inline constexpr double kPrincipalTieTol = 1e-3;

/// Boundary faces whose three vertices are all in `vertices` (sorted set).
std::vector<int> boundary_faces_within(const TetMesh& mesh, std::span<const int> vertices);

/// Constant-strain tetrahedral linear elasticity. Throws SolverError when rigid-body
/// modes remain unconstrained or the linear solve does not reach 1e-8 relative residual.
ElasticitySolution solve_elasticity(const TetMesh& mesh, const BoundaryCondition& bc);
std::vector<StressTensor> solve_linear_elasticity(const TetMesh& mesh, const BoundaryCondition& bc);

/// Stress CSV: header "elem,sxx,syy,szz,sxy,syz,szx", one row per element.
std::vector<StressTensor> load_stress_field(const std::filesystem::path& path, const TetMesh& mesh);
void save_stress_field(const std::filesystem::path& path, std::span<const StressTensor> stress);

PrincipalStress principal_decompose(const StressTensor& t);
std::vector<PrincipalStress> principal_decompose_all(std::span<const StressTensor> stress, int threads = 1);

}  // namespace fiberslice
