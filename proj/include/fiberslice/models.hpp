#pragma once

#include <vector>

#include "fiberslice/mesh.hpp"
#include "fiberslice/stress.hpp"

// Synthetic models: structured tet meshes, analytic stress fields and flat or
// curved test surfaces.
namespace fiberslice::models {

/// nx*ny*nz cells, each split into six tets around its main diagonal (conforming).
TetMesh box_mesh(const Vec3& lo, const Vec3& hi, int nx, int ny, int nz);

/// Unit cube split into five tets (one central, four corners).
TetMesh five_tet_cube();

/// Extrudes a planar triangulation (z ignored) into `layers` prism layers over [z0, z1],
/// three tets per prism with diagonals through the lower-index vertex.
TetMesh extrude(const TriMesh& base, double z0, double z1, int layers);

struct Bar {
  TetMesh mesh;  // labels: fixture at x = 0, load at x = length
  BoundaryCondition bc;
  double length = 0, width = 0, height = 0;
  double force = 0;  // N along +x
  double area() const { return width * height; }
};

/// Clamped bar pulled along +x by a uniform traction on its end face.
Bar uniaxial_bar(double length = 100, double width = 10, double height = 10, int nx = 20, int ny = 2, int nz = 2,
                 double force = 1000);

/// Uniform field sigma * x^ x^ for every element.
std::vector<StressTensor> uniaxial_stress(const TetMesh& mesh, double sigma);

struct TwistBar {
  double length = 100;
  double width = 20;          // y and z extent, centred on the x axis
  double twist = 0.785398163397448;  // total rotation over the length, rad
  double sigma0 = 10;         // MPa

  double rate() const { return twist / length; }
  /// Unit fiber direction at p.
  Vec3 direction(const Vec3& p) const;
  /// Exact layer function (its level sets contain the fiber direction).
  double layer_coordinate(const Vec3& p) const;
  /// Exact in-layer coordinate across the fibers.
  double path_coordinate(const Vec3& p) const;
  /// sigma0 * d d^T evaluated at every element centroid.
  std::vector<StressTensor> stress(const TetMesh& mesh) const;
  /// Box mesh with fixture/load labels on the two end faces.
  TetMesh mesh(int nx = 36, int ny = 7, int nz = 7) const;
};

// ---- surfaces (z = 0 unless stated)

TriMesh flat_square(double size, int n);
TriMesh equilateral_triangle(double side, int n);
TriMesh l_shape(double size, int n);  // [0,size]^2 minus the upper right quarter
TriMesh annulus(double r_in, double r_out, int n_theta, int n_r);
/// Open tube of radius r along z, height h.
TriMesh cylinder(double r, double h, int n_theta, int n_z);

struct HolePlate {
  TriMesh surface;
  std::vector<Vec3> hole_centers;
  double hole_radius = 0;
};

/// Rectangle [0, holes*cell] x [0, cell] with one circular hole per square cell,
/// meshed as structured rings from each hole to its cell border.
HolePlate hole_plate(int holes = 2, double cell = 20, double hole_radius = 4, int per_side = 8, int rings = 6);

}  // namespace fiberslice::models
