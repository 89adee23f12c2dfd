#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fiberslice/geometry.hpp"

namespace fiberslice {

/// Absolute degeneracy thresholds, in mm-scale units.
inline constexpr double kMinTetVolume = 1e-12;
inline constexpr double kMinTriArea = 1e-12;

/// Region selector used for labels, loads and critical regions.
struct Selector {
  enum class Kind { Box, Sphere, Vertices };
  Kind kind = Kind::Vertices;
  Vec3 lo = Vec3::Zero();  // box
  Vec3 hi = Vec3::Zero();
  Vec3 center = Vec3::Zero();  // sphere
  double radius = 0.0;
  std::vector<int> vertices;  // explicit list

  static Selector box(const Vec3& lo, const Vec3& hi);
  static Selector sphere(const Vec3& center, double radius);
  static Selector list(std::vector<int> vertices);

  /// Geometric containment; always false for explicit vertex lists.
  bool contains(const Vec3& p) const;
  /// Resolves the selector to a sorted vertex set of a point cloud.
  std::vector<int> select(std::span<const Vec3> points) const;
};

/// Vertex label sets of a solid model.
struct VertexLabels {
  std::vector<int> fixture;              // dM_F
  std::vector<int> load;                 // dM_L
  std::vector<std::vector<int>> roi;     // continuity regions
};

/// Per-vertex scalar field. Bound to a mesh by vertex count only.
struct VertexField {
  std::vector<double> values;

  VertexField() = default;
  explicit VertexField(std::vector<double> v) : values(std::move(v)) {}
  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

// Tetrahedral mesh with face adjacency. Local face k of a tet is the face
// opposite its vertex k; kTetFaces lists its vertices ordered so that the
// normal points out of a positively oriented tet.
class TetMesh {
 public:
  static constexpr std::array<std::array<int, 3>, 4> kTetFaces{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};

  struct BoundaryFace {
    std::array<int, 3> v;  // outward oriented
    int tet = -1;
    int local = -1;
  };
  struct InteriorFace {
    std::array<int, 3> v;  // oriented outward of tets[0]
    std::array<int, 2> tets{-1, -1};
    std::array<int, 2> local{-1, -1};
  };

  TetMesh() = default;
  /// Builds adjacency. Negative-volume tets are reoriented in place.
  /// Throws TopologyError on out-of-range indices or faces shared by more than two tets.
  TetMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_tets() const { return tets_.size(); }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const Vec3& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  const std::array<int, 4>& tet(int t) const { return tets_[t]; }

  const std::vector<BoundaryFace>& boundary_faces() const { return boundary_faces_; }
  const std::vector<InteriorFace>& interior_faces() const { return interior_faces_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  /// Tet across local face k of t, or -1 on the boundary.
  int neighbor(int t, int k) const { return neighbors_[t][k]; }
  /// Encoded face id of local face k: >= 0 interior face index, < 0 is -(boundary index) - 1.
  int face_of(int t, int k) const { return face_ids_[t][k]; }

  std::span<const int> vertex_neighbors(int v) const;
  std::span<const int> vertex_tets(int v) const;

  double volume(int t) const { return volumes_[t]; }
  bool degenerate(int t) const { return volumes_[t] < kMinTetVolume; }
  Vec3 centroid(int t) const;
  /// Rows are gradients of the four barycentric coordinates (zero for degenerate tets).
  const Eigen::Matrix<double, 4, 3>& barycentric_gradients(int t) const { return bary_grads_[t]; }
  /// Barycentric coordinates of p with respect to tet t.
  Eigen::Vector4d barycentric(int t, const Vec3& p) const;

  double average_edge_length() const { return avg_edge_; }
  Aabb bounds() const;

  /// Component id per vertex (vertex-edge connectivity); returns the component count.
  int vertex_components(std::vector<int>& component) const;

  const VertexLabels& labels() const { return labels_; }
  /// Replaces the label sets after checking every index.
  void set_labels(VertexLabels labels);

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<BoundaryFace> boundary_faces_;
  std::vector<InteriorFace> interior_faces_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 4>> neighbors_;
  std::vector<std::array<int, 4>> face_ids_;
  std::vector<int> vadj_offsets_, vadj_;
  std::vector<int> vtet_offsets_, vtet_;
  std::vector<double> volumes_;
  std::vector<Eigen::Matrix<double, 4, 3>> bary_grads_;
  double avg_edge_ = 0.0;
  VertexLabels labels_;
};

// Triangle surface mesh, edge-manifold. Faces optionally remember the tet
// they were extracted from.
class TriMesh {
 public:
  TriMesh() = default;
  /// Throws TopologyError if an edge bounds more than two faces or an index is out of range.
  TriMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces, std::vector<int> source_tet = {});

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const Vec3& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::array<int, 3>& face(int f) const { return faces_[f]; }
  const std::vector<int>& source_tets() const { return source_tet_; }
  bool has_source_tets() const { return !source_tet_.empty(); }

  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  /// Incident faces of edge e; second entry is -1 for boundary edges.
  const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }
  /// Edge ids of face f; entry k is the edge opposite corner k.
  const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }
  /// Edge id joining a and b, or -1.
  int find_edge(int a, int b) const;
  bool is_boundary_edge(int e) const { return edge_faces_[e][1] < 0; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }

  std::span<const int> vertex_neighbors(int v) const;
  std::span<const int> vertex_faces(int v) const;

  Vec3 face_normal(int f) const;  // unit, zero for degenerate faces
  double face_area(int f) const { return areas_[f]; }
  bool degenerate(int f) const { return areas_[f] < kMinTriArea; }
  double total_area() const;
  Vec3 face_centroid(int f) const;
  /// Area-weighted vertex normals, unit length (zero only if every incident face is degenerate).
  std::vector<Vec3> vertex_normals() const;
  double mean_edge_length() const;
  double max_edge_length() const;

  /// Closed boundary vertex cycles; throws TopologyError on an open chain.
  std::vector<std::vector<int>> boundary_loops() const;
  /// Component id per vertex; returns the count.
  int vertex_components(std::vector<int>& component) const;
  /// V - E + F.
  long euler_characteristic() const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<int> source_tet_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<char> boundary_vertex_;
  std::vector<int> vadj_offsets_, vadj_;
  std::vector<int> vface_offsets_, vface_;
  std::vector<double> areas_;
};

/// Reads a TetGen .node/.ele pair. Index base (0 or 1) is taken from the first node id.
TetMesh load_tet_mesh(const std::filesystem::path& node_path, const std::filesystem::path& ele_path);
/// Writes a TetGen .node/.ele pair with 0-based indices.
void save_tet_mesh(const TetMesh& mesh, const std::filesystem::path& node_path,
                   const std::filesystem::path& ele_path);

/// Gradient of the linear interpolant of `field` over tet e.
Vec3 tet_gradient(const TetMesh& mesh, const VertexField& field, int e);
/// Intrinsic gradient of the linear interpolant over face f (tangent to the face).
Vec3 tri_gradient(const TriMesh& mesh, const VertexField& field, int f);
/// Per-corner gradient weights of face f: grad = sum_k w.row(k) * value(corner k).
Eigen::Matrix<double, 3, 3> tri_gradient_operator(const TriMesh& mesh, int f);

/// All vertices within k edges of the seeds (seeds included), sorted.
std::vector<int> k_ring(const TetMesh& mesh, std::span<const int> seeds, int k);

}  // namespace fiberslice
