#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace fiberslice {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Error categories. Everything thrown by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct TopologyError : Error {
  using Error::Error;
};
struct DegenerateElementError : Error {
  using Error::Error;
};
struct SolverError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

struct Aabb {
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = Vec3::Constant(-std::numeric_limits<double>::infinity());

  void extend(const Vec3& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  void extend(const Aabb& b) {
    lo = lo.cwiseMin(b.lo);
    hi = hi.cwiseMax(b.hi);
  }
  bool contains(const Vec3& p, double tol) const {
    return (p.array() >= lo.array() - tol).all() && (p.array() <= hi.array() + tol).all();
  }
  double squared_distance(const Vec3& p) const {
    Vec3 d = (lo - p).cwiseMax(p - hi).cwiseMax(Vec3::Zero());
    return d.squaredNorm();
  }
  Vec3 center() const { return 0.5 * (lo + hi); }
};

/// Closest point to `p` on the triangle (a, b, c). Handles degenerate triangles.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

/// Distance from `p` to the segment [a, b].
double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

/// Unsigned angle in degrees between two lines (direction sign ignored), in [0, 90].
double line_angle_deg(const Vec3& a, const Vec3& b);

// Static bounding volume hierarchy over a fixed set of boxes. Leaves store the
// original item indices; queries visit items in no particular order, so callers
// that need a deterministic answer must reduce over all hits themselves.
class Bvh {
 public:
  Bvh() = default;
  explicit Bvh(std::span<const Aabb> boxes);

  bool empty() const { return nodes_.empty(); }

  /// Calls `visit(i)` for every item whose box contains `p` (inflated by tol).
  void query_point(const Vec3& p, double tol, const std::function<void(int)>& visit) const;

  /// Nearest-item search. `dist2(i)` returns the squared distance from the query
  /// to item i; returns the minimum found and writes the item index.
  double nearest(const Vec3& p, const std::function<double(int)>& dist2, int* best_item) const;

 private:
  struct Node {
    Aabb box;
    int left = -1;   // child node or -1
    int right = -1;
    int begin = 0;   // leaf item range into items_
    int end = 0;
  };
  int build(std::span<const Aabb> boxes, std::vector<Vec3>& centers, int begin, int end);

  std::vector<Node> nodes_;
  std::vector<int> items_;
};

}  // namespace fiberslice
