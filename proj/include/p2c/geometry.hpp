#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <span>
#include <vector>

namespace p2c {

using Vec3 = Eigen::Vector3d;

/// Ordered list of 3D points. Index i refers to the same point across calls;
/// every operation in the library relies on that stability.
struct PointCloud {
  std::vector<Vec3> points;

  PointCloud() = default;
  explicit PointCloud(std::vector<Vec3> pts) : points(std::move(pts)) {}
  PointCloud(std::initializer_list<Vec3> pts) : points(pts) {}

  int size() const { return static_cast<int>(points.size()); }
  bool empty() const { return points.empty(); }
  Vec3& operator[](int i) { return points[static_cast<std::size_t>(i)]; }
  const Vec3& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }

  auto begin() const { return points.begin(); }
  auto end() const { return points.end(); }
};

/// k nearest neighbors of one query point, sorted by ascending distance,
/// ties broken by ascending target index.
struct NeighborList {
  int center_index = 0;                // index into the query cloud
  std::vector<int> neighbor_indices;   // indices into the target cloud
};

/// Result of farthest point sampling; indices[0] == seed_index.
struct SampleSet {
  std::vector<int> indices;
  int seed_index = 0;
};

/// Per-point 3-vector gradient of a scalar with respect to point coordinates,
/// aligned with the differentiated cloud's index order.
struct GradientField {
  std::vector<Vec3> grad;

  explicit GradientField(int n = 0) : grad(static_cast<std::size_t>(n), Vec3::Zero()) {}
  int size() const { return static_cast<int>(grad.size()); }
  Vec3& operator[](int i) { return grad[static_cast<std::size_t>(i)]; }
  const Vec3& operator[](int i) const { return grad[static_cast<std::size_t>(i)]; }
};

/// Exact k-nearest-neighbor search by exhaustive scan. One NeighborList per
/// query point; k is clamped to the target size.
std::vector<NeighborList> knn(const PointCloud& query, const PointCloud& target, int k);

/// Greedy max-min farthest point sampling starting at seed_index.
/// Ties broken by lowest index; fully deterministic.
SampleSet farthest_point_sample(const PointCloud& cloud, int m, int seed_index = 0);

/// Matrix of squared Euclidean distances, entry (i, j) = |a_i - b_j|^2.
Eigen::MatrixXd pairwise_sq_dist(const PointCloud& a, const PointCloud& b);

/// Copies the points selected by `indices` into a new cloud, preserving order.
PointCloud gather(const PointCloud& cloud, std::span<const int> indices);

}  // namespace p2c
