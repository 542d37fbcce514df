#include "p2c/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace p2c {

namespace {

void require_nonempty(const PointCloud& c, const char* what) {
  if (c.empty()) throw std::invalid_argument(what);
}

}  // namespace

std::vector<NeighborList> knn(const PointCloud& query, const PointCloud& target, int k) {
  require_nonempty(target, "empty target cloud");
  if (k <= 0) throw std::invalid_argument("invalid k");

  const int n = target.size();
  const int kk = std::min(k, n);
  std::vector<NeighborList> out(static_cast<std::size_t>(query.size()));

  std::vector<std::pair<double, int>> cand(static_cast<std::size_t>(n));
  for (int qi = 0; qi < query.size(); ++qi) {
    const Vec3& q = query[qi];
    for (int j = 0; j < n; ++j) {
      cand[static_cast<std::size_t>(j)] = {(target[j] - q).squaredNorm(), j};
    }
    std::partial_sort(cand.begin(), cand.begin() + kk, cand.end(),
                      [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first < b.first;
                        return a.second < b.second;
                      });
    NeighborList& nl = out[static_cast<std::size_t>(qi)];
    nl.center_index = qi;
    nl.neighbor_indices.resize(static_cast<std::size_t>(kk));
    for (int j = 0; j < kk; ++j) nl.neighbor_indices[static_cast<std::size_t>(j)] = cand[static_cast<std::size_t>(j)].second;
  }
  return out;
}

SampleSet farthest_point_sample(const PointCloud& cloud, int m, int seed_index) {
  require_nonempty(cloud, "empty cloud");
  const int n = cloud.size();
  if (m < 1) throw std::invalid_argument("invalid sample count");
  if (m > n) throw std::invalid_argument("sample larger than cloud");
  if (seed_index < 0 || seed_index >= n) throw std::invalid_argument("seed index out of bounds");

  SampleSet s;
  s.seed_index = seed_index;
  s.indices.reserve(static_cast<std::size_t>(m));
  s.indices.push_back(seed_index);

  std::vector<double> min_sq(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::vector<char> selected(static_cast<std::size_t>(n), 0);
  selected[static_cast<std::size_t>(seed_index)] = 1;

  int current = seed_index;
  for (int t = 1; t < m; ++t) {
    const Vec3& c = cloud[current];
    int best = -1;
    double best_sq = -1.0;
    for (int j = 0; j < n; ++j) {
      double d = (cloud[j] - c).squaredNorm();
      auto sj = static_cast<std::size_t>(j);
      if (d < min_sq[sj]) min_sq[sj] = d;
      if (!selected[sj] && min_sq[sj] > best_sq) {
        best_sq = min_sq[sj];
        best = j;
      }
    }
    selected[static_cast<std::size_t>(best)] = 1;
    s.indices.push_back(best);
    current = best;
  }
  return s;
}

Eigen::MatrixXd pairwise_sq_dist(const PointCloud& a, const PointCloud& b) {
  require_nonempty(a, "empty input cloud");
  require_nonempty(b, "empty input cloud");
  Eigen::MatrixXd d(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) d(i, j) = (a[i] - b[j]).squaredNorm();
  return d;
}

PointCloud gather(const PointCloud& cloud, std::span<const int> indices) {
  PointCloud out;
  out.points.reserve(indices.size());
  for (int i : indices) out.points.push_back(cloud[i]);
  return out;
}

}  // namespace p2c
