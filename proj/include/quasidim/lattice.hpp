#pragma once

// Basic lattice types: points of N^m, weight vectors, finite point sets and
// integer H-polytopes {x : A x <= b}.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace quasidim {

using Point = std::vector<std::int64_t>;

/// Positive integer weights (w_1, ..., w_m), m >= 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> weights);

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& values() const { return weights_; }

  /// lcm(w_1, ..., w_m): the period bound for the weighted simplex count.
  std::int64_t lcm() const;
  /// w_1 * ... * w_m.
  std::int64_t product() const;
  /// Leading weights w_1, ..., w_k.
  WeightVector prefix(std::size_t k) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

/// Weighted order w_1 a_1 + ... + w_m a_m. Throws DimensionMismatch.
std::int64_t ord_w(const Point& a, const WeightVector& w);

/// a <=_P b in the coordinatewise product order.
bool product_le(const Point& a, const Point& b);

/// Finite subset of N^m; points kept sorted and deduplicated.
class PointSet {
 public:
  explicit PointSet(std::size_t m, std::vector<Point> points = {});

  std::size_t dimension() const { return m_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;
  bool contains_origin() const { return contains(Point(m_, 0)); }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t m_;
  std::vector<Point> points_;
};

/// "{(2,1), (0,3)}"
std::string to_string(const PointSet& s);
std::string to_string(const Point& p);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// {x in R^d : A x <= b} with integer data. Boundedness is established by
/// vertex enumeration (see ehrhart.hpp), not at construction.
struct HPolytope {
  HPolytope(IntMatrix a, IntVector b);

  Eigen::Index dimension() const { return A.cols(); }
  Eigen::Index num_rows() const { return A.rows(); }

  IntMatrix A;
  IntVector b;
};

/// {x >= 0, sum w_i x_i <= t} in H-form.
HPolytope weighted_simplex(const WeightVector& w, std::int64_t t);

}  // namespace quasidim
