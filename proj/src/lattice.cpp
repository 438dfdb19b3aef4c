#include "quasidim/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "quasidim/errors.hpp"

namespace quasidim {

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("weight vector must have at least one entry");
  for (auto w : weights_)
    if (w < 1) throw InvalidInput("weights must be positive integers");
}

std::int64_t WeightVector::lcm() const {
  std::int64_t q = 1;
  for (auto w : weights_) q = std::lcm(q, w);
  return q;
}

std::int64_t WeightVector::product() const {
  std::int64_t p = 1;
  for (auto w : weights_) p *= w;
  return p;
}

WeightVector WeightVector::prefix(std::size_t k) const {
  return WeightVector(std::vector<std::int64_t>(weights_.begin(), weights_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::int64_t ord_w(const Point& a, const WeightVector& w) {
  if (a.size() != w.size())
    throw DimensionMismatch("point has " + std::to_string(a.size()) + " coordinates, weights have " +
                            std::to_string(w.size()));
  std::int64_t order = 0;
  for (std::size_t i = 0; i < a.size(); ++i) order += w[i] * a[i];
  return order;
}

bool product_le(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

PointSet::PointSet(std::size_t m, std::vector<Point> points) : m_(m), points_(std::move(points)) {
  if (m_ == 0) throw InvalidInput("point set dimension must be >= 1");
  for (const auto& p : points_) {
    if (p.size() != m_)
      throw DimensionMismatch("point " + quasidim::to_string(p) + " is not in N^" + std::to_string(m_));
    for (auto x : p)
      if (x < 0) throw InvalidInput("point " + quasidim::to_string(p) + " has a negative coordinate");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.points()[i]);
  }
  return out + "}";
}

HPolytope::HPolytope(IntMatrix a, IntVector b_) : A(std::move(a)), b(std::move(b_)) {
  if (A.cols() < 1) throw InvalidInput("polytope dimension must be >= 1");
  if (A.rows() != b.rows())
    throw DimensionMismatch("constraint matrix has " + std::to_string(A.rows()) + " rows but b has " +
                            std::to_string(b.rows()));
}

HPolytope weighted_simplex(const WeightVector& w, std::int64_t t) {
  const auto m = static_cast<Eigen::Index>(w.size());
  IntMatrix a = IntMatrix::Zero(m + 1, m);
  IntVector b = IntVector::Zero(m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    a(i, i) = -1;
    a(m, i) = w[static_cast<std::size_t>(i)];
  }
  b(m) = t;
  return HPolytope(std::move(a), std::move(b));
}

}  // namespace quasidim
