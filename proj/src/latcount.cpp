#include "quasidim/latcount.hpp"

#include <algorithm>
#include <string>

#include "quasidim/ehrhart.hpp"
#include "quasidim/errors.hpp"

namespace quasidim {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t simplex_from(const WeightVector& w, std::size_t i, std::int64_t remaining) {
  const std::int64_t top = remaining / w[i];
  if (i + 1 == w.size()) return top + 1;
  std::int64_t total = 0;
  for (std::int64_t x = 0; x <= top; ++x) total += simplex_from(w, i + 1, remaining - w[i] * x);
  return total;
}

void guard(std::uint64_t points, std::uint64_t cap, const char* what) {
  if (points > cap)
    throw GuardRailExceeded(std::string(what) + " would enumerate " + std::to_string(points) +
                            " points (cap " + std::to_string(cap) + ")");
}

}  // namespace

std::int64_t count_simplex(const WeightVector& w, std::int64_t t) {
  if (t < 0) return 0;
  return simplex_from(w, 0, t);
}

std::int64_t count_polytope(const HPolytope& p, std::int64_t r, std::uint64_t cap) {
  return count_polytope(p, vertices(p), r, cap);
}

std::int64_t count_polytope(const HPolytope& p, const VertexSet& v, std::int64_t r, std::uint64_t cap) {
  if (r < 0) throw InvalidInput("dilation factor must be >= 0");
  const Eigen::Index d = p.dimension();
  if (v.dimension != d) throw DimensionMismatch("vertex set does not match polytope dimension");

  // Integer bounding box of rP from the scaled vertex coordinates.
  std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  std::uint64_t box = 1;
  for (Eigen::Index i = 0; i < d; ++i) {
    Rational mn = v.vertices.front()(i), mx = mn;
    for (const auto& x : v.vertices) {
      mn = std::min(mn, x(i));
      mx = std::max(mx, x(i));
    }
    mn *= Rational(r);
    mx *= Rational(r);
    const auto floor_of = [](const Rational& q) {
      return floor_div(q.numerator().convert_to<std::int64_t>(), q.denominator().convert_to<std::int64_t>());
    };
    const auto k = static_cast<std::size_t>(i);
    lo[k] = -floor_of(-mn);
    hi[k] = floor_of(mx);
    if (hi[k] < lo[k]) return 0;
    const auto width = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
    if (box > cap / width) guard(cap + 1, cap, "polytope scan");
    box *= width;
  }
  guard(box, cap, "polytope scan");

  const IntVector rb = p.b * r;
  IntVector x(d);
  for (Eigen::Index i = 0; i < d; ++i) x(i) = lo[static_cast<std::size_t>(i)];
  std::int64_t count = 0;
  while (true) {
    if (((p.A * x).array() <= rb.array()).all()) ++count;
    Eigen::Index i = 0;
    for (; i < d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (x(i) < hi[k]) {
        ++x(i);
        break;
      }
      x(i) = lo[k];
    }
    if (i == d) break;
  }
  return count;
}

namespace {

std::int64_t count_va_from(const std::vector<Point>& a, const WeightVector& w, std::size_t i,
                           std::int64_t remaining, Point& v) {
  if (i == w.size()) {
    for (const auto& p : a)
      if (product_le(p, v)) return 0;
    return 1;
  }
  std::int64_t total = 0;
  for (std::int64_t x = 0; w[i] * x <= remaining; ++x) {
    v[i] = x;
    total += count_va_from(a, w, i + 1, remaining - w[i] * x, v);
  }
  v[i] = 0;
  return total;
}

// N_A(s) with A given as raw points in N^m, m = w.size().
std::int64_t recursive_count(const std::vector<Point>& a, const WeightVector& w, std::int64_t s) {
  if (s < 0) return 0;
  const std::size_t m = w.size();
  if (a.empty()) return count_simplex(w, s);
  const Point origin(m, 0);
  if (std::find(a.begin(), a.end(), origin) != a.end()) return 0;
  const std::int64_t wm = w[m - 1];
  if (m == 1) {
    std::int64_t least = a.front()[0];
    for (const auto& p : a) least = std::min(least, p[0]);
    return std::min(least, s / wm + 1);
  }

  // A0 = {(a_1..a_{m-1}) : (a_1..a_{m-1}, 0) in A}
  // A1 = {(a_1..a_{m-1}, a'_m) : (a_1..a_{m-1}, a'_m + 1) in A,
  //       or a'_m = 0 and (a_1..a_{m-1}, 0) in A}
  std::vector<Point> a0, a1;
  for (const auto& p : a) {
    if (p[m - 1] == 0) {
      a0.emplace_back(p.begin(), p.end() - 1);
      a1.push_back(p);
    } else {
      Point q = p;
      --q[m - 1];
      a1.push_back(std::move(q));
    }
  }
  std::sort(a1.begin(), a1.end());
  a1.erase(std::unique(a1.begin(), a1.end()), a1.end());
  return recursive_count(a0, w.prefix(m - 1), s) + recursive_count(a1, w, s - wm);
}

}  // namespace

std::int64_t count_va(const PointSet& a, const WeightVector& w, std::int64_t r, std::uint64_t cap) {
  if (a.dimension() != w.size())
    throw DimensionMismatch("point set lives in N^" + std::to_string(a.dimension()) + " but there are " +
                            std::to_string(w.size()) + " weights");
  if (r < 0) return 0;
  guard(static_cast<std::uint64_t>(count_simplex(w, r)), cap, "V_A enumeration");
  Point v(w.size(), 0);
  return count_va_from(a.points(), w, 0, r, v);
}

std::int64_t count_va_recursive(const PointSet& a, const WeightVector& w, std::int64_t r) {
  if (a.dimension() != w.size())
    throw DimensionMismatch("point set lives in N^" + std::to_string(a.dimension()) + " but there are " +
                            std::to_string(w.size()) + " weights");
  return recursive_count(a.points(), w, r);
}

}  // namespace quasidim
