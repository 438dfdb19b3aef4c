#include "quasidim/ehrhart.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quasidim/errors.hpp"

namespace quasidim {

namespace {

using RMatrix = MatrixX<Rational>;
using RVector = VectorX<Rational>;

RMatrix to_rational(const IntMatrix& a) {
  RMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(a(i, j));
  return out;
}

RVector to_rational(const IntVector& b) {
  RVector out(b.rows());
  for (Eigen::Index i = 0; i < b.rows(); ++i) out(i) = Rational(b(i));
  return out;
}

bool feasible(const RMatrix& a, const RVector& b, const RVector& x) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational lhs(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j) lhs += a(i, j) * x(j);
    if (lhs > b(i)) return false;
  }
  return true;
}

std::vector<Rational> as_key(const RVector& x) { return {x.data(), x.data() + x.size()}; }

// Basic feasible solutions of {a x <= b}: one exact solve per d-subset of rows.
std::vector<RVector> basic_feasible_solutions(const RMatrix& a, const RVector& b, bool first_only) {
  const Eigen::Index d = a.cols();
  const Eigen::Index rows = a.rows();
  std::vector<RVector> found;
  if (rows < d) return found;
  std::set<std::vector<Rational>> seen;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(d));
  std::iota(pick.begin(), pick.end(), 0);
  RMatrix sub(d, d);
  RVector rhs(d);
  while (true) {
    for (Eigen::Index k = 0; k < d; ++k) {
      sub.row(k) = a.row(pick[static_cast<std::size_t>(k)]);
      rhs(k) = b(pick[static_cast<std::size_t>(k)]);
    }
    if (auto x = solve(sub, rhs); x && feasible(a, b, *x) && seen.insert(as_key(*x)).second) {
      found.push_back(*x);
      if (first_only) return found;
    }
    // next combination in lexicographic order
    Eigen::Index k = d - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == rows - d + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (Eigen::Index j = k + 1; j < d; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return found;
}

Eigen::Index affine_rank(const std::vector<RVector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  RMatrix diffs(static_cast<Eigen::Index>(idx.size() - 1), pts[idx[0]].size());
  for (std::size_t k = 1; k < idx.size(); ++k)
    diffs.row(static_cast<Eigen::Index>(k - 1)) = (pts[idx[k]] - pts[idx[0]]).transpose();
  return rank(diffs);
}

// Pulling triangulation of the face spanned by `face` (affine dimension dim):
// cone from the first vertex over the facets of the face not containing it.
void triangulate(const std::vector<RVector>& pts, const std::vector<std::vector<bool>>& tight,
                 const std::vector<std::size_t>& face, Eigen::Index dim,
                 std::vector<std::vector<std::size_t>>& simplices) {
  if (dim == 0) {
    simplices.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  const std::size_t rows = tight.front().size();
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < rows; ++i) {
    if (tight[apex][i]) continue;
    std::vector<std::size_t> sub;
    for (auto v : face)
      if (tight[v][i]) sub.push_back(v);
    if (sub.empty() || facets.count(sub)) continue;
    if (affine_rank(pts, sub) != dim - 1) continue;
    facets.insert(sub);
    std::vector<std::vector<std::size_t>> inner;
    triangulate(pts, tight, sub, dim - 1, inner);
    for (auto& s : inner) {
      s.push_back(apex);
      simplices.push_back(std::move(s));
    }
  }
}

}  // namespace

VertexSet vertices(const HPolytope& p) {
  const RMatrix a = to_rational(p.A);
  const RVector b = to_rational(p.b);
  const Eigen::Index d = p.dimension();

  // Bounded iff A has full column rank and the recession cone {A y <= 0}
  // has no ray; a ray can be scaled so that some y_i = +-1.
  if (rank(a) < d) throw UnboundedPolytope();
  RMatrix cone(a.rows() + 2, d);
  RVector cone_rhs = RVector::Constant(a.rows() + 2, Rational(0));
  cone.topRows(a.rows()) = a;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      cone.bottomRows(2).setConstant(Rational(0));
      cone(a.rows(), i) = Rational(s);
      cone(a.rows() + 1, i) = Rational(-s);
      cone_rhs(a.rows()) = Rational(1);
      cone_rhs(a.rows() + 1) = Rational(-1);
      if (!basic_feasible_solutions(cone, cone_rhs, true).empty()) throw UnboundedPolytope();
    }
  }

  VertexSet out;
  out.dimension = d;
  out.vertices = basic_feasible_solutions(a, b, false);
  if (out.vertices.empty()) throw EmptyPolytope();
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const RVector& x, const RVector& y) { return as_key(x) < as_key(y); });
  std::vector<std::size_t> all(out.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  out.full_dimensional = affine_rank(out.vertices, all) == d;
  return out;
}

std::int64_t lattice_denominator(const VertexSet& v) {
  std::int64_t q = 1;
  for (const auto& x : v.vertices)
    for (Eigen::Index i = 0; i < x.size(); ++i) q = std::lcm(q, x(i).denominator().convert_to<std::int64_t>());
  return q;
}

Rational volume(const HPolytope& p, const VertexSet& v) {
  if (!v.full_dimensional) return Rational(0);
  const RMatrix a = to_rational(p.A);
  const RVector b = to_rational(p.b);
  const Eigen::Index d = p.dimension();
  std::vector<std::vector<bool>> tight(v.vertices.size(), std::vector<bool>(static_cast<std::size_t>(a.rows())));
  for (std::size_t k = 0; k < v.vertices.size(); ++k) {
    const RVector ax = a * v.vertices[k];
    for (Eigen::Index i = 0; i < a.rows(); ++i) tight[k][static_cast<std::size_t>(i)] = ax(i) == b(i);
  }
  std::vector<std::size_t> all(v.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(v.vertices, tight, all, d, simplices);

  Rational total(0);
  for (const auto& s : simplices) {
    RMatrix edges(d, d);
    for (Eigen::Index k = 0; k < d; ++k)
      edges.col(k) = v.vertices[s[static_cast<std::size_t>(k) + 1]] - v.vertices[s[0]];
    total += abs(determinant(edges));
  }
  Rational factorial(1);
  for (Eigen::Index k = 2; k <= d; ++k) factorial *= Rational(static_cast<std::int64_t>(k));
  return total / factorial;
}

QuasiPolynomialQ lambda_w(const WeightVector& w) {
  const int m = static_cast<int>(w.size());
  auto lambda = interpolate<Rational>([&](std::int64_t t) { return count_simplex(w, t); }, m, w.lcm(), 0);
  Rational expected_leading(1);
  for (int k = 2; k <= m; ++k) expected_leading *= Rational(k);
  expected_leading = Rational(1) / (expected_leading * Rational(w.product()));
  if (lambda.degree() != m || lambda.leading_coefficient() != PeriodicRational(expected_leading))
    throw std::logic_error("weighted simplex count has unexpected leading term");
  return lambda;
}

QuasiPolynomialQ ehrhart_polytope(const HPolytope& p, std::uint64_t cap) {
  const Eigen::Index d = p.dimension();
  if (d > kMaxEhrhartDimension)
    throw GuardRailExceeded("Ehrhart interpolation limited to dimension <= " + std::to_string(kMaxEhrhartDimension));
  const VertexSet v = vertices(p);
  const std::int64_t period = lattice_denominator(v);
  auto ehrhart = interpolate<Rational>([&](std::int64_t r) { return count_polytope(p, v, r, cap); },
                                       static_cast<int>(d), period, 0);
  if (v.full_dimensional) {
    if (ehrhart.degree() != d || ehrhart.leading_coefficient() != PeriodicRational(volume(p, v)))
      throw std::logic_error("Ehrhart leading coefficient differs from the polytope volume");
  } else if (ehrhart.degree() > d) {
    throw std::logic_error("Ehrhart degree exceeds the dimension");
  }
  return ehrhart;
}

std::string to_string(const VectorX<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v(i).str();
  }
  return out + ")";
}

}  // namespace quasidim
