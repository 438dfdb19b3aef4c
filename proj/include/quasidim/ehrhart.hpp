#pragma once

/**
 * @file ehrhart.hpp
 * @brief Ehrhart quasi-polynomials of weighted simplices and rational polytopes.
 *
 * Both constructions fit a quasi-polynomial to brute-force counts with
 * interpolate(), using the period bound from the weights (lcm w) or from the
 * vertex denominators D(P), and a degree bound equal to the dimension.
 */

#include <cstdint>
#include <vector>

#include "quasidim/exact_linalg.hpp"
#include "quasidim/lattice.hpp"
#include "quasidim/latcount.hpp"
#include "quasidim/quasi_polynomial.hpp"
#include "quasidim/rational.hpp"

namespace quasidim {

inline constexpr Eigen::Index kMaxEhrhartDimension = 4;

struct VertexSet {
  Eigen::Index dimension = 0;
  std::vector<VectorX<Rational>> vertices;
  /// Affine hull of the vertices is all of R^d.
  bool full_dimensional = false;
};

/// Vertices of {A x <= b}: every basic feasible solution, deduplicated and
/// sorted. Throws UnboundedPolytope or EmptyPolytope.
VertexSet vertices(const HPolytope& p);

/// D(P): the least n with nP a lattice polytope (lcm of coordinate denominators).
std::int64_t lattice_denominator(const VertexSet& v);

/// Euclidean volume by a pulling triangulation of the vertex set; 0 when the
/// polytope is not full-dimensional.
Rational volume(const HPolytope& p, const VertexSet& v);

/// Ehrhart quasi-polynomial of {x >= 0, sum w_i x_i <= t}.
QuasiPolynomialQ lambda_w(const WeightVector& w);

/// L(P, r) as a quasi-polynomial in r. Throws GuardRailExceeded for d > 4.
QuasiPolynomialQ ehrhart_polytope(const HPolytope& p, std::uint64_t cap = kDefaultEnumerationCap);

std::string to_string(const VectorX<Rational>& v);

}  // namespace quasidim
