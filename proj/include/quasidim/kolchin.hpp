#pragma once

/**
 * @file kolchin.hpp
 * @brief Dimension quasi-polynomials of subsets of N^m with weighted order.
 *
 * For a finite antichain A = {a^(1), ..., a^(d)} the count of points of V_A of
 * order <= t is, for t large, the alternating sum over subsets eps of A of
 * lambda_w(t - ord_w c_eps), c_eps the coordinatewise max of eps (c_{} = 0).
 */

#include <cstdint>
#include <map>

#include "quasidim/lattice.hpp"
#include "quasidim/quasi_polynomial.hpp"

namespace quasidim {

inline constexpr std::size_t kMaxInclusionExclusionPoints = 20;

struct DimensionResult {
  /// chi_A^(w)(t).
  QuasiPolynomialQ chi;
  /// chi(r) = Card V_A^(w)(r) for every r >= threshold.
  std::int64_t threshold = 0;
  /// Minimal points of A; V_A depends only on these.
  PointSet antichain;
  WeightVector weights;
  QuasiPolynomialQ lambda;
  /// ord_w(c_eps) -> signed multiplicity of lambda(t - ord_w c_eps) in the sum.
  std::map<std::int64_t, std::int64_t> shifts;
};

/// The <=_P-minimal elements of a.
PointSet minimal_antichain(const PointSet& a);

/// Inclusion-exclusion over the antichain of a. Throws DimensionMismatch, or
/// GuardRailExceeded when the antichain has more than 20 points.
DimensionResult dimension_quasipoly(const PointSet& a, const WeightVector& w);

/// lambda_w(t) - lambda_w(t - ord_w e).
QuasiPolynomialQ dimension_single_point(const Point& e, const WeightVector& w);

/// The inclusion-exclusion sum evaluated with every term lambda(r - s) for
/// r < s replaced by 0: the exact Card V_A^(w)(r) for all r >= 0.
std::int64_t exact_count_eval(const DimensionResult& res, const WeightVector& w, std::int64_t r);

}  // namespace quasidim
