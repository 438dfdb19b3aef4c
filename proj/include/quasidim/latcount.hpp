#pragma once

/**
 * @file latcount.hpp
 * @brief Brute-force exact lattice-point counters.
 *
 * These are the ground truth the interpolation back-ends sample from, and the
 * independent oracles the inclusion-exclusion formulas are checked against.
 * Counts are exact 64-bit integers; enumeration beyond `cap` points throws
 * GuardRailExceeded.
 */

#include <cstdint>

#include "quasidim/lattice.hpp"

namespace quasidim {

struct VertexSet;

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Card{x in N^m : sum w_i x_i <= t}; 0 for t < 0.
std::int64_t count_simplex(const WeightVector& w, std::int64_t t);

/// Card(rP cap Z^d) by scanning the integer bounding box of rP.
std::int64_t count_polytope(const HPolytope& p, std::int64_t r,
                            std::uint64_t cap = kDefaultEnumerationCap);
/// Same, reusing an already computed vertex set of p.
std::int64_t count_polytope(const HPolytope& p, const VertexSet& vertices, std::int64_t r,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Card{v in N^m : ord_w v <= r, no a in A with a <=_P v}, by enumeration.
std::int64_t count_va(const PointSet& a, const WeightVector& w, std::int64_t r,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// Same count through the last-coordinate recursion
/// N_A(s) = N_{A0}(s) + N_{A1}(s - w_m).
std::int64_t count_va_recursive(const PointSet& a, const WeightVector& w, std::int64_t r);

}  // namespace quasidim
