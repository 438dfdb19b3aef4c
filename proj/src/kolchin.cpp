#include "quasidim/kolchin.hpp"

#include <algorithm>
#include <string>

#include "quasidim/ehrhart.hpp"
#include "quasidim/errors.hpp"

namespace quasidim {

PointSet minimal_antichain(const PointSet& a) {
  std::vector<Point> minimal;
  for (const auto& p : a) {
    const bool dominated = std::any_of(a.begin(), a.end(), [&](const Point& q) {
      return q != p && product_le(q, p);
    });
    if (!dominated) minimal.push_back(p);
  }
  return PointSet(a.dimension(), std::move(minimal));
}

DimensionResult dimension_quasipoly(const PointSet& a, const WeightVector& w) {
  if (a.dimension() != w.size())
    throw DimensionMismatch("point set lives in N^" + std::to_string(a.dimension()) + " but there are " +
                            std::to_string(w.size()) + " weights");
  PointSet antichain = minimal_antichain(a);
  const std::size_t d = antichain.size();
  if (d > kMaxInclusionExclusionPoints)
    throw GuardRailExceeded("antichain has " + std::to_string(d) + " points; inclusion-exclusion is limited to " +
                            std::to_string(kMaxInclusionExclusionPoints));

  // Collapse the 2^d terms to one signed multiplicity per distinct shift;
  // iteration over the ordered map keeps the final sum deterministic.
  std::map<std::int64_t, std::int64_t> shifts;
  std::int64_t threshold = 0;
  const auto& pts = antichain.points();
  const std::uint64_t subsets = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Point corner(w.size(), 0);
    int parity = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask >> i & 1)) continue;
      ++parity;
      for (std::size_t j = 0; j < w.size(); ++j) corner[j] = std::max(corner[j], pts[i][j]);
    }
    const std::int64_t order = ord_w(corner, w);
    shifts[order] += parity % 2 ? -1 : 1;
    threshold = std::max(threshold, order);
  }
  std::erase_if(shifts, [](const auto& kv) { return kv.second == 0; });

  QuasiPolynomialQ lambda = lambda_w(w);
  QuasiPolynomialQ chi;
  for (const auto& [order, multiplicity] : shifts) chi += Rational(multiplicity) * shift(lambda, order);

  return DimensionResult{std::move(chi), threshold, std::move(antichain), w, std::move(lambda), std::move(shifts)};
}

QuasiPolynomialQ dimension_single_point(const Point& e, const WeightVector& w) {
  const QuasiPolynomialQ lambda = lambda_w(w);
  return lambda - shift(lambda, ord_w(e, w));
}

std::int64_t exact_count_eval(const DimensionResult& res, const WeightVector& w, std::int64_t r) {
  if (!(w == res.weights)) throw DimensionMismatch("weights differ from those the result was built with");
  if (r < 0) throw InvalidInput("exact_count_eval needs r >= 0");
  Rational total(0);
  for (const auto& [order, multiplicity] : res.shifts) {
    if (r - order < 0) continue;
    total += Rational(multiplicity) * res.lambda(r - order);
  }
  return total.to_integer().convert_to<std::int64_t>();
}

}  // namespace quasidim
