#pragma once

// JSON forms of the library's values. Fractions are always strings such as
// "35/8"; quasi-polynomial coefficients are listed c_0 first.
//
//   PeriodicRational  ["1/2","3/4","1"]
//   QuasiPolynomial   {"degree": d, "period": q, "coefficients": [[...], ...]}
//   PointSet          {"m": 2, "points": [[2,1],[0,3]]}
//   HPolytope         {"A": [[...]], "b": [...]}
//   System            {"m": 2, "n": 1, "weights": [2,1],
//                      "polynomials": [{"terms": [{"coef": "1", "exps": [2,1], "ind": 0}]}]}
//                     or the same with "leaders": [[[2,1],[0,3]]] instead of "polynomials"

#include <optional>
#include <vector>

#include "json.hpp"

#include "quasidim/lattice.hpp"
#include "quasidim/quasi_polynomial.hpp"
#include "quasidim/sigma.hpp"

namespace quasidim {

using Json = nlohmann::json;

Json to_json(const PeriodicRational& p);
PeriodicRational periodic_from_json(const Json& j);

Json to_json(const QuasiPolynomialQ& f);
QuasiPolynomialQ quasi_polynomial_from_json(const Json& j);

Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

Json to_json(const HPolytope& p);
HPolytope polytope_from_json(const Json& j);

Json to_json(const LinearSigmaPolynomial& f);
LinearSigmaPolynomial sigma_polynomial_from_json(const Json& j);

struct SystemInput {
  WeightVector weights;
  std::size_t indeterminates = 1;
  std::vector<LinearSigmaPolynomial> polynomials;
  /// Set when the input supplied leader sets E_1..E_n directly.
  std::optional<std::vector<PointSet>> leaders;
};

SystemInput system_from_json(const Json& j);

}  // namespace quasidim
