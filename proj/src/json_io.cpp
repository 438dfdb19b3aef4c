#include "quasidim/json_io.hpp"

#include <string>

#include "quasidim/errors.hpp"

namespace quasidim {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw InvalidInput("fractions must be given as strings like \"3/4\"");
}

Point as_point(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a point must be an array of integers");
  Point p;
  for (const auto& x : j) p.push_back(as_int(x, "point coordinate"));
  return p;
}

std::vector<PointSet> leaders_from_json(const Json& j, std::size_t m) {
  if (!j.is_array()) throw InvalidInput("'leaders' must be an array of point lists");
  std::vector<PointSet> out;
  for (const auto& set : j) {
    if (!set.is_array()) throw InvalidInput("each leader set must be an array of points");
    std::vector<Point> pts;
    for (const auto& p : set) pts.push_back(as_point(p));
    out.emplace_back(m, std::move(pts));
  }
  return out;
}

}  // namespace

Json to_json(const PeriodicRational& p) {
  Json out = Json::array();
  for (const auto& v : p.values()) out.push_back(v.str());
  return out;
}

PeriodicRational periodic_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("a periodic number is a non-empty array of fractions");
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(as_rational(v));
  return PeriodicRational(std::move(values));
}

Json to_json(const QuasiPolynomialQ& f) {
  Json coefficients = Json::array();
  for (const auto& c : f.coefficients()) coefficients.push_back(to_json(c));
  return Json{{"degree", f.degree()}, {"period", f.period()}, {"coefficients", coefficients}};
}

QuasiPolynomialQ quasi_polynomial_from_json(const Json& j) {
  const Json& cs = require(j, "coefficients");
  if (!cs.is_array() || cs.empty()) throw InvalidInput("'coefficients' must be a non-empty array");
  std::vector<PeriodicRational> coefficients;
  for (const auto& c : cs) coefficients.push_back(periodic_from_json(c));
  QuasiPolynomialQ f(std::move(coefficients));
  if (j.contains("degree") && as_int(j.at("degree"), "degree") != f.degree())
    throw InvalidInput("'degree' does not match the coefficient list");
  if (j.contains("period") && as_int(j.at("period"), "period") != f.period())
    throw InvalidInput("'period' does not match the coefficient list");
  return f;
}

Json to_json(const PointSet& s) {
  Json points = Json::array();
  for (const auto& p : s) points.push_back(p);
  return Json{{"m", s.dimension()}, {"points", points}};
}

PointSet point_set_from_json(const Json& j) {
  const auto m = as_int(require(j, "m"), "m");
  if (m < 1) throw InvalidInput("'m' must be >= 1");
  const Json& pts = require(j, "points");
  if (!pts.is_array()) throw InvalidInput("'points' must be an array");
  std::vector<Point> points;
  for (const auto& p : pts) points.push_back(as_point(p));
  return PointSet(static_cast<std::size_t>(m), std::move(points));
}

Json to_json(const HPolytope& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.A.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < p.A.cols(); ++k) row.push_back(p.A(i, k));
    a.push_back(row);
  }
  Json b = Json::array();
  for (Eigen::Index i = 0; i < p.b.rows(); ++i) b.push_back(p.b(i));
  return Json{{"A", a}, {"b", b}};
}

HPolytope polytope_from_json(const Json& j) {
  const Json& a = require(j, "A");
  const Json& b = require(j, "b");
  if (!a.is_array() || a.empty() || !b.is_array())
    throw InvalidInput("polytope needs a non-empty 'A' matrix and a 'b' vector");
  const auto rows = static_cast<Eigen::Index>(a.size());
  if (!a[0].is_array() || a[0].empty()) throw InvalidInput("rows of 'A' must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(a[0].size());
  IntMatrix am(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = a[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw DimensionMismatch("all rows of 'A' must have the same length");
    for (Eigen::Index k = 0; k < cols; ++k) am(i, k) = as_int(row[static_cast<std::size_t>(k)], "entry of A");
  }
  IntVector bv(static_cast<Eigen::Index>(b.size()));
  for (Eigen::Index i = 0; i < bv.rows(); ++i) bv(i) = as_int(b[static_cast<std::size_t>(i)], "entry of b");
  return HPolytope(std::move(am), std::move(bv));
}

Json to_json(const LinearSigmaPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [u, c] : f.terms())
    terms.push_back(Json{{"coef", c.str()}, {"exps", u.exponents}, {"ind", u.indeterminate}});
  return Json{{"terms", terms}};
}

LinearSigmaPolynomial sigma_polynomial_from_json(const Json& j) {
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw InvalidInput("'terms' must be an array");
  LinearSigmaPolynomial f;
  for (const auto& t : terms) {
    Term u;
    u.exponents = as_point(require(t, "exps"));
    const auto ind = t.contains("ind") ? as_int(t.at("ind"), "ind") : 0;
    if (ind < 0) throw InvalidInput("'ind' must be >= 0");
    u.indeterminate = static_cast<std::size_t>(ind);
    f.add(u, as_rational(require(t, "coef")));
  }
  return f;
}

SystemInput system_from_json(const Json& j) {
  const Json& wj = require(j, "weights");
  if (!wj.is_array()) throw InvalidInput("'weights' must be an array of positive integers");
  std::vector<std::int64_t> weights;
  for (const auto& w : wj) weights.push_back(as_int(w, "weight"));
  SystemInput in{WeightVector(std::move(weights)), 1, {}, std::nullopt};
  const std::size_t m = in.weights.size();
  if (j.contains("m") && static_cast<std::size_t>(as_int(j.at("m"), "m")) != m)
    throw DimensionMismatch("'m' does not match the number of weights");

  const bool has_polys = j.contains("polynomials");
  const bool has_leaders = j.contains("leaders");
  if (has_polys == has_leaders) throw InvalidInput("system needs exactly one of 'polynomials' or 'leaders'");

  if (has_leaders) {
    in.leaders = leaders_from_json(j.at("leaders"), m);
    in.indeterminates = in.leaders->size();
  } else {
    const Json& polys = j.at("polynomials");
    if (!polys.is_array()) throw InvalidInput("'polynomials' must be an array");
    std::size_t highest = 0;
    for (const auto& p : polys) {
      in.polynomials.push_back(sigma_polynomial_from_json(p));
      for (const auto& [u, c] : in.polynomials.back().terms()) highest = std::max(highest, u.indeterminate + 1);
    }
    in.indeterminates = std::max<std::size_t>(highest, 1);
  }
  if (j.contains("n")) {
    const auto n = as_int(j.at("n"), "n");
    if (n < 1 || static_cast<std::size_t>(n) < in.indeterminates)
      throw DimensionMismatch("'n' is smaller than the indeterminates used");
    if (in.leaders && static_cast<std::size_t>(n) != in.leaders->size())
      throw DimensionMismatch("'n' does not match the number of leader sets");
    in.indeterminates = static_cast<std::size_t>(n);
  }
  if (in.indeterminates == 0) throw InvalidInput("system has no indeterminates");
  return in;
}

}  // namespace quasidim
