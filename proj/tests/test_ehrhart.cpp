#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "quasidim/ehrhart.hpp"
#include "quasidim/errors.hpp"
#include "quasidim/latcount.hpp"

using namespace quasidim;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

HPolytope make(std::initializer_list<std::initializer_list<std::int64_t>> rows,
               std::initializer_list<std::int64_t> rhs) {
  const auto d = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(static_cast<Eigen::Index>(rows.size()), d);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index k = 0;
    for (auto x : row) a(i, k++) = x;
    ++i;
  }
  IntVector b(static_cast<Eigen::Index>(rhs.size()));
  i = 0;
  for (auto x : rhs) b(i++) = x;
  return HPolytope(a, b);
}

HPolytope example1() { return make({{-1, 0}, {0, -1}, {1, 1}, {2, 0}}, {0, 0, 3, 5}); }

VectorX<Rational> vec(std::initializer_list<Rational> xs) {
  VectorX<Rational> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("vertices of small polytopes") {
  const auto square = vertices(make({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {0, 0, 1, 1}));
  CHECK(square.vertices.size() == 4);
  CHECK(square.full_dimensional);

  const auto tri = vertices(make({{-1, 0}, {0, -1}, {2, 1}}, {0, 0, 1}));
  REQUIRE(tri.vertices.size() == 3);
  CHECK(tri.vertices[0] == vec({q(0), q(0)}));
  CHECK(tri.vertices[1] == vec({q(0), q(1)}));
  CHECK(tri.vertices[2] == vec({q(1, 2), q(0)}));
  CHECK(lattice_denominator(tri) == 2);

  const auto ex1 = vertices(example1());
  REQUIRE(ex1.vertices.size() == 4);
  CHECK(to_string(ex1.vertices[3]) == "(5/2, 1/2)");
  CHECK(lattice_denominator(ex1) == 2);
  CHECK(volume(example1(), ex1) == q(35, 8));
}

TEST_CASE("redundant and degenerate inequalities") {
  // duplicated facet and a redundant constraint
  const auto p = make({{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 0}, {1, 1}}, {0, 0, 1, 1, 1, 5});
  CHECK(vertices(p).vertices.size() == 4);
  CHECK(volume(p, vertices(p)) == q(1));
  // a segment in the plane
  const auto seg = make({{-1, 0}, {1, 0}, {0, 1}, {0, -1}}, {0, 2, 0, 0});
  const auto v = vertices(seg);
  CHECK(v.vertices.size() == 2);
  CHECK_FALSE(v.full_dimensional);
  CHECK(volume(seg, v) == q(0));
  CHECK(ehrhart_polytope(seg) == QuasiPolynomialQ({PeriodicRational(q(1)), PeriodicRational(q(2))}));
}

TEST_CASE("unbounded and empty polytopes are rejected") {
  CHECK_THROWS_AS(vertices(make({{-1, 0}, {0, -1}}, {0, 0})), UnboundedPolytope);
  CHECK_THROWS_AS(vertices(make({{-1, 0}, {0, -1}, {1, -1}}, {0, 0, 0})), UnboundedPolytope);
  CHECK_THROWS_AS(vertices(make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {-1, 0, 1, 0})), EmptyPolytope);
  CHECK_THROWS_AS(HPolytope(IntMatrix(2, 2), IntVector(3)), DimensionMismatch);
}

TEST_CASE("Ehrhart quasi-polynomials") {
  CHECK(ehrhart_polytope(make({{-1}, {1}}, {0, 1})) ==
        QuasiPolynomialQ({PeriodicRational(q(1)), PeriodicRational(q(1))}));
  const auto tri = ehrhart_polytope(make({{-1, 0}, {0, -1}, {1, 1}}, {0, 0, 1}));
  CHECK(format(tri) == "(1/2) t^2 + (3/2) t + 1");

  const auto e1 = ehrhart_polytope(example1());
  CHECK(e1.degree() == 2);
  CHECK(e1.period() == 2);
  CHECK(e1.coefficient(2) == PeriodicRational(q(35, 8)));
  CHECK(e1.coefficient(1) == PeriodicRational{q(17, 4), q(4)});
  CHECK(e1.coefficient(0) == PeriodicRational{q(1), q(5, 8)});
  for (std::int64_t r = 0; r < 12; ++r) CHECK(e1(r) == Rational(count_polytope(example1(), r)));
}

TEST_CASE("Ehrhart of a rational 3-polytope matches scanning") {
  // 0 <= x <= 1/2, 0 <= y <= 2/3, 0 <= z, x + y + z <= 1
  const auto p = make({{-1, 0, 0}, {2, 0, 0}, {0, -1, 0}, {0, 3, 0}, {0, 0, -1}, {1, 1, 1}}, {0, 1, 0, 2, 0, 1});
  const auto e = ehrhart_polytope(p);
  const auto v = vertices(p);
  CHECK(e.degree() == 3);
  CHECK(lattice_denominator(v) % e.period() == 0);
  CHECK(e.leading_coefficient() == PeriodicRational(volume(p, v)));
  for (std::int64_t r = 0; r <= 14; ++r) CHECK(e(r) == Rational(count_polytope(p, v, r)));
}

TEST_CASE("dimension guard") {
  const auto p = make({{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1},
                       {1, 1, 1, 1, 1}},
                      {0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(ehrhart_polytope(p), GuardRailExceeded);
}

TEST_CASE("weighted simplex counts") {
  CHECK(format(lambda_w(WeightVector({1}))) == "t + 1");
  CHECK(format(lambda_w(WeightVector({2, 1}))) == "(1/4) t^2 + t + [1, 3/4]_t");
  CHECK(format(lambda_w(WeightVector({1, 1, 1}))) == "(1/6) t^3 + t^2 + (11/6) t + 1");
  CHECK(lambda_w(WeightVector({2, 1}))(3) == q(6));
}

TEST_CASE("weighted simplex laws for every w with m <= 3 and w_i <= 5") {
  std::vector<oracle::Coords> all;
  for (std::int64_t a = 1; a <= 5; ++a) {
    all.push_back({a});
    for (std::int64_t b = 1; b <= 5; ++b) {
      all.push_back({a, b});
      for (std::int64_t c = 1; c <= 5; ++c) all.push_back({a, b, c});
    }
  }
  for (const auto& wv : all) {
    const WeightVector w(wv);
    const auto l = lambda_w(w);
    const auto m = static_cast<std::int64_t>(wv.size());
    REQUIRE(l.degree() == m);
    REQUIRE(l.leading_coefficient() == PeriodicRational(Rational(1, factorial(m) * w.product())));
    REQUIRE(w.lcm() % l.period() == 0);
    for (std::int64_t t = 0; t <= 12; ++t) REQUIRE(l(t) == Rational(oracle::simplex(wv, t)));
  }
}
