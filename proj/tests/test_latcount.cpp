#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "quasidim/errors.hpp"
#include "quasidim/json_io.hpp"
#include "quasidim/latcount.hpp"
#include "quasidim/lattice.hpp"

using namespace quasidim;

namespace {

PointSet example3() { return PointSet(2, {{2, 1}, {0, 3}}); }

HPolytope example1() {
  IntMatrix a(4, 2);
  a << -1, 0, 0, -1, 1, 1, 2, 0;
  IntVector b(4);
  b << 0, 0, 3, 5;
  return HPolytope(a, b);
}

std::vector<oracle::Coords> as_coords(const PointSet& s) { return {s.points().begin(), s.points().end()}; }

}  // namespace

TEST_CASE("weight vectors") {
  CHECK_THROWS_AS(WeightVector({2, 0}), InvalidInput);
  CHECK_THROWS_AS(WeightVector({}), InvalidInput);
  CHECK(WeightVector({4, 6}).lcm() == 12);
  CHECK(WeightVector({4, 6}).product() == 24);
}

TEST_CASE("weighted order") {
  CHECK(ord_w({2, 1}, WeightVector({2, 1})) == 5);
  CHECK(ord_w({0, 3}, WeightVector({2, 1})) == 3);
  CHECK(ord_w({0, 0}, WeightVector({2, 1})) == 0);
  CHECK_THROWS_AS(ord_w({1, 2, 3}, WeightVector({2, 1})), DimensionMismatch);
  CHECK(product_le({1, 2}, {1, 3}));
  CHECK_FALSE(product_le({2, 0}, {1, 3}));
}

TEST_CASE("point sets") {
  const PointSet s(2, {{0, 3}, {2, 1}, {0, 3}});
  CHECK(s.size() == 2);
  CHECK(to_string(s) == "{(0,3), (2,1)}");
  CHECK_THROWS_AS(PointSet(2, {{-1, 0}}), InvalidInput);
  CHECK_THROWS_AS(PointSet(2, {{1, 0, 0}}), DimensionMismatch);
  CHECK(point_set_from_json(to_json(s)) == s);
}

TEST_CASE("simplex counts") {
  const int expected21[] = {1, 2, 4, 6, 9, 12, 16, 20};
  for (int t = 0; t < 8; ++t) CHECK(count_simplex(WeightVector({2, 1}), t) == expected21[t]);
  CHECK(count_simplex(WeightVector({1, 1}), 3) == 10);
  CHECK(count_simplex(WeightVector({3}), 7) == 3);
  CHECK(count_simplex(WeightVector({2, 1}), -1) == 0);
  const int expected111[] = {1, 4, 10, 20, 35, 56};
  for (int t = 0; t < 6; ++t) CHECK(count_simplex(WeightVector({1, 1, 1}), t) == expected111[t]);
}

TEST_CASE("simplex counts agree with the box scan") {
  for (const auto& w : std::vector<oracle::Coords>{{1}, {3}, {1, 2}, {3, 2}, {1, 2, 3}, {2, 2, 1}})
    for (std::int64_t t = 0; t <= 14; ++t) CHECK(count_simplex(WeightVector(w), t) == oracle::simplex(w, t));
}

TEST_CASE("polytope counts") {
  const int expected[] = {1, 9, 27, 52, 88, 130, 184, 243};
  for (int r = 0; r < 8; ++r) CHECK(count_polytope(example1(), r) == expected[r]);
  const auto p = example1();
  std::vector<oracle::Coords> a;
  oracle::Coords b;
  for (Eigen::Index i = 0; i < p.A.rows(); ++i) {
    a.push_back({p.A(i, 0), p.A(i, 1)});
    b.push_back(p.b(i));
  }
  for (int r = 0; r < 8; ++r) CHECK(count_polytope(p, r) == oracle::polytope(a, b, r, 3 * r + 1));
  CHECK(count_polytope(weighted_simplex(WeightVector({2, 1}), 1), 5) == 12);
}

TEST_CASE("polytope scan guard") {
  CHECK_THROWS_AS(count_polytope(example1(), 1000, 1000), GuardRailExceeded);
}

TEST_CASE("staircase counts") {
  const int expected[] = {1, 2, 4, 5, 7, 7, 8, 8, 9, 9, 10, 10};
  for (int r = 0; r < 12; ++r) {
    CHECK(count_va(example3(), WeightVector({2, 1}), r) == expected[r]);
    CHECK(count_va_recursive(example3(), WeightVector({2, 1}), r) == expected[r]);
  }
  CHECK(count_va(PointSet(2, {{1, 1}}), WeightVector({1, 1}), 4) == 9);
  CHECK(count_va(PointSet(2, {{2, 1}}), WeightVector({2, 1}), 5) == 11);
  CHECK(count_va(PointSet(2), WeightVector({2, 1}), 5) == 12);
  CHECK(count_va(PointSet(2, {{0, 0}}), WeightVector({2, 1}), 5) == 0);
  CHECK(count_va(example3(), WeightVector({2, 1}), -1) == 0);
  CHECK_THROWS_AS(count_va(example3(), WeightVector({1, 1, 1}), 3), DimensionMismatch);
  CHECK_THROWS_AS(count_va(PointSet(3, {{1, 1, 1}}), WeightVector({1, 1, 1}), 1000, 1000), GuardRailExceeded);
}

TEST_CASE("both staircase counters match the box scan (random)") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dim(1, 3), wt(1, 4), cnt(0, 4), coord(0, 5), rr(0, 40);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = static_cast<std::size_t>(dim(rng));
    oracle::Coords w(m);
    for (auto& x : w) x = wt(rng);
    std::vector<Point> pts(static_cast<std::size_t>(cnt(rng)), Point(m));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    const PointSet a(m, pts);
    const auto r = rr(rng);
    const auto want = oracle::staircase(as_coords(a), w, r);
    REQUIRE(count_va(a, WeightVector(w), r) == want);
    REQUIRE(count_va_recursive(a, WeightVector(w), r) == want);
  }
}

TEST_CASE("staircase count is monotone in r and antitone in A") {
  const WeightVector w({1, 2});
  const PointSet small(2, {{3, 1}}), big(2, {{3, 1}, {1, 4}});
  for (std::int64_t r = 0; r < 20; ++r) {
    CHECK(count_va(small, w, r) <= count_va(small, w, r + 1));
    CHECK(count_va(big, w, r) <= count_va(small, w, r));
  }
}
