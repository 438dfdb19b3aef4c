#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quasidim/errors.hpp"
#include "quasidim/kolchin.hpp"
#include "quasidim/sigma.hpp"
#include "sigma_support.hpp"

using namespace quasidim;
using sigma_support::poly;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
Term term(Point e, std::size_t j = 0) { return Term{std::move(e), j}; }

const WeightVector w21({2, 1});

std::vector<LinearSigmaPolynomial> generators(const sigma_support::RandomSystem& s) {
  std::vector<LinearSigmaPolynomial> out;
  for (const auto& g : s.gens) out.push_back(poly(g));
  return out;
}

}  // namespace

TEST_CASE("ranking") {
  const Ranking rk(w21, 1);
  CHECK(term_compare(term({2, 1}), term({0, 3}), rk) == std::strong_ordering::greater);  // 5 > 3
  CHECK(term_compare(term({1, 1}), term({0, 3}), rk) == std::strong_ordering::greater);  // same order, lex
  CHECK(term_compare(term({1, 0}), term({1, 0}), rk) == std::strong_ordering::equal);
  const Ranking rk2(w21, 2);
  CHECK(term_compare(term({1, 0}, 1), term({1, 0}, 0), rk2) == std::strong_ordering::greater);
  CHECK_THROWS_AS(rk2.check(term({1, 0}, 2)), DimensionMismatch);
  CHECK_THROWS_AS(rk2.check(term({1})), DimensionMismatch);
  CHECK(is_transform_of(term({2, 3}), term({1, 3})));
  CHECK_FALSE(is_transform_of(term({2, 3}, 1), term({1, 3}, 0)));
}

TEST_CASE("ranking axioms on a grid of terms") {
  const Ranking rk(WeightVector({2, 3}), 2);
  std::vector<Term> terms;
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = 0; b <= 3; ++b)
      for (std::size_t j = 0; j < 2; ++j) terms.push_back(term({a, b}, j));
  const std::vector<Point> taus{{0, 0}, {1, 0}, {0, 1}, {2, 1}};
  for (const auto& u : terms) {
    for (const auto& tau : taus) {
      Term tu = u;
      for (std::size_t i = 0; i < 2; ++i) tu.exponents[i] += tau[i];
      CHECK(term_compare(tu, u, rk) != std::strong_ordering::less);
      for (const auto& v : terms) {
        Term tv = v;
        for (std::size_t i = 0; i < 2; ++i) tv.exponents[i] += tau[i];
        CHECK(term_compare(u, v, rk) == term_compare(tu, tv, rk));
      }
    }
  }
}

TEST_CASE("leader, initial and printing") {
  const Ranking rk(w21, 1);
  const auto f = poly({{q(3), {2, 1}, 0}, {q(-1), {1, 0}, 0}});
  CHECK(leader(f, rk) == term({2, 1}));
  CHECK(initial(f, rk) == q(3));
  CHECK(initial(monic(f, rk), rk) == q(1));
  CHECK(to_string(f, rk) == "3*a1^2*a2*y - a1*y");
  CHECK(to_string(term({0, 0}, 1), 2) == "y2");
  CHECK_THROWS_AS(leader(LinearSigmaPolynomial(), rk), InvalidInput);
  CHECK(apply_translation({1, 2}, f) == poly({{q(3), {3, 3}, 0}, {q(-1), {2, 2}, 0}}));
}

TEST_CASE("reduction") {
  const Ranking rk(WeightVector({1, 1}), 1);
  const std::vector<LinearSigmaPolynomial> s{poly({{q(1), {0, 1}, 0}, {q(-1), {0, 0}, 0}})};
  CHECK(reduce(poly({{q(1), {0, 2}, 0}}), s, rk) == poly({{q(1), {0, 0}, 0}}));
  CHECK(reduce(poly({{q(1), {3, 0}, 0}}), s, rk) == poly({{q(1), {3, 0}, 0}}));
  CHECK(reduce(s[0], s, rk).is_zero());
}

TEST_CASE("monomial generators give their own antichain") {
  const Ranking rk(w21, 1);
  const std::vector<LinearSigmaPolynomial> f{poly({{q(1), {2, 1}, 0}}), poly({{q(1), {0, 3}, 0}})};
  const auto cs = characteristic_set(f, rk);
  REQUIRE(cs.leader_sets.size() == 1);
  CHECK(cs.leader_sets[0] == PointSet(2, {{2, 1}, {0, 3}}));
  const auto phi = dimension_quasipoly_system(cs.leader_sets, w21);
  CHECK(format(phi) == "(1/2) t + [5, 9/2]_t");
  CHECK(sigma_trdeg(phi, w21) == 0);
  CHECK(system_threshold(cs.leader_sets, w21) == 7);
}

TEST_CASE("tails can change the leader set") {
  const Ranking rk(w21, 1);
  const std::vector<LinearSigmaPolynomial> f{poly({{q(1), {2, 1}, 0}, {q(-1), {1, 0}, 0}}),
                                             poly({{q(1), {0, 3}, 0}, {q(-1), {0, 0}, 0}})};
  const auto cs = characteristic_set(f, rk);
  CHECK(cs.leader_sets[0] == PointSet(2, {{0, 3}, {2, 0}}));
  for (const auto& g : f) CHECK(reduce(g, cs.elements, rk).is_zero());
  const auto phi = dimension_quasipoly_system(cs.leader_sets, w21);
  CHECK(format(phi) == "6");
}

TEST_CASE("characteristic set properties (random)") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = sigma_support::random_system(rng);
    const WeightVector w(s.weights);
    const Ranking rk(w, s.n);
    const auto f = generators(s);
    const auto cs = characteristic_set(f, rk);
    // monic, increasing, autoreduced
    for (std::size_t i = 0; i < cs.elements.size(); ++i) {
      CHECK(initial(cs.elements[i], rk) == q(1));
      if (i > 0)
        CHECK(term_compare(leader(cs.elements[i - 1], rk), leader(cs.elements[i], rk), rk) ==
              std::strong_ordering::less);
      std::vector<LinearSigmaPolynomial> others = cs.elements;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK(reduce(cs.elements[i], others, rk) == cs.elements[i]);
    }
    // generators and translated combinations reduce to zero; reduce is idempotent
    std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
    for (const auto& g : f) CHECK(reduce(g, cs.elements, rk).is_zero());
    for (int k = 0; k < 20; ++k) {
      LinearSigmaPolynomial combo;
      for (const auto& g : f) {
        Point tau(s.weights.size());
        for (auto& x : tau) x = e(rng);
        combo += Rational(c(rng)) * apply_translation(tau, g);
      }
      CHECK(reduce(combo, cs.elements, rk).is_zero());
    }
    const auto stray = poly({{q(1), Point(s.weights.size(), 5), 0}});
    const auto once = reduce(stray, cs.elements, rk);
    CHECK(reduce(once, cs.elements, rk) == once);
    for (const auto& e_j : cs.leader_sets) CHECK(minimal_antichain(e_j) == e_j);
  }
}

TEST_CASE("leader counts agree with the Macaulay oracle (random)") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 15; ++trial) {
    const auto s = sigma_support::random_system(rng);
    oracle::MacaulayOracle mac(s.gens, s.weights, s.n);
    const auto want = mac.counts(12);
    REQUIRE(!want.empty());
    CHECK(sigma_support::charset_counts(s, 12) == want);
  }
}

TEST_CASE("sigma transcendence degree") {
  const WeightVector w11({1, 1});
  const std::vector<PointSet> free2{PointSet(2), PointSet(2)};
  CHECK(sigma_trdeg(dimension_quasipoly_system(free2, w11), w11) == 2);
  const std::vector<PointSet> mixed{PointSet(2), PointSet(2, {{1, 1}})};
  CHECK(sigma_trdeg(dimension_quasipoly_system(mixed, w11), w11) == 1);
  CHECK(sigma_trdeg(dimension_quasipoly_system(free2, w21), w21) == 2);
  const std::vector<PointSet> dead{PointSet(2, {{0, 0}})};
  CHECK(dimension_quasipoly_system(dead, w21).is_zero());
  CHECK(sigma_trdeg(QuasiPolynomialQ::zero(), w21) == 0);
}
