#pragma once

/**
 * @file sigma.hpp
 * @brief Linear difference polynomials with weighted translations.
 *
 * The coefficient field is Q with every translation alpha_i acting as the
 * identity, so a linear sigma-polynomial sum c * alpha^k y_j is an element of
 * the free module Q[x_1..x_m]^n and characteristic sets are computed by
 * critical-pair completion in that module.
 *
 * Terms are ranked by (ord_w tau, k_1, ..., k_m, j) lexicographically.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quasidim/lattice.hpp"
#include "quasidim/quasi_polynomial.hpp"
#include "quasidim/rational.hpp"

namespace quasidim {

/// alpha_1^{k_1} ... alpha_m^{k_m} y_j, with j counted from 0.
struct Term {
  Point exponents;
  std::size_t indeterminate = 0;

  friend auto operator<=>(const Term&, const Term&) = default;
};

/// True when v = tau u for some translation tau.
bool is_transform_of(const Term& v, const Term& u);

class Ranking {
 public:
  Ranking(WeightVector weights, std::size_t indeterminates);

  const WeightVector& weights() const { return weights_; }
  std::size_t indeterminates() const { return n_; }
  std::size_t translations() const { return weights_.size(); }

  std::int64_t order(const Term& u) const { return ord_w(u.exponents, weights_); }
  /// Throws DimensionMismatch for terms outside N^m x {0..n-1}.
  void check(const Term& u) const;

 private:
  WeightVector weights_;
  std::size_t n_;
};

std::strong_ordering term_compare(const Term& u, const Term& v, const Ranking& rk);

/// Finite Q-linear combination of terms; zero coefficients are never stored.
class LinearSigmaPolynomial {
 public:
  LinearSigmaPolynomial() = default;
  explicit LinearSigmaPolynomial(const std::vector<std::pair<Term, Rational>>& monomials);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Term, Rational>& terms() const { return terms_; }
  Rational coefficient(const Term& u) const;

  void add(const Term& u, const Rational& c);

  LinearSigmaPolynomial& operator+=(const LinearSigmaPolynomial& rhs);
  LinearSigmaPolynomial& operator-=(const LinearSigmaPolynomial& rhs);
  friend LinearSigmaPolynomial operator+(LinearSigmaPolynomial a, const LinearSigmaPolynomial& b) { return a += b; }
  friend LinearSigmaPolynomial operator-(LinearSigmaPolynomial a, const LinearSigmaPolynomial& b) { return a -= b; }
  friend LinearSigmaPolynomial operator*(const Rational& c, const LinearSigmaPolynomial& f);

  friend bool operator==(const LinearSigmaPolynomial&, const LinearSigmaPolynomial&) = default;

 private:
  std::map<Term, Rational> terms_;
};

/// Ranking-maximal term. Throws InvalidInput for the zero polynomial.
Term leader(const LinearSigmaPolynomial& f, const Ranking& rk);
/// Coefficient of the leader.
Rational initial(const LinearSigmaPolynomial& f, const Ranking& rk);
/// f scaled so that its initial is 1.
LinearSigmaPolynomial monic(const LinearSigmaPolynomial& f, const Ranking& rk);

/// tau f: every exponent vector increased by tau.
LinearSigmaPolynomial apply_translation(const Point& tau, const LinearSigmaPolynomial& f);

/// Repeatedly cancels the highest term of f that is a transform of a leader
/// in s. The result contains no transform of any leader of s, and differs
/// from f by a combination of transforms of elements of s.
LinearSigmaPolynomial reduce(const LinearSigmaPolynomial& f, std::span<const LinearSigmaPolynomial> s,
                             const Ranking& rk);

struct CharacteristicSet {
  /// Autoreduced, monic, increasing rank.
  std::vector<LinearSigmaPolynomial> elements;
  /// E_j: exponents of the leaders in indeterminate j; each an antichain.
  std::vector<PointSet> leader_sets;
};

/// Leader exponent sets E_1..E_n of an autoreduced set.
std::vector<PointSet> leader_sets(std::span<const LinearSigmaPolynomial> elements, const Ranking& rk);

/// Characteristic set of the difference ideal generated by f.
CharacteristicSet characteristic_set(std::span<const LinearSigmaPolynomial> f, const Ranking& rk);

/// Phi = sum_j chi_{E_j}^(w).
QuasiPolynomialQ dimension_quasipoly_system(std::span<const PointSet> e, const WeightVector& w);
/// max_j of the per-indeterminate validity thresholds of Phi.
std::int64_t system_threshold(std::span<const PointSet> e, const WeightVector& w);

/// a with [t^m] Phi = a / (m! w_1 ... w_m); 0 when deg Phi < m.
std::int64_t sigma_trdeg(const QuasiPolynomialQ& phi, const WeightVector& w);

/// "a1^2*a2*y" style, y1..yn when n > 1.
std::string to_string(const Term& u, std::size_t indeterminates = 1);
std::string to_string(const LinearSigmaPolynomial& f, const Ranking& rk);

}  // namespace quasidim
