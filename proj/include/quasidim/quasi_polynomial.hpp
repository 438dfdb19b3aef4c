#pragma once

/**
 * @file quasi_polynomial.hpp
 * @brief Univariate quasi-polynomials with periodic coefficients.
 *
 * f(t) = c_d(t) t^d + ... + c_1(t) t + c_0(t), every c_i a Periodic<Scalar>.
 * The canonical form drops vanishing top coefficients; the zero polynomial is
 * the single coefficient [0] with degree 0.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasidim/errors.hpp"
#include "quasidim/exact_linalg.hpp"
#include "quasidim/periodic.hpp"

namespace quasidim {

template <typename Scalar>
class QuasiPolynomial {
 public:
  using Coefficient = Periodic<Scalar>;

  QuasiPolynomial() : coefficients_{Coefficient()} {}
  explicit QuasiPolynomial(std::vector<Coefficient> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static QuasiPolynomial zero() { return QuasiPolynomial(); }
  /// t^k with coefficient c.
  static QuasiPolynomial monomial(Coefficient c, int k) {
    std::vector<Coefficient> cs(static_cast<std::size_t>(k) + 1);
    cs.back() = std::move(c);
    return QuasiPolynomial(std::move(cs));
  }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return degree() == 0 && coefficients_[0].is_zero(); }
  bool is_polynomial() const { return period() == 1; }

  const std::vector<Coefficient>& coefficients() const { return coefficients_; }
  const Coefficient& coefficient(int i) const { return coefficients_[static_cast<std::size_t>(i)]; }
  const Coefficient& leading_coefficient() const { return coefficients_.back(); }

  /// lcm of the coefficient periods.
  std::int64_t period() const {
    std::int64_t q = 1;
    for (const auto& c : coefficients_) q = std::lcm(q, c.period());
    return q;
  }

  Scalar operator()(std::int64_t n) const {
    Scalar acc(0);
    const Scalar x(n);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + (*it)(n);
    return acc;
  }

  QuasiPolynomial& operator+=(const QuasiPolynomial& rhs) { return *this = *this + rhs; }
  QuasiPolynomial& operator-=(const QuasiPolynomial& rhs) { return *this = *this - rhs; }

  friend QuasiPolynomial operator+(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    return zip(f, g, [](const Coefficient& a, const Coefficient& b) { return a + b; });
  }
  friend QuasiPolynomial operator-(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    return zip(f, g, [](const Coefficient& a, const Coefficient& b) { return a - b; });
  }
  friend QuasiPolynomial operator*(const Scalar& r, const QuasiPolynomial& f) {
    std::vector<Coefficient> cs;
    cs.reserve(f.coefficients_.size());
    for (const auto& c : f.coefficients_) cs.push_back(Coefficient(r) * c);
    return QuasiPolynomial(std::move(cs));
  }
  QuasiPolynomial operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    return f.coefficients_ == g.coefficients_;
  }

 private:
  template <typename Op>
  static QuasiPolynomial zip(const QuasiPolynomial& f, const QuasiPolynomial& g, Op op) {
    const std::size_t n = std::max(f.coefficients_.size(), g.coefficients_.size());
    std::vector<Coefficient> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Coefficient a = i < f.coefficients_.size() ? f.coefficients_[i] : Coefficient();
      const Coefficient b = i < g.coefficients_.size() ? g.coefficients_[i] : Coefficient();
      cs.push_back(op(a, b));
    }
    return QuasiPolynomial(std::move(cs));
  }

  void trim() {
    while (coefficients_.size() > 1 && coefficients_.back().is_zero()) coefficients_.pop_back();
    if (coefficients_.empty()) coefficients_.emplace_back();
  }

  std::vector<Coefficient> coefficients_;
};

using QuasiPolynomialQ = QuasiPolynomial<Rational>;

template <typename Scalar>
QuasiPolynomial<Scalar> scale(const QuasiPolynomial<Scalar>& f, const Scalar& r) {
  return r * f;
}

/// Returns g with g(n) = f(n - s) for every integer n.
template <typename Scalar>
QuasiPolynomial<Scalar> shift(const QuasiPolynomial<Scalar>& f, std::int64_t s) {
  using Coefficient = Periodic<Scalar>;
  const int d = f.degree();
  // (t - s)^i = sum_k C(i, k) (-s)^(i-k) t^k
  std::vector<Coefficient> out(static_cast<std::size_t>(d) + 1);
  const Scalar minus_s(-s);
  for (int i = 0; i <= d; ++i) {
    const Coefficient rotated = f.coefficient(i).rotated(s);
    if (rotated.is_zero()) continue;
    Scalar binom(1);
    Scalar power(1);  // (-s)^(i-k), built from k = i downwards
    for (int k = i; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] += Coefficient(binom * power) * rotated;
      // next k-1: C(i, k-1) = C(i, k) * k / (i - k + 1)
      if (k > 0) {
        binom = binom * Scalar(k) / Scalar(i - k + 1);
        power = power * minus_s;
      }
    }
  }
  return QuasiPolynomial<Scalar>(std::move(out));
}

namespace detail {

inline std::string coefficient_prefix(const std::string& value, bool fraction, int k) {
  if (k == 0) return value;
  if (value == "1") return "";
  return fraction ? "(" + value + ") " : value + " ";
}

}  // namespace detail

/// Text form, highest degree first: "(1/4) t^2 + t + [1, 3/4]_t", "0".
template <typename Scalar>
std::string format(const QuasiPolynomial<Scalar>& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const auto& c = f.coefficient(k);
    if (c.is_zero()) continue;
    const std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    bool negative = false;
    if (c.is_constant()) {
      Scalar v = c.values()[0];
      if (v < Scalar(0)) {
        negative = true;
        v = -v;
      }
      term = detail::coefficient_prefix(v.str(), !v.is_integer(), k) + power;
    } else {
      term = to_string(c) + "_" + var + (k == 0 ? "" : " " + power);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

/**
 * Fits the quasi-polynomial of degree <= degree_bound and period dividing
 * `period` that agrees with `counter` on every argument >= base.
 *
 * Each residue class c mod period is solved separately from the
 * degree_bound + 1 smallest arguments >= base in that class. The fitted
 * result is then compared with the counter on every argument in
 * [base, base + (2 * degree_bound + 3) * period), that is the solve window
 * plus degree_bound + 2 further periods; any disagreement throws
 * HypothesisViolation.
 */
template <typename Scalar = Rational, typename Counter>
QuasiPolynomial<Scalar> interpolate(Counter&& counter, int degree_bound, std::int64_t period,
                                    std::int64_t base) {
  if (degree_bound < 0) throw InvalidInput("interpolation degree bound must be >= 0");
  if (period < 1) throw InvalidInput("interpolation period must be >= 1");

  std::map<std::int64_t, Scalar> samples;
  auto sample = [&](std::int64_t n) -> const Scalar& {
    auto it = samples.find(n);
    if (it == samples.end()) it = samples.emplace(n, Scalar(counter(n))).first;
    return it->second;
  };

  const auto m = static_cast<Eigen::Index>(degree_bound);
  std::vector<std::vector<Scalar>> residue_coeffs(static_cast<std::size_t>(period));
  for (std::int64_t c = 0; c < period; ++c) {
    const std::int64_t first = base + floor_mod(c - base, period);
    MatrixX<Scalar> vandermonde(m + 1, m + 1);
    VectorX<Scalar> rhs(m + 1);
    for (Eigen::Index k = 0; k <= m; ++k) {
      const std::int64_t n = first + k * period;
      Scalar power(1);
      for (Eigen::Index i = 0; i <= m; ++i) {
        vandermonde(k, i) = power;
        power = power * Scalar(n);
      }
      rhs(k) = sample(n);
    }
    auto x = solve(vandermonde, rhs);
    if (!x) throw std::logic_error("singular Vandermonde system in interpolation");
    auto& slot = residue_coeffs[static_cast<std::size_t>(floor_mod(c, period))];
    slot.assign(x->data(), x->data() + x->size());
  }

  std::vector<Periodic<Scalar>> coefficients;
  for (Eigen::Index i = 0; i <= m; ++i) {
    std::vector<Scalar> values;
    for (const auto& per_residue : residue_coeffs) values.push_back(per_residue[static_cast<std::size_t>(i)]);
    coefficients.emplace_back(std::move(values));
  }
  QuasiPolynomial<Scalar> fitted(std::move(coefficients));

  const std::int64_t end = base + (2 * degree_bound + 3) * period;
  for (std::int64_t n = base; n < end; ++n) {
    if (fitted(n) != sample(n))
      throw HypothesisViolation("fit disagrees with counter at " + std::to_string(n));
  }
  return fitted;
}

}  // namespace quasidim
