#pragma once

/**
 * @file periodic.hpp
 * @brief Periodic numbers: functions Z -> Scalar constant on residue classes.
 *
 * A Periodic<S> with values [a_0, ..., a_{q-1}] evaluates to a_{n mod q}, the
 * residue always taken in {0, ..., q-1} (negative n included). Every value is
 * stored with minimal period, so two periodic numbers are equal exactly when
 * their value lists are equal.
 */

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasidim/rational.hpp"

namespace quasidim {

inline std::int64_t floor_mod(std::int64_t n, std::int64_t q) {
  const std::int64_t r = n % q;
  return r < 0 ? r + q : r;
}

template <typename Scalar>
class Periodic {
 public:
  Periodic() : values_{Scalar(0)} {}
  Periodic(Scalar constant) : values_{std::move(constant)} {}  // NOLINT(google-explicit-constructor)
  Periodic(std::initializer_list<Scalar> values) : Periodic(std::vector<Scalar>(values)) {}
  explicit Periodic(std::vector<Scalar> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("periodic number needs at least one value");
    normalize_in_place();
  }

  std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<Scalar>& values() const { return values_; }

  bool is_constant() const { return values_.size() == 1; }
  bool is_zero() const { return is_constant() && values_[0] == Scalar(0); }

  Scalar operator()(std::int64_t n) const {
    return values_[static_cast<std::size_t>(floor_mod(n, period()))];
  }

  /// g(n) = (*this)(n - s).
  Periodic rotated(std::int64_t s) const {
    const std::int64_t q = period();
    std::vector<Scalar> out(values_.size());
    for (std::int64_t i = 0; i < q; ++i)
      out[static_cast<std::size_t>(i)] = (*this)(i - s);
    return Periodic(std::move(out));
  }

  Periodic operator-() const {
    std::vector<Scalar> out(values_);
    for (auto& v : out) v = -v;
    return Periodic(std::move(out));
  }

  Periodic& operator+=(const Periodic& rhs) { return *this = combine(*this, rhs, std::plus<>{}); }
  Periodic& operator-=(const Periodic& rhs) { return *this = combine(*this, rhs, std::minus<>{}); }
  Periodic& operator*=(const Periodic& rhs) { return *this = combine(*this, rhs, std::multiplies<>{}); }

  friend Periodic operator+(const Periodic& a, const Periodic& b) { return combine(a, b, std::plus<>{}); }
  friend Periodic operator-(const Periodic& a, const Periodic& b) { return combine(a, b, std::minus<>{}); }
  friend Periodic operator*(const Periodic& a, const Periodic& b) { return combine(a, b, std::multiplies<>{}); }

  friend bool operator==(const Periodic& a, const Periodic& b) { return a.values_ == b.values_; }

  /// Pointwise combination over lcm(period(a), period(b)), re-normalized.
  template <typename Op>
  static Periodic combine(const Periodic& a, const Periodic& b, Op op) {
    const std::int64_t q = std::lcm(a.period(), b.period());
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) out.push_back(op(a(i), b(i)));
    return Periodic(std::move(out));
  }

 private:
  void normalize_in_place() {
    const std::size_t q = values_.size();
    for (std::size_t p = 1; p < q; ++p) {
      if (q % p != 0) continue;
      bool repeats = true;
      for (std::size_t i = p; i < q && repeats; ++i) repeats = values_[i] == values_[i - p];
      if (repeats) {
        values_.resize(p);
        return;
      }
    }
  }

  std::vector<Scalar> values_;
};

using PeriodicRational = Periodic<Rational>;

/// Returns the canonical (minimal-period) representative of the value list.
template <typename Scalar>
Periodic<Scalar> normalize(std::vector<Scalar> values) {
  return Periodic<Scalar>(std::move(values));
}

/// "1/2" for constants, "[1/2, 3/4, 1]" otherwise.
template <typename Scalar>
std::string to_string(const Periodic<Scalar>& p) {
  if (p.is_constant()) return p.values()[0].str();
  std::string out = "[";
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    if (i) out += ", ";
    out += p.values()[i].str();
  }
  return out + "]";
}

}  // namespace quasidim
