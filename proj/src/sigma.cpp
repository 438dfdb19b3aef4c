#include "quasidim/sigma.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "quasidim/errors.hpp"
#include "quasidim/kolchin.hpp"

namespace quasidim {

bool is_transform_of(const Term& v, const Term& u) {
  return v.indeterminate == u.indeterminate && product_le(u.exponents, v.exponents);
}

Ranking::Ranking(WeightVector weights, std::size_t indeterminates)
    : weights_(std::move(weights)), n_(indeterminates) {
  if (n_ == 0) throw InvalidInput("need at least one difference indeterminate");
}

void Ranking::check(const Term& u) const {
  if (u.exponents.size() != weights_.size())
    throw DimensionMismatch("term has " + std::to_string(u.exponents.size()) + " exponents, expected " +
                            std::to_string(weights_.size()));
  if (u.indeterminate >= n_)
    throw DimensionMismatch("indeterminate index " + std::to_string(u.indeterminate) + " out of range");
  for (auto k : u.exponents)
    if (k < 0) throw InvalidInput("negative exponent in term");
}

std::strong_ordering term_compare(const Term& u, const Term& v, const Ranking& rk) {
  if (u.exponents.size() != v.exponents.size() || u.exponents.size() != rk.translations())
    throw DimensionMismatch("terms have different numbers of translations");
  if (auto c = rk.order(u) <=> rk.order(v); c != 0) return c;
  if (auto c = u.exponents <=> v.exponents; c != 0) return c;
  return u.indeterminate <=> v.indeterminate;
}

LinearSigmaPolynomial::LinearSigmaPolynomial(const std::vector<std::pair<Term, Rational>>& monomials) {
  for (const auto& [u, c] : monomials) add(u, c);
}

Rational LinearSigmaPolynomial::coefficient(const Term& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearSigmaPolynomial::add(const Term& u, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(u, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinearSigmaPolynomial& LinearSigmaPolynomial::operator+=(const LinearSigmaPolynomial& rhs) {
  for (const auto& [u, c] : rhs.terms_) add(u, c);
  return *this;
}

LinearSigmaPolynomial& LinearSigmaPolynomial::operator-=(const LinearSigmaPolynomial& rhs) {
  for (const auto& [u, c] : rhs.terms_) add(u, -c);
  return *this;
}

LinearSigmaPolynomial operator*(const Rational& c, const LinearSigmaPolynomial& f) {
  LinearSigmaPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [u, a] : f.terms_) out.terms_.emplace(u, c * a);
  return out;
}

Term leader(const LinearSigmaPolynomial& f, const Ranking& rk) {
  if (f.is_zero()) throw InvalidInput("the zero sigma-polynomial has no leader");
  const Term* best = nullptr;
  for (const auto& [u, c] : f.terms())
    if (!best || term_compare(u, *best, rk) > 0) best = &u;
  return *best;
}

Rational initial(const LinearSigmaPolynomial& f, const Ranking& rk) { return f.coefficient(leader(f, rk)); }

LinearSigmaPolynomial monic(const LinearSigmaPolynomial& f, const Ranking& rk) {
  return Rational(1) / initial(f, rk) * f;
}

LinearSigmaPolynomial apply_translation(const Point& tau, const LinearSigmaPolynomial& f) {
  LinearSigmaPolynomial out;
  for (const auto& [u, c] : f.terms()) {
    if (u.exponents.size() != tau.size()) throw DimensionMismatch("translation has the wrong number of exponents");
    Term v = u;
    for (std::size_t i = 0; i < tau.size(); ++i) v.exponents[i] += tau[i];
    out.add(v, c);
  }
  return out;
}

namespace {

Point exponent_difference(const Point& big, const Point& small) {
  Point out(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) out[i] = big[i] - small[i];
  return out;
}

}  // namespace

LinearSigmaPolynomial reduce(const LinearSigmaPolynomial& f, std::span<const LinearSigmaPolynomial> s,
                             const Ranking& rk) {
  std::vector<std::pair<Term, Rational>> leads;
  leads.reserve(s.size());
  for (const auto& g : s) {
    Term u = leader(g, rk);
    Rational c = g.coefficient(u);
    leads.emplace_back(std::move(u), std::move(c));
  }

  LinearSigmaPolynomial h = f;
  while (true) {
    // Highest reducible term of h, and the first divisor in s.
    const Term* target = nullptr;
    std::size_t by = 0;
    for (const auto& [u, c] : h.terms()) {
      if (target && term_compare(u, *target, rk) < 0) continue;
      for (std::size_t k = 0; k < leads.size(); ++k) {
        if (is_transform_of(u, leads[k].first)) {
          target = &u;
          by = k;
          break;
        }
      }
    }
    if (!target) return h;
    const Term u = *target;
    const Rational factor = h.coefficient(u) / leads[by].second;
    h -= factor * apply_translation(exponent_difference(u.exponents, leads[by].first.exponents), s[by]);
  }
}

std::vector<PointSet> leader_sets(std::span<const LinearSigmaPolynomial> elements, const Ranking& rk) {
  std::vector<std::vector<Point>> per(rk.indeterminates());
  for (const auto& g : elements) {
    const Term u = leader(g, rk);
    per[u.indeterminate].push_back(u.exponents);
  }
  std::vector<PointSet> out;
  for (auto& pts : per) out.emplace_back(rk.translations(), std::move(pts));
  return out;
}

CharacteristicSet characteristic_set(std::span<const LinearSigmaPolynomial> f, const Ranking& rk) {
  std::vector<LinearSigmaPolynomial> basis;
  std::vector<Term> leads;
  for (const auto& g : f) {
    if (g.is_zero()) throw InvalidInput("characteristic_set: generators must be nonzero");
    for (const auto& [u, c] : g.terms()) rk.check(u);
    basis.push_back(monic(g, rk));
    leads.push_back(leader(basis.back(), rk));
  }

  struct Pair {
    Term common;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].indeterminate != leads[j].indeterminate) continue;
      Term common = leads[i];
      for (std::size_t k = 0; k < common.exponents.size(); ++k)
        common.exponents[k] = std::max(common.exponents[k], leads[j].exponents[k]);
      pairs.push_back({std::move(common), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // Lowest common transform first; ties by pair indices.
    auto next = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (auto c = term_compare(a.common, b.common, rk); c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair p = *next;
    pairs.erase(next);
    const LinearSigmaPolynomial combination =
        apply_translation(exponent_difference(p.common.exponents, leads[p.i].exponents), basis[p.i]) -
        apply_translation(exponent_difference(p.common.exponents, leads[p.j].exponents), basis[p.j]);
    LinearSigmaPolynomial h = reduce(combination, basis, rk);
    if (h.is_zero()) continue;
    basis.push_back(monic(h, rk));
    leads.push_back(leader(basis.back(), rk));
    add_pairs_for(basis.size() - 1);
  }

  // Keep only elements whose leader is minimal; among equal leaders prefer
  // fewer monomials, then the earlier element.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !is_transform_of(leads[i], leads[j])) continue;
      if (leads[i] != leads[j]) {
        redundant = true;
      } else {
        redundant = basis[j].size() < basis[i].size() || (basis[j].size() == basis[i].size() && j < i);
      }
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<LinearSigmaPolynomial> minimal;
  for (auto i : keep) minimal.push_back(basis[i]);
  // Tail reduction: leaders are pairwise non-divisible, so one pass gives an
  // autoreduced set.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<LinearSigmaPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = monic(reduce(minimal[i], others, rk), rk);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return term_compare(leader(a, rk), leader(b, rk), rk) < 0;
  });

  CharacteristicSet out;
  out.leader_sets = leader_sets(minimal, rk);
  out.elements = std::move(minimal);
  return out;
}

QuasiPolynomialQ dimension_quasipoly_system(std::span<const PointSet> e, const WeightVector& w) {
  QuasiPolynomialQ phi;
  for (const auto& ej : e) phi += dimension_quasipoly(ej, w).chi;
  return phi;
}

std::int64_t system_threshold(std::span<const PointSet> e, const WeightVector& w) {
  std::int64_t threshold = 0;
  for (const auto& ej : e) threshold = std::max(threshold, dimension_quasipoly(ej, w).threshold);
  return threshold;
}

std::int64_t sigma_trdeg(const QuasiPolynomialQ& phi, const WeightVector& w) {
  const int m = static_cast<int>(w.size());
  if (phi.degree() > m) throw std::logic_error("dimension quasi-polynomial has degree above m");
  if (phi.degree() < m) return 0;
  const auto& top = phi.leading_coefficient();
  if (!top.is_constant()) throw std::logic_error("coefficient of t^m is not constant: " + to_string(top));
  Rational a = top.values()[0] * Rational(w.product());
  for (int k = 2; k <= m; ++k) a *= Rational(k);
  if (!a.is_integer() || a.sign() < 0)
    throw std::logic_error("coefficient of t^m does not encode a nonnegative integer: " + a.str());
  return a.to_integer().convert_to<std::int64_t>();
}

std::string to_string(const Term& u, std::size_t indeterminates) {
  std::string out;
  for (std::size_t i = 0; i < u.exponents.size(); ++i) {
    if (u.exponents[i] == 0) continue;
    out += "a" + std::to_string(i + 1);
    if (u.exponents[i] > 1) out += "^" + std::to_string(u.exponents[i]);
    out += "*";
  }
  out += "y";
  if (indeterminates > 1) out += std::to_string(u.indeterminate + 1);
  return out;
}

std::string to_string(const LinearSigmaPolynomial& f, const Ranking& rk) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Term, Rational>> ordered(f.terms().begin(), f.terms().end());
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto& a, const auto& b) { return term_compare(a.first, b.first, rk) > 0; });
  std::string out;
  for (const auto& [u, c] : ordered) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") + "*";
    out += to_string(u, rk.indeterminates());
  }
  return out;
}

}  // namespace quasidim
