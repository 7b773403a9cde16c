#pragma once

// Graded Milnor algebra, spectrum, monodromy characteristic polynomial and
// Poincaré series of weighted homogeneous polynomials.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "invpoly/arith.hpp"
#include "invpoly/intpoly.hpp"
#include "invpoly/polycore.hpp"

namespace invpoly {

/// Weighted homogeneous polynomial in the variables selected by `mask`,
/// written in the coordinates of an ambient n-variable polynomial.
struct WeightedPolynomial {
  std::vector<Monomial> terms;
  std::vector<std::int64_t> weights;
  std::int64_t degree = 1;
  unsigned mask = 0;

  [[nodiscard]] std::size_t ambient_n() const noexcept { return weights.size(); }
  [[nodiscard]] std::vector<std::size_t> variables() const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (mask & (1U << i)) v.push_back(i);
    return v;
  }
};

inline unsigned full_mask(std::size_t n) { return n >= 32 ? ~0U : (1U << n) - 1; }

/// f restricted to the coordinate subspace {x_i = 0 : i not in mask}.
inline WeightedPolynomial restrict_to(const InvertiblePolynomial& f, unsigned mask) {
  WeightedPolynomial p;
  WeightSystem w = canonical_weights(f);
  p.weights = w.weights;
  p.degree = w.degree;
  p.mask = mask & full_mask(f.n());
  for (const auto& m : f.monomials()) {
    bool inside = true;
    for (std::size_t j = 0; j < f.n(); ++j)
      if (m.exponents[j] > 0 && !(p.mask & (1U << j))) inside = false;
    if (inside) p.terms.push_back(m);
  }
  return p;
}

inline WeightedPolynomial as_weighted(const InvertiblePolynomial& f) { return restrict_to(f, full_mask(f.n())); }

struct GradedMilnorBasis {
  std::vector<std::vector<int>> monomials;  // ambient-length exponent vectors
  std::vector<std::int64_t> degrees;        // weighted degree of each monomial

  [[nodiscard]] std::size_t size() const noexcept { return monomials.size(); }
};

namespace detail {

inline void monomials_of_degree(const std::vector<std::size_t>& vars, const std::vector<std::int64_t>& w,
                                std::int64_t target, std::size_t n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
    if (k == vars.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const std::size_t v = vars[k];
    for (std::int64_t e = 0; e * w[v] <= left; ++e) {
      cur[v] = static_cast<int>(e);
      rec(k + 1, left - e * w[v]);
    }
    cur[v] = 0;
  };
  rec(0, target);
  // Lexicographically descending, so high powers of early variables pivot first.
  std::sort(out.begin(), out.end(), std::greater<>());
}

/// Row-reduces `rows` in place and returns the set of pivot columns.
inline std::vector<bool> pivot_columns(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<bool> pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivot[c] = true;
    ++r;
  }
  return pivot;
}

}  // namespace detail

/// Product formula prod (d - w_i)/w_i over the selected variables; NotIsolated
/// when it is not an integer.
inline std::int64_t milnor_number_formula(const WeightedPolynomial& p) {
  Rational mu(1);
  for (auto i : p.variables()) mu *= Rational(p.degree - p.weights[i], p.weights[i]);
  if (!mu.is_integer()) throw Error(ErrorKind::NotIsolated, "weights admit no isolated singularity (mu = " + mu.str() + ")");
  return mu.num();
}

/// Monomial basis of the Milnor algebra by degreewise exact row reduction of
/// the Jacobian ideal.
inline GradedMilnorBasis milnor_basis(const WeightedPolynomial& p) {
  const std::size_t n = p.ambient_n();
  const auto vars = p.variables();
  GradedMilnorBasis basis;
  if (vars.empty()) {
    basis.monomials.emplace_back(n, 0);
    basis.degrees.push_back(0);
    return basis;
  }
  // Partial derivatives as (exponent, coefficient) lists.
  std::vector<std::vector<std::pair<std::vector<int>, Rational>>> partials;
  for (auto i : vars) {
    std::vector<std::pair<std::vector<int>, Rational>> d;
    for (const auto& m : p.terms) {
      if (m.exponents[i] == 0) continue;
      auto e = m.exponents;
      Rational c = m.coefficient * Rational(e[i]);
      --e[i];
      d.emplace_back(std::move(e), c);
    }
    partials.push_back(std::move(d));
  }
  std::int64_t top = 0;
  for (auto i : vars) top += p.degree - 2 * p.weights[i];
  const std::int64_t expected = milnor_number_formula(p);

  for (std::int64_t m = 0; m <= top + p.degree; ++m) {
    std::vector<std::vector<int>> cols;
    detail::monomials_of_degree(vars, p.weights, m, n, cols);
    if (cols.empty()) continue;
    std::map<std::vector<int>, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const std::int64_t shift = m - (p.degree - p.weights[vars[k]]);
      if (shift < 0) continue;
      std::vector<std::vector<int>> mults;
      detail::monomials_of_degree(vars, p.weights, shift, n, mults);
      for (const auto& a : mults) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& [e, c] : partials[k]) {
          std::vector<int> s(n);
          for (std::size_t j = 0; j < n; ++j) s[j] = e[j] + a[j];
          auto it = col_of.find(s);
          if (it == col_of.end()) throw Error(ErrorKind::NotIsolated, "polynomial is not weighted homogeneous");
          row[it->second] += c;
        }
        rows.push_back(std::move(row));
      }
    }
    auto pivot = detail::pivot_columns(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (pivot[c]) continue;
      if (m > top) throw Error(ErrorKind::NotIsolated, "Milnor algebra is non-zero above the socle degree");
      basis.monomials.push_back(cols[c]);
      basis.degrees.push_back(m);
    }
  }
  if (static_cast<std::int64_t>(basis.size()) != expected)
    throw Error(ErrorKind::NotIsolated, "Milnor basis has " + std::to_string(basis.size()) + " elements, expected " +
                                            std::to_string(expected));
  return basis;
}

inline GradedMilnorBasis milnor_basis(const InvertiblePolynomial& f) { return milnor_basis(as_weighted(f)); }

inline std::int64_t milnor_number(const WeightedPolynomial& p) {
  if (p.variables().empty()) return 1;
  return static_cast<std::int64_t>(milnor_basis(p).size());
}

inline std::int64_t milnor_number(const InvertiblePolynomial& f) { return milnor_number(as_weighted(f)); }

inline bool is_nondegenerate(const InvertiblePolynomial& f) {
  try {
    (void)milnor_basis(f);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotIsolated) return false;
    throw;
  }
}

/// alpha(k) = sum over selected variables of (k_i + 1) w_i / d.
inline Rational basis_exponent(const WeightedPolynomial& p, const std::vector<int>& k) {
  Rational a(0);
  for (auto i : p.variables()) a += Rational((k[i] + 1) * p.weights[i], p.degree);
  return a;
}

using Spectrum = std::map<Rational, std::int64_t>;

inline Spectrum spectrum(const WeightedPolynomial& p) {
  Spectrum s;
  for (const auto& k : milnor_basis(p).monomials) ++s[basis_exponent(p, k)];
  return s;
}

inline Spectrum spectrum(const InvertiblePolynomial& f) { return spectrum(as_weighted(f)); }

/// prod over m of (t^m - 1)^{chi_m}; zero exponents are never stored.
struct CyclotomicProduct {
  std::map<std::int64_t, std::int64_t> factors;
  std::int64_t h = 1;

  friend bool operator==(const CyclotomicProduct&, const CyclotomicProduct&) = default;

  [[nodiscard]] std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [m, c] : factors) d = detail::checked_add(d, detail::checked_mul(m, c));
    return d;
  }

  [[nodiscard]] IntPoly numerator() const {
    IntPoly p = IntPoly::constant(1);
    for (const auto& [m, c] : factors)
      if (c > 0) p *= IntPoly::power_minus_one(static_cast<std::size_t>(m)).pow(c);
    return p;
  }
  [[nodiscard]] IntPoly denominator() const {
    IntPoly p = IntPoly::constant(1);
    for (const auto& [m, c] : factors)
      if (c < 0) p *= IntPoly::power_minus_one(static_cast<std::size_t>(m)).pow(-c);
    return p;
  }
  /// Expanded polynomial; NonIntegerQuotient if the product is not a polynomial.
  [[nodiscard]] IntPoly expand() const { return numerator().exact_div(denominator()); }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (!s.empty()) s += " ";
      s += "(t^" + std::to_string(it->first) + "-1)^" + std::to_string(it->second);
    }
    return s.empty() ? "1" : s;
  }
};

/// Regroups a multiset of eigenvalues e[a] (a taken mod 1) as a cyclotomic
/// product. Primitive r-th roots must share one multiplicity.
inline CyclotomicProduct cyclotomic_from_eigenvalues(const std::map<Rational, std::int64_t>& eigen) {
  std::map<Rational, std::int64_t> mult;
  for (const auto& [a, c] : eigen)
    if (c != 0) mult[a.frac()] += c;
  CyclotomicProduct p;
  for (const auto& [a, c] : mult) p.h = lcm_checked(p.h, a.den());
  std::map<std::int64_t, std::int64_t> per_order;
  for (auto r : divisors(p.h)) {
    std::optional<std::int64_t> shared;
    for (std::int64_t k = 0; k < r; ++k) {
      if (std::gcd(k, r) != 1) continue;
      auto it = mult.find(Rational(k, r));
      std::int64_t c = it == mult.end() ? 0 : it->second;
      if (shared && *shared != c)
        throw Error(ErrorKind::NotRational, "eigenvalue multiplicities differ among primitive " + std::to_string(r) + "-th roots");
      shared = c;
    }
    per_order[r] = *shared;
  }
  for (auto m : divisors(p.h)) {
    std::int64_t chi = 0;
    for (auto k : divisors(p.h))
      if (k % m == 0) chi += moebius(k / m) * per_order[k];
    if (chi != 0) p.factors[m] = chi;
  }
  return p;
}

inline CyclotomicProduct characteristic_polynomial(const WeightedPolynomial& p) {
  return cyclotomic_from_eigenvalues(spectrum(p));
}

inline CyclotomicProduct characteristic_polynomial(const InvertiblePolynomial& f) {
  return characteristic_polynomial(as_weighted(f));
}

/// chi'_k = -chi_{h/k}.
inline CyclotomicProduct saito_dual(const CyclotomicProduct& p) {
  CyclotomicProduct d;
  d.h = p.h;
  for (const auto& [m, c] : p.factors) {
    if (p.h % m != 0) throw Error(ErrorKind::Indivisible, "factor order " + std::to_string(m) + " does not divide h");
    d.factors[p.h / m] = -c;
  }
  return d;
}

struct PoincareSeries {
  IntPoly numerator;
  IntPoly denominator;

  [[nodiscard]] std::vector<std::int64_t> expand(std::size_t terms) const {
    return series_expand(numerator, denominator, terms);
  }
};

/// (1 - t^d) / prod (1 - t^{w_i}).
inline PoincareSeries poincare_series(const WeightSystem& reduced) {
  PoincareSeries s{IntPoly::one_minus_power(static_cast<std::size_t>(reduced.degree)), IntPoly::constant(1)};
  for (auto w : reduced.weights) s.denominator *= IntPoly::one_minus_power(static_cast<std::size_t>(w));
  return s;
}

/// prod (1 - t^{d - w_i}) / (1 - t^{w_i}).
inline PoincareSeries milnor_poincare(const WeightSystem& w) {
  PoincareSeries s{IntPoly::constant(1), IntPoly::constant(1)};
  for (auto x : w.weights) {
    s.numerator *= IntPoly::one_minus_power(static_cast<std::size_t>(w.degree - x));
    s.denominator *= IntPoly::one_minus_power(static_cast<std::size_t>(x));
  }
  return s;
}

}  // namespace invpoly
