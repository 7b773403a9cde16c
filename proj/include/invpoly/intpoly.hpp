#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invpoly/arith.hpp"

namespace invpoly {

/// Dense univariate integer polynomial, coefficient i multiplies t^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(std::int64_t v) { return IntPoly({v}); }
  static IntPoly monomial(std::int64_t coeff, std::size_t degree) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPoly(std::move(c));
  }
  /// t^m - 1
  static IntPoly power_minus_one(std::size_t m) {
    IntPoly p = monomial(1, m);
    p.c_[0] -= 1;
    p.trim();
    return p;
  }
  /// 1 - t^m
  static IntPoly one_minus_power(std::size_t m) {
    IntPoly p = monomial(-1, m);
    p.c_[0] += 1;
    p.trim();
    return p;
  }

  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
  [[nodiscard]] std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_add(a[i], b[i]);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_sub(a[i], b[i]);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  [[nodiscard]] IntPoly pow(std::int64_t e) const {
    IntPoly r = constant(1);
    for (std::int64_t i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Exact division by a divisor with leading coefficient +-1; throws
  /// NonIntegerQuotient if the remainder is non-zero.
  [[nodiscard]] IntPoly exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (d.leading() != 1 && d.leading() != -1)
      throw Error(ErrorKind::NonIntegerQuotient, "divisor is not monic");
    if (degree() < d.degree()) {
      if (is_zero()) return {};
      throw Error(ErrorKind::NonIntegerQuotient, "degree of divisor exceeds dividend");
    }
    std::vector<std::int64_t> rem = c_;
    std::vector<std::int64_t> q(c_.size() - d.c_.size() + 1, 0);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
      std::int64_t coef = rem[static_cast<std::size_t>(i) + d.c_.size() - 1] * d.leading();
      q[static_cast<std::size_t>(i)] = coef;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[static_cast<std::size_t>(i) + j] =
            detail::checked_sub(rem[static_cast<std::size_t>(i) + j], detail::checked_mul(coef, d.c_[j]));
    }
    for (auto v : rem)
      if (v != 0) throw Error(ErrorKind::NonIntegerQuotient, "polynomial division leaves a remainder");
    return IntPoly(std::move(q));
  }

  [[nodiscard]] bool divides(const IntPoly& n) const {
    try {
      (void)n.exact_div(*this);
      return true;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonIntegerQuotient) return false;
      throw;
    }
  }

  [[nodiscard]] std::int64_t eval(std::int64_t x) const {
    std::int64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = detail::checked_add(detail::checked_mul(r, x), *it);
    return r;
  }

  [[nodiscard]] std::string str(char var = 't') const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      std::int64_t v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      std::int64_t a = v < 0 ? -v : v;
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (a != 1 || i == 0) out += std::to_string(a);
      if (i > 0) {
        if (a != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// First `terms` coefficients of the power series num/den. Requires den(0) = +-1.
inline std::vector<std::int64_t> series_expand(const IntPoly& num, const IntPoly& den, std::size_t terms) {
  std::int64_t d0 = den[0];
  if (d0 != 1 && d0 != -1) throw Error(ErrorKind::DenominatorVanishes, "constant term of denominator must be +-1");
  std::vector<std::int64_t> out(terms, 0);
  for (std::size_t k = 0; k < terms; ++k) {
    std::int64_t acc = num[k];
    std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max<long>(den.degree(), 0)));
    for (std::size_t j = 1; j <= top; ++j) acc = detail::checked_sub(acc, detail::checked_mul(den[j], out[k - j]));
    out[k] = acc * d0;
  }
  return out;
}

/// Cyclotomic polynomial Phi_m, memoised.
inline const IntPoly& cyclotomic(std::size_t m) {
  static thread_local std::map<std::size_t, IntPoly> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  IntPoly p = IntPoly::power_minus_one(m);
  for (auto d : divisors(static_cast<std::int64_t>(m)))
    if (static_cast<std::size_t>(d) != m) p = p.exact_div(cyclotomic(static_cast<std::size_t>(d)));
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace invpoly
