#pragma once

// Invertible polynomials: parsing, exponent matrix, weights, transpose and
// structural classification.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invpoly/arith.hpp"
#include "invpoly/matrix.hpp"

namespace invpoly {

struct Monomial {
  std::vector<int> exponents;
  Rational coefficient{1};

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// n-variable polynomial with exactly n monomials and det(E) > 0.
class InvertiblePolynomial {
 public:
  InvertiblePolynomial(std::vector<Monomial> monomials, std::vector<std::string> names)
      : monomials_(std::move(monomials)), names_(std::move(names)) {
    const std::size_t n = names_.size();
    if (n == 0) throw Error(ErrorKind::NotInvertible, "polynomial without variables");
    std::set<std::vector<int>> seen;
    for (const auto& m : monomials_) {
      if (m.exponents.size() != n) throw Error(ErrorKind::Syntax, "exponent vector length differs from variable count");
      if (m.coefficient.is_zero()) throw Error(ErrorKind::Syntax, "zero coefficient");
      if (std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e == 0; }))
        throw Error(ErrorKind::Syntax, "constant term");
      if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e < 0; }))
        throw Error(ErrorKind::Syntax, "negative exponent");
      if (!seen.insert(m.exponents).second) throw Error(ErrorKind::DuplicateMonomial, "repeated exponent vector");
    }
    if (monomials_.size() != n)
      throw Error(ErrorKind::NotInvertible, std::to_string(monomials_.size()) + " monomials in " +
                                               std::to_string(n) + " variables");
    det_ = determinant(exponent_matrix());
    if (det_ == 0) throw Error(ErrorKind::NotInvertible, "exponent matrix is singular");
    if (det_ < 0) {
      std::swap(monomials_[0], monomials_[1]);
      det_ = -det_;
    }
  }

  [[nodiscard]] std::size_t n() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::int64_t det() const noexcept { return det_; }

  [[nodiscard]] IntMatrix exponent_matrix() const {
    IntMatrix e(monomials_.size(), names_.size(), 0);
    for (std::size_t i = 0; i < monomials_.size(); ++i)
      for (std::size_t j = 0; j < names_.size(); ++j) e(i, j) = monomials_[i].exponents[j];
    return e;
  }

  [[nodiscard]] std::vector<Rational> coefficients() const {
    std::vector<Rational> c;
    for (const auto& m : monomials_) c.push_back(m.coefficient);
    return c;
  }

  /// Canonical text form, accepted back by parse_polynomial.
  [[nodiscard]] std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      if (i) out += " + ";
      const auto& m = monomials_[i];
      if (m.coefficient != Rational(1)) out += m.coefficient.str() + "*";
      bool first = true;
      for (std::size_t j = 0; j < names_.size(); ++j) {
        if (m.exponents[j] == 0) continue;
        if (!first) out += "*";
        first = false;
        out += names_[j];
        if (m.exponents[j] != 1) out += "^" + std::to_string(m.exponents[j]);
      }
    }
    return out;
  }

  friend bool operator==(const InvertiblePolynomial& a, const InvertiblePolynomial& b) {
    return a.monomials_ == b.monomials_ && a.names_ == b.names_;
  }

 private:
  std::vector<Monomial> monomials_;
  std::vector<std::string> names_;
  std::int64_t det_ = 0;
};

namespace detail {

inline int variable_rank(const std::string& v) {
  static const std::string named = "xyzw";
  if (v.size() == 1) return static_cast<int>(named.find(v[0]));
  return 100 + std::stoi(v.substr(1));
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  std::vector<std::pair<Rational, std::map<std::string, int>>> parse() {
    std::vector<std::pair<Rational, std::map<std::string, int>>> terms;
    skip();
    bool negate = false;
    if (peek() == '-' && !next_is_digit()) {
      ++pos_;
      negate = true;
    }
    terms.push_back(term(negate));
    while (true) {
      skip();
      if (eof()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+'");
      ++pos_;
      skip();
      negate = false;
      if (c == '-') negate = true;
      terms.push_back(term(negate));
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool eof() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return eof() ? '\0' : s_[pos_]; }
  [[nodiscard]] bool next_is_digit() const {
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
  }

  std::int64_t uint() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::int64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = checked_add(checked_mul(v, 10), s_[pos_++] - '0');
    return v;
  }

  std::pair<Rational, std::map<std::string, int>> term(bool negate) {
    skip();
    Rational coeff(1);
    bool has_coeff = false;
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::int64_t num = uint();
      std::int64_t den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        den = uint();
        if (den == 0) fail("zero denominator");
      }
      if (num == 0) fail("zero coefficient");
      coeff = Rational(neg ? -num : num, den);
      has_coeff = true;
      skip();
      if (peek() == '*') ++pos_;
    }
    if (negate) coeff = -coeff;
    std::map<std::string, int> powers;
    skip();
    if (!is_var_start()) fail(has_coeff ? "constant terms are not allowed" : "expected variable");
    factor(powers);
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!is_var_start()) fail("expected variable after '*'");
        factor(powers);
      } else if (is_var_start()) {
        factor(powers);
      } else {
        break;
      }
    }
    return {coeff, powers};
  }

  [[nodiscard]] bool is_var_start() const {
    char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == 'w';
  }

  void factor(std::map<std::string, int>& powers) {
    std::string name(1, s_[pos_++]);
    if (name == "x") {
      while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    }
    skip();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      std::int64_t v = uint();
      if (v > 1'000'000) fail("exponent too large");
      e = static_cast<int>(v);
    }
    powers[name] += e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "x^2+z*y^3+z^5". Variables are ordered x<y<z<w, or by
/// index for x1, x2, ...; `vars` overrides the inferred variable list.
inline InvertiblePolynomial parse_polynomial(std::string_view text,
                                             const std::optional<std::vector<std::string>>& vars = std::nullopt) {
  auto terms = detail::PolyParser(text).parse();
  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    std::set<std::string> seen;
    for (const auto& [c, powers] : terms)
      for (const auto& [v, e] : powers) {
        if (e > 0) seen.insert(v);
      }
    names.assign(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      return detail::variable_rank(a) < detail::variable_rank(b);
    });
  }
  std::vector<Monomial> monomials;
  std::set<std::vector<int>> seen_rows;
  for (const auto& [c, powers] : terms) {
    Monomial m{std::vector<int>(names.size(), 0), c};
    for (const auto& [v, e] : powers) {
      auto it = std::find(names.begin(), names.end(), v);
      if (it == names.end()) throw Error(ErrorKind::Syntax, "variable '" + v + "' not in variable list");
      m.exponents[static_cast<std::size_t>(it - names.begin())] += e;
    }
    if (!seen_rows.insert(m.exponents).second) throw Error(ErrorKind::DuplicateMonomial, "repeated monomial in '" + std::string(text) + "'");
    monomials.push_back(std::move(m));
  }
  return InvertiblePolynomial(std::move(monomials), std::move(names));
}

/// Weights w_i and degree d with f(t^w x) = t^d f(x).
struct WeightSystem {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 1;

  [[nodiscard]] std::vector<Rational> charges() const {
    std::vector<Rational> q;
    for (auto w : weights) q.emplace_back(w, degree);
    return q;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ";" + std::to_string(degree) + ")";
  }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

/// Solves E w = det(E) (1,...,1) with d = det(E).
inline WeightSystem canonical_weights(const InvertiblePolynomial& f) {
  const std::size_t n = f.n();
  RatMatrix inv = inverse(to_rational(f.exponent_matrix()));
  WeightSystem ws;
  ws.degree = f.det();
  for (std::size_t i = 0; i < n; ++i) {
    Rational w(0);
    for (std::size_t j = 0; j < n; ++j) w += inv(i, j);
    w *= Rational(f.det());
    if (!w.is_integer()) throw Error(ErrorKind::NonPositiveWeight, "non-integral canonical weight " + w.str());
    if (w.num() <= 0) throw Error(ErrorKind::NonPositiveWeight, "canonical weight " + w.str() + " is not positive");
    ws.weights.push_back(w.num());
  }
  return ws;
}

struct ReducedWeights {
  WeightSystem weights;
  std::int64_t c = 1;
};

/// Divides by c = gcd(w_1, ..., w_n, d).
inline ReducedWeights reduce_weights(const WeightSystem& w) {
  std::int64_t g = w.degree;
  for (auto x : w.weights) g = std::gcd(g, x);
  ReducedWeights r;
  r.c = g;
  r.weights.degree = w.degree / g;
  for (auto x : w.weights) r.weights.weights.push_back(x / g);
  return r;
}

/// a_f = d - sum w_i for a reduced weight system.
inline std::int64_t gorenstein_parameter(const WeightSystem& reduced) {
  std::int64_t a = reduced.degree;
  for (auto w : reduced.weights) a -= w;
  return a;
}

/// Berglund-Hübsch transpose: exponent matrix E^T, coefficient a_i kept on row i.
inline InvertiblePolynomial transpose(const InvertiblePolynomial& f) {
  IntMatrix et = f.exponent_matrix().transposed();
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < f.n(); ++i) {
    Monomial m{std::vector<int>(f.n()), f.monomials()[i].coefficient};
    for (std::size_t j = 0; j < f.n(); ++j) m.exponents[j] = static_cast<int>(et(i, j));
    ms.push_back(std::move(m));
  }
  return InvertiblePolynomial(std::move(ms), f.names());
}

/// Variable permutation `perm` (new index j takes old variable perm[j]) mapping
/// f onto g as a set of monomials, if any. Searches all n! permutations.
inline std::optional<std::vector<std::size_t>> equivalent_up_to_permutation(const InvertiblePolynomial& f,
                                                                            const InvertiblePolynomial& g) {
  if (f.n() != g.n()) return std::nullopt;
  auto key = [](const std::vector<Monomial>& ms) {
    std::vector<std::pair<std::vector<int>, Rational>> k;
    for (const auto& m : ms) k.emplace_back(m.exponents, m.coefficient);
    std::sort(k.begin(), k.end());
    return k;
  };
  const auto target = key(g.monomials());
  std::vector<std::size_t> perm(f.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Monomial> ms;
    for (const auto& m : f.monomials()) {
      Monomial p{std::vector<int>(f.n()), m.coefficient};
      for (std::size_t j = 0; j < f.n(); ++j) p.exponents[j] = m.exponents[perm[j]];
      ms.push_back(std::move(p));
    }
    if (key(ms) == target) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

enum class AtomicKind { Fermat, Chain, Loop };

inline constexpr std::string_view to_string(AtomicKind k) noexcept {
  switch (k) {
    case AtomicKind::Fermat: return "Fermat";
    case AtomicKind::Chain: return "Chain";
    case AtomicKind::Loop: return "Loop";
  }
  return "?";
}

/// One block of the decomposition. `variables` lists x_{v1}, x_{v2}, ... in the
/// order x_{v1}^{a1} x_{v2} + x_{v2}^{a2} x_{v3} + ...; `exponents` holds a_k.
struct AtomicBlock {
  AtomicKind kind = AtomicKind::Fermat;
  std::vector<std::size_t> variables;
  std::vector<int> exponents;

  friend bool operator==(const AtomicBlock&, const AtomicBlock&) = default;
};

struct AtomicDecomposition {
  std::vector<AtomicBlock> blocks;
};

/// Splits f into Fermat, chain and loop blocks; UnsupportedShape otherwise.
inline AtomicDecomposition atomic_decomposition(const InvertiblePolynomial& f) {
  const std::size_t n = f.n();
  const IntMatrix e = f.exponent_matrix();
  // Assign each monomial (row) a main variable with the other variable, if any,
  // appearing with exponent one. next[v] is the pointer variable of v's row.
  std::vector<std::optional<std::size_t>> next(n);
  std::vector<int> main_exp(n, 0);
  std::vector<bool> used(n, false);
  std::vector<int> indegree(n, 0);

  std::function<bool(std::size_t)> assign = [&](std::size_t row) -> bool {
    if (row == n) return true;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (e(row, j) > 0) support.push_back(j);
    if (support.size() > 2) return false;
    for (std::size_t v : support) {
      if (used[v]) continue;
      std::optional<std::size_t> other;
      if (support.size() == 2) {
        other = support[0] == v ? support[1] : support[0];
        if (e(row, *other) != 1 || indegree[*other] > 0) continue;
      }
      used[v] = true;
      next[v] = other;
      main_exp[v] = static_cast<int>(e(row, v));
      if (other) ++indegree[*other];
      if (assign(row + 1)) return true;
      if (other) --indegree[*other];
      used[v] = false;
      next[v].reset();
    }
    return false;
  };
  if (!assign(0)) throw Error(ErrorKind::UnsupportedShape, "not a sum of Fermat, chain and loop blocks: " + f.str());

  AtomicDecomposition out;
  std::vector<bool> placed(n, false);
  // Chains and Fermat blocks start at variables nobody points to.
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] != 0 || placed[v]) continue;
    AtomicBlock b;
    std::optional<std::size_t> cur = v;
    while (cur) {
      placed[*cur] = true;
      b.variables.push_back(*cur);
      b.exponents.push_back(main_exp[*cur]);
      cur = next[*cur];
    }
    b.kind = b.variables.size() == 1 ? AtomicKind::Fermat : AtomicKind::Chain;
    out.blocks.push_back(std::move(b));
  }
  // Everything left lies on cycles.
  for (std::size_t v = 0; v < n; ++v) {
    if (placed[v]) continue;
    AtomicBlock b;
    b.kind = AtomicKind::Loop;
    std::size_t cur = v;
    do {
      placed[cur] = true;
      b.variables.push_back(cur);
      b.exponents.push_back(main_exp[cur]);
      cur = *next[cur];
    } while (cur != v);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

struct MaximalGrading {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;
};

/// Structure of L_f = (Z x_1 + ... + Z x_n + Z f) / (f - sum_j E_ij x_j).
inline MaximalGrading maximal_grading(const InvertiblePolynomial& f) {
  const std::size_t n = f.n();
  IntMatrix rel(n, n + 1, 0);
  const IntMatrix e = f.exponent_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel(i, j) = -e(i, j);
    rel(i, n) = 1;
  }
  auto inv = smith_invariants(rel);
  MaximalGrading g;
  g.rank = static_cast<std::int64_t>(n + 1 - inv.size());
  for (auto d : inv)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

/// abc - bc - ac - ab; positive for cusps, zero for simple elliptic triples.
inline std::int64_t delta(std::int64_t a, std::int64_t b, std::int64_t c) {
  return a * b * c - b * c - a * c - a * b;
}

}  // namespace invpoly
