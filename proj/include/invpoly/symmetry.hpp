#pragma once

// Diagonal symmetry groups G_f = E^{-1} Z^n / Z^n and their subgroups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "invpoly/arith.hpp"
#include "invpoly/matrix.hpp"
#include "invpoly/polycore.hpp"

namespace invpoly {

/// Phases (alpha_1, ..., alpha_n), each in [0,1).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> alpha) : a_(std::move(alpha)) {
    for (auto& x : a_) x = x.frac();
  }
  static GroupElement identity(std::size_t n) { return GroupElement(std::vector<Rational>(n, Rational(0))); }

  [[nodiscard]] std::size_t size() const noexcept { return a_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return a_[i]; }
  [[nodiscard]] const std::vector<Rational>& alpha() const noexcept { return a_; }
  [[nodiscard]] bool is_identity() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.a_[i] + b.a_[i];
    return GroupElement(std::move(r));
  }
  GroupElement operator-() const {
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a_[i];
    return GroupElement(std::move(r));
  }
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }
  [[nodiscard]] GroupElement times(std::int64_t k) const {
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a_[i] * Rational(k);
    return GroupElement(std::move(r));
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.a_ <=> b.a_; }

  [[nodiscard]] std::int64_t order() const {
    std::int64_t o = 1;
    for (const auto& x : a_) o = lcm_checked(o, x.den());
    return o;
  }

  /// "(a/b, c/d, ...)"
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? ", " : "") + a_[i].str();
    return s + ")";
  }

  static GroupElement parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw Error(ErrorKind::Syntax, "group element must look like (a/b, c/d, ...): '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<Rational> a;
    while (true) {
      auto comma = s.find(',');
      a.push_back(Rational::parse(s.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return GroupElement(std::move(a));
  }

 private:
  std::vector<Rational> a_;
};

/// E * alpha in Z^n.
inline bool is_symmetry(const IntMatrix& e, const GroupElement& g) {
  if (g.size() != e.cols()) return false;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < e.cols(); ++j) s += Rational(e(i, j)) * g[j];
    if (!s.is_integer()) return false;
  }
  return true;
}

inline constexpr std::size_t kDefaultGroupBound = 10'000;

/// Finite subgroup of G_f for the exponent matrix `ambient`. The element list
/// is enumerated on construction and kept sorted.
class Subgroup {
 public:
  Subgroup(IntMatrix ambient, const std::vector<GroupElement>& generators, std::size_t bound = kDefaultGroupBound)
      : e_(std::move(ambient)) {
    const std::size_t n = e_.cols();
    for (const auto& g : generators)
      if (!is_symmetry(e_, g)) throw Error(ErrorKind::NotASymmetry, g.str() + " is not a diagonal symmetry");
    std::set<GroupElement> seen{GroupElement::identity(n)};
    std::vector<GroupElement> frontier{GroupElement::identity(n)};
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& a : frontier)
        for (const auto& g : generators) {
          GroupElement b = a + g;
          if (seen.insert(b).second) {
            if (seen.size() > bound) throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(bound));
            next.push_back(std::move(b));
          }
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    canonical_generators();
  }

  static Subgroup trivial(const IntMatrix& ambient) { return Subgroup(ambient, {}); }

  [[nodiscard]] const IntMatrix& ambient() const noexcept { return e_; }
  [[nodiscard]] std::size_t n() const noexcept { return e_.cols(); }
  [[nodiscard]] std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
  [[nodiscard]] const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<GroupElement>& generators() const noexcept { return gens_; }

  [[nodiscard]] bool contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }
  [[nodiscard]] bool is_subgroup_of(const Subgroup& other) const {
    return order() <= other.order() && other.order() % order() == 0 &&
           std::all_of(gens_.begin(), gens_.end(), [&](const GroupElement& g) { return other.contains(g); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.e_ == b.e_ && a.elements_ == b.elements_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "; " : "") + gens_[i].str();
    return s + "> order " + std::to_string(order());
  }

 private:
  // Greedy: walk the sorted element list and keep every element that is not yet
  // in the span of those kept so far.
  void canonical_generators() {
    const std::size_t n = e_.cols();
    std::set<GroupElement> span{GroupElement::identity(n)};
    for (const auto& g : elements_) {
      if (span.count(g)) continue;
      gens_.push_back(g);
      std::vector<GroupElement> frontier(span.begin(), span.end());
      while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& a : frontier)
          for (const auto& h : gens_) {
            GroupElement b = a + h;
            if (span.insert(b).second) next.push_back(std::move(b));
          }
        frontier = std::move(next);
      }
      if (span.size() == elements_.size()) break;
    }
  }

  IntMatrix e_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> gens_;
};

inline Subgroup subgroup_generated(const IntMatrix& ambient, const std::vector<GroupElement>& gens) {
  return Subgroup(ambient, gens);
}

/// G_f generated by the columns of E^{-1}.
inline Subgroup symmetry_group(const IntMatrix& e) {
  RatMatrix inv = inverse(to_rational(e));
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < e.cols(); ++j) {
    std::vector<Rational> col(e.rows());
    for (std::size_t i = 0; i < e.rows(); ++i) col[i] = inv(i, j);
    gens.emplace_back(std::move(col));
  }
  return Subgroup(e, gens);
}

inline Subgroup symmetry_group(const InvertiblePolynomial& f) { return symmetry_group(f.exponent_matrix()); }

/// g_0 = (q_1, ..., q_n) mod 1.
inline GroupElement exponential_grading_operator(const InvertiblePolynomial& f) {
  return GroupElement(canonical_weights(f).charges());
}

inline Subgroup g0_subgroup(const InvertiblePolynomial& f) {
  return Subgroup(f.exponent_matrix(), {exponential_grading_operator(f)});
}

inline std::int64_t index(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw Error(ErrorKind::NotASubgroup, h.str() + " is not contained in " + g.str());
  return g.order() / h.order();
}

/// <a,b> = (E a)^T b mod 1 for a in G_f and b in G_{f~}.
inline Rational duality_pairing(const IntMatrix& e, const GroupElement& a, const GroupElement& b) {
  if (!is_symmetry(e, a)) throw Error(ErrorKind::NotASymmetry, a.str() + " is not in G_f");
  if (!is_symmetry(e.transposed(), b)) throw Error(ErrorKind::NotASymmetry, b.str() + " is not in the transposed group");
  Rational s(0);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    Rational ea(0);
    for (std::size_t j = 0; j < e.cols(); ++j) ea += Rational(e(i, j)) * a[j];
    s += ea * b[i];
  }
  return s.frac();
}

/// Annihilator of G inside the symmetry group of the transposed matrix.
inline Subgroup dual_group(const Subgroup& g) {
  const IntMatrix& e = g.ambient();
  Subgroup full = symmetry_group(e.transposed());
  std::vector<GroupElement> keep;
  for (const auto& b : full.elements()) {
    bool ok = std::all_of(g.generators().begin(), g.generators().end(),
                          [&](const GroupElement& a) { return duality_pairing(e, a, b).is_zero(); });
    if (ok) keep.push_back(b);
  }
  return Subgroup(e.transposed(), keep);
}

inline Rational age(const GroupElement& g) {
  Rational s(0);
  for (const auto& x : g.alpha()) s += x;
  return s;
}

/// Elements with integral age.
inline Subgroup sl_subgroup(const Subgroup& g) {
  std::vector<GroupElement> keep;
  for (const auto& x : g.elements())
    if (age(x).is_integer()) keep.push_back(x);
  return Subgroup(g.ambient(), keep);
}

inline bool is_in_sl(const Subgroup& g) {
  return std::all_of(g.generators().begin(), g.generators().end(), [](const GroupElement& x) { return age(x).is_integer(); });
}

/// Number of age-one elements fixing only the origin.
inline std::int64_t j_invariant(const Subgroup& g) {
  std::int64_t j = 0;
  for (const auto& x : g.elements()) {
    if (age(x) != Rational(1)) continue;
    if (std::none_of(x.alpha().begin(), x.alpha().end(), [](const Rational& a) { return a.is_zero(); })) ++j;
  }
  return j;
}

/// K_i = { g in G : alpha_i(g) = 0 }, 0-based coordinate.
inline Subgroup fixing_subgroup(const Subgroup& g, std::size_t i) {
  std::vector<GroupElement> keep;
  for (const auto& x : g.elements())
    if (x[i].is_zero()) keep.push_back(x);
  return Subgroup(g.ambient(), keep);
}

/// Bit i set iff alpha_i = 0.
inline unsigned fixed_mask(const GroupElement& g) {
  unsigned m = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].is_zero()) m |= 1U << i;
  return m;
}

inline unsigned fixed_mask(const Subgroup& g) {
  unsigned m = (g.n() >= 32) ? ~0U : ((1U << g.n()) - 1);
  for (const auto& x : g.generators()) m &= fixed_mask(x);
  return m;
}

struct FixedCoordinates {
  std::vector<std::size_t> indices;
  std::size_t n_g = 0;
};

inline FixedCoordinates fixed_coordinates(const GroupElement& g) {
  FixedCoordinates fc;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].is_zero()) fc.indices.push_back(i);
  fc.n_g = fc.indices.size();
  return fc;
}

inline void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == b.ambient())) throw Error(ErrorKind::AmbientMismatch, "subgroups of different symmetry groups");
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  std::vector<GroupElement> keep;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(keep));
  return Subgroup(a.ambient(), keep);
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  std::vector<GroupElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup(a.ambient(), gens);
}

/// Every subgroup of G, ordered by (order, elements).
inline std::vector<Subgroup> all_subgroups(const Subgroup& g, std::size_t bound = kDefaultGroupBound) {
  if (static_cast<std::size_t>(g.order()) > bound)
    throw Error(ErrorKind::GroupTooLarge, "group of order " + std::to_string(g.order()) + " exceeds " + std::to_string(bound));
  std::set<Subgroup> found;
  for (const auto& x : g.elements()) found.insert(Subgroup(g.ambient(), {x}));
  std::vector<Subgroup> cyclic(found.begin(), found.end());
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (c.is_subgroup_of(h)) continue;
        Subgroup j = join(h, c);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

/// "e", "G0", "Gf", "SL" or "g1;g2;..." with each g written as (a/b, ...).
inline Subgroup parse_group_spec(const InvertiblePolynomial& f, std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  const IntMatrix e = f.exponent_matrix();
  if (s == "e" || s.empty()) return Subgroup::trivial(e);
  if (s == "G0") return g0_subgroup(f);
  if (s == "Gf") return symmetry_group(e);
  if (s == "SL") return sl_subgroup(symmetry_group(e));
  std::vector<GroupElement> gens;
  std::string_view rest = s;
  while (!rest.empty()) {
    auto semi = rest.find(';');
    gens.push_back(GroupElement::parse(rest.substr(0, semi)));
    if (gens.back().size() != f.n())
      throw Error(ErrorKind::Syntax, "group element " + gens.back().str() + " has wrong length");
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return Subgroup(e, gens);
}

}  // namespace invpoly
