#pragma once

// Orbifold E-functions of pairs (f, G) built from age-shifted G-invariant
// sectors of the restrictions f^g.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invpoly/monodromy.hpp"
#include "invpoly/polycore.hpp"
#include "invpoly/symmetry.hpp"

namespace invpoly {

struct ParityDims {
  std::int64_t even = 0;
  std::int64_t odd = 0;

  friend bool operator==(const ParityDims&, const ParityDims&) = default;
};

using Bidegree = std::pair<Rational, Rational>;
using BigradedDimensionTable = std::map<Bidegree, ParityDims>;
/// Coefficient of t^{p - n/2} tbar^{q - n/2}, keyed by the raw (p, q).
using EFunction = std::map<Bidegree, std::int64_t>;
using HodgeNumbers = std::map<Bidegree, std::int64_t>;

/// Per-polynomial cache of Milnor bases of coordinate restrictions. Safe for
/// concurrent use.
class MilnorCache {
 public:
  explicit MilnorCache(InvertiblePolynomial f) : f_(std::move(f)) {}

  [[nodiscard]] const InvertiblePolynomial& polynomial() const noexcept { return f_; }

  struct Entry {
    WeightedPolynomial restriction;
    GradedMilnorBasis basis;
  };

  const Entry& restriction(unsigned mask) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(mask);
    if (it != cache_.end()) return *it->second;
    auto entry = std::make_unique<Entry>();
    entry->restriction = restrict_to(f_, mask);
    entry->basis = milnor_basis(entry->restriction);
    return *cache_.emplace(mask, std::move(entry)).first->second;
  }

  [[nodiscard]] std::int64_t milnor_number(unsigned mask) const { return static_cast<std::int64_t>(restriction(mask).basis.size()); }

 private:
  InvertiblePolynomial f_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::unique_ptr<Entry>> cache_;
};

/// Contribution of the sector of g to the bigraded space of (f, G).
inline BigradedDimensionTable sector(const MilnorCache& cache, const GroupElement& g, const Subgroup& group) {
  const unsigned mask = fixed_mask(g);
  const auto fixed = fixed_coordinates(g);
  const Rational a = age(g);
  BigradedDimensionTable t;
  if (fixed.n_g == 0) {
    t[{a, a}].even += 1;
    return t;
  }
  const auto& entry = cache.restriction(mask);
  const Rational ng(static_cast<std::int64_t>(fixed.n_g));
  for (const auto& k : entry.basis.monomials) {
    bool invariant = true;
    for (const auto& h : group.generators()) {
      Rational chi(0);
      for (auto i : fixed.indices) chi += Rational(k[i] + 1) * h[i];
      if (!chi.is_integer()) {
        invariant = false;
        break;
      }
    }
    if (!invariant) continue;
    const Rational alpha = basis_exponent(entry.restriction, k);
    auto& dims = t[{ng - alpha + a, alpha + a}];
    (fixed.n_g % 2 == 0 ? dims.even : dims.odd) += 1;
  }
  return t;
}

inline BigradedDimensionTable bigraded_space(const MilnorCache& cache, const Subgroup& group) {
  BigradedDimensionTable total;
  for (const auto& g : group.elements())
    for (const auto& [pq, d] : sector(cache, g, group)) {
      total[pq].even += d.even;
      total[pq].odd += d.odd;
    }
  return total;
}

inline EFunction e_function(const BigradedDimensionTable& t) {
  EFunction e;
  for (const auto& [pq, d] : t)
    if (d.even != d.odd) e[pq] = d.even - d.odd;
  return e;
}

inline EFunction e_function(const MilnorCache& cache, const Subgroup& group) {
  return e_function(bigraded_space(cache, group));
}

struct HodgeReport {
  HodgeNumbers h;
  bool in_sl = false;
  bool contains_g0 = false;
  bool parity_collision = false;

  [[nodiscard]] bool hypothesis() const noexcept { return in_sl || contains_g0; }
};

inline HodgeReport hodge_numbers(const MilnorCache& cache, const Subgroup& group) {
  HodgeReport r;
  for (const auto& [pq, d] : bigraded_space(cache, group)) {
    if (d.even > 0 && d.odd > 0) r.parity_collision = true;
    if (d.even + d.odd > 0) r.h[pq] = d.even + d.odd;
  }
  r.in_sl = is_in_sl(group);
  r.contains_g0 = group.contains(exponential_grading_operator(cache.polynomial()));
  return r;
}

/// E(f,G)(1,1).
inline std::int64_t chi(const EFunction& e) {
  std::int64_t s = 0;
  for (const auto& [pq, c] : e) s += c;
  return s;
}

/// sum of coeff * (q - n/2)^power.
inline Rational signed_moment(const EFunction& e, std::size_t n, int power) {
  const Rational half(static_cast<std::int64_t>(n), 2);
  Rational s(0);
  for (const auto& [pq, c] : e) {
    Rational x(1);
    for (int i = 0; i < power; ++i) x *= pq.second - half;
    s += x * Rational(c);
  }
  return s;
}

/// Signed mean of the exponents; DivisionByZero when chi vanishes.
inline Rational mean_exponent(const EFunction& e, std::size_t n) {
  const std::int64_t c = chi(e);
  if (c == 0) throw Error(ErrorKind::DivisionByZero, "chi(f,G) = 0, first moment is " + signed_moment(e, n, 1).str());
  return Rational(static_cast<std::int64_t>(n), 2) + signed_moment(e, n, 1) / Rational(c);
}

inline Rational variance(const EFunction& e, std::size_t n) { return signed_moment(e, n, 2); }

/// c^ = n - 2 sum q_i.
inline Rational central_charge(const InvertiblePolynomial& f) {
  Rational c(static_cast<std::int64_t>(f.n()));
  for (const auto& q : canonical_weights(f).charges()) c -= Rational(2) * q;
  return c;
}

struct PairCharacteristicPolynomial {
  std::map<Rational, std::int64_t> eigenvalues;  // e[q] keyed by q mod 1
  std::optional<CyclotomicProduct> cyclotomic;

  [[nodiscard]] std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [q, m] : eigenvalues) d += m;
    return d;
  }
};

inline PairCharacteristicPolynomial characteristic_polynomial_pair(const HodgeNumbers& h) {
  PairCharacteristicPolynomial r;
  for (const auto& [pq, m] : h) r.eigenvalues[pq.second.frac()] += m;
  try {
    r.cyclotomic = cyclotomic_from_eigenvalues(r.eigenvalues);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRational) throw;
  }
  return r;
}

/// (-1)^r for an integral rational r.
inline std::optional<int> sign_power(const Rational& r) {
  if (!r.is_integer()) return std::nullopt;
  return (r.num() % 2 == 0) ? 1 : -1;
}

/// Recomputes E from Hodge numbers with the sign rule for G in SL or G
/// containing g_0; true iff it reproduces `e`. Without either hypothesis the
/// check does not apply and returns nullopt.
inline std::optional<bool> sign_formula_check(const EFunction& e, const HodgeReport& h) {
  if (!h.hypothesis()) return std::nullopt;
  EFunction rebuilt;
  for (const auto& [pq, m] : h.h) {
    auto s = h.in_sl ? sign_power(pq.first + pq.second) : sign_power(pq.second - pq.first);
    if (!s) return false;
    rebuilt[pq] = *s * m;
  }
  return rebuilt == e;
}

struct DualityReport {
  bool e_identity = false;
  std::optional<bool> hodge_identity;  // only for G inside SL
  std::vector<std::string> mismatches;

  [[nodiscard]] bool ok() const { return e_identity && hodge_identity.value_or(true); }
};

/// E(f,G)(t,tbar) = (-1)^n E(f~,G~)(1/t,tbar), term by term; plus the Hodge
/// mirror identity h^{p,q}(f,G) = h^{n-p,q}(f~,G~) for G in SL.
inline DualityReport duality_check(const MilnorCache& f, const MilnorCache& ft, const Subgroup& group) {
  const std::size_t n = f.polynomial().n();
  const Rational nn(static_cast<std::int64_t>(n));
  const Subgroup dual = dual_group(group);
  DualityReport r;
  const EFunction lhs = e_function(f, group);
  EFunction rhs;
  for (const auto& [pq, c] : e_function(ft, dual)) rhs[{nn - pq.first, pq.second}] = (n % 2 == 0 ? c : -c);
  r.e_identity = lhs == rhs;
  if (!r.e_identity) {
    for (const auto& [pq, c] : lhs) {
      auto it = rhs.find(pq);
      if (it == rhs.end() || it->second != c)
        r.mismatches.push_back("(" + pq.first.str() + "," + pq.second.str() + "): " + std::to_string(c) + " vs " +
                               std::to_string(it == rhs.end() ? 0 : it->second));
    }
    for (const auto& [pq, c] : rhs)
      if (!lhs.count(pq))
        r.mismatches.push_back("(" + pq.first.str() + "," + pq.second.str() + "): 0 vs " + std::to_string(c));
  }
  if (is_in_sl(group)) {
    HodgeNumbers mirrored;
    for (const auto& [pq, m] : hodge_numbers(ft, dual).h) mirrored[{nn - pq.first, pq.second}] = m;
    r.hodge_identity = hodge_numbers(f, group).h == mirrored;
  }
  return r;
}

/// "t^a tbar^b" form with centred exponents.
inline std::string e_function_str(const EFunction& e, std::size_t n) {
  const Rational half(static_cast<std::int64_t>(n), 2);
  std::string s;
  for (const auto& [pq, c] : e) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    const Rational x = pq.first - half, y = pq.second - half;
    std::string mono;
    if (!x.is_zero()) mono += "t^(" + x.str() + ")";
    if (!y.is_zero()) mono += (mono.empty() ? "" : "*") + std::string("tbar^(") + y.str() + ")";
    if (mono.empty()) s += std::to_string(a);
    else s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return s.empty() ? "0" : s;
}

}  // namespace invpoly
