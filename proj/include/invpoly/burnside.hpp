#pragma once

// Burnside ring of a finite abelian group of diagonal symmetries, equivariant
// and orbifold Euler characteristics of Milnor fibres, Saito duality maps.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "invpoly/orbifold.hpp"
#include "invpoly/symmetry.hpp"

namespace invpoly {

/// Integer combination of classes [G/H]; zero coefficients are never stored.
class BurnsideElement {
 public:
  explicit BurnsideElement(Subgroup group) : g_(std::move(group)) {}

  static BurnsideElement unit(const Subgroup& g) {
    BurnsideElement x(g);
    x.add(g, 1);
    return x;
  }

  [[nodiscard]] const Subgroup& group() const noexcept { return g_; }
  [[nodiscard]] const std::map<Subgroup, std::int64_t>& terms() const noexcept { return terms_; }

  void add(const Subgroup& h, std::int64_t c) {
    if (!h.is_subgroup_of(g_)) throw Error(ErrorKind::NotASubgroup, h.str() + " is not a subgroup of " + g_.str());
    if (c == 0) return;
    auto& v = terms_[h];
    v = detail::checked_add(v, c);
    if (v == 0) terms_.erase(h);
  }

  [[nodiscard]] std::int64_t coefficient(const Subgroup& h) const {
    auto it = terms_.find(h);
    return it == terms_.end() ? 0 : it->second;
  }

  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
    if (!(a.g_ == b.g_)) throw Error(ErrorKind::AmbientMismatch, "Burnside elements over different groups");
    for (const auto& [h, c] : b.terms_) a.add(h, c);
    return a;
  }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) {
    if (!(a.g_ == b.g_)) throw Error(ErrorKind::AmbientMismatch, "Burnside elements over different groups");
    for (const auto& [h, c] : b.terms_) a.add(h, -c);
    return a;
  }
  [[nodiscard]] BurnsideElement scaled(std::int64_t k) const {
    BurnsideElement r(g_);
    for (const auto& [h, c] : terms_) r.add(h, detail::checked_mul(k, c));
    return r;
  }

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.g_ == b.g_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [h, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += "[G/" + h.str() + "]";
    }
    return s;
  }

 private:
  Subgroup g_;
  std::map<Subgroup, std::int64_t> terms_;
};

/// [G/H][G/K] = (|G|/|HK|) [G/(H cap K)].
inline BurnsideElement burnside_mul(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(a.group() == b.group())) throw Error(ErrorKind::AmbientMismatch, "Burnside elements over different groups");
  BurnsideElement r(a.group());
  const std::int64_t order = a.group().order();
  for (const auto& [h, c] : a.terms())
    for (const auto& [k, d] : b.terms()) {
      Subgroup meet = intersection(h, k);
      const std::int64_t hk = h.order() * k.order() / meet.order();
      r.add(meet, detail::checked_mul(detail::checked_mul(c, d), order / hk));
    }
  return r;
}

/// [G/H] -> |H|.
inline std::int64_t r_orb(const BurnsideElement& x) {
  std::int64_t s = 0;
  for (const auto& [h, c] : x.terms()) s = detail::checked_add(s, detail::checked_mul(c, h.order()));
  return s;
}

/// Euler characteristic of the Milnor fibre of f restricted to the
/// coordinates in `mask`: 1 + (-1)^{n'-1} mu, and 0 for the empty restriction.
inline std::int64_t milnor_fiber_euler(const MilnorCache& cache, unsigned mask) {
  const int np = __builtin_popcount(mask & full_mask(cache.polynomial().n()));
  if (np == 0) return 0;
  const std::int64_t mu = cache.milnor_number(mask);
  return np % 2 == 1 ? 1 + mu : 1 - mu;
}

inline std::int64_t milnor_fiber_euler(const InvertiblePolynomial& f) {
  MilnorCache c(f);
  return milnor_fiber_euler(c, full_mask(f.n()));
}

/// chi^G(V_f) = sum over H of chi(V^{(H)}) / [G:H] [G/H], where V^{(H)} is the
/// stratum with isotropy exactly H.
inline BurnsideElement equivariant_euler(const MilnorCache& cache, const Subgroup& group,
                                         std::size_t bound = kDefaultGroupBound) {
  const auto subs = all_subgroups(group, bound);
  // Subgroups are sorted by order, so walking backwards visits supergroups first.
  std::vector<std::int64_t> stratum(subs.size(), 0);
  BurnsideElement x(group);
  for (std::size_t i = subs.size(); i-- > 0;) {
    std::int64_t v = milnor_fiber_euler(cache, fixed_mask(subs[i]));
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (subs[i].is_subgroup_of(subs[j]) && !(subs[i] == subs[j])) v -= stratum[j];
    stratum[i] = v;
    const std::int64_t idx = group.order() / subs[i].order();
    if (v % idx != 0)
      throw Error(ErrorKind::NonIntegerQuotient, "stratum Euler characteristic " + std::to_string(v) +
                                                     " not divisible by index " + std::to_string(idx));
    x.add(subs[i], v / idx);
  }
  return x;
}

inline BurnsideElement reduced_equivariant_euler(const MilnorCache& cache, const Subgroup& group) {
  return equivariant_euler(cache, group) - BurnsideElement::unit(group);
}

/// (1/|G|) sum over pairs (g,h) of chi(V^{<g,h>}).
inline std::int64_t orbifold_euler(const MilnorCache& cache, const Subgroup& group) {
  std::map<unsigned, std::int64_t> masks;
  for (const auto& g : group.elements()) ++masks[fixed_mask(g)];
  std::int64_t total = 0;
  for (const auto& [a, ca] : masks)
    for (const auto& [b, cb] : masks) total += ca * cb * milnor_fiber_euler(cache, a & b);
  if (total % group.order() != 0)
    throw Error(ErrorKind::NonIntegerQuotient, "orbifold Euler sum not divisible by |G|");
  return total / group.order();
}

inline std::int64_t reduced_orbifold_euler(const MilnorCache& cache, const Subgroup& group) {
  return orbifold_euler(cache, group) - group.order();
}

/// D: [G/H] -> [G*/H~] with G the full symmetry group of its ambient matrix.
inline BurnsideElement saito_duality_map(const BurnsideElement& x) {
  const Subgroup full = symmetry_group(x.group().ambient());
  if (!(x.group() == full))
    throw Error(ErrorKind::AmbientMismatch, "Saito duality map needs the full symmetry group");
  BurnsideElement r(symmetry_group(full.ambient().transposed()));
  for (const auto& [h, c] : x.terms()) r.add(dual_group(h), c);
  return r;
}

/// Generator [G/H, h, alpha] of the enhanced ring: h is the minimal
/// representative of a coset in G/H, alpha the minimal representative of a
/// coset of G*/H~, read as the character a -> <a, alpha> of H.
struct EnhancedTerm {
  Subgroup h_group;
  GroupElement h;
  GroupElement alpha;

  friend bool operator==(const EnhancedTerm& a, const EnhancedTerm& b) {
    return a.h_group == b.h_group && a.h == b.h && a.alpha == b.alpha;
  }
};

/// Minimal element of x + H.
inline GroupElement coset_representative(const Subgroup& h, const GroupElement& x) {
  GroupElement best = x + h.elements().front();
  for (const auto& y : h.elements()) best = std::min(best, x + y);
  return best;
}

/// All classes [G/H, h, alpha] of the enhanced ring over the full group G_f.
inline std::vector<EnhancedTerm> enhanced_classes(const IntMatrix& e) {
  const Subgroup g = symmetry_group(e);
  const Subgroup gs = symmetry_group(e.transposed());
  std::vector<EnhancedTerm> out;
  for (const auto& h : all_subgroups(g)) {
    const Subgroup ht = dual_group(h);
    std::set<GroupElement> hs, as;
    for (const auto& x : g.elements()) hs.insert(coset_representative(h, x));
    for (const auto& y : gs.elements()) as.insert(coset_representative(ht, y));
    for (const auto& x : hs)
      for (const auto& y : as) out.push_back({h, x, y});
  }
  return out;
}

/// [G/H, h, alpha] -> [G*/H~, alpha~, h~].
inline EnhancedTerm enhanced_duality_map(const EnhancedTerm& t) {
  Subgroup ht = dual_group(t.h_group);
  return {ht, coset_representative(ht, t.alpha), coset_representative(t.h_group, t.h)};
}

/// Character value of alpha on an element a of H, as a phase in [0,1).
inline Rational enhanced_character(const EnhancedTerm& t, const GroupElement& a) {
  return duality_pairing(t.h_group.ambient(), a, t.alpha);
}

}  // namespace invpoly
