#pragma once

// Named singularities, Dolgachev and Gabrielov numbers of pairs (f, G), and
// end-to-end checks of strange duality.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "invpoly/burnside.hpp"
#include "invpoly/coxeter.hpp"
#include "invpoly/dataset_text.hpp"
#include "invpoly/monodromy.hpp"
#include "invpoly/orbifold.hpp"
#include "invpoly/polycore.hpp"
#include "invpoly/symmetry.hpp"

namespace invpoly {

using NumberTuple = std::vector<std::int64_t>;

inline std::string tuple_str(const NumberTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline NumberTuple sorted(NumberTuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

enum class RecordClass { ADE, ExceptionalUnimodal, BimodalHead, BimodalExceptional, Other };

inline RecordClass parse_record_class(std::string_view s) {
  if (s == "ADE") return RecordClass::ADE;
  if (s == "exceptional-unimodal") return RecordClass::ExceptionalUnimodal;
  if (s == "bimodal-head") return RecordClass::BimodalHead;
  if (s == "bimodal-exceptional") return RecordClass::BimodalExceptional;
  if (s == "other") return RecordClass::Other;
  throw Error(ErrorKind::Syntax, "unknown record class '" + std::string(s) + "'");
}

inline constexpr std::string_view to_string(RecordClass c) noexcept {
  switch (c) {
    case RecordClass::ADE: return "ADE";
    case RecordClass::ExceptionalUnimodal: return "exceptional-unimodal";
    case RecordClass::BimodalHead: return "bimodal-head";
    case RecordClass::BimodalExceptional: return "bimodal-exceptional";
    case RecordClass::Other: return "other";
  }
  return "?";
}

struct SingularityRecord {
  std::string name;
  std::string polynomial_text;
  std::optional<NumberTuple> dolgachev;  // A_{(f,G_f)}, entry i belongs to x_i
  std::optional<NumberTuple> gabrielov;  // Gamma_{(f,{e})}
  std::string dual;
  RecordClass cls = RecordClass::Other;
  std::optional<std::string> transpose_text;

  [[nodiscard]] InvertiblePolynomial polynomial() const { return parse_polynomial(polynomial_text); }
};

/// "Q_{2,0}" and "q2,0" both become "Q2,0".
inline std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '_' && c != '{' && c != '}' && c != ' ' && c != '$') out += c;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

class Dataset {
 public:
  static Dataset parse(std::string_view text) {
    Dataset d;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> f;
      std::size_t start = 0;
      while (true) {
        auto bar = line.find('|', start);
        f.push_back(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (f.size() != 6 && f.size() != 7)
        throw Error(ErrorKind::Syntax, "dataset line " + std::to_string(lineno) + ": expected 6 or 7 fields");
      SingularityRecord r;
      r.name = f[0];
      r.polynomial_text = f[1];
      r.dolgachev = parse_tuple(f[2]);
      r.gabrielov = parse_tuple(f[3]);
      r.dual = f[4] == "-" ? "" : f[4];
      r.cls = parse_record_class(f[5]);
      if (f.size() == 7) r.transpose_text = f[6];
      d.records_.push_back(std::move(r));
    }
    std::sort(d.records_.begin(), d.records_.end(),
              [](const SingularityRecord& a, const SingularityRecord& b) { return a.name < b.name; });
    return d;
  }

  static Dataset load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UnknownName, "cannot open dataset file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  static const Dataset& builtin() {
    static const Dataset d = parse(kBuiltinDataset);
    return d;
  }

  [[nodiscard]] const std::vector<SingularityRecord>& records() const noexcept { return records_; }

  [[nodiscard]] const SingularityRecord* find(std::string_view name) const {
    const std::string key = normalize_name(name);
    for (const auto& r : records_)
      if (normalize_name(r.name) == key) return &r;
    return nullptr;
  }

  [[nodiscard]] const SingularityRecord& lookup(std::string_view name) const {
    if (const auto* r = find(name)) return *r;
    throw Error(ErrorKind::UnknownName, "no dataset record named '" + std::string(name) + "'");
  }

  [[nodiscard]] std::vector<const SingularityRecord*> all(RecordClass c) const {
    std::vector<const SingularityRecord*> out;
    for (const auto& r : records_)
      if (r.cls == c) out.push_back(&r);
    return out;
  }

 private:
  static std::optional<NumberTuple> parse_tuple(const std::string& s) {
    if (s == "-") return std::nullopt;
    NumberTuple t;
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      Rational v = Rational::parse(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (!v.is_integer() || v.num() < 1) throw Error(ErrorKind::Syntax, "bad number tuple '" + s + "'");
      t.push_back(v.num());
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return t;
  }

  std::vector<SingularityRecord> records_;
};

/// For each coordinate i: |K_i| copies of base_i / |G/K_i|; ones omitted.
inline NumberTuple gabrielov_numbers(const NumberTuple& base, const Subgroup& g) {
  if (!is_in_sl(g)) throw Error(ErrorKind::NotSL, g.str() + " is not contained in SL");
  if (base.size() != g.n()) throw Error(ErrorKind::MissingBaseData, "base tuple length differs from variable count");
  NumberTuple out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Subgroup k = fixing_subgroup(g, i);
    const std::int64_t idx = g.order() / k.order();
    if (base[i] % idx != 0)
      throw Error(ErrorKind::Indivisible, std::to_string(base[i]) + " not divisible by |G/K_" + std::to_string(i + 1) +
                                              "| = " + std::to_string(idx));
    for (std::int64_t c = 0; c < k.order(); ++c)
      if (base[i] / idx != 1) out.push_back(base[i] / idx);
  }
  return sorted(out);
}

/// Dolgachev numbers of (f, G) for G containing g_0, from the coordinate
/// tuple A_{(f,G_f)} and the dual group.
inline NumberTuple dolgachev_numbers(const NumberTuple& base, const Subgroup& g) {
  return gabrielov_numbers(base, dual_group(g));
}

inline NumberTuple dolgachev_numbers(const SingularityRecord& r, const Subgroup& g) {
  if (!r.dolgachev) throw Error(ErrorKind::MissingBaseData, r.name + " has no Dolgachev triple");
  return dolgachev_numbers(*r.dolgachev, g);
}

/// H_i: dual of the coordinate-fixing subgroup K_i of the dual group.
inline std::vector<Subgroup> isotropy_subgroups(const Subgroup& g) {
  const Subgroup d = dual_group(g);
  std::vector<Subgroup> hs;
  for (std::size_t i = 0; i < g.n(); ++i) hs.push_back(dual_group(fixing_subgroup(d, i)));
  return hs;
}

/// For each i: |G_f/H_i| copies of A'_i / |H_i/G|; ones omitted.
inline NumberTuple dolgachev_via_isotropy(const NumberTuple& base, const Subgroup& g, const std::vector<Subgroup>& hs) {
  const std::int64_t full = symmetry_group(g.ambient()).order();
  NumberTuple out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!g.is_subgroup_of(hs[i])) throw Error(ErrorKind::NotASubgroup, "G is not contained in H_" + std::to_string(i + 1));
    const std::int64_t up = hs[i].order() / g.order();
    if (base[i] % up != 0) throw Error(ErrorKind::Indivisible, std::to_string(base[i]) + " not divisible by " + std::to_string(up));
    for (std::int64_t c = 0; c < full / hs[i].order(); ++c)
      if (base[i] / up != 1) out.push_back(base[i] / up);
  }
  return sorted(out);
}

/// g_{(f,G)} = j of the dual group.
inline std::int64_t genus(const Subgroup& g) { return j_invariant(dual_group(g)); }

inline std::int64_t stringy_euler(std::int64_t g, const NumberTuple& a) {
  std::int64_t s = 2 - 2 * g;
  for (auto x : a) s += x - 1;
  return s;
}

inline std::int64_t equivariant_milnor_T(const NumberTuple& gamma, std::int64_t j) { return stringy_euler(j, gamma); }

/// (t-1)^{2-2j} prod (t^{g_i} - 1)/(t - 1).
inline CyclotomicProduct phi_T(const NumberTuple& gamma, std::int64_t j) {
  CyclotomicProduct p;
  std::map<std::int64_t, std::int64_t> f;
  f[1] = 2 - 2 * j - static_cast<std::int64_t>(gamma.size());
  for (auto g : gamma) {
    f[g] += 1;
    p.h = lcm_checked(p.h, g);
  }
  for (const auto& [m, c] : f)
    if (c != 0) p.factors[m] = c;
  return p;
}

/// Expected A_{(f,G_0)} for the heads of the bimodal series.
inline const std::map<std::string, NumberTuple>& head_g0_numbers() {
  static const std::map<std::string, NumberTuple> t = {
      {"J3,0", {2, 2, 2, 3}}, {"Z1,0", {2, 2, 2, 4}}, {"Q2,0", {2, 2, 2, 5}},
      {"W1,0", {2, 2, 3, 3}}, {"S1,0", {2, 2, 3, 4}}, {"U1,0", {2, 3, 3, 3}},
  };
  return t;
}

struct Check {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, bool pass, std::string lhs, std::string rhs) {
    checks.push_back({std::move(id), pass, std::move(lhs), std::move(rhs)});
  }
  void add_equal(std::string id, const std::string& lhs, const std::string& rhs) { add(std::move(id), lhs == rhs, lhs, rhs); }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

  [[nodiscard]] bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  [[nodiscard]] std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  }
  [[nodiscard]] std::string text() const {
    std::string s;
    for (const auto& c : checks) s += (c.pass ? "pass " : "FAIL ") + c.id + ": " + c.lhs + (c.pass ? " == " : " != ") + c.rhs + "\n";
    return s;
  }
};

inline std::string poly_str(const IntPoly& p) { return p.str(); }

inline std::string cyclotomic_str(const CyclotomicProduct& p) { return "h=" + std::to_string(p.h) + " " + p.str(); }

/// Transpose vs the dual polynomial (or the listed transpose), A/Gamma swap
/// and Saito duality of the monodromy polynomials.
inline Report verify_strange_duality(const Dataset& d, const SingularityRecord& r) {
  Report rep;
  const auto f = r.polynomial();
  const auto ft = transpose(f);
  const SingularityRecord* dual = r.dual.empty() ? nullptr : d.find(r.dual);
  const bool dual_is_transpose = dual && equivalent_up_to_permutation(ft, dual->polynomial()).has_value();

  if (r.transpose_text) {
    const auto listed = parse_polynomial(*r.transpose_text);
    rep.add(r.name + ": transpose matches listed", equivalent_up_to_permutation(ft, listed).has_value(), ft.str(), listed.str());
  } else if (dual) {
    rep.add(r.name + ": transpose matches " + dual->name, dual_is_transpose, ft.str(), dual->polynomial().str());
  }
  if (dual_is_transpose && r.dolgachev && dual->gabrielov)
    rep.add_equal(r.name + ": A = Gamma of " + dual->name, tuple_str(sorted(*r.dolgachev)), tuple_str(sorted(*dual->gabrielov)));
  if (dual_is_transpose && r.gabrielov && dual->dolgachev)
    rep.add_equal(r.name + ": Gamma = A of " + dual->name, tuple_str(sorted(*r.gabrielov)), tuple_str(sorted(*dual->dolgachev)));
  if (dual_is_transpose && r.cls == RecordClass::ExceptionalUnimodal)
    rep.add_equal(r.name + ": Saito dual of phi = phi of " + dual->name, cyclotomic_str(saito_dual(characteristic_polynomial(f))),
                  cyclotomic_str(characteristic_polynomial(dual->polynomial())));
  return rep;
}

/// Dolgachev numbers by both routes, genus and e_st = mu_{(F, G~)}.
inline Report verify_ET2(const SingularityRecord& r, const Subgroup& g, const std::string& label) {
  Report rep;
  if (!r.dolgachev) throw Error(ErrorKind::MissingBaseData, r.name + " has no Dolgachev triple");
  const std::string id = r.name + " " + label;
  const Subgroup dual = dual_group(g);
  const NumberTuple a = dolgachev_numbers(*r.dolgachev, g);
  const NumberTuple via = dolgachev_via_isotropy(*r.dolgachev, g, isotropy_subgroups(g));
  rep.add_equal(id + ": A via isotropy = Gamma of dual pair", tuple_str(via), tuple_str(a));
  const std::int64_t gen = genus(g);
  const std::int64_t jd = j_invariant(dual);
  rep.add_equal(id + ": e_st = mu of dual pair", std::to_string(stringy_euler(gen, a)),
                std::to_string(equivariant_milnor_T(gabrielov_numbers(*r.dolgachev, dual), jd)));
  const Subgroup full = symmetry_group(g.ambient());
  if (g == full) {
    NumberTuple listed;
    for (auto x : sorted(*r.dolgachev))
      if (x != 1) listed.push_back(x);
    rep.add_equal(id + ": A = listed A", tuple_str(a), tuple_str(listed));
  }
  if (r.cls == RecordClass::BimodalHead && g.order() * 2 == full.order()) {
    rep.add_equal(id + ": A = head table", tuple_str(a), tuple_str(head_g0_numbers().at(r.name)));
  }
  if (r.cls == RecordClass::ExceptionalUnimodal || r.cls == RecordClass::BimodalHead)
    rep.add_equal(id + ": genus", std::to_string(gen), "0");
  return rep;
}

}  // namespace invpoly
