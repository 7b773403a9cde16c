#pragma once

// JSON encodings of the main value types.

#include <string>

#include <json.hpp>

#include "invpoly/burnside.hpp"
#include "invpoly/duality.hpp"
#include "invpoly/monodromy.hpp"
#include "invpoly/orbifold.hpp"

namespace invpoly {

using json = nlohmann::json;

inline json to_json(const CyclotomicProduct& p) {
  json f = json::object();
  for (const auto& [m, c] : p.factors) f[std::to_string(m)] = c;
  return {{"h", p.h}, {"factors", f}};
}

inline CyclotomicProduct cyclotomic_from_json(const json& j) {
  CyclotomicProduct p;
  p.h = j.at("h").get<std::int64_t>();
  for (const auto& [k, v] : j.at("factors").items()) {
    const auto c = v.get<std::int64_t>();
    if (c != 0) p.factors[std::stoll(k)] = c;
  }
  return p;
}

inline json to_json(const Spectrum& s) {
  json a = json::array();
  for (const auto& [alpha, m] : s) a.push_back({{"alpha", alpha.str()}, {"multiplicity", m}});
  return a;
}

inline Spectrum spectrum_from_json(const json& j) {
  Spectrum s;
  for (const auto& e : j) s[Rational::parse(e.at("alpha").get<std::string>())] += e.at("multiplicity").get<std::int64_t>();
  return s;
}

inline json to_json(const EFunction& e, std::size_t n) {
  json terms = json::array();
  for (const auto& [pq, c] : e) terms.push_back({{"p", pq.first.str()}, {"q", pq.second.str()}, {"coeff", c}});
  return {{"n", n}, {"terms", terms}};
}

inline EFunction efunction_from_json(const json& j) {
  EFunction e;
  for (const auto& t : j.at("terms")) {
    Bidegree pq{Rational::parse(t.at("p").get<std::string>()), Rational::parse(t.at("q").get<std::string>())};
    e[pq] += t.at("coeff").get<std::int64_t>();
    if (e[pq] == 0) e.erase(pq);
  }
  return e;
}

inline json to_json(const GroupElement& g) {
  json a = json::array();
  for (const auto& x : g.alpha()) a.push_back(x.str());
  return a;
}

inline GroupElement element_from_json(const json& j) {
  std::vector<Rational> a;
  for (const auto& x : j) a.push_back(Rational::parse(x.get<std::string>()));
  return GroupElement(std::move(a));
}

inline json to_json(const Subgroup& g) {
  json a = json::array();
  for (const auto& x : g.generators()) a.push_back(to_json(x));
  return a;
}

inline json to_json(const BurnsideElement& x) {
  json terms = json::array();
  for (const auto& [h, c] : x.terms()) terms.push_back({{"subgroup", to_json(h)}, {"coeff", c}});
  return {{"terms", terms}};
}

/// Inverse of to_json for elements over `group`.
inline BurnsideElement burnside_from_json(const json& j, const Subgroup& group) {
  BurnsideElement x(group);
  for (const auto& t : j.at("terms")) {
    std::vector<GroupElement> gens;
    for (const auto& g : t.at("subgroup")) gens.push_back(element_from_json(g));
    x.add(Subgroup(group.ambient(), gens), t.at("coeff").get<std::int64_t>());
  }
  return x;
}

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return {{"checks", checks}};
}

}  // namespace invpoly
