#pragma once

// Coxeter-Dynkin graphs, reflections in the lattice basis, Coxeter elements
// and their characteristic polynomials.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "invpoly/arith.hpp"
#include "invpoly/intpoly.hpp"
#include "invpoly/matrix.hpp"
#include "invpoly/monodromy.hpp"

namespace invpoly {

struct DynkinEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::int64_t weight = 1;  // +1 single edge, -2 double broken edge
};

/// Vertices in distinguished order; every vertex has self-intersection -2.
struct DynkinGraph {
  std::vector<std::string> vertices;
  std::vector<DynkinEdge> edges;

  std::size_t add_vertex(std::string name) {
    vertices.push_back(std::move(name));
    return vertices.size() - 1;
  }
  void connect(std::size_t a, std::size_t b, std::int64_t w = 1) { edges.push_back({a, b, w}); }

  [[nodiscard]] IntMatrix intersection_form() const {
    const std::size_t n = vertices.size();
    IntMatrix m(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -2;
    for (const auto& e : edges) {
      m(e.a, e.b) += e.weight;
      m(e.b, e.a) += e.weight;
    }
    return m;
  }
};

namespace detail {

inline DynkinGraph t_shape(std::int64_t p, std::int64_t q, std::int64_t r, bool extend) {
  for (auto a : {p, q, r})
    if (a < 2) throw Error(ErrorKind::UnsupportedArm, "arm parameter " + std::to_string(a) + " < 2");
  DynkinGraph g;
  const std::size_t d1 = g.add_vertex("d1");
  std::vector<std::size_t> ends;
  const std::int64_t arms[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) {
    std::size_t prev = 0;
    for (std::int64_t k = 1; k < arms[i]; ++k) {
      std::size_t v = g.add_vertex("d" + std::to_string(i + 1) + "_" + std::to_string(k));
      if (k > 1) g.connect(prev, v);
      prev = v;
    }
    ends.push_back(prev);
  }
  const std::size_t d2 = g.add_vertex("d2");
  for (auto e : ends) {
    g.connect(d1, e);
    g.connect(d2, e);
  }
  g.connect(d1, d2, -2);
  if (extend) g.connect(d2, g.add_vertex("d3"));
  return g;
}

}  // namespace detail

/// Order: d1, first arm, second arm, third arm, d2.
inline DynkinGraph build_T(std::int64_t p, std::int64_t q, std::int64_t r) { return detail::t_shape(p, q, r, false); }

/// T graph plus d3 joined to d2, placed last.
inline DynkinGraph build_S(std::int64_t p, std::int64_t q, std::int64_t r) { return detail::t_shape(p, q, r, true); }

/// Tree with a centre and arms of a-1, b-1, c-1 vertices (arms may be empty).
inline DynkinGraph star_tree(std::int64_t a, std::int64_t b, std::int64_t c) {
  DynkinGraph g;
  const std::size_t centre = g.add_vertex("c");
  const std::int64_t arms[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    std::size_t prev = centre;
    for (std::int64_t k = 1; k < arms[i]; ++k) {
      std::size_t v = g.add_vertex("a" + std::to_string(i + 1) + "_" + std::to_string(k));
      g.connect(prev, v);
      prev = v;
    }
  }
  return g;
}

/// A_k path, D_k and E_k trees.
inline DynkinGraph finite_dynkin(char type, std::int64_t rank) {
  switch (type) {
    case 'A': {
      if (rank < 1) throw Error(ErrorKind::InvalidRank, "A_" + std::to_string(rank));
      DynkinGraph g;
      for (std::int64_t i = 0; i < rank; ++i) {
        g.add_vertex("v" + std::to_string(i + 1));
        if (i > 0) g.connect(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
      }
      return g;
    }
    case 'D':
      if (rank < 4) throw Error(ErrorKind::InvalidRank, "D_" + std::to_string(rank));
      return star_tree(2, 2, rank - 2);
    case 'E':
      if (rank < 6 || rank > 8) throw Error(ErrorKind::InvalidRank, "E_" + std::to_string(rank));
      return star_tree(2, 3, rank - 3);
    default:
      throw Error(ErrorKind::InvalidRank, std::string("unknown Dynkin type ") + type);
  }
}

/// Cycle of k+1 vertices in cyclic order (affine A_k).
inline DynkinGraph cycle_graph(std::int64_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidRank, "cycle needs at least three vertices");
  DynkinGraph g;
  for (std::int64_t i = 0; i <= k; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::int64_t i = 0; i <= k; ++i) g.connect(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % (k + 1)));
  return g;
}

/// s_i(x) = x + <x, d_i> d_i as a matrix on coordinate columns.
inline IntMatrix reflection(const IntMatrix& form, std::size_t i) {
  if (form(i, i) != -2) throw Error(ErrorKind::InvalidRank, "reflection needs self-intersection -2");
  IntMatrix s = IntMatrix::identity(form.rows());
  for (std::size_t j = 0; j < form.cols(); ++j) s(i, j) += form(i, j);
  return s;
}

/// s_1 s_2 ... s_mu in the distinguished order.
inline IntMatrix coxeter_element(const DynkinGraph& g) {
  const IntMatrix b = g.intersection_form();
  IntMatrix c = IntMatrix::identity(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) c = c * reflection(b, i);
  return c;
}

struct QuasiUnipotence {
  bool quasi_unipotent = false;
  std::map<std::int64_t, std::int64_t> cyclotomic_factors;  // m -> multiplicity of Phi_m
  std::optional<std::int64_t> order;                       // finite order of c, if any
};

/// Factors `p` into cyclotomic polynomials as far as possible; the remainder is
/// returned alongside.
inline std::pair<std::map<std::int64_t, std::int64_t>, IntPoly> cyclotomic_factorization(IntPoly p) {
  std::map<std::int64_t, std::int64_t> f;
  const long deg = p.degree();
  const std::int64_t bound = 2 * static_cast<std::int64_t>(deg) * deg + 2;
  for (std::int64_t m = 1; m <= bound && p.degree() > 0; ++m) {
    if (euler_phi(m) > p.degree()) continue;
    const IntPoly& phi = cyclotomic(static_cast<std::size_t>(m));
    while (p.degree() >= phi.degree() && phi.divides(p)) {
      p = p.exact_div(phi);
      ++f[m];
    }
  }
  return {f, p};
}

inline IntMatrix matrix_power(const IntMatrix& m, std::int64_t e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

inline QuasiUnipotence quasi_unipotent_check(const IntMatrix& c) {
  QuasiUnipotence q;
  auto [factors, rest] = cyclotomic_factorization(characteristic_polynomial(c));
  q.cyclotomic_factors = factors;
  q.quasi_unipotent = rest.degree() == 0 && (rest[0] == 1 || rest[0] == -1);
  if (!q.quasi_unipotent) return q;
  std::int64_t h = 1;
  for (const auto& [m, k] : factors) h = lcm_checked(h, m);
  if (matrix_power(c, h) == IntMatrix::identity(c.rows())) q.order = h;
  return q;
}

/// Compares num/den with the Poincaré series up to t^terms (exclusive).
inline bool klein_fuchs_check(const PoincareSeries& p, const IntPoly& num, const IntPoly& den, std::size_t terms) {
  if (den[0] == 0) throw Error(ErrorKind::DenominatorVanishes, "denominator vanishes at t = 0");
  return p.expand(terms) == series_expand(num, den, terms);
}

/// "S:2,3,7", "T:2,4,6", "A:5", "D:4", "E:8", "C:3" (cycle of 4 vertices).
inline DynkinGraph parse_graph_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw Error(ErrorKind::Syntax, "graph spec must look like S:2,3,7 or E:8");
  const char kind = spec[0];
  std::vector<std::int64_t> nums;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    Rational v = Rational::parse(rest.substr(0, comma));
    if (!v.is_integer()) throw Error(ErrorKind::Syntax, "graph parameters must be integers");
    nums.push_back(v.num());
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if ((kind == 'S' || kind == 'T') && nums.size() == 3)
    return kind == 'S' ? build_S(nums[0], nums[1], nums[2]) : build_T(nums[0], nums[1], nums[2]);
  if ((kind == 'A' || kind == 'D' || kind == 'E') && nums.size() == 1) return finite_dynkin(kind, nums[0]);
  if (kind == 'C' && nums.size() == 1) return cycle_graph(nums[0]);
  throw Error(ErrorKind::Syntax, "unrecognised graph spec '" + std::string(spec) + "'");
}

}  // namespace invpoly
