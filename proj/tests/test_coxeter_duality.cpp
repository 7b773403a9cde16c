#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "invpoly/invpoly.hpp"

using namespace invpoly;

namespace {

GroupElement el(std::initializer_list<Rational> a) { return GroupElement(std::vector<Rational>(a)); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no invpoly::Error thrown";
  return ErrorKind::Overflow;
}

const Dataset& data() { return Dataset::builtin(); }

IntPoly charpoly(const DynkinGraph& g) { return characteristic_polynomial(coxeter_element(g)); }

}  // namespace

TEST(Graphs, VertexCounts) {
  EXPECT_EQ(build_S(2, 3, 7).vertices.size(), 12u);
  EXPECT_EQ(build_T(2, 3, 7).vertices.size(), 11u);
  EXPECT_EQ(build_T(3, 3, 3).vertices.size(), 8u);
  EXPECT_EQ(build_T(2, 3, 7).vertices.front(), "d1");
  EXPECT_EQ(build_T(2, 3, 7).vertices.back(), "d2");
  EXPECT_EQ(build_S(2, 3, 7).vertices.back(), "d3");
  EXPECT_EQ(kind_of([] { build_T(1, 3, 7); }), ErrorKind::UnsupportedArm);
  EXPECT_EQ(kind_of([] { build_S(2, 0, 7); }), ErrorKind::UnsupportedArm);
}

TEST(Graphs, IntersectionForm) {
  const auto b = build_T(2, 2, 2).intersection_form();
  ASSERT_EQ(b.rows(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(b(i, i), -2);
  EXPECT_EQ(b(0, 4), -2);
  EXPECT_EQ(b(0, 1), 1);
  EXPECT_EQ(b(4, 1), 1);
  EXPECT_EQ(b(1, 2), 0);
  EXPECT_EQ(b, b.transposed());
}

TEST(Graphs, FiniteDynkin) {
  EXPECT_EQ(finite_dynkin('A', 2).vertices.size(), 2u);
  EXPECT_EQ(finite_dynkin('A', 2).edges.size(), 1u);
  EXPECT_EQ(finite_dynkin('E', 8).vertices.size(), 8u);
  EXPECT_EQ(finite_dynkin('D', 4).vertices.size(), 4u);
  EXPECT_EQ(kind_of([] { finite_dynkin('E', 9); }), ErrorKind::InvalidRank);
  EXPECT_EQ(kind_of([] { finite_dynkin('D', 3); }), ErrorKind::InvalidRank);
  EXPECT_EQ(kind_of([] { finite_dynkin('F', 4); }), ErrorKind::InvalidRank);
  EXPECT_EQ(kind_of([] { cycle_graph(1); }), ErrorKind::InvalidRank);
  EXPECT_EQ(cycle_graph(3).vertices.size(), 4u);
}

TEST(Graphs, ParseSpec) {
  EXPECT_EQ(parse_graph_spec("S:2,3,7").vertices.size(), 12u);
  EXPECT_EQ(parse_graph_spec("T:2,4,6").vertices.size(), 11u);
  EXPECT_EQ(parse_graph_spec("E:8").vertices.size(), 8u);
  EXPECT_EQ(parse_graph_spec("C:3").vertices.size(), 4u);
  EXPECT_EQ(kind_of([] { parse_graph_spec("Q:1"); }), ErrorKind::Syntax);
  EXPECT_EQ(kind_of([] { parse_graph_spec("S:2,3"); }), ErrorKind::Syntax);
}

TEST(Reflection, Action) {
  const auto g = build_S(2, 3, 7);
  const auto b = g.intersection_form();
  const std::size_t mu = b.rows();
  for (std::size_t i = 0; i < mu; ++i) {
    const auto s = reflection(b, i);
    EXPECT_EQ(s * s, IntMatrix::identity(mu));
    EXPECT_EQ(s.transposed() * b * s, b);
    EXPECT_EQ(s(i, i), -1);
  }
  const auto a2 = finite_dynkin('A', 3).intersection_form();
  const auto s0 = reflection(a2, 0);
  EXPECT_EQ(s0(0, 1), 1);
  EXPECT_EQ(s0(1, 1), 1);
  EXPECT_EQ(s0(0, 2), 0);
  EXPECT_EQ(s0(2, 2), 1);
}

TEST(Coxeter, CharacteristicPolynomials) {
  EXPECT_EQ(charpoly(build_S(2, 3, 7)), cyclotomic(42));
  const IntPoly t237 = IntPoly::power_minus_one(2) * IntPoly::power_minus_one(3) * IntPoly::power_minus_one(7)
                           .exact_div(IntPoly::power_minus_one(1));
  EXPECT_EQ(charpoly(build_T(2, 3, 7)), t237);
  EXPECT_EQ(charpoly(build_T(2, 3, 7)), phi_T({2, 3, 7}, 0).expand());
  EXPECT_EQ(charpoly(finite_dynkin('A', 1)), IntPoly({1, 1}));
}

TEST(Coxeter, DeterminantAndConstantTerm) {
  for (const auto* spec : {"S:2,3,7", "T:3,3,4", "E:6", "D:5", "C:5", "S:3,3,5"}) {
    const auto c = coxeter_element(parse_graph_spec(spec));
    const auto d = determinant(c);
    EXPECT_TRUE(d == 1 || d == -1) << spec;
    const auto p = characteristic_polynomial(c);
    EXPECT_TRUE(p[0] == 1 || p[0] == -1) << spec;
  }
}

TEST(Coxeter, QuasiUnipotence) {
  const auto s = quasi_unipotent_check(coxeter_element(build_S(2, 3, 7)));
  EXPECT_TRUE(s.quasi_unipotent);
  EXPECT_EQ(s.order, 42);
  const auto elliptic = quasi_unipotent_check(coxeter_element(build_T(2, 3, 6)));
  EXPECT_TRUE(elliptic.quasi_unipotent);
  EXPECT_EQ(elliptic.order, 6);
  const auto cusp = quasi_unipotent_check(coxeter_element(build_T(2, 3, 7)));
  EXPECT_TRUE(cusp.quasi_unipotent);
  EXPECT_FALSE(cusp.order.has_value());
  const auto id = quasi_unipotent_check(IntMatrix::identity(3));
  EXPECT_TRUE(id.quasi_unipotent);
  EXPECT_EQ(id.order, 1);
}

TEST(KleinFuchs, Examples) {
  const auto e12 = poincare_series(reduce_weights(canonical_weights(parse_polynomial("x^2+y^3+z^7"))).weights);
  EXPECT_TRUE(klein_fuchs_check(e12, charpoly(build_S(2, 3, 7)), charpoly(build_T(2, 3, 7)), 201));
  const auto e8 = poincare_series(reduce_weights(canonical_weights(parse_polynomial("x^2+y^3+z^5"))).weights);
  EXPECT_TRUE(klein_fuchs_check(e8, charpoly(finite_dynkin('E', 8)), charpoly(build_T(2, 3, 5)), 201));
  EXPECT_FALSE(klein_fuchs_check(e8, charpoly(finite_dynkin('E', 7)), charpoly(build_T(2, 3, 5)), 201));
  const PoincareSeries one{IntPoly::constant(1), IntPoly::constant(1)};
  const IntPoly phi = cyclotomic(5);
  EXPECT_TRUE(klein_fuchs_check(one, phi, phi, 50));
  EXPECT_EQ(kind_of([&] { klein_fuchs_check(one, phi, IntPoly({0, 1}), 5); }), ErrorKind::DenominatorVanishes);
}

TEST(Dataset, BuiltinMatchesDataFile) {
  std::ifstream in(INVPOLY_DATA_FILE);
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), std::string(kBuiltinDataset));
  EXPECT_EQ(Dataset::load(INVPOLY_DATA_FILE).records().size(), data().records().size());
}

TEST(Dataset, Contents) {
  EXPECT_EQ(data().all(RecordClass::ExceptionalUnimodal).size(), 14u);
  EXPECT_EQ(data().all(RecordClass::BimodalHead).size() + data().all(RecordClass::BimodalExceptional).size(), 20u);
  EXPECT_EQ(data().lookup("Q_{2,0}").name, "Q2,0");
  EXPECT_EQ(data().lookup("e12").name, "E12");
  EXPECT_EQ(kind_of([] { (void)data().lookup("X9"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { Dataset::load("/nonexistent/file.dat"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { Dataset::parse("A|x^2|1\n"); }), ErrorKind::Syntax);
}

TEST(Dataset, DualityIsAnInvolution) {
  for (const auto& r : data().records()) {
    if (r.dual.empty() || r.cls == RecordClass::BimodalHead || r.cls == RecordClass::BimodalExceptional) continue;
    const auto& d = data().lookup(r.dual);
    EXPECT_EQ(normalize_name(d.dual), normalize_name(r.name)) << r.name;
    if (d.name == r.name && r.dolgachev && r.gabrielov) {
      EXPECT_EQ(sorted(*r.dolgachev), sorted(*r.gabrielov)) << r.name;
    }
  }
}

TEST(Dataset, EveryRecordVerifies) {
  for (const auto& r : data().records()) {
    const auto rep = verify_strange_duality(data(), r);
    EXPECT_TRUE(rep.ok()) << rep.text();
  }
  const auto e13 = verify_strange_duality(data(), data().lookup("E13"));
  EXPECT_TRUE(e13.ok());
  EXPECT_GE(e13.checks.size(), 4u);
}

TEST(Dataset, ListedTransposes) {
  std::size_t passed = 0, total = 0;
  for (auto cls : {RecordClass::BimodalHead, RecordClass::BimodalExceptional})
    for (const auto* r : data().all(cls)) {
      ++total;
      const auto rep = verify_strange_duality(data(), *r);
      passed += rep.ok() && !rep.checks.empty();
    }
  EXPECT_EQ(total, 20u);
  EXPECT_EQ(passed, 20u);
}

TEST(Gabrielov, Examples) {
  const auto e12 = parse_polynomial("x^2+y^3+z^7");
  EXPECT_EQ(gabrielov_numbers({2, 3, 7}, Subgroup::trivial(e12.exponent_matrix())), (NumberTuple{2, 3, 7}));
  const auto w = parse_polynomial("x^2+y^2+z^2");
  const Subgroup g(w.exponent_matrix(), {el({Rational(1, 2), Rational(1, 2), Rational(0)})});
  EXPECT_EQ(gabrielov_numbers({6, 6, 2}, g), (NumberTuple{2, 2, 3, 3}));
  const auto q = parse_polynomial("x^5+y^5+z^5");
  const Subgroup efimov(q.exponent_matrix(), {el({Rational(1, 5), Rational(1, 5), Rational(3, 5)})});
  EXPECT_TRUE(gabrielov_numbers({5, 5, 5}, efimov).empty());
  EXPECT_EQ(j_invariant(efimov), 2);
}

TEST(Gabrielov, Errors) {
  const auto e12 = parse_polynomial("x^2+y^3+z^7");
  EXPECT_EQ(kind_of([&] { gabrielov_numbers({2, 3, 7}, g0_subgroup(e12)); }), ErrorKind::NotSL);
  const auto c = parse_polynomial("x^2+y^2+z^2");
  const Subgroup g(c.exponent_matrix(), {el({Rational(1, 2), Rational(1, 2), Rational(0)})});
  EXPECT_EQ(kind_of([&] { gabrielov_numbers({3, 3, 2}, g); }), ErrorKind::Indivisible);
}

TEST(Dolgachev, Examples) {
  const auto& e12 = data().lookup("E12");
  EXPECT_EQ(dolgachev_numbers(e12, symmetry_group(e12.polynomial())), (NumberTuple{2, 3, 7}));
  const auto& j30 = data().lookup("J3,0");
  EXPECT_EQ(dolgachev_numbers(j30, g0_subgroup(j30.polynomial())), (NumberTuple{2, 2, 2, 3}));
  const auto& w10 = data().lookup("W1,0");
  EXPECT_EQ(dolgachev_numbers(w10, g0_subgroup(w10.polynomial())), (NumberTuple{2, 2, 3, 3}));
  EXPECT_EQ(kind_of([] {
              SingularityRecord r;
              r.name = "nobase";
              r.polynomial_text = "x^2+y^3+z^7";
              dolgachev_numbers(r, symmetry_group(r.polynomial()));
            }),
            ErrorKind::MissingBaseData);
}

TEST(Dolgachev, ViaIsotropy) {
  for (const auto& [name, expected] : head_g0_numbers()) {
    const auto& r = data().lookup(name);
    const auto g0 = g0_subgroup(r.polynomial());
    EXPECT_EQ(dolgachev_via_isotropy(*r.dolgachev, g0, isotropy_subgroups(g0)), expected) << name;
  }
  const auto& e12 = data().lookup("E12");
  const auto gf = symmetry_group(e12.polynomial());
  EXPECT_EQ(dolgachev_via_isotropy({2, 3, 7}, gf, {gf, gf, gf}), (NumberTuple{2, 3, 7}));
}

TEST(Genus, Values) {
  EXPECT_EQ(genus(g0_subgroup(parse_polynomial("x^2+xy^3+yz^5"))), 2);
  EXPECT_EQ(genus(symmetry_group(parse_polynomial("x^2+y^3+z^7"))), 0);
  EXPECT_EQ(genus(g0_subgroup(parse_polynomial("x^3y+y^3z+z^3x"))), 3);
}

TEST(EulerNumbers, StringyAndEquivariant) {
  EXPECT_EQ(stringy_euler(0, {2, 3, 7}), 11);
  EXPECT_EQ(stringy_euler(0, {2, 2, 3, 3}), 8);
  EXPECT_EQ(stringy_euler(2, {}), -2);
  EXPECT_EQ(equivariant_milnor_T({2, 3, 7}, 0), 11);
  EXPECT_EQ(equivariant_milnor_T({3, 3, 2, 2}, 0), 8);
  EXPECT_EQ(equivariant_milnor_T({}, 2), -2);
}

TEST(PhiT, ClosedFormula) {
  const auto p = phi_T({2, 3, 7}, 0);
  EXPECT_EQ(p.factors, (std::map<std::int64_t, std::int64_t>{{1, -1}, {2, 1}, {3, 1}, {7, 1}}));
  EXPECT_EQ(p.expand().degree(), 11);
  EXPECT_EQ(phi_T({}, 1).expand(), IntPoly::constant(1));
}

TEST(ET2, ChainForAllIntermediateGroups) {
  for (const auto& r : data().records()) {
    if (!r.dolgachev || r.dolgachev->size() != 3 || r.polynomial().n() != 3) continue;
    const auto f = r.polynomial();
    const auto gf = symmetry_group(f);
    if (gf.order() > 200) continue;
    const auto g0 = g0_subgroup(f);
    for (const auto& g : all_subgroups(gf)) {
      if (!g0.is_subgroup_of(g)) continue;
      const auto rep = verify_ET2(r, g, g.str());
      EXPECT_TRUE(rep.ok()) << rep.text();
    }
  }
  const auto rep = verify_ET2(data().lookup("W1,0"), g0_subgroup(data().lookup("W1,0").polynomial()), "G0");
  EXPECT_TRUE(rep.ok()) << rep.text();
}

TEST(Json, RoundTrips) {
  const auto f = parse_polynomial("x^2y+y^3z+z^3");
  const auto c = characteristic_polynomial(f);
  EXPECT_EQ(cyclotomic_from_json(json::parse(to_json(c).dump())), c);
  const auto s = spectrum(f);
  EXPECT_EQ(spectrum_from_json(json::parse(to_json(s).dump())), s);
  MilnorCache cache(f);
  const auto g0 = g0_subgroup(f);
  const auto e = e_function(cache, g0);
  const auto je = to_json(e, 3);
  EXPECT_EQ(je.at("n"), 3);
  EXPECT_EQ(efunction_from_json(json::parse(je.dump())), e);
  const auto x = el({Rational(1, 3), Rational(2, 3), Rational(0)});
  EXPECT_EQ(element_from_json(to_json(x)), x);
  const auto gf = symmetry_group(f);
  const auto b = reduced_equivariant_euler(cache, gf);
  EXPECT_EQ(burnside_from_json(json::parse(to_json(b).dump()), gf), b);
}

TEST(Json, ReportSchema) {
  const auto j = to_json(verify_strange_duality(data(), data().lookup("E13")));
  ASSERT_TRUE(j.contains("checks"));
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_EQ(c.at("status"), "pass");
    EXPECT_TRUE(c.contains("lhs"));
    EXPECT_TRUE(c.contains("rhs"));
  }
}
