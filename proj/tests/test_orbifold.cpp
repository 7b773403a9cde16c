#include <gtest/gtest.h>

#include "invpoly/invpoly.hpp"

using namespace invpoly;

namespace {

GroupElement el(std::initializer_list<Rational> a) { return GroupElement(std::vector<Rational>(a)); }

Bidegree bd(Rational p, Rational q) { return {p, q}; }

struct Cubic {
  InvertiblePolynomial f = parse_polynomial("x^3+y^3");
  MilnorCache cache{f};
  Subgroup g{f.exponent_matrix(), {el({Rational(1, 3), Rational(2, 3)})}};
};

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

}  // namespace

TEST(Sector, CubicPair) {
  Cubic c;
  const auto e = sector(c.cache, GroupElement::identity(2), c.g);
  EXPECT_EQ(e, (BigradedDimensionTable{{bd(Rational(2, 3), Rational(4, 3)), {1, 0}},
                                       {bd(Rational(4, 3), Rational(2, 3)), {1, 0}}}));
  const auto s = sector(c.cache, el({Rational(1, 3), Rational(2, 3)}), c.g);
  EXPECT_EQ(s, (BigradedDimensionTable{{bd(1, 1), {1, 0}}}));
}

TEST(Sector, SingleVariable) {
  const auto f = parse_polynomial("x^2");
  MilnorCache cache(f);
  const auto e = sector(cache, GroupElement::identity(1), Subgroup::trivial(f.exponent_matrix()));
  EXPECT_EQ(e, (BigradedDimensionTable{{bd(Rational(1, 2), Rational(1, 2)), {0, 1}}}));
}

TEST(EFunction, Examples) {
  Cubic c;
  EXPECT_EQ(e_function(c.cache, c.g), (EFunction{{bd(Rational(2, 3), Rational(4, 3)), 1},
                                                 {bd(Rational(4, 3), Rational(2, 3)), 1},
                                                 {bd(1, 1), 2}}));
  const auto x2 = parse_polynomial("x^2");
  MilnorCache cx(x2);
  EXPECT_EQ(e_function(cx, Subgroup::trivial(x2.exponent_matrix())), (EFunction{{bd(Rational(1, 2), Rational(1, 2)), -1}}));
}

TEST(EFunction, TrivialGroupIsSpectrum) {
  const auto f = parse_polynomial("x^2+y^3+z^7");
  MilnorCache cache(f);
  EFunction expected;
  for (const auto& [a, m] : spectrum(f)) expected[{Rational(3) - a, a}] -= m;
  EXPECT_EQ(e_function(cache, Subgroup::trivial(f.exponent_matrix())), expected);
}

TEST(Hodge, Examples) {
  Cubic c;
  const auto h = hodge_numbers(c.cache, c.g);
  EXPECT_TRUE(h.in_sl);
  EXPECT_FALSE(h.parity_collision);
  EXPECT_EQ(h.h, (HodgeNumbers{{bd(Rational(2, 3), Rational(4, 3)), 1}, {bd(Rational(4, 3), Rational(2, 3)), 1}, {bd(1, 1), 2}}));
  const auto x2 = parse_polynomial("x^2");
  MilnorCache cx(x2);
  EXPECT_EQ(hodge_numbers(cx, Subgroup::trivial(x2.exponent_matrix())).h, (HodgeNumbers{{bd(Rational(1, 2), Rational(1, 2)), 1}}));
}

TEST(Hodge, NoParityCollisionUnderHypotheses) {
  for (const auto& name : {"E12", "Q11", "W13", "S1,0", "Quadric2", "Cubic2", "D5"}) {
    const auto f = Dataset::builtin().lookup(name).polynomial();
    MilnorCache cache(f);
    for (const auto& g : all_subgroups(symmetry_group(f))) {
      const auto h = hodge_numbers(cache, g);
      if (!h.hypothesis()) continue;
      EXPECT_FALSE(h.parity_collision) << name << " " << g.str();
      const auto ok = sign_formula_check(e_function(cache, g), h);
      ASSERT_TRUE(ok.has_value());
      EXPECT_TRUE(*ok) << name << " " << g.str();
    }
  }
}

TEST(Invariants, ChiMeanVariance) {
  const auto f = parse_polynomial("x^2+y^3+z^7");
  MilnorCache cache(f);
  const auto e = e_function(cache, Subgroup::trivial(f.exponent_matrix()));
  EXPECT_EQ(chi(e), -12);
  EXPECT_EQ(mean_exponent(e, 3), Rational(3, 2));
  EXPECT_EQ(variance(e, 3), Rational(-22, 21));
  EXPECT_EQ(central_charge(f), Rational(22, 21));

  Cubic c;
  const auto ec = e_function(c.cache, c.g);
  EXPECT_EQ(chi(ec), 4);
  EXPECT_EQ(mean_exponent(ec, 2), Rational(1));
  EXPECT_EQ(variance(ec, 2), central_charge(c.f) * Rational(4) / Rational(12));
  EXPECT_EQ(kind_of([] { mean_exponent(EFunction{}, 2); }), ErrorKind::DivisionByZero);
}

TEST(PairCharPoly, TrivialGroupMatchesMonodromy) {
  for (const auto& r : Dataset::builtin().records()) {
    const auto f = r.polynomial();
    MilnorCache cache(f);
    const auto p = characteristic_polynomial_pair(hodge_numbers(cache, Subgroup::trivial(f.exponent_matrix())).h);
    ASSERT_TRUE(p.cyclotomic.has_value()) << r.name;
    EXPECT_EQ(*p.cyclotomic, characteristic_polynomial(f)) << r.name;
  }
}

TEST(PairCharPoly, CubicPair) {
  Cubic c;
  const auto p = characteristic_polynomial_pair(hodge_numbers(c.cache, c.g).h);
  EXPECT_EQ(p.eigenvalues, (std::map<Rational, std::int64_t>{{Rational(0), 2}, {Rational(1, 3), 1}, {Rational(2, 3), 1}}));
  const auto x2 = parse_polynomial("x^2");
  MilnorCache cx(x2);
  EXPECT_EQ(characteristic_polynomial_pair(hodge_numbers(cx, Subgroup::trivial(x2.exponent_matrix())).h).eigenvalues,
            (std::map<Rational, std::int64_t>{{Rational(1, 2), 1}}));
}

TEST(PairCharPoly, DegreeIsReducedOrbifoldEuler) {
  for (const auto& name : {"E12", "Z11", "Q10", "U1,0"}) {
    const auto f = Dataset::builtin().lookup(name).polynomial();
    MilnorCache cache(f);
    for (const auto& g : {Subgroup::trivial(f.exponent_matrix()), g0_subgroup(f), symmetry_group(f)}) {
      const auto red = reduced_orbifold_euler(cache, g);
      EXPECT_EQ(characteristic_polynomial_pair(hodge_numbers(cache, g).h).degree(), red < 0 ? -red : red) << name;
      EXPECT_EQ(chi(e_function(cache, g)), -red) << name;
    }
  }
}

TEST(PairCharPoly, MirrorForSL) {
  const auto f = parse_polynomial("x^2y+y^3z+z^3");
  const auto ft = transpose(f);
  MilnorCache cf(f), ct(ft);
  const auto sl = sl_subgroup(symmetry_group(f));
  for (const auto& g : all_subgroups(sl)) {
    const auto a = characteristic_polynomial_pair(hodge_numbers(cf, g).h);
    const auto b = characteristic_polynomial_pair(hodge_numbers(ct, dual_group(g)).h);
    EXPECT_EQ(a.eigenvalues, b.eigenvalues) << g.str();
  }
}

TEST(DualityCheck, Examples) {
  Cubic c;
  const Subgroup d(c.f.exponent_matrix(), {el({Rational(1, 3), Rational(1, 3)})});
  EXPECT_EQ(dual_group(c.g), d);
  const auto r = duality_check(c.cache, c.cache, c.g);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.mismatches.empty());

  const auto e12 = parse_polynomial("x^2+y^3+z^7");
  MilnorCache ce(e12);
  EXPECT_TRUE(duality_check(ce, ce, Subgroup::trivial(e12.exponent_matrix())).e_identity);
  for (const auto* rec : Dataset::builtin().all(RecordClass::ExceptionalUnimodal)) {
    const auto f = rec->polynomial();
    MilnorCache a(f), b(transpose(f));
    EXPECT_TRUE(duality_check(a, b, symmetry_group(f)).e_identity) << rec->name;
  }
}

TEST(DualityCheck, ReportsMismatches) {
  Cubic c;
  const auto other = parse_polynomial("x^3+y^4");
  MilnorCache wrong(other);
  const auto r = duality_check(c.cache, wrong, Subgroup::trivial(c.f.exponent_matrix()));
  EXPECT_FALSE(r.e_identity);
  EXPECT_FALSE(r.mismatches.empty());
}

TEST(Burnside, Multiplication) {
  const auto f = parse_polynomial("x^2+y^2");
  const IntMatrix e = f.exponent_matrix();
  const Subgroup g = symmetry_group(f);
  const Subgroup triv = Subgroup::trivial(e);
  const Subgroup h1(e, {el({Rational(1, 2), Rational(0)})});
  const Subgroup h2(e, {el({Rational(0), Rational(1, 2)})});
  BurnsideElement x(g);
  x.add(h1, 2);
  x.add(triv, -1);
  EXPECT_EQ(burnside_mul(BurnsideElement::unit(g), x), x);
  BurnsideElement free(g);
  free.add(triv, 1);
  EXPECT_EQ(burnside_mul(free, free), free.scaled(4));
  BurnsideElement a(g), b(g);
  a.add(h1, 1);
  b.add(h2, 1);
  EXPECT_EQ(burnside_mul(a, b), free);
  EXPECT_EQ(kind_of([&] { (void)(a + BurnsideElement(h1)); }), ErrorKind::AmbientMismatch);
  EXPECT_EQ(kind_of([&] { BurnsideElement(h1).add(g, 1); }), ErrorKind::NotASubgroup);
}

TEST(Burnside, MilnorFiberEuler) {
  EXPECT_EQ(milnor_fiber_euler(parse_polynomial("x^2+y^2")), 0);
  EXPECT_EQ(milnor_fiber_euler(parse_polynomial("x^2+y^3+z^7")), 13);
  MilnorCache c(parse_polynomial("x^2+y^2"));
  EXPECT_EQ(milnor_fiber_euler(c, 0), 0);
}

TEST(Burnside, EquivariantEulerExamples) {
  const auto f = parse_polynomial("x^2+y^2");
  const IntMatrix e = f.exponent_matrix();
  MilnorCache cache(f);
  const Subgroup g = symmetry_group(f);
  BurnsideElement expected(g);
  expected.add(fixing_subgroup(g, 0), 1);
  expected.add(fixing_subgroup(g, 1), 1);
  expected.add(Subgroup::trivial(e), -1);
  const auto x = equivariant_euler(cache, g);
  EXPECT_EQ(x, expected);
  EXPECT_EQ(r_orb(x), 3);
  EXPECT_EQ(orbifold_euler(cache, g), 3);
  EXPECT_EQ(reduced_orbifold_euler(cache, g), -1);

  const auto x2 = parse_polynomial("x^2");
  MilnorCache c2(x2);
  BurnsideElement free(symmetry_group(x2));
  free.add(Subgroup::trivial(x2.exponent_matrix()), 1);
  EXPECT_EQ(equivariant_euler(c2, symmetry_group(x2)), free);

  const auto e12 = parse_polynomial("x^2+y^3+z^7");
  MilnorCache ce(e12);
  const Subgroup t = Subgroup::trivial(e12.exponent_matrix());
  EXPECT_EQ(equivariant_euler(ce, t), BurnsideElement::unit(t).scaled(13));
  EXPECT_EQ(orbifold_euler(ce, t), 13);
}

TEST(Burnside, SaitoDualityMap) {
  const auto f = parse_polynomial("x^2y+y^3z+z^3");
  const Subgroup g = symmetry_group(f);
  const Subgroup gs = symmetry_group(transpose(f));
  BurnsideElement free(g);
  free.add(Subgroup::trivial(g.ambient()), 1);
  EXPECT_EQ(saito_duality_map(free), BurnsideElement::unit(gs));
  BurnsideElement cofree(gs);
  cofree.add(Subgroup::trivial(gs.ambient()), 1);
  EXPECT_EQ(saito_duality_map(BurnsideElement::unit(g)), cofree);
  MilnorCache cache(f);
  const auto x = reduced_equivariant_euler(cache, g);
  EXPECT_EQ(saito_duality_map(saito_duality_map(x)), x);
  EXPECT_EQ(kind_of([&] { saito_duality_map(BurnsideElement(g0_subgroup(parse_polynomial("x^2+xy^3+yz^5")))); }),
            ErrorKind::AmbientMismatch);
}

TEST(Burnside, DualityQuadric) {
  const auto f = parse_polynomial("x^2+y^2");
  MilnorCache cache(f);
  const auto x = reduced_equivariant_euler(cache, symmetry_group(f));
  EXPECT_EQ(saito_duality_map(x), x);
}

TEST(Enhanced, ClassesAndInvolution) {
  const auto f = parse_polynomial("x^2");
  const auto classes = enhanced_classes(f.exponent_matrix());
  EXPECT_EQ(classes.size(), 4u);
  for (const auto& t : classes) EXPECT_EQ(enhanced_duality_map(enhanced_duality_map(t)), t);

  const auto q = parse_polynomial("x^2y+y^3z+z^3");
  const auto qc = enhanced_classes(q.exponent_matrix());
  std::set<std::tuple<std::string, std::string, std::string>> images;
  for (const auto& t : qc) {
    EXPECT_EQ(enhanced_duality_map(enhanced_duality_map(t)), t);
    const auto d = enhanced_duality_map(t);
    images.insert({d.h_group.str(), d.h.str(), d.alpha.str()});
  }
  EXPECT_EQ(images.size(), qc.size());
}

TEST(Enhanced, DegenerateSlots) {
  const auto f = parse_polynomial("x^3+y^3");
  const IntMatrix e = f.exponent_matrix();
  const Subgroup g = symmetry_group(f);
  const EnhancedTerm top{g, GroupElement::identity(2), GroupElement::identity(2)};
  const auto d = enhanced_duality_map(top);
  EXPECT_EQ(d.h_group, Subgroup::trivial(e.transposed()));
  const auto h = el({Rational(1, 3), Rational(0)});
  const EnhancedTerm bottom{Subgroup::trivial(e), h, GroupElement::identity(2)};
  const auto db = enhanced_duality_map(bottom);
  EXPECT_EQ(db.h_group, symmetry_group(e.transposed()));
  EXPECT_EQ(db.alpha, h);
  EXPECT_EQ(enhanced_character(db, el({Rational(0), Rational(1, 3)})), duality_pairing(e.transposed(), el({Rational(0), Rational(1, 3)}), h));
}
