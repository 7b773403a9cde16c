#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "invpoly/invpoly.hpp"
#include "invpoly/io.hpp"

using namespace invpoly;

namespace {

struct Options {
  std::string poly;
  std::string name;
  std::string group = "Gf";
  std::string format = "text";
  std::string vars;
  std::string dataset;
  std::string graph;
  std::size_t series_order = 20;
};

const Dataset& dataset(const Options& o) {
  static Dataset loaded;
  if (o.dataset.empty()) return Dataset::builtin();
  loaded = Dataset::load(o.dataset);
  return loaded;
}

InvertiblePolynomial input(const Options& o) {
  if (!o.poly.empty()) {
    if (o.vars.empty()) return parse_polynomial(o.poly);
    std::vector<std::string> names;
    std::string cur;
    for (char c : o.vars + ",") {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    return parse_polynomial(o.poly, names);
  }
  if (!o.name.empty()) return dataset(o).lookup(o.name).polynomial();
  throw Error(ErrorKind::Syntax, "need --poly or --name");
}

std::string weights_str(const WeightSystem& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.weights.size(); ++i) s += (i ? ", " : "") + std::to_string(w.weights[i]);
  return s + "; " + std::to_string(w.degree) + ")";
}

json weights_json(const WeightSystem& w) { return {{"weights", w.weights}, {"degree", w.degree}}; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(const Options& o) {
  const auto f = input(o);
  const auto w = canonical_weights(f);
  const auto r = reduce_weights(w);
  json j{{"polynomial", f.str()},
         {"n", f.n()},
         {"det", f.det()},
         {"canonical_weights", weights_json(w)},
         {"reduced_weights", weights_json(r.weights)},
         {"c", r.c},
         {"gorenstein", gorenstein_parameter(r.weights)},
         {"milnor_number", milnor_number(f)}};
  std::string blocks;
  json jb = json::array();
  for (const auto& b : atomic_decomposition(f).blocks) {
    std::string vs;
    for (auto v : b.variables) vs += (vs.empty() ? "" : ",") + f.names()[v];
    blocks += std::string(to_string(b.kind)) + "(" + vs + ") ";
    jb.push_back({{"kind", std::string(to_string(b.kind))}, {"variables", b.variables}, {"exponents", b.exponents}});
  }
  j["atomic"] = jb;
  const auto mg = maximal_grading(f);
  j["maximal_grading"] = {{"rank", mg.rank}, {"torsion", mg.torsion}};
  std::string text = "polynomial      " + f.str() + "\n" + "det E           " + std::to_string(f.det()) + "\n" +
                     "weights         " + weights_str(w) + "\n" + "reduced         " + weights_str(r.weights) +
                     "  c = " + std::to_string(r.c) + "\n" + "gorenstein      " +
                     std::to_string(gorenstein_parameter(r.weights)) + "\n" + "milnor number   " +
                     std::to_string(milnor_number(f)) + "\n" + "atomic          " + blocks + "\n";
  emit(o, j, text);
  return 0;
}

int cmd_transpose(const Options& o) {
  const auto ft = transpose(input(o));
  emit(o, json{{"transpose", ft.str()}}, ft.str() + "\n");
  return 0;
}

std::string elements_text(const Subgroup& g) {
  std::string s = "order " + std::to_string(g.order()) + "\n";
  for (const auto& x : g.elements()) s += "  " + x.str() + "\n";
  return s;
}

int cmd_group(const Options& o) {
  const auto f = input(o);
  const auto g = parse_group_spec(f, o.group);
  emit(o, to_json(g), elements_text(g));
  return 0;
}

int cmd_dual_group(const Options& o) {
  const auto f = input(o);
  const auto d = dual_group(parse_group_spec(f, o.group));
  emit(o, to_json(d), "transpose " + transpose(f).str() + "\n" + elements_text(d));
  return 0;
}

int cmd_monodromy(const Options& o) {
  const auto f = input(o);
  const auto s = spectrum(f);
  const auto phi = characteristic_polynomial(f);
  const auto p = poincare_series(reduce_weights(canonical_weights(f)).weights);
  const auto series = p.expand(o.series_order);
  std::string st;
  for (const auto& [a, m] : s) st += " " + a.str() + (m > 1 ? "^" + std::to_string(m) : "");
  std::string ps;
  for (auto c : series) ps += " " + std::to_string(c);
  json j{{"milnor_number", milnor_number(f)}, {"spectrum", to_json(s)}, {"phi", to_json(phi)},
         {"poincare", series}};
  emit(o, j,
       "milnor number  " + std::to_string(milnor_number(f)) + "\n" + "spectrum      " + st + "\n" + "phi            " +
           cyclotomic_str(phi) + "\n" + "poincare      " + ps + "\n");
  return 0;
}

int cmd_saito(const Options& o) {
  const auto f = input(o);
  const auto phi = characteristic_polynomial(f);
  const auto dual = saito_dual(phi);
  const auto phit = characteristic_polynomial(transpose(f));
  const bool ok = dual == phit;
  json j{{"phi", to_json(phi)}, {"saito_dual", to_json(dual)}, {"phi_transpose", to_json(phit)}, {"equal", ok}};
  emit(o, j,
       "phi            " + cyclotomic_str(phi) + "\n" + "saito dual     " + cyclotomic_str(dual) + "\n" +
           "phi transpose  " + cyclotomic_str(phit) + "\n" + (ok ? "equal\n" : "DIFFERENT\n"));
  return ok ? 0 : 1;
}

int cmd_efunction(const Options& o) {
  const auto f = input(o);
  const auto g = parse_group_spec(f, o.group);
  MilnorCache cf(f), ct(transpose(f));
  const auto e = e_function(cf, g);
  const auto h = hodge_numbers(cf, g);
  const auto check = duality_check(cf, ct, g);
  json j = to_json(e, f.n());
  j["chi"] = chi(e);
  j["mean"] = mean_exponent(e, f.n()).str();
  j["variance"] = variance(e, f.n()).str();
  j["central_charge"] = central_charge(f).str();
  j["duality"] = check.ok();
  std::string text = "E = " + e_function_str(e, f.n()) + "\n" + "chi " + std::to_string(chi(e)) + "  mean " +
                     mean_exponent(e, f.n()).str() + "  variance " + variance(e, f.n()).str() + "  c^ " +
                     central_charge(f).str() + "\n";
  if (h.hypothesis()) {
    text += "hodge";
    for (const auto& [pq, v] : h.h) text += " h(" + pq.first.str() + "," + pq.second.str() + ")=" + std::to_string(v);
    text += "\n";
  }
  text += std::string("duality with transpose ") + (check.ok() ? "holds" : "FAILS") + "\n";
  for (const auto& m : check.mismatches) text += "  " + m + "\n";
  emit(o, j, text);
  return check.ok() ? 0 : 1;
}

int cmd_burnside(const Options& o) {
  const auto f = input(o);
  const auto ft = transpose(f);
  const auto gf = symmetry_group(f);
  MilnorCache cf(f), ct(ft);
  const auto chi_f = reduced_equivariant_euler(cf, gf);
  const auto chi_t = reduced_equivariant_euler(ct, symmetry_group(ft));
  const auto rhs = saito_duality_map(chi_f).scaled(f.n() % 2 == 0 ? 1 : -1);
  const bool ok = chi_t == rhs;
  json j{{"reduced_equivariant_euler", to_json(chi_f)},
         {"transpose", to_json(chi_t)},
         {"orbifold_euler", orbifold_euler(cf, gf)},
         {"duality", ok}};
  emit(o, j,
       "chi_bar^G(V_f)    " + chi_f.str() + "\n" + "chi_bar^G(V_f~)   " + chi_t.str() + "\n" + "orbifold euler    " +
           std::to_string(orbifold_euler(cf, gf)) + "\n" + "duality " + (ok ? "holds" : "FAILS") + "\n");
  return ok ? 0 : 1;
}

int cmd_coxeter(const Options& o) {
  DynkinGraph g;
  if (!o.graph.empty()) {
    g = parse_graph_spec(o.graph);
  } else {
    const auto& r = dataset(o).lookup(o.name);
    if (!r.gabrielov) throw Error(ErrorKind::MissingBaseData, r.name + " has no Gabrielov triple");
    const auto& t = *r.gabrielov;
    if (t.size() != 3) throw Error(ErrorKind::UnsupportedArm, "need three Gabrielov numbers");
    g = build_S(t[0], t[1], t[2]);
  }
  const auto c = coxeter_element(g);
  const auto cp = characteristic_polynomial(c);
  const auto q = quasi_unipotent_check(c);
  json j{{"vertices", g.vertices}, {"charpoly", cp.str()}, {"quasi_unipotent", q.quasi_unipotent}};
  if (q.order) j["order"] = *q.order;
  emit(o, j,
       "vertices " + std::to_string(g.vertices.size()) + "\n" + "charpoly " + cp.str() + "\n" + "order    " +
           (q.order ? std::to_string(*q.order) : std::string("infinite")) + "\n");
  return 0;
}

Report verify_polynomial(const InvertiblePolynomial& f) {
  Report rep;
  MilnorCache cf(f), ct(transpose(f));
  rep.add_equal("milnor number = basis size", std::to_string(milnor_number(f)), std::to_string(milnor_basis(f).size()));
  const std::pair<const char*, Subgroup> groups[] = {{"e", Subgroup::trivial(f.exponent_matrix())},
                                                     {"G0", g0_subgroup(f)},
                                                     {"SL", sl_subgroup(symmetry_group(f))},
                                                     {"Gf", symmetry_group(f)}};
  for (const auto& [label, g] : groups) {
    const auto d = duality_check(cf, ct, g);
    rep.add(std::string("E duality ") + label, d.ok(), d.ok() ? "holds" : d.mismatches.front(), "holds");
  }
  return rep;
}

int cmd_verify(const Options& o) {
  Report rep;
  if (!o.name.empty() && o.poly.empty()) {
    const auto& d = dataset(o);
    const auto& r = d.lookup(o.name);
    rep.append(verify_strange_duality(d, r));
    const auto f = r.polynomial();
    if (r.cls == RecordClass::ExceptionalUnimodal || r.cls == RecordClass::BimodalHead) {
      rep.append(verify_ET2(r, g0_subgroup(f), "G0"));
      rep.append(verify_ET2(r, symmetry_group(f), "Gf"));
    }
    for (auto c : verify_polynomial(f).checks) {
      c.id = r.name + ": " + c.id;
      rep.checks.push_back(c);
    }
  } else if (!o.name.empty() || !o.poly.empty()) {
    rep = verify_polynomial(input(o));
  } else {
    const auto& d = dataset(o);
    for (const auto& r : d.records()) rep.append(verify_strange_duality(d, r));
  }
  emit(o, to_json(rep), rep.text() + std::to_string(rep.passed()) + "/" + std::to_string(rep.checks.size()) + " pass\n");
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invpoly: invariants of invertible polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--poly", o.poly, "polynomial, e.g. x^2+y^3+z^7");
  app.add_option("--name", o.name, "dataset record, e.g. E12");
  app.add_option("--group", o.group, "e | G0 | Gf | SL | (a,b,...);(c,d,...)");
  app.add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--series-order", o.series_order, "number of Poincare series terms");
  app.add_option("--vars", o.vars, "comma separated variable order");
  app.add_option("--dataset", o.dataset, "dataset file instead of the built-in one");

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter element of a graph (S:p,q,r T:p,q,r A:k D:k E:k C:k)");
  coxeter->add_option("--graph", o.graph);
  const std::pair<const char*, int (*)(const Options&)> commands[] = {
      {"info", cmd_info},         {"transpose", cmd_transpose}, {"group", cmd_group},
      {"dual-group", cmd_dual_group}, {"monodromy", cmd_monodromy}, {"saito", cmd_saito},
      {"efunction", cmd_efunction}, {"burnside", cmd_burnside},   {"verify", cmd_verify}};
  for (const auto& [name, fn] : commands) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (coxeter->parsed()) return cmd_coxeter(o);
    for (const auto& [name, fn] : commands)
      if (app.got_subcommand(name)) return fn(o);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
