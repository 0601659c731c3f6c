// Command-line front end for the kappa headers.
//
// Exit status: 0 on success, 1 on domain errors, 2 on malformed input.

#include "kappa/cubic_family.hpp"
#include "kappa/homology.hpp"
#include "kappa/json.hpp"
#include "kappa/lines.hpp"
#include "kappa/parse.hpp"
#include "kappa/smith.hpp"
#include "kappa/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace kappa;

namespace {

struct Options {
  bool json = false;
  std::string params = "0,0,0";
  std::string point, map, word, basis = "vc", euler, t, boundary, matrix;
  std::string A, B, D1, D2, D3;
  bool gram = false;
};

KappaParams read_params(const std::string &s) {
  auto v = parse_rational_list(s);
  if (v.size() != 3) throw ParseError("expected three comma-separated parameters P,Q,R", 0);
  return {v[0], v[1], v[2]};
}

Point3 read_point(const std::string &s) {
  auto v = parse_rational_list(s);
  if (v.size() != 3) throw ParseError("expected a point x,y,z", 0);
  return {v[0], v[1], v[2]};
}

Sl2Matrix read_sl2(const std::string &s) {
  auto v = parse_rational_list(s);
  if (v.size() != 4) throw ParseError("expected a 2x2 matrix as a,b,c,d", 0);
  return Sl2Matrix(v[0], v[1], v[2], v[3]);
}

BasisTag read_basis(const std::string &s) {
  if (s == "vc") return BasisTag::vanishing_cycle;
  if (s == "alpha") return BasisTag::alpha;
  throw ParseError("basis must be vc or alpha", 0);
}

std::string point_text(const Point3 &p) {
  return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ", " + to_string(p[2]) + ")";
}

void print_matrix(std::ostream &os, const IntMatrix &m) {
  auto cells = m.to_strings();
  std::size_t w = 1;
  for (const auto &r : cells)
    for (const auto &c : r) w = std::max(w, c.size());
  for (const auto &r : cells) {
    os << "[";
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << std::right << std::setw(int(w)) << r[j];
    os << "]\n";
  }
}

void emit(const Options &o, const json &j, const std::string &text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// The map under study: --map if given, else --word (empty word = identity).
PolyMap read_map_or_word(const Options &o, const KappaParams &k) {
  if (!o.map.empty() && !o.word.empty()) throw ParseError("give --map or --word, not both", 0);
  if (!o.map.empty()) return parse_poly_map(o.map);
  return word_to_map(parse_word(o.word), k);
}

// ---------------------------------------------------------------------------

void cmd_eval(const Options &o) {
  KappaParams k = read_params(o.params);
  Point3 p = read_point(o.point);
  Rational v = kappa_value(k, p);
  emit(o, {{"params", k.to_string()}, {"point", point_json(p)}, {"value", to_string(v)}},
       to_string(v) + "\n");
}

void cmd_singular(const Options &o) {
  KappaParams k = read_params(o.params);
  auto pts = critical_points(k);
  auto cv = critical_values(pts);
  json jp = json::array();
  for (const auto &cp : pts) jp.push_back(critical_point_json(cp));
  std::ostringstream os;
  os << "critical points of kappa_{" << k.to_string() << "}:\n";
  for (const auto &cp : pts) {
    if (cp.point) {
      os << "  " << std::left << std::setw(28) << point_text(*cp.point);
    } else {
      static const char *names[3] = {"x", "y", "z"};
      const auto &l = *cp.locus;
      os << "  (" << l.coordinate_string(0) << ", " << l.coordinate_string(1) << ", "
         << l.coordinate_string(2) << ") where " << l.minpoly.to_string(names[l.variable])
         << " = 0\n" << std::setw(30) << "";
    }
    os << " milnor " << cp.multiplicity;
    if (cp.value)
      os << "  value " << to_string(*cp.value) << "\n";
    else
      os << "  value root of " << cp.value_poly.to_string("t") << "\n";
  }
  os << "critical values:\n";
  for (const auto &[v, m] : cv.exact) os << "  " << std::setw(12) << to_string(v) << " x" << m << "\n";
  for (const auto &[p, m] : cv.algebraic) os << "  roots of " << p.to_string("t") << " x" << m << "\n";
  os << "milnor total " << milnor_total(pts) << "\n";
  emit(o,
       {{"params", k.to_string()},
        {"critical_points", jp},
        {"critical_values", critical_values_json(cv)},
        {"milnor_total", milnor_total(pts)}},
       os.str());
}

void cmd_aut_check(const Options &o) {
  KappaParams k = read_params(o.params);
  PolyMap f = read_map_or_word(o, k);
  bool ok = is_automorphism(f, k);
  emit(o, {{"map", f.to_string()}, {"params", k.to_string()}, {"automorphism", ok}},
       std::string(ok ? "automorphism" : "not an automorphism") + "\n");
}

void cmd_aut_apply(const Options &o) {
  KappaParams k = read_params(o.params);
  PolyMap f = read_map_or_word(o, k);
  if (o.point.empty()) {
    emit(o, {{"map", f.to_string()}, {"degree", f.degree()}}, f.to_string() + "\n");
    return;
  }
  Point3 q = evaluate(f, read_point(o.point));
  emit(o, {{"map", f.to_string()}, {"image", point_json(q)}}, point_text(q) + "\n");
}

void cmd_aut_decompose(const Options &o) {
  KappaParams k = read_params(o.params);
  PolyMap f = read_map_or_word(o, k);
  HorowitzResult r = horowitz_decompose(f, k);
  GroupWord w{r.word, std::nullopt};
  std::string word = w.to_string();
  json degs = r.degrees;
  emit(o,
       {{"word", word}, {"tail", r.tail.to_string()}, {"degrees", degs},
        {"jacobian_sign", sign_character(r.as_word(), k)}},
       "word " + (word.empty() ? std::string("(empty)") : word) + "\ntail " +
           (r.tail.is_identity() ? std::string("identity") : r.tail.to_string()) + "\n");
}

void cmd_pgl(const Options &o) {
  GroupWord w = parse_word(o.word);
  PglClass m = word_to_pgl(w);
  PglCharacters ch = pgl_characters(m);
  json perm = ch.mod2_perm;
  std::ostringstream os;
  os << "matrix " << m.to_string() << "\ndet " << ch.det << "\nmod2 (" << ch.mod2_perm[0] << ","
     << ch.mod2_perm[1] << "," << ch.mod2_perm[2] << ")\ncongruence "
     << (ch.congruence_member ? "yes" : "no") << "\n";
  emit(o,
       {{"word", w.to_string()}, {"matrix", m.to_string()}, {"det", ch.det}, {"mod2_perm", perm},
        {"congruence_member", ch.congruence_member}},
       os.str());
}

void cmd_homology_action(const Options &o) {
  PolyMap f = read_map_or_word(o, KappaParams{});
  if (!is_automorphism(f, KappaParams{})) throw DomainError("map is not an automorphism of kappa");
  IntMatrix m = homology_action(f);
  auto img = gamma_to_s4(f);
  std::ostringstream os;
  print_matrix(os, m);
  json j = matrix_json(m, "vc");
  j["perm"] = img.perm;
  j["sign"] = img.sign;
  emit(o, j, os.str());
}

void cmd_homology_form(const Options &o) {
  IntersectionForm f = intersection_form(read_basis(o.basis));
  std::ostringstream os;
  print_matrix(os, f.matrix);
  emit(o, matrix_json(f.matrix, basis_name(f.basis)), os.str());
}

void cmd_homology_change(const Options &o) {
  IntMatrix b = basis_change();
  std::ostringstream os;
  os << "columns: vanishing cycles in the alpha basis\n";
  print_matrix(os, b);
  json j = matrix_json(b, "alpha");
  j["columns"] = "vc";
  emit(o, j, os.str());
}

void cmd_link_monodromy(const Options &o) {
  auto e = parse_integer_list(o.euler);
  IntMatrix a = link_monodromy(e);
  std::ostringstream os;
  print_matrix(os, a);
  emit(o, {{"monodromy", matrix_json(a)}, {"trace", to_string(Integer(a(0, 0) + a(1, 1)))}}, os.str());
}

void cmd_link_h1(const Options &o) {
  IntMatrix form =
      o.matrix.empty() ? intersection_form(read_basis(o.basis)).matrix : parse_int_matrix(o.matrix);
  AbelianGroup g = link_h1(form);
  emit(o, abelian_group_json(g), g.to_string() + "\n");
}

void cmd_lines(const Options &o) {
  Rational t = parse_rational(o.t);
  auto lines = lines_on_fiber(t);
  json jl = json::array();
  std::ostringstream os;
  for (const auto &l : lines) {
    jl.push_back(line_json(l));
    os << std::left << std::setw(5) << l.label() << " " << l.equations() << "\n";
  }
  json j{{"t", to_string(t)}, {"lines", jl}};
  if (o.gram) {
    IntMatrix g = class_gram(t);
    j["gram"] = matrix_json(g, "vc");
    os << "gram of L8-L5, L7-L5, L1-L3, L2-L3, L5-L4:\n";
    print_matrix(os, g);
  }
  emit(o, j, os.str());
}

void cmd_traces(const Options &o) {
  auto t = parse_rational_list(o.boundary);
  if (t.size() != 4) throw ParseError("expected four boundary traces", 0);
  auto s = traces_to_params(std::array<Rational, 4>{t[0], t[1], t[2], t[3]});
  emit(o,
       {{"P", to_string(s.P)}, {"Q", to_string(s.Q)}, {"R", to_string(s.R)}, {"S", to_string(s.S)}},
       "P = " + to_string(s.P) + "\nQ = " + to_string(s.Q) + "\nR = " + to_string(s.R) +
           "\nS = " + to_string(s.S) + "\n");
}

void cmd_witness_torus(const Options &o) {
  auto c = torus_character(read_sl2(o.A), read_sl2(o.B));
  emit(o,
       {{"point", point_json(c.point)},
        {"commutator_trace", to_string(c.commutator_trace)},
        {"fricke_holds", c.fricke_holds}},
       "(x, y, z) = " + point_text(c.point) + "\ntr[A,B] = " + to_string(c.commutator_trace) +
           "\nkappa = tr[A,B]: " + (c.fricke_holds ? "yes" : "no") + "\n");
}

void cmd_witness_sphere(const Options &o) {
  auto c = sphere_character(read_sl2(o.D1), read_sl2(o.D2), read_sl2(o.D3));
  json tr = json::array();
  for (const auto &v : c.traces) tr.push_back(to_string(v));
  std::string ts;
  for (const auto &v : c.traces) ts += (ts.empty() ? "" : ", ") + to_string(v);
  emit(o,
       {{"traces", tr}, {"point", point_json(c.point)}, {"params", c.params.to_string()},
        {"S", to_string(c.S)}, {"on_surface", c.on_surface}},
       "traces (" + ts + ")\n(x, y, z) = " + point_text(c.point) + "\n(P, Q, R) = (" +
           c.params.to_string() + ")\nS = " + to_string(c.S) +
           "\non surface: " + (c.on_surface ? "yes" : "no") + "\n");
}

void cmd_snf(const Options &o) {
  IntMatrix a = parse_int_matrix(o.matrix);
  SnfResult r = smith_normal_form(a);
  AbelianGroup g = cokernel(a);
  json d = json::array();
  for (const auto &v : r.diagonal()) d.push_back(to_json_value(v));
  std::ostringstream os;
  os << "diagonal";
  for (const auto &v : r.diagonal()) os << " " << v.get_str();
  os << "\ncokernel " << g.to_string() << "\n";
  emit(o,
       {{"diagonal", d}, {"D", matrix_json(r.D)}, {"U", matrix_json(r.U)}, {"V", matrix_json(r.V)},
        {"cokernel", abelian_group_json(g)}},
       os.str());
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations for the cubic family x^2+y^2+z^2-xyz-Px-Qy-Rz-2", "kappa"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  std::function<void()> action;
  auto on = [&](CLI::App *sub, void (*fn)(const Options &)) {
    sub->callback([&action, fn, &o] { action = [fn, &o] { fn(o); }; });
  };
  auto params = [&](CLI::App *sub) {
    sub->add_option("--params", o.params, "P,Q,R")->capture_default_str();
  };

  auto *eval = app.add_subcommand("eval", "Evaluate kappa_{P,Q,R} at a point");
  params(eval);
  eval->add_option("--point", o.point, "x,y,z")->required();
  on(eval, cmd_eval);

  auto *sing = app.add_subcommand("singular", "Critical points, Milnor numbers and critical values");
  params(sing);
  on(sing, cmd_singular);

  auto *aut = app.add_subcommand("aut", "Polynomial automorphisms");
  aut->require_subcommand(1);
  for (auto [name, fn, help] :
       {std::tuple{"check", cmd_aut_check, "Does the map preserve kappa_{P,Q,R}?"},
        std::tuple{"apply", cmd_aut_apply, "Expand a word, or apply the map to --point"},
        std::tuple{"decompose", cmd_aut_decompose, "Tau word and affine tail of an automorphism"}}) {
    auto *s = aut->add_subcommand(name, help);
    params(s);
    s->add_option("--map", o.map, "f1; f2; f3");
    s->add_option("--word", o.word, "letters from a b g sx sy sz t1 t2 t3");
    if (std::string(name) == "apply") s->add_option("--point", o.point, "x,y,z");
    on(s, fn);
  }

  auto *pgl = app.add_subcommand("pgl", "PGL(2,Z) image of a word and its characters");
  pgl->add_option("--word", o.word)->required();
  on(pgl, cmd_pgl);

  auto *hom = app.add_subcommand("homology", "Homology of a smooth fiber");
  hom->require_subcommand(1);
  auto *hact = hom->add_subcommand("action", "Action of a word or map of kappa on H2");
  hact->add_option("--word", o.word);
  hact->add_option("--map", o.map);
  on(hact, cmd_homology_action);
  auto *hform = hom->add_subcommand("form", "Intersection form");
  hform->add_option("--basis", o.basis, "vc or alpha")->capture_default_str();
  on(hform, cmd_homology_form);
  on(hom->add_subcommand("change-of-basis", "Vanishing cycles in the alpha basis"), cmd_homology_change);

  auto *link = app.add_subcommand("link", "Link at infinity");
  link->require_subcommand(1);
  auto *mono = link->add_subcommand("monodromy", "Monodromy of a cyclic chain of curves");
  mono->add_option("--euler", o.euler, "e1,e2,...")->required();
  on(mono, cmd_link_monodromy);
  auto *h1 = link->add_subcommand("h1", "H1 of the link: cokernel of the intersection form");
  h1->add_option("--basis", o.basis, "vc or alpha")->capture_default_str();
  h1->add_option("--matrix", o.matrix, "rows separated by ';'");
  on(h1, cmd_link_h1);

  auto *lines = app.add_subcommand("lines", "The 24 affine lines on kappa = t");
  lines->add_option("--t", o.t)->required();
  lines->add_flag("--gram", o.gram, "Also print the Gram matrix of the vanishing-cycle classes");
  on(lines, cmd_lines);

  auto *traces = app.add_subcommand("traces", "Boundary traces to (P, Q, R, S)");
  traces->add_option("--boundary", o.boundary, "t1,t2,t3,t4")->required();
  on(traces, cmd_traces);

  auto *wit = app.add_subcommand("witness", "Check trace identities on SL(2) matrices");
  wit->require_subcommand(1);
  auto *torus = wit->add_subcommand("torus", "One-holed torus");
  torus->add_option("--A", o.A, "a,b,c,d")->required();
  torus->add_option("--B", o.B, "a,b,c,d")->required();
  on(torus, cmd_witness_torus);
  auto *sphere = wit->add_subcommand("sphere", "Four-holed sphere");
  sphere->add_option("--D1", o.D1, "a,b,c,d")->required();
  sphere->add_option("--D2", o.D2, "a,b,c,d")->required();
  sphere->add_option("--D3", o.D3, "a,b,c,d")->required();
  on(sphere, cmd_witness_sphere);

  auto *snf = app.add_subcommand("snf", "Smith normal form and cokernel");
  snf->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();
  on(snf, cmd_snf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
