#include "lineops/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lineops/catalog.hpp"
#include "lineops/dynamics.hpp"
#include "lineops/io.hpp"
#include "lineops/matroid.hpp"
#include "lineops/render.hpp"

namespace lineops {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string approx(double v, int digits = 4) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << v;
  return o.str();
}

bool real_field(const Field& f) {
  if (f.is_finite()) return false;
  if (f.degree() == 1) return true;
  return !f.real_roots().empty();
}

// Shared by every subcommand that consumes an arrangement or point set.
struct Source {
  std::string input = "-";
  std::string catalog;
  std::vector<std::string> params;  // k=v
};

void add_source(CLI::App* app, Source& s) {
  app->add_option("-i,--input", s.input, "JSON document, '-' for stdin")->capture_default_str();
  app->add_option("-c,--catalog", s.catalog, "build a catalog entry instead of reading input");
  app->add_option("-p,--param", s.params, "catalog parameter key=value (repeatable)");
  app->allow_extras();
}

// Leftover "--key value" / "--key=value" pairs become catalog parameters.
CatalogParams collect_params(const Source& s, const std::vector<std::string>& extras) {
  CatalogParams p;
  auto put = [&](const std::string& k, const std::string& v) {
    if (k.empty()) throw Usage("empty parameter name");
    if (!p.emplace(k, v).second) throw Usage("parameter given twice: " + k);
  };
  for (auto& kv : s.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Usage("--param expects key=value, got '" + kv + "'");
    put(kv.substr(0, eq), kv.substr(eq + 1));
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0) throw Usage("unexpected argument '" + a + "'");
    auto eq = a.find('=');
    if (eq != std::string::npos) {
      put(a.substr(2, eq - 2), a.substr(eq + 1));
    } else {
      if (i + 1 >= extras.size()) throw Usage("parameter " + a + " needs a value");
      put(a.substr(2), extras[++i]);
    }
  }
  if (!p.empty() && s.catalog.empty()) throw Usage("catalog parameters given without --catalog");
  return p;
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream o;
  if (path == "-") {
    o << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot open " + path);
    o << f.rdbuf();
  }
  return o.str();
}

struct Loaded {
  Document doc;
  Built built;
  bool from_catalog = false;
};

Loaded load(const Source& s, const std::vector<std::string>& extras, std::istream& in, std::ostream& err) {
  auto params = collect_params(s, extras);
  Loaded r;
  if (!s.catalog.empty()) {
    r.built = build(s.catalog, params);
    r.from_catalog = true;
    r.doc.field = r.built.arrangement.field();
    r.doc.lines = r.built.labelled;
    for (auto& w : r.built.warnings) err << "warning: " << w << "\n";
    for (auto& [k, v] : r.built.echo) err << "param " << k << "=" << v << "\n";
    return r;
  }
  r.doc = read_document_text(slurp(s.input, in));
  if (r.doc.duplicates_dropped) err << "warning: dropped " << r.doc.duplicates_dropped << " duplicate entries\n";
  return r;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json with_echo(Json j, const Loaded& l) {
  if (l.from_catalog && !l.built.echo.empty()) j["params"] = l.built.echo;
  return j;
}

std::string profile_text(const SingularityProfile& pr, bool approx_all) {
  std::ostringstream o;
  o << "lines " << pr.d << "\n";
  o << "profile " << (pr.t.empty() ? "(no singular points)" : pr.to_string()) << "\n";
  o << "points " << pr.singular_points() << "\n";
  if (pr.singular_points() > 0) {
    auto h = h_constant(pr);
    o << "H " << h.get_str() << " ~ " << approx(h.get_d()) << "\n";
  }
  if (approx_all) o << "consistent " << (pr.consistent() ? "yes" : "no") << "\n";
  return o.str();
}

Json slack_json(const Slack& s) {
  Json j{{"applicable", s.applicable}, {"informational", s.informational}, {"value", s.value}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Matroid3 matroid_of_file(const std::string& path, std::istream& in) {
  auto text = slurp(path, in);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("flats")) return matroid_from_json(j);
  auto d = read_document(j);
  return extract_matroid(d.lines);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact line-arrangement operators"};
  app.name("lineops");
  app.require_subcommand(1);
  bool approx_flag = false;
  app.add_flag("--approx", approx_flag, "also print decimal approximations");

  // catalog
  auto* cat = app.add_subcommand("catalog", "list, describe or build catalog arrangements");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the catalog");
  bool list_json = false;
  cat_list->add_flag("--json", list_json);
  auto* cat_show = cat->add_subcommand("show", "describe one entry");
  std::string show_name;
  cat_show->add_option("name", show_name)->required();
  auto* cat_build = cat->add_subcommand("build", "build an entry as JSON");
  std::string build_name, build_out;
  std::vector<std::string> build_params;
  cat_build->add_option("name", build_name)->required();
  cat_build->add_option("-p,--param", build_params, "key=value (repeatable)");
  cat_build->add_option("-o,--output", build_out);
  cat_build->allow_extras();

  // apply
  auto* apply = app.add_subcommand("apply", "apply an operator once");
  Source apply_src;
  std::string apply_op, apply_out;
  add_source(apply, apply_src);
  apply->add_option("--op", apply_op, "operator, e.g. L{>=2;>=2} or L{2;3}.D{2}")->required();
  apply->add_option("-o,--output", apply_out);

  // seq
  auto* seq = app.add_subcommand("seq", "iterate an operator");
  Source seq_src;
  std::string seq_op, seq_out;
  Budgets budgets;
  bool seq_json = false, seq_lines = false;
  add_source(seq, seq_src);
  seq->add_option("--op", seq_op)->required();
  seq->add_option("--steps", budgets.max_steps, "maximum number of steps")->capture_default_str();
  seq->add_option("--max-lines", budgets.max_lines)->capture_default_str();
  seq->add_option("--profile-lines", budgets.profile_lines, "skip profiles above this size")->capture_default_str();
  seq->add_option("--max-points", budgets.max_points)->capture_default_str();
  seq->add_flag("--json", seq_json, "trace as JSON");
  seq->add_flag("--with-lines", seq_lines, "include every arrangement in the JSON trace");
  seq->add_option("-o,--output", seq_out);

  // profile
  auto* prof = app.add_subcommand("profile", "singularity profile and H-constant");
  Source prof_src;
  bool prof_json = false;
  add_source(prof, prof_src);
  prof->add_flag("--json", prof_json);

  // check
  auto* check = app.add_subcommand("check", "inequalities, freeness test, degenerate class");
  Source check_src;
  bool check_json = false;
  std::string check_real = "auto";
  add_source(check, check_src);
  check->add_flag("--json", check_json);
  check->add_option("--real", check_real, "treat as a real arrangement: auto, yes or no")
      ->check(CLI::IsMember({"auto", "yes", "no"}))
      ->capture_default_str();

  // equiv
  auto* equiv = app.add_subcommand("equiv", "projective equivalence of two arrangements");
  std::string eq_a, eq_b;
  bool eq_json = false;
  equiv->add_option("a", eq_a)->required();
  equiv->add_option("b", eq_b)->required();
  equiv->add_flag("--json", eq_json);

  // matroid
  auto* mat = app.add_subcommand("matroid", "rank-3 matroids");
  mat->require_subcommand(1);
  auto* mat_ex = mat->add_subcommand("extract", "flats of an arrangement (labels follow input order)");
  Source mat_src;
  std::string mat_out;
  add_source(mat_ex, mat_src);
  mat_ex->add_option("-o,--output", mat_out);
  auto* mat_iso = mat->add_subcommand("iso", "isomorphism test; inputs are matroid or arrangement JSON");
  std::string iso_a, iso_b;
  bool iso_json = false;
  mat_iso->add_option("a", iso_a)->required();
  mat_iso->add_option("b", iso_b)->required();
  mat_iso->add_flag("--json", iso_json);

  // conics
  auto* con = app.add_subcommand("conics", "conics through many points");
  Source con_src;
  int con_min = 6;
  bool con_json = false, con_irred = false;
  std::string con_of = "auto";
  add_source(con, con_src);
  con->add_option("--min", con_min, "minimum number of points")->capture_default_str();
  con->add_option("--of", con_of, "for line input: dual (the normals) or singular (points of multiplicity 2)")
      ->check(CLI::IsMember({"auto", "dual", "singular"}))
      ->capture_default_str();
  con->add_flag("--json", con_json);
  con->add_flag("--irreducible", con_irred, "drop line pairs");

  // render
  auto* ren = app.add_subcommand("render", "SVG drawing");
  std::vector<std::string> ren_inputs;
  std::string ren_catalog, ren_out, ren_op;
  std::vector<std::string> ren_params;
  int ren_steps = 0;
  RenderSpec rspec;
  std::string win_x = "-2:2", win_y = "-2:2";
  bool no_points = false;
  ren->add_option("-i,--input", ren_inputs, "layer documents, drawn as step0, step1, ...");
  ren->add_option("-c,--catalog", ren_catalog);
  ren->add_option("-p,--param", ren_params);
  ren->add_option("--op", ren_op, "draw the first images under this operator as further layers");
  ren->add_option("--steps", ren_steps, "number of images to add (at most 2)")->check(CLI::Range(0, 2));
  ren->add_option("--x", win_x, "window xmin:xmax")->capture_default_str();
  ren->add_option("--y", win_y, "window ymin:ymax")->capture_default_str();
  ren->add_option("--chart", rspec.chart, "coordinate set to 1")->check(CLI::Range(0, 2))->capture_default_str();
  ren->add_option("--root", rspec.root_index, "real root for the number field")->capture_default_str();
  ren->add_option("--size", rspec.width, "width and height in pixels")->capture_default_str();
  ren->add_flag("--no-points", no_points);
  ren->add_option("-o,--output", ren_out);
  ren->allow_extras();

  // import / export
  auto* imp = app.add_subcommand("import", "validate a JSON document and print it in canonical form");
  std::string imp_in = "-", imp_out;
  imp->add_option("file", imp_in)->capture_default_str();
  imp->add_option("-o,--output", imp_out);
  auto* exp = app.add_subcommand("export", "write an arrangement as JSON or as a plain table");
  Source exp_src;
  std::string exp_out, exp_format = "json";
  add_source(exp, exp_src);
  exp->add_option("-o,--output", exp_out);
  exp->add_option("--format", exp_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      msg = sub->get_name() + ": " + msg;
    throw Usage(msg);
  }

  if (*cat_list) {
    if (list_json) {
      Json a = Json::array();
      for (auto& e : catalog_entries())
        a.push_back({{"name", e.name}, {"params", e.params}, {"field", e.field}, {"expected", e.expected},
                     {"summary", e.summary}, {"heavy", e.heavy}});
      out << dump(a);
    } else {
      std::size_t w = 0;
      for (auto& e : catalog_entries()) w = std::max(w, e.name.size());
      for (auto& e : catalog_entries())
        out << std::left << std::setw(int(w) + 2) << e.name << e.summary << (e.heavy ? " [heavy]" : "") << "\n";
    }
    return 0;
  }
  if (*cat_show) {
    auto& e = catalog_entry(show_name);
    out << "name     " << e.name << "\n"
        << "summary  " << e.summary << "\n"
        << "params   " << (e.params.empty() ? "none" : e.params) << "\n"
        << "field    " << e.field << "\n"
        << "expected " << (e.expected.empty() ? "-" : e.expected) << "\n"
        << "heavy    " << (e.heavy ? "yes" : "no") << "\n";
    return 0;
  }
  if (*cat_build) {
    Source s;
    s.catalog = build_name;
    s.params = build_params;
    auto l = load(s, cat_build->remaining(), in, err);
    emit(build_out, dump(with_echo(lines_json(l.doc.field, l.doc.lines), l)), out);
    return 0;
  }
  if (*apply) {
    auto op = OperatorSpec::parse(apply_op);
    auto l = load(apply_src, apply->remaining(), in, err);
    emit(apply_out, dump(to_json(op.apply(l.doc.arrangement()))), out);
    return 0;
  }
  if (*seq) {
    if (budgets.max_steps < 0) throw Usage("--steps must be non-negative");
    auto op = OperatorSpec::parse(seq_op);
    auto l = load(seq_src, seq->remaining(), in, err);
    auto tr = run_sequence(op, l.doc.arrangement(), budgets);
    if (seq_json) {
      emit(seq_out, dump(with_echo(trace_json(tr, seq_lines), l)), out);
    } else {
      std::string t = trace_table(tr);
      if (approx_flag)
        for (auto& st : tr.steps)
          if (st.h) t += "H(L" + std::to_string(st.index) + ") ~ " + approx(st.h->get_d(), 8) + "\n";
      emit(seq_out, t, out);
    }
    return 0;
  }
  if (*prof) {
    auto l = load(prof_src, prof->remaining(), in, err);
    auto pr = profile(l.doc.arrangement());
    if (prof_json) {
      Json j = profile_json(pr);
      if (pr.singular_points() > 0) {
        auto h = h_constant(pr);
        j["H"] = rational_text(h);
        j["H_approx"] = std::stod(approx(h.get_d()));
      }
      j["field"] = l.doc.field.to_string();
      out << dump(j);
    } else {
      out << profile_text(pr, approx_flag);
    }
    return 0;
  }
  if (*check) {
    auto l = load(check_src, check->remaining(), in, err);
    auto L = l.doc.arrangement();
    bool real = check_real == "auto" ? real_field(L.field()) : check_real == "yes";
    if (real && !real_field(L.field())) throw Error(ErrorKind::NoRealRoot, "field has no real embedding");
    auto pr = profile(L);
    auto rep = inequality_report(L, real);
    auto fr = freeness_necessary(pr);
    auto cls = classify_degenerate(L);
    if (check_json) {
      Json j{{"lines", pr.d},
             {"real", real},
             {"hirzebruch", slack_json(rep.hirzebruch)},
             {"melchior", slack_json(rep.melchior)},
             {"simpliciality", slack_json(rep.simpliciality)},
             {"de_bruijn_erdos", slack_json(rep.de_bruijn_erdos)},
             {"class", degenerate_class_name(cls)}};
      j["freeness_roots"] = fr ? Json::array({fr->first, fr->second}) : Json(nullptr);
      out << dump(j);
    } else {
      auto line = [&](const char* name, const Slack& s) {
        out << std::left << std::setw(16) << name;
        if (!s.applicable)
          out << "n/a";
        else
          out << "slack " << s.value << (s.value >= 0 ? " (holds)" : " (violated)")
              << (s.informational ? " [informational]" : "");
        if (!s.note.empty()) out << "  " << s.note;
        out << "\n";
      };
      out << "lines " << pr.d << ", real " << (real ? "yes" : "no") << "\n";
      line("hirzebruch", rep.hirzebruch);
      line("melchior", rep.melchior);
      line("simpliciality", rep.simpliciality);
      line("de-bruijn-erdos", rep.de_bruijn_erdos);
      out << std::left << std::setw(16) << "freeness";
      if (fr)
        out << "roots " << fr->first << ", " << fr->second << " (necessary condition holds)\n";
      else
        out << "no integer roots (not free)\n";
      out << std::left << std::setw(16) << "class" << degenerate_class_name(cls) << "\n";
    }
    return 0;
  }
  if (*equiv) {
    auto A = read_document_text(slurp(eq_a, in)).arrangement();
    auto B = read_document_text(slurp(eq_b, in)).arrangement();
    auto g = projectively_equivalent(A, B);
    if (eq_json) {
      Json j{{"equivalent", g.has_value()}};
      if (g) {
        Json m = Json::array();
        for (auto& row : g->point_matrix()) m.push_back({row[0].to_string(), row[1].to_string(), row[2].to_string()});
        j["point_matrix"] = m;
      }
      out << dump(j);
    } else if (g) {
      out << "equivalent\npoint matrix\n";
      for (auto& row : g->point_matrix()) {
        out << "  " << row[0].to_string() << "  " << row[1].to_string() << "  " << row[2].to_string();
        if (approx_flag && real_field(A.field()))
          out << "   ~ " << approx(row[0].real_embedding(0)) << " " << approx(row[1].real_embedding(0)) << " "
              << approx(row[2].real_embedding(0));
        out << "\n";
      }
    } else {
      out << "not equivalent\n";
    }
    return 0;
  }
  if (*mat_ex) {
    auto l = load(mat_src, mat_ex->remaining(), in, err);
    if (l.doc.is_points) throw Error(ErrorKind::NotApplicable, "matroid extract needs lines");
    emit(mat_out, dump(matroid_json(extract_matroid(l.doc.lines))), out);
    return 0;
  }
  if (*mat_iso) {
    auto a = matroid_of_file(iso_a, in), b = matroid_of_file(iso_b, in);
    auto phi = matroid_isomorphic(a, b);
    if (iso_json) {
      Json j{{"isomorphic", phi.has_value()}};
      if (phi) j["map"] = *phi;
      out << dump(j);
    } else if (phi) {
      out << "isomorphic\nmap";
      for (int v : *phi) out << " " << v;
      out << "\n";
    } else {
      out << "not isomorphic\n";
    }
    return 0;
  }
  if (*con) {
    auto l = load(con_src, con->remaining(), in, err);
    if (con_min < 5) throw Usage("--min must be at least 5");
    PointConfig P = l.doc.is_points ? l.doc.point_config()
                    : con_of == "singular"
                        ? points_operator(MultiplicitySelector::exactly({2}), l.doc.arrangement())
                        : dualize(l.doc.arrangement());
    if (!l.doc.is_points && con_of == "auto") err << "note: using the dual points of the lines\n";
    auto cs = rich_conics(P, con_min);
    if (con_irred) std::erase_if(cs, [](const RichConic& c) { return !c.irreducible; });
    if (con_json) {
      Json a = Json::array();
      for (auto& c : cs) {
        Json co = Json::array();
        for (auto& x : c.conic.coeffs()) co.push_back(x.to_string());
        a.push_back({{"coeffs", co}, {"points", c.points}, {"irreducible", c.irreducible}});
      }
      out << dump(Json{{"points", P.size()}, {"conics", a}});
    } else {
      out << cs.size() << " conics through >= " << con_min << " of " << P.size() << " points\n";
      for (auto& c : cs) {
        out << "  " << c.conic.to_string() << (c.irreducible ? "" : "  [reducible]") << "  points";
        for (int i : c.points) out << " " << i;
        out << "\n";
      }
    }
    return 0;
  }
  if (*ren) {
    auto range = [](const std::string& s, mpq_class& lo, mpq_class& hi) {
      auto c = s.find(':');
      if (c == std::string::npos) throw Usage("window range must be lo:hi, got '" + s + "'");
      try {
        lo = mpq_class(s.substr(0, c));
        hi = mpq_class(s.substr(c + 1));
      } catch (const std::invalid_argument&) {
        throw Usage("bad window range '" + s + "'");
      }
      lo.canonicalize();
      hi.canonicalize();
    };
    range(win_x, rspec.xmin, rspec.xmax);
    range(win_y, rspec.ymin, rspec.ymax);
    rspec.height = rspec.width;
    rspec.mark_points = !no_points;
    std::vector<RenderLayer> layers;
    if (!ren_catalog.empty()) {
      Source s;
      s.catalog = ren_catalog;
      s.params = ren_params;
      layers.push_back({load(s, ren->remaining(), in, err).doc.arrangement(), "step0"});
    } else {
      if (!ren->remaining().empty()) throw Usage("unexpected argument '" + ren->remaining().front() + "'");
      if (ren_inputs.empty()) ren_inputs.push_back("-");
      for (auto& path : ren_inputs) {
        auto d = read_document_text(slurp(path, in));
        layers.push_back({d.arrangement(), "step" + std::to_string(layers.size())});
      }
    }
    if (ren_steps > 0) {
      if (ren_op.empty()) throw Usage("--steps needs --op");
      auto op = OperatorSpec::parse(ren_op);
      Arrangement cur = layers.back().lines;
      for (int i = 0; i < ren_steps; ++i) {
        cur = op.apply(cur);
        layers.push_back({cur, "step" + std::to_string(layers.size())});
      }
    }
    if (layers.size() > 3) throw Usage("at most three layers");
    auto r = render_svg(layers, rspec);
    emit(ren_out, r.svg, out);
    err << "segments " << r.segments << ", omitted " << r.omitted << ", outside " << r.outside_window << ", points "
        << r.points << "\n";
    return 0;
  }
  if (*imp) {
    auto d = read_document_text(slurp(imp_in, in));
    if (d.duplicates_dropped) err << "warning: dropped " << d.duplicates_dropped << " duplicate entries\n";
    emit(imp_out, dump(d.is_points ? to_json(d.point_config()) : to_json(d.arrangement())), out);
    return 0;
  }
  if (*exp) {
    auto l = load(exp_src, exp->remaining(), in, err);
    if (exp_format == "json") {
      Json j = l.doc.is_points ? to_json(l.doc.point_config()) : to_json(l.doc.arrangement());
      if (approx_flag && real_field(l.doc.field)) {
        Json a = Json::array();
        auto add = [&](const auto& items) {
          for (auto& e : items)
            a.push_back({e[0].real_embedding(0), e[1].real_embedding(0), e[2].real_embedding(0)});
        };
        if (l.doc.is_points)
          add(l.doc.point_config().items());
        else
          add(l.doc.arrangement().items());
        j["approx"] = a;
      }
      emit(exp_out, dump(with_echo(j, l)), out);
    } else {
      std::ostringstream o;
      o << "# field " << l.doc.field.to_string() << "\n";
      auto rows = [&](const auto& items) {
        for (auto& e : items) o << e[0].to_string() << "\t" << e[1].to_string() << "\t" << e[2].to_string() << "\n";
      };
      if (l.doc.is_points)
        rows(l.doc.point_config().items());
      else
        rows(l.doc.arrangement().items());
      emit(exp_out, o.str(), out);
    }
    return 0;
  }
  throw Usage("no subcommand");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return run(args, in, out, err);
  } catch (const Usage& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.kind_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: parse: " << e.what() << "\n";
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: budget: out of memory\n";
    return 1;
  }
}

}  // namespace lineops
