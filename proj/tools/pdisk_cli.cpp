// pdisk: command-line front end for the punctured disk toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdisk/verify.hpp"

using namespace pdisk;
using io::Json;

namespace {

struct Options {
  std::string field = "q";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = SesSearch{}.seed;
};

// Verification failed; exit code 1.
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad invocation detected after parsing; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << body;
}

void need_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (o.format == a) return;
  throw UsageError("--format " + o.format + " is not available for this command");
}

TaggedArc load_arc(const std::string& path) { return io::standalone_arc_from_json(io::read_file(path), path); }

Triangulation load_triangulation(const std::string& path) {
  Json j = io::read_file(path);
  // A fixture bundle carries its triangulation under a key.
  if (j.is_object() && j.contains("triangulation")) return io::triangulation_from_json(j["triangulation"], path + ".triangulation");
  return io::triangulation_from_json(j, path);
}

TaggedArc on_disk(const TaggedArc& a, const PuncturedDisk& d, const std::string& what) {
  if (a.n != d.n) throw UsageError(what + " lives on a disk with " + std::to_string(a.n) + " points, expected " + std::to_string(d.n));
  return a;
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto x : d) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

SesSearch search_of(const Options& o) {
  SesSearch s;
  s.seed = o.seed;
  return s;
}

int run_cross(const Options& o, const std::string& fa, const std::string& fb) {
  need_format(o, {"json", "text"});
  TaggedArc a = load_arc(fa), b = load_arc(fb);
  int e = crossing_number(a, b);
  if (o.format == "text")
    emit(o, std::to_string(e) + "\n");
  else
    emit(o, io::dump(Json{{"alpha", io::to_json(a)}, {"beta", io::to_json(b)}, {"e", e}}));
  return 0;
}

int run_smooth(const Options& o, const std::string& fa, const std::string& fb) {
  TaggedArc a = load_arc(fa), b = load_arc(fb);
  auto r = smooth_pair(a, b);
  if (o.format == "json") {
    emit(o, io::dump(io::to_json(r)));
  } else if (o.format == "text") {
    std::ostringstream os;
    for (std::size_t k = 0; k < r.plus.size(); ++k) os << "plus  " << r.plus_origin[k] << "  " << multicurve_str(r.plus[k]) << "\n";
    for (std::size_t k = 0; k < r.minus.size(); ++k) os << "minus " << r.minus_origin[k] << "  " << multicurve_str(r.minus[k]) << "\n";
    emit(o, os.str());
  } else {
    need_format(o, {"tikz"});
    std::string body = io::tikz_disk(a.disk(), {{{a}, "red", "alpha"}, {{b}, "blue", "beta"}});
    for (std::size_t k = 0; k < r.plus.size(); ++k) body += io::tikz_disk(a.disk(), {{r.plus[k], "teal", "plus " + r.plus_origin[k]}});
    for (std::size_t k = 0; k < r.minus.size(); ++k) body += io::tikz_disk(a.disk(), {{r.minus[k], "orange", "minus " + r.minus_origin[k]}});
    emit(o, body);
  }
  return 0;
}

int run_quiver(const Options& o, const std::string& ft) {
  Triangulation t = load_triangulation(ft);
  t.disk.require_algebraic();
  TriangulationModel m(t);
  const auto& qp = m.qp();
  if (o.format == "json") {
    emit(o, io::dump(Json{{"quiver", io::to_json(qp.quiver)}, {"potential", io::to_json(qp.quiver, qp.potential)}}));
  } else if (o.format == "text") {
    std::ostringstream os;
    for (std::size_t v = 0; v < t.arcs.size(); ++v) os << "vertex " << v + 1 << "  " << t.arcs[v].str() << "\n";
    for (const auto& a : qp.quiver.arrows()) os << a.label << ": " << a.from << " -> " << a.to << "\n";
    for (const auto& term : qp.potential.terms) {
      os << "potential " << term.coeff.str() << " *";
      for (auto a : term.path) os << " " << qp.quiver.arrows()[a].label;
      os << "\n";
    }
    emit(o, os.str());
  } else {
    need_format(o, {"tikz"});
    emit(o, io::tikz_disk(t.disk, {{t.arcs, "black", "triangulation"}}));
  }
  return 0;
}

int run_rep(const Options& o, const std::string& ft, const std::string& fa) {
  Triangulation t = load_triangulation(ft);
  t.disk.require_algebraic();
  TaggedArc j = on_disk(load_arc(fa), t.disk, "arc");
  TriangulationModel m(t);
  Field f = Field::parse(o.field);
  auto r = arc_representation(j, m, f);
  auto rel = check_relations(r, m.qp().quiver, m.qp().potential);
  if (o.format == "json") {
    emit(o, io::dump(Json{{"arc", io::to_json(j)},
                          {"crossing_vector", crossing_vector(j, t)},
                          {"representation", io::to_json(m.qp().quiver, r)},
                          {"relations", io::to_json(m.qp().quiver, rel)}}));
  } else if (o.format == "text") {
    std::ostringstream os;
    os << "arc " << j.str() << "\ndims " << dims_str(r.dims) << "\nrelations " << (rel.ok ? "ok" : "FAIL") << "\n";
    for (const auto& fl : rel.failures) os << "  fails at " << fl.arrow << "\n";
    emit(o, os.str());
  } else {
    need_format(o, {"tikz"});
    emit(o, io::tikz_disk(t.disk, {{t.arcs, "gray", "triangulation"}, {{j}, "red", j.str()}}));
  }
  if (!rel.ok) throw VerificationFailed("representation violates the relations");
  return 0;
}

int run_ext(const Options& o, const std::vector<std::string>& files) {
  Triangulation t;
  TaggedArc a, b;
  if (files.size() == 1) {
    auto bundle = io::bundle_from_json(io::read_file(files[0]));
    t = bundle.triangulation;
    a = bundle.alpha;
    b = bundle.beta;
  } else if (files.size() == 3) {
    t = load_triangulation(files[0]);
    a = on_disk(load_arc(files[1]), t.disk, "alpha");
    b = on_disk(load_arc(files[2]), t.disk, "beta");
  } else {
    throw UsageError("ext takes a bundle file, or a triangulation file and two arc files");
  }
  t.disk.require_algebraic();
  TriangulationModel m(t);
  auto r = analyze_extension(m, a, b, Field::parse(o.field), search_of(o), false);
  const auto& q = m.qp().quiver;
  if (o.format == "json") {
    emit(o, io::dump(io::to_json(q, r)));
  } else if (o.format == "text") {
    std::ostringstream os;
    os << "alpha " << a.str() << "  dims " << dims_str(r.m_alpha.dims) << "\n";
    os << "beta  " << b.str() << "  dims " << dims_str(r.m_beta.dims) << "\n";
    os << "e = " << r.e << "\n";
    for (const auto& c : r.candidates) {
      os << c.side << " " << c.origin << "  " << multicurve_str(c.curve) << "  d = " << c.d_c << "/" << c.d_pair << "  "
         << (c.ses ? "ses" : "no-ses");
      if (c.ses) os << (c.sequence ? (c.non_split.value_or(false) ? "  verified non-split" : "  split") : "  not found");
      os << "\n";
    }
    emit(o, os.str());
  } else {
    need_format(o, {"tikz"});
    emit(o, io::tikz_report(t, r));
  }
  for (const auto& c : r.candidates)
    if (c.ses && (!c.sequence || !c.non_split.value_or(false)))
      throw VerificationFailed("candidate " + multicurve_str(c.curve) + " has no verified non-split sequence");
  return 0;
}

int run_enumerate(const Options& o, int n, const std::string& what) {
  need_format(o, {"json", "text"});
  PuncturedDisk d(n);
  Json out = Json::array();
  std::ostringstream os;
  if (what == "arcs") {
    for (const auto& a : enumerate_tagged_arcs(d)) {
      out.push_back(io::to_json(a));
      os << a.str() << "\n";
    }
  } else if (what == "triangles") {
    for (const auto& t : enumerate_triangles(d)) {
      out.push_back(Json{{"alpha", io::to_json(t.alpha)}, {"middle", io::to_json(t.middle)}, {"beta", io::to_json(t.beta)}, {"origin", t.origin}});
      os << t.alpha.str() << " -> " << multicurve_str(t.middle) << " -> " << t.beta.str() << "  " << t.origin << "\n";
    }
  } else if (what == "triangulations") {
    for (const auto& t : enumerate_triangulations(d)) {
      out.push_back(io::to_json(t));
      os << multicurve_str(make_multicurve(t.arcs)) << "\n";
    }
  } else {
    throw UsageError("--what must be arcs, triangles or triangulations");
  }
  if (o.format == "json")
    emit(o, io::dump(Json{{"disk", io::to_json(d)}, {"what", what}, {"count", out.size()}, {"items", out}}));
  else
    emit(o, os.str() + std::to_string(out.size()) + " " + what + "\n");
  return 0;
}

int report(const Options& o, const io::VerifyReport& r) {
  need_format(o, {"json", "text"});
  emit(o, o.format == "json" ? io::dump(r.to_json()) : r.text());
  if (!r.ok()) throw VerificationFailed("verification failed");
  return 0;
}

int run_verify_qp(const Options& o, const std::vector<std::string>& files) {
  auto data = io::qp_data_from_json(io::read_file(files[0]), io::read_file(files[1]), io::read_file(files[2]),
                                    io::read_file(files[3]), Field::parse(o.field));
  return report(o, io::verify_qp(data));
}

int run_fixture(const Options& o, const std::vector<std::string>& args, int n, int r, int s, int i) {
  if (args.empty()) throw UsageError("fixture needs a name (lemma-d) or a bundle file");
  if (args[0] == "lemma-d") {
    Field f = Field::parse(o.field);
    return report(o, io::check_lemma(linear_D_fixture(n, r, s, i, f)));
  }
  auto bundle = io::bundle_from_json(io::read_file(args[0]));
  return report(o, io::check_bundle(bundle, Field::parse(o.field), search_of(o)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tagged arcs, skein smoothing and extensions on a once-punctured disk"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "Coefficient field: q or fp:<P>");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "tikz"}));
  app.add_option("--out", o.out, "Write output to a file instead of stdout");
  app.add_option("--seed", o.seed, "Seed for the sequence search");

  std::string fa, fb, ft;
  auto* cross = app.add_subcommand("cross", "Minimal crossing number of two arcs");
  cross->add_option("alpha", fa)->required();
  cross->add_option("beta", fb)->required();

  auto* smooth = app.add_subcommand("smooth", "Skein smoothing of two crossing arcs");
  smooth->add_option("alpha", fa)->required();
  smooth->add_option("beta", fb)->required();

  auto* quiver = app.add_subcommand("quiver", "Quiver with potential of a triangulation");
  quiver->add_option("triangulation", ft)->required();

  auto* rep = app.add_subcommand("rep", "Representation of an arc, with relation check");
  rep->add_option("triangulation", ft)->required();
  rep->add_option("arc", fa)->required();

  std::vector<std::string> files;
  auto* ext = app.add_subcommand("ext", "Middle terms and sequences for a pair of arcs");
  ext->add_option("files", files, "bundle, or triangulation alpha beta")->required();

  int n = 0;
  std::string what = "arcs";
  auto* enumerate = app.add_subcommand("enumerate", "List arcs, triangles or triangulations");
  enumerate->add_option("--n", n, "Number of marked points")->required();
  enumerate->add_option("--what", what, "arcs, triangles or triangulations");

  auto* verify = app.add_subcommand("verify-qp", "Check representations and sequences given as data");
  verify->add_option("files", files, "quiver potential representations sequences")->required()->expected(4);

  int r = 0, s = 0, i = 0;
  auto* fixture = app.add_subcommand("fixture", "Run a stored or generated fixture");
  fixture->add_option("name", files, "lemma-d or a bundle file")->required();
  fixture->add_option("--n", n);
  fixture->add_option("--r", r);
  fixture->add_option("--s", s);
  fixture->add_option("--i", i);

  for (auto* sub : {cross, smooth, quiver, rep, ext, enumerate, verify, fixture}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cross) return run_cross(o, fa, fb);
    if (*smooth) return run_smooth(o, fa, fb);
    if (*quiver) return run_quiver(o, ft);
    if (*rep) return run_rep(o, ft, fa);
    if (*ext) return run_ext(o, files);
    if (*enumerate) return run_enumerate(o, n, what);
    if (*verify) return run_verify_qp(o, files);
    if (*fixture) return run_fixture(o, files, n, r, s, i);
  } catch (const VerificationFailed& e) {
    std::cerr << "pdisk: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "pdisk: internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const SearchFailure& e) {
    std::cerr << "pdisk: " << e.what() << "\n";
    return 1;
  } catch (const io::ParseError& e) {
    std::cerr << "pdisk: parse error at " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "pdisk: field error: " << e.what() << "\n";
    return 2;
  } catch (const TriangulationError& e) {
    std::cerr << "pdisk: invalid triangulation: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "pdisk: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pdisk: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "pdisk: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pdisk: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
