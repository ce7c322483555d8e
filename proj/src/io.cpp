#include "pdisk/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "io_detail.hpp"

namespace pdisk::io {

using namespace detail;

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where) {
  as_array(j, where);
  Matrix m(f, rows, cols);
  // A map out of or into a zero space may be written as [] or as rows of [].
  if (rows == 0 || cols == 0) {
    for (std::size_t r = 0; r < j.size(); ++r)
      if (!j[r].is_array() || !j[r].empty()) throw ParseError(at(where, r), "nonzero entry in a map with a zero space");
    if (!j.empty() && j.size() != rows) throw ParseError(where, "expected " + std::to_string(rows) + " rows");
    return m;
  }
  if (j.size() != rows) throw ParseError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = as_array(j[r], at(where, r));
    if (row.size() != cols)
      throw ParseError(at(where, r), "expected " + std::to_string(cols) + " columns, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      std::string w = at(at(where, r), c);
      if (row[c].is_number_integer())
        m(r, c) = Scalar(f, row[c].get<long>());
      else
        m(r, c) = guarded(w, [&] { return Scalar::parse(f, as_string(row[c], w)); });
    }
  }
  return m;
}

std::string vertex_key(const Quiver& q, std::size_t i) { return std::to_string(q.vertices()[i]); }

std::size_t vertex_from_key(const Quiver& q, const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    int label = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return q.vertex_index(label);
  } catch (const std::exception&) {
    throw ParseError(where, "unknown vertex \"" + key + "\"");
  }
}

std::size_t arrow_from_label(const Quiver& q, const std::string& label, const std::string& where) {
  try {
    return q.arrow_index(label);
  } catch (const std::exception&) {
    throw ParseError(where, "unknown arrow \"" + label + "\"");
  }
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PuncturedDisk& d) { return Json{{"n", d.n}}; }

Json to_json(const TaggedArc& a) {
  if (a.is_peripheral()) return Json{{"type", "peripheral"}, {"from", a.a}, {"to", a.b}};
  return Json{{"type", "radial"}, {"at", a.a}, {"tag", a.tag == Tag::plain ? "plain" : "notched"}};
}

Json to_json(const Triangulation& t) {
  Json arcs = Json::array();
  for (const auto& a : t.arcs) arcs.push_back(to_json(a));
  return Json{{"disk", to_json(t.disk)}, {"arcs", arcs}};
}

Json to_json(const Multicurve& m) {
  Json arcs = Json::array();
  for (const auto& a : m) arcs.push_back(to_json(a));
  return Json{{"arcs", arcs}};
}

Json to_json(const FormalSum& s) {
  Json out = Json::array();
  for (const auto& t : s.terms) {
    Json term = to_json(t.curves);
    out.push_back(Json{{"coeff", t.coeff}, {"arcs", term["arcs"]}});
  }
  return out;
}

Json to_json(const SmoothingResult& r) {
  auto side = [](const std::vector<Multicurve>& cs, const std::vector<std::string>& origin) {
    Json out = Json::array();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      Json c = to_json(cs[k]);
      c["origin"] = k < origin.size() ? origin[k] : "";
      out.push_back(std::move(c));
    }
    return out;
  };
  return Json{{"plus", side(r.plus, r.plus_origin)}, {"minus", side(r.minus, r.minus_origin)}};
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back(Json{{"label", a.label}, {"from", a.from}, {"to", a.to}});
  return Json{{"vertices", q.vertices()}, {"arrows", arrows}};
}

Json to_json(const Quiver& q, const Potential& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    Json cyc = Json::array();
    for (auto a : t.path) cyc.push_back(q.arrows()[a].label);
    terms.push_back(Json{{"coeff", t.coeff.str()}, {"cycle", cyc}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const Quiver& q, const Representation& r) {
  Json dims = Json::object(), mats = Json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) dims[vertex_key(q, i)] = r.dims[i];
  for (std::size_t a = 0; a < q.arrow_count(); ++a) mats[q.arrows()[a].label] = matrix_json(r.mats[a]);
  return Json{{"field", r.field.name()}, {"dims", dims}, {"mats", mats}};
}

Json to_json(const Quiver& q, const Morphism& m) {
  Json comps = Json::object();
  for (std::size_t i = 0; i < m.comps.size(); ++i) comps[vertex_key(q, i)] = matrix_json(m.comps[i]);
  return Json{{"comps", comps}};
}

Json to_json(const Quiver&, const RelationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"arrow", f.arrow}, {"residual", matrix_json(f.residual)}});
  return Json{{"ok", r.ok}, {"failures", failures}};
}

Json to_json(const Quiver& q, const ExtensionReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json cj = to_json(c.curve);
    cj["side"] = c.side;
    cj["origin"] = c.origin;
    cj["d_c"] = c.d_c;
    cj["d_pair"] = c.d_pair;
    cj["verdict"] = c.ses ? "ses" : "no-ses";
    cj["middle"] = to_json(q, c.middle);
    if (c.sequence)
      cj["sequence"] = Json{{"f", to_json(q, c.sequence->f)}, {"g", to_json(q, c.sequence->g)}};
    else
      cj["sequence"] = nullptr;
    if (c.non_split)
      cj["non_split"] = *c.non_split;
    else
      cj["non_split"] = nullptr;
    cands.push_back(std::move(cj));
  }
  return Json{{"disk", to_json(r.alpha.disk())},
              {"alpha", to_json(r.alpha)},
              {"beta", to_json(r.beta)},
              {"e", r.e},
              {"m_alpha", to_json(q, r.m_alpha)},
              {"m_beta", to_json(q, r.m_beta)},
              {"candidates", cands}};
}

PuncturedDisk disk_from_json(const Json& j, const std::string& where) {
  int n = as_int(member(j, "n", where), at(where, "n"));
  return guarded(where, [&] { return PuncturedDisk(n); });
}

TaggedArc arc_from_json(const Json& j, const PuncturedDisk& d, const std::string& where) {
  std::string type = as_string(member(j, "type", where), at(where, "type"));
  if (type == "peripheral") {
    int from = as_int(member(j, "from", where), at(where, "from"));
    int to = as_int(member(j, "to", where), at(where, "to"));
    return guarded(where, [&] { return TaggedArc::peripheral(d, from, to); });
  }
  if (type == "radial") {
    int a = as_int(member(j, "at", where), at(where, "at"));
    std::string tag = as_string(member(j, "tag", where), at(where, "tag"));
    if (tag != "plain" && tag != "notched") throw ParseError(at(where, "tag"), "tag must be \"plain\" or \"notched\"");
    return guarded(where, [&] { return TaggedArc::radial(d, a, tag == "plain" ? Tag::plain : Tag::notched); });
  }
  throw ParseError(at(where, "type"), "unknown arc type \"" + type + "\"");
}

TaggedArc standalone_arc_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("arc"))
    return arc_from_json(j["arc"], disk_from_json(member(j, "disk", where), at(where, "disk")), at(where, "arc"));
  return arc_from_json(j, disk_from_json(j, where), where);
}

Triangulation triangulation_from_json(const Json& j, const std::string& where) {
  PuncturedDisk d = disk_from_json(member(j, "disk", where), at(where, "disk"));
  const Json& arr = as_array(member(j, "arcs", where), at(where, "arcs"));
  std::vector<TaggedArc> arcs;
  for (std::size_t k = 0; k < arr.size(); ++k) arcs.push_back(arc_from_json(arr[k], d, at(at(where, "arcs"), k)));
  return guarded(where, [&] { return validate_triangulation(arcs, d); });
}

Multicurve multicurve_from_json(const Json& j, const PuncturedDisk& d, const std::string& where) {
  const Json& arr = as_array(member(j, "arcs", where), at(where, "arcs"));
  std::vector<TaggedArc> arcs;
  for (std::size_t k = 0; k < arr.size(); ++k) arcs.push_back(arc_from_json(arr[k], d, at(at(where, "arcs"), k)));
  return make_multicurve(std::move(arcs));
}

FormalSum formal_sum_from_json(const Json& j, const PuncturedDisk& d, const std::string& where) {
  as_array(j, where);
  FormalSum s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string w = at(where, k);
    long c = as_int(member(j[k], "coeff", w), at(w, "coeff"));
    s.add(c, multicurve_from_json(j[k], d, w));
  }
  return s;
}

SmoothingResult smoothing_from_json(const Json& j, const PuncturedDisk& d, const std::string& where) {
  SmoothingResult r;
  auto side = [&](const char* key, std::vector<Multicurve>& cs, std::vector<std::string>& origin) {
    std::string w = at(where, key);
    const Json& arr = as_array(member(j, key, where), w);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      cs.push_back(multicurve_from_json(arr[k], d, at(w, k)));
      origin.push_back(arr[k].contains("origin") ? as_string(arr[k]["origin"], at(at(w, k), "origin")) : "");
    }
  };
  side("plus", r.plus, r.plus_origin);
  side("minus", r.minus, r.minus_origin);
  return r;
}

Quiver quiver_from_json(const Json& j, const std::string& where) {
  const Json& vs = as_array(member(j, "vertices", where), at(where, "vertices"));
  std::vector<int> vertices;
  for (std::size_t k = 0; k < vs.size(); ++k) vertices.push_back(as_int(vs[k], at(at(where, "vertices"), k)));
  const Json& as = as_array(member(j, "arrows", where), at(where, "arrows"));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < as.size(); ++k) {
    std::string w = at(at(where, "arrows"), k);
    arrows.push_back(Arrow{as_string(member(as[k], "label", w), at(w, "label")),
                           as_int(member(as[k], "from", w), at(w, "from")), as_int(member(as[k], "to", w), at(w, "to"))});
  }
  return guarded(where, [&] { return Quiver(vertices, arrows); });
}

Potential potential_from_json(const Json& j, const Quiver& q, const std::string& where) {
  const Json& terms = as_array(member(j, "terms", where), at(where, "terms"));
  Potential p;
  const Field f = Field::rationals();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string w = at(at(where, "terms"), k);
    Scalar c = guarded(at(w, "coeff"), [&] { return Scalar::parse(f, as_string(member(terms[k], "coeff", w), at(w, "coeff"))); });
    const Json& cyc = as_array(member(terms[k], "cycle", w), at(w, "cycle"));
    Path path;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::string wi = at(at(w, "cycle"), i);
      path.push_back(arrow_from_label(q, as_string(cyc[i], wi), wi));
    }
    guarded(w, [&] {
      p.add(q, c, path);
      return 0;
    });
  }
  return p;
}

Representation representation_from_json(const Json& j, const Quiver& q, const Field& fallback,
                                        const std::string& where) {
  Field f = fallback;
  if (j.is_object() && j.contains("field"))
    f = guarded(at(where, "field"), [&] { return Field::parse(as_string(j["field"], at(where, "field"))); });
  Representation r = Representation::zero(q, f);
  const Json& dims = member(j, "dims", where);
  if (!dims.is_object()) throw ParseError(at(where, "dims"), "expected an object keyed by vertex");
  for (const auto& [key, v] : dims.items()) {
    std::string w = at(at(where, "dims"), key);
    int d = as_int(v, w);
    if (d < 0) throw ParseError(w, "negative dimension");
    r.dims[vertex_from_key(q, key, w)] = static_cast<std::size_t>(d);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) r.mats[a] = Matrix(f, r.dims[q.target(a)], r.dims[q.source(a)]);
  if (j.contains("mats")) {
    const Json& mats = j["mats"];
    if (!mats.is_object()) throw ParseError(at(where, "mats"), "expected an object keyed by arrow");
    for (const auto& [label, m] : mats.items()) {
      std::string w = at(at(where, "mats"), label);
      std::size_t a = arrow_from_label(q, label, w);
      r.mats[a] = matrix_from_json(m, f, r.dims[q.target(a)], r.dims[q.source(a)], w);
    }
  }
  return r;
}

Morphism morphism_from_json(const Json& j, const Quiver& q, const Representation& from, const Representation& to,
                            const std::string& where) {
  Morphism m = zero_morphism(from, to);
  const Json& comps = member(j, "comps", where);
  if (!comps.is_object()) throw ParseError(at(where, "comps"), "expected an object keyed by vertex");
  for (const auto& [key, v] : comps.items()) {
    std::string w = at(at(where, "comps"), key);
    std::size_t i = vertex_from_key(q, key, w);
    m.comps[i] = matrix_from_json(v, from.field, to.dims[i], from.dims[i], w);
  }
  return m;
}

ExtensionReport extension_report_from_json(const Json& j, const Quiver& q, const std::string& where) {
  PuncturedDisk d = disk_from_json(member(j, "disk", where), at(where, "disk"));
  ExtensionReport r;
  r.alpha = arc_from_json(member(j, "alpha", where), d, at(where, "alpha"));
  r.beta = arc_from_json(member(j, "beta", where), d, at(where, "beta"));
  r.e = as_int(member(j, "e", where), at(where, "e"));
  r.m_alpha = representation_from_json(member(j, "m_alpha", where), q, Field::rationals(), at(where, "m_alpha"));
  r.m_beta = representation_from_json(member(j, "m_beta", where), q, Field::rationals(), at(where, "m_beta"));
  const Json& cands = as_array(member(j, "candidates", where), at(where, "candidates"));
  for (std::size_t k = 0; k < cands.size(); ++k) {
    std::string w = at(at(where, "candidates"), k);
    const Json& cj = cands[k];
    CandidateReport c;
    c.curve = multicurve_from_json(cj, d, w);
    c.side = as_string(member(cj, "side", w), at(w, "side"));
    if (c.side != "plus" && c.side != "minus") throw ParseError(at(w, "side"), "side must be \"plus\" or \"minus\"");
    c.origin = as_string(member(cj, "origin", w), at(w, "origin"));
    c.d_c = as_int(member(cj, "d_c", w), at(w, "d_c"));
    c.d_pair = as_int(member(cj, "d_pair", w), at(w, "d_pair"));
    std::string verdict = as_string(member(cj, "verdict", w), at(w, "verdict"));
    if (verdict != "ses" && verdict != "no-ses") throw ParseError(at(w, "verdict"), "unknown verdict \"" + verdict + "\"");
    c.ses = verdict == "ses";
    c.start = c.side == "plus" ? r.m_alpha : r.m_beta;
    c.end = c.side == "plus" ? r.m_beta : r.m_alpha;
    c.middle = representation_from_json(member(cj, "middle", w), q, Field::rationals(), at(w, "middle"));
    const Json& seq = member(cj, "sequence", w);
    if (!seq.is_null()) {
      std::string ws = at(w, "sequence");
      c.sequence = ShortExactSequence{morphism_from_json(member(seq, "f", ws), q, c.start, c.middle, at(ws, "f")),
                                      morphism_from_json(member(seq, "g", ws), q, c.middle, c.end, at(ws, "g"))};
    }
    const Json& ns = member(cj, "non_split", w);
    if (!ns.is_null()) {
      if (!ns.is_boolean()) throw ParseError(at(w, "non_split"), "expected a boolean or null");
      c.non_split = ns.get<bool>();
    }
    r.candidates.push_back(std::move(c));
  }
  return r;
}

namespace {

struct Point {
  double x, y;
};

Point boundary_point(const PuncturedDisk& d, double k, double radius) {
  double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * k / d.n;
  return {radius * std::cos(theta), radius * std::sin(theta)};
}

std::string fmt(const Point& p) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "(" << p.x << "," << p.y << ")";
  return os.str();
}

// A peripheral arc follows its clockwise boundary path, pulled inward, so the
// puncture stays on the correct side.
std::string arc_path(const TaggedArc& a) {
  PuncturedDisk d = a.disk();
  const double R = 3.0;
  std::ostringstream os;
  if (a.is_radial()) {
    os << fmt(boundary_point(d, a.a, R)) << " -- (0,0)";
    return os.str();
  }
  int cw = cw_distance(d, a.a, a.b);
  double depth = 2.4 * cw / d.n;
  const int steps = 24;
  os << "plot[smooth] coordinates {";
  for (int s = 0; s <= steps; ++s) {
    double t = static_cast<double>(s) / steps;
    double radius = R - depth * std::sin(std::numbers::pi * t);
    os << " " << fmt(boundary_point(d, a.a + t * cw, radius));
  }
  os << " }";
  return os.str();
}

}  // namespace

std::string tikz_disk(const PuncturedDisk& d, const std::vector<TikzLayer>& layers) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  os << "  \\draw (0,0) circle (3);\n";
  os << "  \\filldraw (0,0) circle (2pt);\n";
  for (int k = 0; k < d.n; ++k) {
    os << "  \\filldraw " << fmt(boundary_point(d, k, 3.0)) << " circle (1.5pt);\n";
    os << "  \\node at " << fmt(boundary_point(d, k, 3.4)) << " {$v_{" << k << "}$};\n";
  }
  for (const auto& layer : layers) {
    if (!layer.label.empty()) os << "  % " << layer.label << "\n";
    for (const auto& a : layer.arcs) {
      os << "  \\draw[" << layer.color << ", thick] " << arc_path(a) << ";\n";
      if (a.is_radial() && a.tag == Tag::notched)
        os << "  \\node[" << layer.color << "] at " << fmt(boundary_point(d, a.a, 0.35)) << " {$\\bowtie$};\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string tikz_report(const Triangulation& t, const ExtensionReport& r) {
  std::ostringstream os;
  TikzLayer tau{t.arcs, "blue", "triangulation"};
  os << "% alpha = " << r.alpha.str() << ", beta = " << r.beta.str() << ", e = " << r.e << "\n";
  os << tikz_disk(t.disk, {tau, {{r.alpha}, "red", "alpha"}, {{r.beta}, "green!60!black", "beta"}});
  for (const auto& c : r.candidates) {
    os << "% " << c.side << " " << multicurve_str(c.curve) << " d(C) = " << c.d_c << ", "
       << (c.ses ? "ses" : "no-ses") << "\n";
    os << tikz_disk(t.disk, {tau, {c.curve, "red", "candidate"}});
  }
  return os.str();
}

}  // namespace pdisk::io
