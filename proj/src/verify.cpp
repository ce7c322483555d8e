#include "pdisk/verify.hpp"

#include <algorithm>
#include <sstream>

#include "io_detail.hpp"

namespace pdisk::io {

using namespace detail;

namespace {

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto x : d) s += std::to_string(x);
  return s;
}

std::string failures_str(const RelationReport& r) {
  std::string s;
  for (const auto& f : r.failures) s += (s.empty() ? "" : ", ") + f.arrow;
  return "relation fails at " + s;
}

std::vector<std::size_t> size_list(const Json& j, const std::string& where) {
  const Json& a = as_array(j, where);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    int v = as_int(a[k], at(where, k));
    if (v < 0) throw ParseError(at(where, k), "negative dimension");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// Exactness, morphism checks and non-splitting of one declared sequence.
void check_sequence(VerifyReport& rep, const std::string& name, const Quiver& q, const Representation& a,
                    const Representation& e, const Representation& c, const Morphism& f, const Morphism& g) {
  bool fm = is_morphism(q, a, e, f), gm = is_morphism(q, e, c, g);
  rep.checks.push_back({name + ": f, g commute with arrows", fm && gm,
                        fm && gm ? "" : std::string(fm ? "g" : "f") + " is not a morphism"});
  bool exact = verify_exact(a, e, c, f, g);
  rep.checks.push_back({name + ": exact", exact, exact ? "" : "ranks or composite do not match"});
  if (!exact) return;
  bool split = is_split_mono(q, a, e, f);
  rep.checks.push_back({name + ": non-split", !split, split ? "f has a retraction" : ""});
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

Json VerifyReport::to_json() const {
  Json items = Json::array();
  for (const auto& c : checks) {
    Json j{{"item", c.item}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    items.push_back(std::move(j));
  }
  return Json{{"ok", ok()}, {"checks", items}};
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "ok   " : "FAIL ") << c.item;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (ok() ? "all checks passed" : "verification failed") << "\n";
  return os.str();
}

QpData qp_data_from_json(const Json& quiver, const Json& potential, const Json& reps, const Json& sequences,
                         const Field& fallback) {
  QpData d;
  d.quiver = quiver_from_json(quiver, "quiver");
  d.potential = potential_from_json(potential, d.quiver, "potential");
  const Json& rs = member(reps, "representations", "reps");
  if (!rs.is_object()) throw ParseError("reps.representations", "expected an object keyed by name");
  for (const auto& [name, r] : rs.items())
    d.reps.emplace(name, representation_from_json(r, d.quiver, fallback, "reps.representations." + name));
  const Json& ss = as_array(member(sequences, "sequences", "sequences"), "sequences.sequences");
  for (std::size_t k = 0; k < ss.size(); ++k) {
    std::string w = at("sequences.sequences", k);
    QpData::Sequence s;
    s.name = as_string(member(ss[k], "name", w), at(w, "name"));
    s.start = as_string(member(ss[k], "start", w), at(w, "start"));
    s.middle = as_string(member(ss[k], "middle", w), at(w, "middle"));
    s.end = as_string(member(ss[k], "end", w), at(w, "end"));
    auto rep = [&](const std::string& name, const char* key) -> const Representation& {
      auto it = d.reps.find(name);
      if (it == d.reps.end()) throw ParseError(at(w, key), "unknown representation \"" + name + "\"");
      return it->second;
    };
    const auto& a = rep(s.start, "start");
    const auto& e = rep(s.middle, "middle");
    const auto& c = rep(s.end, "end");
    s.f = morphism_from_json(member(ss[k], "f", w), d.quiver, a, e, at(w, "f"));
    s.g = morphism_from_json(member(ss[k], "g", w), d.quiver, e, c, at(w, "g"));
    d.sequences.push_back(std::move(s));
  }
  return d;
}

VerifyReport verify_qp(const QpData& d) {
  VerifyReport rep;
  for (const auto& [name, r] : d.reps) {
    auto rr = check_relations(r, d.quiver, d.potential);
    rep.checks.push_back({"relations " + name, rr.ok, rr.ok ? "" : failures_str(rr)});
  }
  for (const auto& s : d.sequences)
    check_sequence(rep, "sequence " + s.name, d.quiver, d.reps.at(s.start), d.reps.at(s.middle), d.reps.at(s.end),
                   s.f, s.g);
  return rep;
}

FixtureBundle bundle_from_json(const Json& j) {
  FixtureBundle b;
  b.name = as_string(member(j, "name", "$"), "$.name");
  b.triangulation = triangulation_from_json(member(j, "triangulation", "$"), "$.triangulation");
  const auto& d = b.triangulation.disk;
  b.alpha = arc_from_json(member(j, "alpha", "$"), d, "$.alpha");
  b.beta = arc_from_json(member(j, "beta", "$"), d, "$.beta");
  const Json& ex = member(j, "expect", "$");
  const std::string w = "$.expect";
  b.vertices = static_cast<std::size_t>(as_int(member(ex, "vertices", w), at(w, "vertices")));
  b.arrows = static_cast<std::size_t>(as_int(member(ex, "arrows", w), at(w, "arrows")));
  b.e = as_int(member(ex, "e", w), at(w, "e"));
  b.d_pair = as_int(member(ex, "d_pair", w), at(w, "d_pair"));
  b.dims_alpha = size_list(member(ex, "dims_alpha", w), at(w, "dims_alpha"));
  b.dims_beta = size_list(member(ex, "dims_beta", w), at(w, "dims_beta"));
  const Json& plus = as_array(member(ex, "plus", w), at(w, "plus"));
  for (std::size_t k = 0; k < plus.size(); ++k) {
    std::string wk = at(at(w, "plus"), k);
    CandidateExpectation c;
    c.label = as_string(member(plus[k], "label", wk), at(wk, "label"));
    c.arcs = multicurve_from_json(plus[k], d, wk);
    c.d_c = as_int(member(plus[k], "d_c", wk), at(wk, "d_c"));
    c.verdict = as_string(member(plus[k], "verdict", wk), at(wk, "verdict"));
    if (plus[k].contains("middle_dims")) c.middle_dims = size_list(plus[k]["middle_dims"], at(wk, "middle_dims"));
    b.plus.push_back(std::move(c));
  }
  return b;
}

VerifyReport check_bundle(const FixtureBundle& b, const Field& f, const SesSearch& search) {
  VerifyReport rep;
  TriangulationModel m(b.triangulation);
  const auto& q = m.qp().quiver;
  rep.checks.push_back({"quiver size", q.vertex_count() == b.vertices && q.arrow_count() == b.arrows,
                        std::to_string(q.vertex_count()) + " vertices, " + std::to_string(q.arrow_count()) + " arrows"});
  auto r = analyze_extension(m, b.alpha, b.beta, f, search, false);
  rep.checks.push_back({"e", r.e == b.e, "e = " + std::to_string(r.e)});
  rep.checks.push_back({"dims M_alpha", r.m_alpha.dims == b.dims_alpha, dims_str(r.m_alpha.dims)});
  rep.checks.push_back({"dims M_beta", r.m_beta.dims == b.dims_beta, dims_str(r.m_beta.dims)});

  std::vector<Multicurve> got, want;
  for (const auto& c : r.candidates)
    if (c.side == "plus") got.push_back(c.curve);
  for (const auto& c : b.plus) want.push_back(make_multicurve(c.arcs));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  rep.checks.push_back({"plus candidates", got == want, std::to_string(got.size()) + " found"});

  for (const auto& ex : b.plus) {
    auto mc = make_multicurve(ex.arcs);
    auto it = std::find_if(r.candidates.begin(), r.candidates.end(),
                           [&](const CandidateReport& c) { return c.side == "plus" && c.curve == mc; });
    std::string tag = "candidate " + ex.label;
    if (it == r.candidates.end()) {
      rep.checks.push_back({tag, false, "not produced: " + multicurve_str(mc)});
      continue;
    }
    rep.checks.push_back({tag + ": d", it->d_c == ex.d_c && it->d_pair == b.d_pair,
                          "d(C) = " + std::to_string(it->d_c) + ", d(pair) = " + std::to_string(it->d_pair)});
    std::string verdict = it->ses ? "ses" : "no-ses";
    rep.checks.push_back({tag + ": verdict", verdict == ex.verdict, verdict});
    if (!ex.middle_dims.empty())
      rep.checks.push_back({tag + ": middle dims", it->middle.dims == ex.middle_dims, dims_str(it->middle.dims)});
    if (ex.verdict == "ses") {
      if (!it->sequence) {
        rep.checks.push_back({tag + ": sequence", false, "search found no sequence"});
        continue;
      }
      check_sequence(rep, tag, q, it->start, it->middle, it->end, it->sequence->f, it->sequence->g);
    }
  }
  return rep;
}

VerifyReport check_lemma(const LemmaFixture& fx) {
  VerifyReport rep;
  Potential none;
  for (auto [name, r] : {std::pair{"bottom", &fx.bottom}, {"middle", &fx.middle}, {"top", &fx.top}}) {
    auto rr = check_relations(*r, fx.quiver, none);
    rep.checks.push_back({std::string("relations ") + name, rr.ok, dims_str(r->dims)});
  }
  check_sequence(rep, "sequence", fx.quiver, fx.bottom, fx.middle, fx.top, fx.f, fx.g);
  return rep;
}

}  // namespace pdisk::io
