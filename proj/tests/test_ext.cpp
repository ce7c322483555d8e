#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"

using namespace pdisk;

namespace {

const Field Q = Field::rationals();

// Moves a representation given on the printed quiver onto the computed one,
// matching arrows by their endpoints.
Representation transport(const Quiver& from_q, const Representation& r, const Quiver& to_q) {
  Representation out = Representation::zero(to_q, r.field);
  for (std::size_t v = 0; v < to_q.vertex_count(); ++v) out.dims[v] = r.dims[from_q.vertex_index(to_q.vertices()[v])];
  for (std::size_t a = 0; a < to_q.arrow_count(); ++a) {
    const auto& arrow = to_q.arrows()[a];
    bool found = false;
    for (std::size_t b = 0; b < from_q.arrow_count(); ++b)
      if (from_q.arrows()[b].from == arrow.from && from_q.arrows()[b].to == arrow.to) {
        out.mats[a] = r.mats[b];
        found = true;
      }
    if (!found) throw std::logic_error("no matching arrow for " + arrow.label);
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Bundles, Example1) {
  auto b = io::bundle_from_json(io::read_file(testing_support::fixture("example1.json")));
  auto rep = io::check_bundle(b);
  EXPECT_TRUE(rep.ok()) << rep.text();
}

TEST(Bundles, Example2) {
  auto b = io::bundle_from_json(io::read_file(testing_support::fixture("example2.json")));
  auto rep = io::check_bundle(b);
  EXPECT_TRUE(rep.ok()) << rep.text();
  TriangulationModel m(b.triangulation);
  auto r = analyze_extension(m, b.alpha, b.beta);
  EXPECT_EQ(r.m_alpha.total_dim(), 5u);
  EXPECT_EQ(r.m_beta.total_dim(), 3u);
  std::size_t plus = 0;
  for (const auto& c : r.candidates)
    if (c.side == "plus") {
      ++plus;
      EXPECT_EQ(c.middle.total_dim(), 8u);
    }
  EXPECT_EQ(plus, 1u);
}

TEST(Example1, PrintedRepresentationsMatchComputed) {
  auto printed = testing_support::qp_dir("example1_printed");
  auto b = io::bundle_from_json(io::read_file(testing_support::fixture("example1.json")));
  TriangulationModel m(b.triangulation);
  const auto& q = m.qp().quiver;
  auto r = analyze_extension(m, b.alpha, b.beta);
  auto as_ours = [&](const std::string& name) { return transport(printed.quiver, printed.reps.at(name), q); };
  EXPECT_TRUE(is_isomorphic(q, as_ours("M_alpha"), r.m_alpha));
  EXPECT_TRUE(is_isomorphic(q, as_ours("M_beta"), r.m_beta));
  auto middle_of = [&](std::vector<TaggedArc> arcs) {
    auto mc = make_multicurve(std::move(arcs));
    for (const auto& c : r.candidates)
      if (c.side == "plus" && c.curve == mc) return c.middle;
    throw std::logic_error("candidate missing");
  };
  PuncturedDisk d7(7);
  auto P = [&](int a, int b2) { return TaggedArc::peripheral(d7, a, b2); };
  auto R = [&](int a, Tag t) { return TaggedArc::radial(d7, a, t); };
  EXPECT_TRUE(is_isomorphic(q, as_ours("M_a"), middle_of({R(5, Tag::notched), R(6, Tag::plain), P(1, 3)})));
  EXPECT_TRUE(is_isomorphic(q, as_ours("M_c"), middle_of({P(1, 5), P(6, 3)})));
  EXPECT_TRUE(is_isomorphic(q, as_ours("M_d"), middle_of({P(6, 5), P(1, 3)})));
  // the printed potential is the computed one up to arrow names
  for (const auto& [name, rep] : printed.reps)
    EXPECT_TRUE(check_relations(as_ours(name), q, m.qp().potential).ok) << name;
}

TEST(Example1, PrintedSequences) {
  auto printed = testing_support::qp_dir("example1_printed");
  auto rep = io::verify_qp(printed);
  EXPECT_TRUE(rep.ok()) << rep.text();
  // the same f with g replaced by zero is not exact
  const auto& s = printed.sequences.front();
  const auto& mid = printed.reps.at(s.middle);
  const auto& end = printed.reps.at(s.end);
  EXPECT_FALSE(verify_exact(printed.reps.at(s.start), mid, end, s.f, zero_morphism(mid, end)));
  EXPECT_FALSE(is_split_mono(printed.quiver, printed.reps.at(s.start), mid, s.f));
  EXPECT_FALSE(hom_space(printed.quiver, printed.reps.at("M_alpha"), printed.reps.at("M_a")).empty());
}

TEST(Example1, PunctureSignMatters) {
  // with every coefficient +1 the printed middle terms (a) and (d) break
  auto printed = testing_support::qp_dir("example1_printed");
  Potential all_plus;
  for (const auto& t : printed.potential.terms) all_plus.add(printed.quiver, Scalar::one(Q), t.path);
  std::set<std::string> failing;
  for (const auto& [name, rep] : printed.reps)
    if (!check_relations(rep, printed.quiver, all_plus).ok) failing.insert(name);
  EXPECT_EQ(failing, (std::set<std::string>{"M_a", "M_d"}));
}

TEST(Extension, Errors) {
  auto b = io::bundle_from_json(io::read_file(testing_support::fixture("example1.json")));
  TriangulationModel m(b.triangulation);
  EXPECT_THROW(analyze_extension(m, b.triangulation.arcs[0], b.beta), ArcInTriangulation);
  EXPECT_THROW(analyze_extension(m, b.alpha, b.alpha), NoCrossingError);
  EXPECT_THROW(analyze_extension(m, b.alpha, TaggedArc::peripheral(PuncturedDisk(8), 1, 6)), std::invalid_argument);
}

TEST(Extension, SymmetricAnalysis) {
  for (auto t : {testing_support::example1_tau(), testing_support::example2_tau()}) {
    TriangulationModel m(t);
    auto arcs = enumerate_tagged_arcs(t.disk);
    int checked = 0;
    for (const auto& a : arcs)
      for (const auto& b : arcs) {
        if (t.contains(a) || t.contains(b) || crossing_number(a, b) == 0 || checked > 40) continue;
        ++checked;
        auto ab = analyze_extension(m, a, b);
        auto ba = analyze_extension(m, b, a);
        std::vector<Multicurve> minus_ab, plus_ba;
        for (const auto& c : ab.candidates)
          if (c.side == "minus") minus_ab.push_back(c.curve);
        for (const auto& c : ba.candidates)
          if (c.side == "plus") plus_ba.push_back(c.curve);
        std::sort(minus_ab.begin(), minus_ab.end());
        std::sort(plus_ba.begin(), plus_ba.end());
        EXPECT_EQ(minus_ab, plus_ba);
      }
  }
}

TEST(Extension, ExampleTriangulationsAllPairs) {
  for (auto t : {testing_support::example1_tau(), testing_support::example2_tau()}) {
    TriangulationModel m(t);
    const auto& q = m.qp().quiver;
    auto arcs = enumerate_tagged_arcs(t.disk);
    for (const auto& a : arcs)
      for (const auto& b : arcs) {
        if (t.contains(a) || t.contains(b)) continue;
        int e = crossing_number(a, b);
        if (e == 0) continue;
        auto r = analyze_extension(m, a, b);
        std::size_t plus = std::count_if(r.candidates.begin(), r.candidates.end(), [](auto& c) { return c.side == "plus"; });
        EXPECT_EQ(plus, e == 1 ? 1u : 4u);
        for (const auto& c : r.candidates) {
          if (!c.ses) continue;
          ASSERT_TRUE(c.sequence.has_value()) << a.str() << " " << b.str() << " " << multicurve_str(c.curve);
          EXPECT_TRUE(verify_exact(c.start, c.middle, c.end, c.sequence->f, c.sequence->g));
          EXPECT_TRUE(is_morphism(q, c.start, c.middle, c.sequence->f));
          EXPECT_TRUE(is_morphism(q, c.middle, c.end, c.sequence->g));
          EXPECT_EQ(c.non_split, true);
          EXPECT_EQ(c.middle.total_dim(), c.start.total_dim() + c.end.total_dim());
          EXPECT_EQ(c.d_c, c.d_pair);
        }
      }
  }
}

TEST(Extension, ForkMiddleTermsMeetNecessaryConditions) {
  // Every middle term found over a fan triangulation with the fork at 0 has
  // socle and top inside those of the two ends, Hom from and to the ends,
  // and additive dimension vector.
  for (int n = 5; n <= 6; ++n) {
    PuncturedDisk d(n);
    std::vector<TaggedArc> arcs = {TaggedArc::radial(d, 0, Tag::plain), TaggedArc::radial(d, 0, Tag::notched)};
    for (int k = 2; k <= n - 1; ++k) arcs.push_back(TaggedArc::peripheral(d, 0, k));
    auto t = validate_triangulation(arcs, d);
    TriangulationModel m(t);
    const auto& q = m.qp().quiver;
    int e2_sequences = 0;
    for (const auto& a : enumerate_tagged_arcs(d))
      for (const auto& b : enumerate_tagged_arcs(d)) {
        if (t.contains(a) || t.contains(b) || crossing_number(a, b) != 2) continue;
        auto r = analyze_extension(m, a, b);
        auto support = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
          std::set<std::size_t> s;
          for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] || y[i]) s.insert(i);
          return s;
        };
        auto soc = support(socle_dims(q, r.m_alpha), socle_dims(q, r.m_beta));
        auto top = support(top_dims(q, r.m_alpha), top_dims(q, r.m_beta));
        for (const auto& c : r.candidates) {
          if (!c.sequence) continue;
          ++e2_sequences;
          auto v = validate_middle_constraints(q, c.start, c.middle, c.end, soc, top);
          EXPECT_TRUE(v.all()) << a.str() << " " << b.str() << " " << multicurve_str(c.curve);
        }
      }
    EXPECT_GT(e2_sequences, 0);
  }
}

TEST(Enumeration, TriangulationCountsMatchClusterFormula) {
  for (std::size_t n = 4; n <= 7; ++n) {
    std::size_t want = (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
    EXPECT_EQ(enumerate_triangulations(PuncturedDisk(int(n))).size(), want);
  }
}

TEST(Enumeration, TrianglesSmallDisk) {
  PuncturedDisk d4(4);
  auto tri = enumerate_triangles(d4);
  int pairs = 0;
  for (const auto& a : enumerate_tagged_arcs(d4))
    for (const auto& b : enumerate_tagged_arcs(d4)) pairs += crossing_number(a, b) > 0;
  // recorded values
  EXPECT_EQ(pairs, 108);
  EXPECT_EQ(tri.size(), 120u);
  for (const auto& t : tri) {
    auto sm = smooth_pair(t.alpha, t.beta);
    EXPECT_NE(std::find(sm.plus.begin(), sm.plus.end(), t.middle), sm.plus.end());
  }
  // stable under tau applied to every arc
  std::set<std::tuple<TaggedArc, Multicurve, TaggedArc>> base, moved;
  for (const auto& t : tri) {
    base.insert({t.alpha, t.middle, t.beta});
    Multicurve m;
    for (const auto& x : t.middle) m.push_back(tau_rotate(x));
    moved.insert({tau_rotate(t.alpha), make_multicurve(m), tau_rotate(t.beta)});
  }
  EXPECT_EQ(base, moved);
}
