#include "pdisk/ext.hpp"

#include <algorithm>
#include <functional>

namespace pdisk {

std::vector<Triangulation> enumerate_triangulations(const PuncturedDisk& d) {
  auto arcs = enumerate_tagged_arcs(d);
  const std::size_t m = arcs.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = crossing_number(arcs[i], arcs[j]) == 0;
  std::vector<Triangulation> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == d.n) {
      std::vector<TaggedArc> set;
      for (auto c : chosen) set.push_back(arcs[c]);
      try {
        out.push_back(validate_triangulation(set, d));
      } catch (const TriangulationError&) {
      }
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      if (m - i < static_cast<std::size_t>(d.n) - chosen.size()) break;
      bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][i]; });
      if (!compatible) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

int ext_dimension(const TaggedArc& alpha, const TaggedArc& beta) { return crossing_number(alpha, beta); }

SmoothingResult middle_term_candidates(const TaggedArc& alpha, const TaggedArc& beta) {
  return smooth_pair(alpha, beta);
}

ExtensionReport analyze_extension(const TriangulationModel& m, const TaggedArc& alpha, const TaggedArc& beta,
                                  const Field& f, const SesSearch& search, bool strict) {
  const Triangulation& t = m.triangulation();
  if (t.contains(alpha)) throw ArcInTriangulation("arc belongs to triangulation: " + alpha.str());
  if (t.contains(beta)) throw ArcInTriangulation("arc belongs to triangulation: " + beta.str());
  ExtensionReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.e = crossing_number(alpha, beta);
  if (rep.e == 0) throw NoCrossingError("arcs " + alpha.str() + " and " + beta.str() + " do not cross");
  rep.m_alpha = arc_representation(alpha, m, f);
  rep.m_beta = arc_representation(beta, m, f);
  const Quiver& q = m.qp().quiver;
  int d_pair = total_dimension({alpha, beta}, t);
  auto sm = smooth_pair(alpha, beta);

  auto run = [&](const std::vector<Multicurve>& cs, const std::vector<std::string>& origin, const char* side,
                 const Representation& start, const Representation& end) {
    for (std::size_t k = 0; k < cs.size(); ++k) {
      CandidateReport c;
      c.curve = cs[k];
      c.side = side;
      c.origin = origin[k];
      c.d_c = total_dimension(cs[k], t);
      c.d_pair = d_pair;
      c.ses = c.d_c == c.d_pair;
      c.start = start;
      c.end = end;
      c.middle = multicurve_representation(cs[k], m, f, true);
      if (c.ses) {
        c.sequence = find_ses(q, start, c.middle, end, search);
        if (c.sequence) {
          c.non_split = !is_split_mono(q, start, c.middle, c.sequence->f);
        } else if (strict) {
          throw SearchFailure("no non-split sequence found for " + multicurve_str(cs[k]) + " (" + side + " side of " +
                              alpha.str() + ", " + beta.str() + ") although d(C) = d(pair) = " +
                              std::to_string(d_pair));
        }
      }
      rep.candidates.push_back(std::move(c));
    }
  };
  run(sm.plus, sm.plus_origin, "plus", rep.m_alpha, rep.m_beta);
  run(sm.minus, sm.minus_origin, "minus", rep.m_beta, rep.m_alpha);
  return rep;
}

std::vector<TriangleTriple> enumerate_triangles(const PuncturedDisk& d) {
  d.require_algebraic();
  auto arcs = enumerate_tagged_arcs(d);
  std::vector<TriangleTriple> out;
  for (const auto& a : arcs)
    for (const auto& b : arcs) {
      if (crossing_number(a, b) == 0) continue;
      auto sm = smooth_pair(a, b);
      for (std::size_t k = 0; k < sm.plus.size(); ++k) out.push_back({a, sm.plus[k], b, sm.plus_origin[k]});
    }
  return out;
}

MiddleConstraintReport validate_middle_constraints(const Quiver& q, const Representation& bottom,
                                                   const Representation& middle, const Representation& top,
                                                   const std::set<std::size_t>& socle_allowed,
                                                   const std::set<std::size_t>& top_allowed) {
  for (const auto* r : {&bottom, &middle, &top}) r->check(q);
  MiddleConstraintReport rep;
  rep.socle = socle_dims(q, middle);
  rep.top = top_dims(q, middle);
  rep.socle_ok = rep.top_ok = true;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (rep.socle[i] > 0 && !socle_allowed.count(i)) rep.socle_ok = false;
    if (rep.top[i] > 0 && !top_allowed.count(i)) rep.top_ok = false;
  }
  rep.hom_in = hom_space(q, bottom, middle).size();
  rep.hom_out = hom_space(q, middle, top).size();
  rep.hom_ok = rep.hom_in > 0 && rep.hom_out > 0;
  rep.dims_ok = true;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (middle.dims[i] != bottom.dims[i] + top.dims[i]) rep.dims_ok = false;
  return rep;
}

}  // namespace pdisk
