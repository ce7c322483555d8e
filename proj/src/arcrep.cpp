#include "pdisk/arcrep.hpp"

#include <algorithm>

namespace pdisk {

namespace {

struct Fraction {
  long num = 0;
  long den = 1;
  bool operator<(const Fraction& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// Position of the crossing along the curve: x for semicircles (left to
// right), squared height for rays (bottom to top).
Fraction crossing_parameter(const Side& curve, const Side& s) {
  if (curve.ray) return Fraction{(curve.lo - s.lo) * (s.hi - curve.lo), 1};
  if (s.ray) return Fraction{s.lo, 1};
  long num = s.lo * s.hi - curve.lo * curve.hi;
  long den = s.lo + s.hi - curve.lo - curve.hi;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Fraction{num, den};
}

struct Slot {
  std::vector<std::size_t> verts;
  Side in, out;
  Fraction param;
};

struct Built {
  ArcRepPlan::Effective effective = ArcRepPlan::Effective::arc;
  Side curve;
  std::vector<Slot> slots;  // q0 still present
  std::optional<std::size_t> q0, q1, r1;
};

Built build_slots(const TaggedArc& j, const TriangulationModel& m) {
  const Triangulation& tri = m.triangulation();
  if (j.n != tri.disk.n) throw std::invalid_argument("arc " + j.str() + " is not on the triangulated disk");
  if (tri.contains(j)) throw ArcInTriangulation("arc belongs to triangulation: " + j.str());
  const long n = m.n();
  Built b;
  std::optional<std::size_t> fork_only;
  if (j.is_peripheral()) {
    Lift l = lift(j);
    b.curve = Side{false, l.lo, l.hi};
  } else if (m.is_fork()) {
    b.curve = Side{true, j.a, j.a};
    // The noose around the fork is crossed once, by the opposite tag only.
    fork_only = m.radial_vertex(static_cast<int>(m.fork_base()), flip(j.tag));
  } else {
    Tag te = m.flipped() ? flip(j.tag) : j.tag;
    if (te == Tag::plain) {
      b.curve = Side{true, j.a, j.a};
    } else {
      b.curve = Side{false, j.a, j.a + n};
      const auto& rays = m.ray_positions();
      bool companion = std::find(rays.begin(), rays.end(), j.a) != rays.end();
      b.effective = companion ? ArcRepPlan::Effective::noose : ArcRepPlan::Effective::truncated_noose;
    }
  }

  std::vector<std::pair<Fraction, Side>> hits;
  for (const auto& s : m.crossed_sides(b.curve)) hits.push_back({crossing_parameter(b.curve, s), s});
  std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  for (std::size_t k = 0; k < hits.size(); ++k) {
    const Side& s = hits[k].second;
    if (m.is_fork() && s.ray) {
      // Noose in, ray, noose out: one slot carrying both radial vertices.
      if (b.slots.empty() || k + 1 >= hits.size()) throw InvariantViolation("unbalanced crossing at the fork");
      b.slots.back().out = hits[k + 1].second;
      ++k;
      continue;
    }
    auto verts = m.side_vertices(s);
    if (fork_only && !s.ray && s.hi - s.lo == n) verts = {*fork_only};
    b.slots.push_back(Slot{verts, s, s, hits[k].first});
  }

  if (b.effective == ArcRepPlan::Effective::truncated_noose) {
    const auto& rays = m.ray_positions();
    long u = 0, v = 0;
    bool found = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      long lo = rays[k], hi = k + 1 < rays.size() ? rays[k + 1] : rays[0] + n;
      for (long shift : {0L, -n}) {
        if (lo + shift < j.a && j.a < hi + shift) {
          u = lo + shift;
          v = hi + shift;
          found = true;
        }
      }
    }
    if (!found) throw InvariantViolation("no base side for the notched arc");
    Side base{false, u, v}, base_n{false, u + n, v + n};
    for (std::size_t k = 0; k < b.slots.size(); ++k) {
      if (b.slots[k].in == base) b.q1 = k;
      if (b.slots[k].in == base_n) b.q0 = k;
    }
    if (!b.q0 || !b.q1 || *b.q0 == 0) throw InvariantViolation("truncation points missing for " + j.str());
    b.slots.resize(*b.q0 + 1);
    b.r1 = *b.q0 - 1;
    const Side& r = b.slots[*b.r1].in;
    if (!(r.ray && r.lo == u + n)) throw InvariantViolation("detour does not start on the expected radial arc");
  }
  return b;
}

}  // namespace

ArcRepPlan plan_arc(const TaggedArc& j, const TriangulationModel& m) {
  Built b = build_slots(j, m);
  ArcRepPlan plan;
  plan.effective = b.effective;
  plan.curve = b.curve;
  std::size_t point = 0;
  for (std::size_t k = 0; k < b.slots.size(); ++k) {
    if (b.q0 && k == *b.q0) {
      plan.q0_parameter = b.slots[k].param.str();
      continue;
    }
    if (b.q1 && k == *b.q1) plan.q1 = plan.events.size();
    if (b.r1 && k == *b.r1) plan.r1 = plan.events.size();
    for (auto v : b.slots[k].verts)
      plan.events.push_back(IntersectionEvent{v, point, b.slots[k].in, b.slots[k].out, b.slots[k].param.str()});
    ++point;
  }
  return plan;
}

std::vector<IntersectionEvent> intersection_sequence(const TaggedArc& j, const TriangulationModel& m) {
  return plan_arc(j, m).events;
}

Representation arc_representation(const TaggedArc& j, const TriangulationModel& m, const Field& f) {
  Built b = build_slots(j, m);
  const Quiver& q = m.qp().quiver;
  const std::size_t nv = q.vertex_count();

  // Local basis index of (slot, vertex).
  std::vector<std::size_t> count(nv, 0);
  std::vector<std::vector<std::size_t>> local(b.slots.size());
  for (std::size_t k = 0; k < b.slots.size(); ++k)
    for (auto v : b.slots[k].verts) local[k].push_back((b.q0 && k == *b.q0) ? 0 : count[v]++);

  Representation rep = Representation::zero(q, f);
  rep.dims = count;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) rep.mats[a] = Matrix(f, count[q.target(a)], count[q.source(a)]);

  std::size_t notched = nv;
  if (m.is_fork()) notched = *m.radial_vertex(static_cast<int>(m.fork_base()), Tag::notched);
  for (std::size_t k = 0; k + 1 < b.slots.size(); ++k) {
    const Slot& s = b.slots[k];
    const Slot& t = b.slots[k + 1];
    for (std::size_t xi = 0; xi < s.verts.size(); ++xi)
      for (std::size_t yi = 0; yi < t.verts.size(); ++yi) {
        auto ref = m.arrow_between(s.out, s.verts[xi], t.in, t.verts[yi]);
        if (!ref) continue;
        // Row slot/index and column slot/index of the entry.
        std::size_t rs = k + 1, ri = yi, cs = k, ci = xi;
        if (!ref->forward) std::swap(rs, cs), std::swap(ri, ci);
        if (b.q0 && cs == *b.q0) continue;
        if (b.q0 && rs == *b.q0) rs = *b.q1, ri = 0;  // detour onto the base crossing
        // At the fork, the notched radial's link to the next crossing is negated.
        bool neg = s.verts.size() == 2 && s.verts[xi] == notched;
        Scalar val(f, neg ? -1 : 1);
        rep.mats[ref->arrow](local[rs][ri], local[cs][ci]) = val;
      }
  }

  // A curve crossing every radial arc in one run winds once around the
  // puncture: it leaves through a translate of the side it entered by, and
  // that exit crossing maps to the first radial crossing.
  const std::size_t d = m.ray_positions().size();
  if (!b.curve.ray && !m.is_fork() && d >= 2) {
    std::size_t first = 0, run = 0;
    for (std::size_t k = 0; k < b.slots.size(); ++k)
      if (b.slots[k].in.ray) {
        if (run == 0) first = k;
        ++run;
      }
    std::size_t exit = first + run;
    if (run == d && first > 0 && exit < b.slots.size() && !(b.q0 && exit == *b.q0)) {
      const Slot& base = b.slots[first - 1];
      const Slot& ray = b.slots[first];
      auto ref = m.arrow_between(base.out, base.verts[0], ray.in, ray.verts[0]);
      if (!ref || !ref->forward) throw InvariantViolation("missing arrow for the winding segment of " + j.str());
      if (b.slots[exit].verts != base.verts) throw InvariantViolation("winding segment exits through another side");
      rep.mats[ref->arrow](local[first][0], local[exit][0]) = Scalar(f, 1);
    }
  }

  auto expect = crossing_vector(j, m.triangulation());
  for (std::size_t i = 0; i < nv; ++i)
    if (static_cast<long>(rep.dims[i]) != expect[i])
      throw InvariantViolation("arc representation of " + j.str() + " has dimension " + std::to_string(rep.dims[i]) +
                               " at vertex " + std::to_string(i + 1) + ", crossing number " +
                               std::to_string(expect[i]));
  return rep;
}

Representation multicurve_representation(const Multicurve& c, const TriangulationModel& m, const Field& f,
                                         bool tau_members_vanish) {
  Representation rep = Representation::zero(m.qp().quiver, f);
  for (const auto& g : c) {
    if (tau_members_vanish && m.triangulation().contains(g)) continue;
    rep = rep.direct_sum(arc_representation(g, m, f));
  }
  return rep;
}

}  // namespace pdisk
